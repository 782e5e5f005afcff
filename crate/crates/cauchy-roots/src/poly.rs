//! Dense univariate polynomials over exact scalars.
//!
//! Coefficients are stored in ascending degree with the trailing (highest)
//! coefficient nonzero; the zero polynomial is the empty sequence and its
//! degree is `None`. Two concrete instantiations are used throughout:
//! [`RatPoly`] over [`Rational`] and [`GaussPoly`] over [`GaussianRational`].
//!
//! Rational-coefficient gcds run as a primitive pseudo-remainder sequence
//! over the integers after clearing denominators; naive rational Euclid
//! suffers quadratic coefficient blowup on the composed polynomials the
//! counting routines generate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::error::Error;
use crate::exactnum::{GaussianRational, Rational, Sign};

/// Coefficient operations needed by [`Poly`]. Implemented by [`Rational`]
/// and [`GaussianRational`]; both are exact fields.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// `rhs` must be nonzero.
    fn div_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Field for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// A dense univariate polynomial with ascending coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Polynomial over the rationals.
pub type RatPoly = Poly<Rational>;
/// Polynomial over the Gaussian rationals.
pub type GaussPoly = Poly<GaussianRational>;

impl<T: Field> Poly<T> {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Poly<T> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly<T> {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Poly<T> {
        Poly::from_coeffs(vec![c])
    }

    pub fn one() -> Poly<T> {
        Poly::constant(T::one())
    }

    /// The monomial `x`.
    pub fn x() -> Poly<T> {
        Poly::from_coeffs(vec![T::zero(), T::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Poly<T> {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Poly { coeffs }
    }

    /// The monic product of `x - r` over the given roots.
    pub fn from_roots(roots: &[T]) -> Poly<T> {
        roots.iter().fold(Poly::one(), |acc, r| {
            &acc * &Poly::from_coeffs(vec![r.neg_ref(), T::one()])
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Poly<T> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly<T> {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - 1);
        let mut k = T::one();
        for c in &self.coeffs[1..] {
            coeffs.push(c.mul_ref(&k));
            k = k.add_ref(&T::one());
        }
        Poly::from_coeffs(coeffs)
    }

    /// The composition `q(t) = p(a + b t)`.
    ///
    /// Degree is preserved exactly when `b != 0` and `p != 0`; with `b = 0`
    /// the result collapses to the constant `p(a)`.
    pub fn compose_affine(&self, a: &T, b: &T) -> Poly<T> {
        let lin = Poly::from_coeffs(vec![a.clone(), b.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn divrem(&self, d: &Poly<T>) -> (Poly<T>, Poly<T>) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let lcd = d.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut q = vec![T::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + dd].div_ref(lcd);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub_ref(&c.mul_ref(dj));
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(rem))
    }

    /// Exact quotient `self / g`; fails with [`Error::NotDivisible`] when the
    /// remainder is nonzero, which signals a gcd bug upstream.
    pub fn div_exact(&self, g: &Poly<T>) -> Result<Poly<T>, Error> {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (q, r) = self.divrem(g);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Divides by the leading coefficient. `None` for the zero polynomial.
    pub fn monic(&self) -> Option<Poly<T>> {
        let lc = self.leading()?;
        if *lc == T::one() {
            return Some(self.clone());
        }
        Some(Poly {
            coeffs: self.coeffs.iter().map(|c| c.div_ref(lc)).collect(),
        })
    }
}

impl<T: Field> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].add_ref(c);
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Field> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let mut coeffs: Vec<T> = self.coeffs.clone();
        if rhs.coeffs.len() > coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), T::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].sub_ref(c);
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Field> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Field> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }
}

impl RatPoly {
    pub fn eval_sign(&self, x: &Rational) -> Sign {
        self.eval(x).sign()
    }

    /// Sign of the polynomial at +infinity (its leading coefficient), or at
    /// -infinity when `at_neg` is set (adjusted by degree parity). Zero for
    /// the zero polynomial.
    pub fn sign_at_infinity(&self, at_neg: bool) -> Sign {
        match self.degree() {
            None => Sign::Zero,
            Some(d) => {
                let s = self.leading().expect("nonzero").sign();
                if at_neg && d % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        }
    }

    /// Monic gcd over the rationals; `gcd(0, 0) = 0` and `gcd(p, 0)` is the
    /// monic form of `p`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => RatPoly::zero(),
            (true, false) => other.monic().expect("nonzero"),
            (false, true) => self.monic().expect("nonzero"),
            (false, false) => {
                let a = int_primitive(self.to_int_scaled());
                let b = int_primitive(other.to_int_scaled());
                let g = int_gcd_primitive(a, b);
                RatPoly::from_int_coeffs(&g).monic().expect("nonzero gcd")
            }
        }
    }

    /// `p / gcd(p, p')`, monic; same roots as `p`, all simple.
    pub fn squarefree_part(&self) -> Result<RatPoly, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let q = self.div_exact(&g)?;
        Ok(q.monic().expect("nonzero quotient"))
    }

    /// Clears denominators: integer coefficients of `c * p` for some
    /// positive rational `c`, ascending.
    pub(crate) fn to_int_scaled(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in self.coeffs() {
            lcm = lcm.lcm(c.denominator());
        }
        self.coeffs()
            .iter()
            .map(|c| c.numerator() * (&lcm / c.denominator()))
            .collect()
    }

    pub(crate) fn from_int_coeffs(coeffs: &[BigInt]) -> RatPoly {
        RatPoly::from_coeffs(coeffs.iter().map(|c| Rational::from_int(c.clone())).collect())
    }
}

impl GaussPoly {
    /// Coefficientwise real and imaginary projections, trimmed.
    pub fn re_im_parts(&self) -> (RatPoly, RatPoly) {
        let re = RatPoly::from_coeffs(self.coeffs().iter().map(|c| c.re().clone()).collect());
        let im = RatPoly::from_coeffs(self.coeffs().iter().map(|c| c.im().clone()).collect());
        (re, im)
    }

    /// Rebuilds `re + i*im`.
    pub fn from_parts(re: &RatPoly, im: &RatPoly) -> GaussPoly {
        let len = re.coeffs().len().max(im.coeffs().len());
        let coeffs = (0..len)
            .map(|k| GaussianRational::new(re.coeff(k), im.coeff(k)))
            .collect();
        GaussPoly::from_coeffs(coeffs)
    }

    /// Lifts a rational polynomial to Gaussian coefficients.
    pub fn from_rat(p: &RatPoly) -> GaussPoly {
        GaussPoly::from_coeffs(
            p.coeffs()
                .iter()
                .map(|c| GaussianRational::from_re(c.clone()))
                .collect(),
        )
    }

    /// Conjugates every coefficient.
    pub fn conj(&self) -> GaussPoly {
        GaussPoly::from_coeffs(self.coeffs().iter().map(|c| c.conj()).collect())
    }

    /// Monic gcd over the Gaussian rationals, by Euclid's algorithm with
    /// monic remainders.
    pub fn gcd(&self, other: &GaussPoly) -> GaussPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        if a.is_zero() && b.is_zero() {
            return GaussPoly::zero();
        }
        while !b.is_zero() {
            let bm = b.monic().expect("nonzero");
            let (_, r) = a.divrem(&bm);
            a = bm;
            b = r;
        }
        a.monic().expect("nonzero gcd")
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Result<GaussPoly, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let q = self.div_exact(&g)?;
        Ok(q.monic().expect("nonzero quotient"))
    }

    /// A rational `B` such that every complex root `z` satisfies
    /// `|z| <= B` (and so lies in the closed square `[-B, B]^2`).
    ///
    /// Computed as `1 + max_k |b_k|_1` over the non-leading coefficients of
    /// the monic form of `p`, with `|z|_1 = |Re z| + |Im z|`. Normalizing to
    /// monic form first keeps the bound valid for every leading coefficient;
    /// the 1-norm dominates the modulus, so the classic Cauchy bound applies.
    pub fn cauchy_root_bound(&self) -> Result<Rational, Error> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::ConstantPolynomial),
            Some(_) => {
                let monic = self.monic().expect("nonzero");
                let coeffs = monic.coeffs();
                let mut max = Rational::zero();
                for c in &coeffs[..coeffs.len() - 1] {
                    let n = c.one_norm();
                    if n > max {
                        max = n;
                    }
                }
                Ok(Rational::one() + max)
            }
        }
    }
}

fn int_content(coeffs: &[BigInt]) -> BigInt {
    coeffs
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides by the (positive) content, keeping signs.
fn int_primitive(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    let content = int_content(&coeffs);
    if content.is_zero() || content.is_one() {
        return coeffs;
    }
    for c in &mut coeffs {
        *c = &*c / &content;
    }
    coeffs
}

fn int_trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

/// Pseudo-remainder of `a` by `b`, sign-corrected so the result is a
/// positive-scalar multiple of the true remainder `a rem b`. `b` nonzero.
pub(crate) fn int_pseudo_rem_signed(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(!b.is_empty());
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.to_vec();
    int_trim(&mut r);
    let mut flip = false;
    while r.len() > db {
        let k = r.len() - 1 - db;
        let lead = r.pop().expect("nonempty");
        // r := lcb * r - lead * x^k * b   (drops the leading term)
        for c in &mut r {
            *c = &*c * lcb;
        }
        for (j, bj) in b[..db].iter().enumerate() {
            r[k + j] -= &lead * bj;
        }
        int_trim(&mut r);
        if lcb.is_negative() {
            flip = !flip;
        }
    }
    if flip {
        for c in &mut r {
            *c = -&*c;
        }
    }
    r
}

/// Gcd of primitive integer polynomials via the primitive
/// pseudo-remainder sequence. Result is primitive with positive leading
/// coefficient.
fn int_gcd_primitive(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    while !b.is_empty() {
        let r = int_primitive(int_pseudo_rem_signed(&a, &b));
        a = b;
        b = r;
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in &mut a {
            *c = -&*c;
        }
    }
    a
}

impl<T: Field> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let minus_one = T::one().neg_ref();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = if k == 0 {
                format!("{c}")
            } else {
                let xp = if k == 1 {
                    "x".to_string()
                } else {
                    format!("x^{k}")
                };
                if *c == T::one() {
                    xp
                } else if *c == minus_one {
                    format!("-{xp}")
                } else {
                    format!("{c}*{xp}")
                }
            };
            if first {
                write!(f, "{term}")?;
                first = false;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}
