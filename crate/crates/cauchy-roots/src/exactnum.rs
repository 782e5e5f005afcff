//! Exact scalars: arbitrary-precision rationals, Gaussian rationals,
//! half-integers, and three-valued signs.
//!
//! Every value is immutable once built and every operation is pure, so the
//! types are safe to share across threads freely. Rationals are kept in
//! lowest terms with a positive denominator at all times; sign tests are
//! therefore a single integer-sign inspection.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Sign of an exact quantity, ordered `Negative < Zero < Positive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_bigint(x: &BigInt) -> Sign {
        match x.sign() {
            num::bigint::Sign::Minus => Sign::Negative,
            num::bigint::Sign::NoSign => Sign::Zero,
            num::bigint::Sign::Plus => Sign::Positive,
        }
    }

    pub fn from_i64(x: i64) -> Sign {
        match x.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_i64((self.to_i8() * rhs.to_i8()) as i64)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Negative => write!(f, "-1"),
            Sign::Zero => write!(f, "0"),
            Sign::Positive => write!(f, "+1"),
        }
    }
}

/// Exact sign of a rational number.
pub fn sign_of(x: &Rational) -> Sign {
    x.sign()
}

/// An arbitrary-precision rational, always reduced to lowest terms with a
/// positive denominator. Zero is represented as 0/1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`. Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Rational {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Rational {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn sign(&self) -> Sign {
        Sign::of_bigint(self.0.numer())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rational {
        assert!(!self.is_zero(), "division by zero rational");
        Rational(self.0.recip())
    }

    /// Nearest binary64 value; test-oracle use only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Rational {
        Rational::from_int(n)
    }
}

/// Accepts `p`, `p/q`, or an exact decimal such as `-1.25`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational, Error> {
        let s = s.trim();
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => match s.strip_prefix('+') {
                Some(rest) => (1, rest),
                None => (1, s),
            },
        };
        let make_err = || Error::Internal("unparseable rational literal");
        if let Some((n, d)) = body.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|_| make_err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| make_err())?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            return Ok(Rational::new(n * sign, d));
        }
        if let Some((int, frac)) = body.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(make_err());
            }
            let int = if int.is_empty() { "0" } else { int };
            let whole = BigInt::from_str(int).map_err(|_| make_err())?;
            let frac_num = BigInt::from_str(frac).map_err(|_| make_err())?;
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            return Ok(Rational::new((whole * &scale + frac_num) * sign, scale));
        }
        let n = BigInt::from_str(body).map_err(|_| make_err())?;
        Ok(Rational::from_int(n * sign))
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl<'a> $trait<&'a Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// A complex number with rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational { re, im }
    }

    pub fn from_int(n: impl Into<BigInt>) -> GaussianRational {
        GaussianRational::new(Rational::from_int(n), Rational::zero())
    }

    pub fn from_re(re: Rational) -> GaussianRational {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn zero() -> GaussianRational {
        GaussianRational::from_int(0)
    }

    pub fn one() -> GaussianRational {
        GaussianRational::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> GaussianRational {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> GaussianRational {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `|z|^2 = re^2 + im^2`, an exact rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// The 1-norm `|re| + |im|`.
    pub fn one_norm(&self) -> Rational {
        self.re.abs() + self.im.abs()
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> GaussianRational {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        GaussianRational::new(&self.re / &n, &(-&self.im) / &n)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_part = |f: &mut fmt::Formatter<'_>, im: &Rational, explicit_plus: bool| {
            let (lead, mag) = if im.is_negative() {
                ("-", im.abs())
            } else {
                (if explicit_plus { "+" } else { "" }, im.clone())
            };
            if mag == Rational::one() {
                write!(f, "{lead}i")
            } else {
                write!(f, "{lead}{mag}*i")
            }
        };
        if self.re.is_zero() {
            im_part(f, &self.im, false)
        } else {
            write!(f, "({}", self.re)?;
            im_part(f, &self.im, true)?;
            write!(f, ")")
        }
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> GaussianRational {
        GaussianRational::from_re(re)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: GaussianRational) -> GaussianRational {
        (&self).mul(&rhs.recip())
    }
}

impl<'a> Div<&'a GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &'a GaussianRational) -> GaussianRational {
        self.mul(&rhs.recip())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

/// An exact element of (1/2)Z, stored as twice its value.
///
/// One-sided jumps contribute 0 or ±1/2 and Cauchy indices are sums of such
/// jumps, so this type closes the arithmetic without general rationals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    twice: BigInt,
}

impl HalfInteger {
    /// The value `numer_of_halves / 2`.
    pub fn from_halves(numer_of_halves: impl Into<BigInt>) -> HalfInteger {
        HalfInteger {
            twice: numer_of_halves.into(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> HalfInteger {
        HalfInteger {
            twice: n.into() * 2,
        }
    }

    pub fn zero() -> HalfInteger {
        HalfInteger::from_halves(0)
    }

    /// Twice the stored value; always exact.
    pub fn twice(&self) -> &BigInt {
        &self.twice
    }

    pub fn is_zero(&self) -> bool {
        self.twice.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        (&self.twice % 2u8).is_zero()
    }

    /// The value as an integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| &self.twice / 2)
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.twice.clone(), 2)
    }
}

/// The value `numer_of_halves / 2`.
pub fn half_int(numer_of_halves: i64) -> HalfInteger {
    HalfInteger::from_halves(numer_of_halves)
}

impl Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger {
            twice: self.twice + rhs.twice,
        }
    }
}

impl<'a> Add<&'a HalfInteger> for &HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: &'a HalfInteger) -> HalfInteger {
        HalfInteger {
            twice: &self.twice + &rhs.twice,
        }
    }
}

impl Sub for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger {
            twice: self.twice - rhs.twice,
        }
    }
}

impl<'a> Sub<&'a HalfInteger> for &HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: &'a HalfInteger) -> HalfInteger {
        HalfInteger {
            twice: &self.twice - &rhs.twice,
        }
    }
}

impl Neg for HalfInteger {
    type Output = HalfInteger;
    fn neg(self) -> HalfInteger {
        HalfInteger { twice: -self.twice }
    }
}

impl std::iter::Sum for HalfInteger {
    fn sum<I: Iterator<Item = HalfInteger>>(iter: I) -> HalfInteger {
        iter.fold(HalfInteger::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.twice),
        }
    }
}
