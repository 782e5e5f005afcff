//! Signed remainder sequences and sign-variation counts, over bounded
//! intervals and over all of R.
//!
//! Two variation operators coexist. `changes` discards zeros before counting
//! alternations; it backs the classic Sturm root count, whose hypotheses
//! exclude roots at the interval endpoints. `changes_alt` sums
//! `|sign(v[i]) - sign(v[i+1])|` and tolerates zeros, which is what lets the
//! Cauchy-index machinery evaluate at endpoints that sit exactly on a pole.
//!
//! Remainders are computed over the integers with pseudo-division and
//! sign-correct positive scaling: only the signs of chain entries at
//! evaluation points matter, and positive scaling preserves them.

use num::bigint::BigInt;

use crate::error::Error;
use crate::exactnum::{Rational, Sign};
use crate::poly::{int_pseudo_rem_signed, RatPoly};

/// The chain `p, q, -(p rem q), -(q rem (p rem q)), ...`, truncated before
/// the first zero entry. Entries beyond the first two are stored as
/// primitive integer-coefficient representatives (a positive rescaling of
/// the true remainders).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedRemainderChain {
    polys: Vec<RatPoly>,
}

impl SignedRemainderChain {
    /// Builds the signed remainder chain for `(p, q)`.
    ///
    /// The chain for `(p, 0)` is `[p]`; both arguments zero is an error.
    pub fn new(p: &RatPoly, q: &RatPoly) -> Result<SignedRemainderChain, Error> {
        if p.is_zero() && q.is_zero() {
            return Err(Error::BothZero);
        }
        if p.is_zero() {
            // Degenerate head: the remainder of (0, q) is 0, so the chain
            // stops right after q.
            return Ok(SignedRemainderChain {
                polys: vec![p.clone(), q.clone()],
            });
        }
        let mut polys = vec![p.clone()];
        if q.is_zero() {
            return Ok(SignedRemainderChain { polys });
        }
        polys.push(q.clone());
        let mut a = int_primitive_signed(p.to_int_scaled());
        let mut b = int_primitive_signed(q.to_int_scaled());
        loop {
            let mut r = int_pseudo_rem_signed(&a, &b);
            if r.is_empty() {
                break;
            }
            for c in &mut r {
                *c = -&*c;
            }
            let r = int_primitive_signed(r);
            polys.push(RatPoly::from_int_coeffs(&r));
            a = b;
            b = r;
        }
        Ok(SignedRemainderChain { polys })
    }

    pub fn polys(&self) -> &[RatPoly] {
        &self.polys
    }

    /// Values of every chain entry at `x`.
    pub fn values_at(&self, x: &Rational) -> Vec<Rational> {
        self.polys.iter().map(|p| p.eval(x)).collect()
    }

    /// Signs of every chain entry at +/- infinity.
    pub fn signs_at_infinity(&self, at_neg: bool) -> Vec<Sign> {
        self.polys.iter().map(|p| p.sign_at_infinity(at_neg)).collect()
    }
}

fn int_primitive_signed(coeffs: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::from(0u8);
    for c in &coeffs {
        g = num::Integer::gcd(&g, c);
    }
    if g == BigInt::from(0u8) || g == BigInt::from(1u8) {
        return coeffs;
    }
    coeffs.into_iter().map(|c| c / &g).collect()
}

/// Builds the signed remainder chain `smods(p, q)`.
pub fn smods(p: &RatPoly, q: &RatPoly) -> Result<SignedRemainderChain, Error> {
    SignedRemainderChain::new(p, q)
}

/// Sign variations after deleting zeros.
pub fn changes(values: &[Rational]) -> i64 {
    changes_signs(&values.iter().map(|v| v.sign()).collect::<Vec<_>>())
}

pub(crate) fn changes_signs(signs: &[Sign]) -> i64 {
    let mut count = 0;
    let mut last: Option<Sign> = None;
    for &s in signs {
        if s == Sign::Zero {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// The alternative variation: sum of `|sign(v[i]) - sign(v[i+1])|`, zeros
/// participating.
pub fn changes_alt(values: &[Rational]) -> i64 {
    changes_alt_signs(&values.iter().map(|v| v.sign()).collect::<Vec<_>>())
}

pub(crate) fn changes_alt_signs(signs: &[Sign]) -> i64 {
    signs
        .windows(2)
        .map(|w| (w[0].to_i8() as i64 - w[1].to_i8() as i64).abs())
        .sum()
}

/// Classic interval variation difference: `changes` of the chain values at
/// `a` minus at `b`. Requires `a < b` and that neither endpoint is a root
/// of `p`.
pub fn changes_itv_smods(
    a: &Rational,
    b: &Rational,
    p: &RatPoly,
    q: &RatPoly,
) -> Result<i64, Error> {
    if a >= b {
        return Err(Error::BadInterval);
    }
    if p.eval(a).is_zero() || p.eval(b).is_zero() {
        return Err(Error::EndpointIsRoot);
    }
    let chain = smods(p, q)?;
    Ok(changes(&chain.values_at(a)) - changes(&chain.values_at(b)))
}

/// Variation difference under the alternative operator. Endpoints may be
/// roots of `p`; the zeros take part in the count.
pub fn changes_alt_itv_smods(
    a: &Rational,
    b: &Rational,
    p: &RatPoly,
    q: &RatPoly,
) -> Result<i64, Error> {
    if a >= b {
        return Err(Error::BadInterval);
    }
    let chain = smods(p, q)?;
    Ok(changes_alt(&chain.values_at(a)) - changes_alt(&chain.values_at(b)))
}

/// Variation difference between -infinity and +infinity, reading each
/// chain entry's sign off its leading coefficient (degree parity adjusts
/// the sign at -infinity).
#[allow(non_snake_case)]
pub fn changes_R_smods(p: &RatPoly, q: &RatPoly) -> Result<i64, Error> {
    let chain = smods(p, q)?;
    Ok(changes_signs(&chain.signs_at_infinity(true))
        - changes_signs(&chain.signs_at_infinity(false)))
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`, by
/// Sturm's theorem. Requires `p != 0` and non-root endpoints.
pub fn sturm_count_interval(p: &RatPoly, a: &Rational, b: &Rational) -> Result<i64, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    changes_itv_smods(a, b, p, &p.derivative())
}

/// Number of distinct real roots of `p` over all of R.
pub fn sturm_count_real_line(p: &RatPoly) -> Result<i64, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    changes_R_smods(p, &p.derivative())
}
