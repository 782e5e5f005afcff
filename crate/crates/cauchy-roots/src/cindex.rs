//! Cauchy indices of rational functions over closed intervals and over all
//! of R, plus a direct one-sided jump evaluator.
//!
//! The index of `f = q/p` over `[a, b]` sums `+1/2` or `-1/2` for each
//! one-sided divergence of `f`: right-jumps are collected on `[a, b)` and
//! left-jumps on `(a, b]`, so an endpoint sitting exactly on a pole still
//! contributes its half-jump. The production route evaluates the index as a
//! sign-variation difference of a signed remainder chain; [`jump_at`] decides
//! single jumps from first-principles sign analysis and serves as the
//! semantic oracle for that route in the test suites.
//!
//! Non-coprime numerator/denominator pairs are normalized by exact gcd
//! division inside each operation; every caller in the counting layer
//! performs exactly this normalization anyway.

use crate::error::Error;
use crate::exactnum::{HalfInteger, Rational, Sign};
use crate::poly::RatPoly;
use crate::sturm::{changes_alt_itv_smods, changes_alt_signs, smods};

/// Which one-sided limit a jump refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A quotient of rational polynomials. Coprimality is not required at
/// construction; operations normalize internally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numer: RatPoly,
    denom: RatPoly,
}

impl RationalFunction {
    pub fn new(numer: RatPoly, denom: RatPoly) -> Result<RationalFunction, Error> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFunction { numer, denom })
    }

    pub fn numer(&self) -> &RatPoly {
        &self.numer
    }

    pub fn denom(&self) -> &RatPoly {
        &self.denom
    }

    /// The coprime form `(numer/g, denom/g)` with `g = gcd`.
    pub fn reduced(&self) -> (RatPoly, RatPoly) {
        reduce_pair(&self.numer, &self.denom)
    }
}

/// Divides out the gcd; returns `(numer, denom)` coprime, `denom` nonzero.
fn reduce_pair(numer: &RatPoly, denom: &RatPoly) -> (RatPoly, RatPoly) {
    debug_assert!(!denom.is_zero());
    if numer.is_zero() {
        return (RatPoly::zero(), RatPoly::one());
    }
    let g = numer.gcd(denom);
    let n = numer.div_exact(&g).expect("gcd divides numerator");
    let d = denom.div_exact(&g).expect("gcd divides denominator");
    (n, d)
}

/// One-sided jump of `f` at `x`: `+1/2` if the limit from the given side is
/// `+inf`, `-1/2` if it is `-inf`, and `0` otherwise (including at points
/// that are not poles at all).
///
/// The side sign of the denominator is read from its first nonvanishing
/// derivative at `x`; no sample points, no epsilons.
pub fn jump_at(f: &RationalFunction, x: &Rational, side: Side) -> HalfInteger {
    let (numer, denom) = f.reduced();
    if !denom.eval(x).is_zero() {
        return HalfInteger::zero();
    }
    // x is a pole: after reduction the numerator cannot vanish there.
    let numer_sign = numer.eval(x).sign();
    debug_assert!(
        numer_sign != Sign::Zero,
        "reduced numerator vanished at a pole"
    );
    let mut d = denom;
    let mut m = 0usize;
    let lead_sign = loop {
        let v = d.eval(x);
        if !v.is_zero() {
            break v.sign();
        }
        d = d.derivative();
        m += 1;
    };
    // Near x the denominator behaves like c * (u - x)^m with sign(c) = lead_sign.
    let denom_side_sign = match side {
        Side::Right => lead_sign,
        Side::Left => {
            if m.is_multiple_of(2) {
                lead_sign
            } else {
                -lead_sign
            }
        }
    };
    HalfInteger::from_halves((numer_sign * denom_side_sign).to_i8() as i64)
}

/// Cauchy index of `q/p` over the closed interval `[a, b]`: right-jumps
/// summed on `[a, b)` minus left-jumps on `(a, b]`.
///
/// Evaluated as half the alternative variation difference of the signed
/// remainder chain of the coprime form.
#[allow(non_snake_case)]
pub fn cindex_polyE(
    a: &Rational,
    b: &Rational,
    q: &RatPoly,
    p: &RatPoly,
) -> Result<HalfInteger, Error> {
    if p.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if a >= b {
        return Err(Error::BadInterval);
    }
    let (numer, denom) = reduce_pair(q, p);
    let v = changes_alt_itv_smods(a, b, &denom, &numer)?;
    Ok(HalfInteger::from_halves(v))
}

/// Cauchy index of `q/p` over all of R: the index over `[-B, B]` for any
/// `B` beyond every real root of `p*q`, evaluated with leading-coefficient
/// sign rules at the two infinities.
pub fn cindex_poly_ubd(q: &RatPoly, p: &RatPoly) -> Result<HalfInteger, Error> {
    if p.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let (numer, denom) = reduce_pair(q, p);
    let chain = smods(&denom, &numer)?;
    let v = changes_alt_signs(&chain.signs_at_infinity(true))
        - changes_alt_signs(&chain.signs_at_infinity(false));
    Ok(HalfInteger::from_halves(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::half_int;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn rp(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    fn rf(numer: &[i64], denom: &[i64]) -> RationalFunction {
        RationalFunction::new(rp(numer), rp(denom)).unwrap()
    }

    #[test]
    fn jump_examples() {
        let inv_x = rf(&[1], &[0, 1]);
        assert_eq!(jump_at(&inv_x, &q(0), Side::Right), half_int(1));
        assert_eq!(jump_at(&inv_x, &q(0), Side::Left), half_int(-1));
        let inv_x2 = rf(&[1], &[0, 0, 1]);
        assert_eq!(jump_at(&inv_x2, &q(0), Side::Left), half_int(1));
        // not a pole
        assert_eq!(jump_at(&inv_x, &q(3), Side::Left), half_int(0));
    }

    #[test]
    fn jump_normalizes_common_factors() {
        // (x * 1) / (x * x) = 1/x after reduction
        let f = rf(&[0, 1], &[0, 0, 1]);
        assert_eq!(jump_at(&f, &q(0), Side::Right), half_int(1));
        assert_eq!(jump_at(&f, &q(0), Side::Left), half_int(-1));
    }

    #[test]
    fn cindex_polye_examples() {
        // pole of 1/x inside: -inf -> +inf
        assert_eq!(
            cindex_polyE(&q(-1), &q(1), &rp(&[1]), &rp(&[0, 1])).unwrap(),
            half_int(2)
        );
        // left endpoint on the pole: only the right-jump counts
        assert_eq!(
            cindex_polyE(&q(0), &q(1), &rp(&[1]), &rp(&[0, 1])).unwrap(),
            half_int(1)
        );
        // even pole of 1/x^2: +inf on both sides, contributions cancel
        assert_eq!(
            cindex_polyE(&q(-1), &q(1), &rp(&[1]), &rp(&[0, 0, 1])).unwrap(),
            half_int(0)
        );
    }

    #[test]
    fn cindex_polye_errors() {
        assert_eq!(
            cindex_polyE(&q(0), &q(1), &rp(&[1]), &RatPoly::zero()),
            Err(Error::ZeroDenominator)
        );
        assert_eq!(
            cindex_polyE(&q(1), &q(0), &rp(&[1]), &rp(&[0, 1])),
            Err(Error::BadInterval)
        );
    }

    #[test]
    fn cindex_ubd_examples() {
        assert_eq!(
            cindex_poly_ubd(&rp(&[1]), &rp(&[0, 1])).unwrap(),
            half_int(2)
        );
        assert_eq!(
            cindex_poly_ubd(&RatPoly::zero(), &rp(&[1, 0, 1])).unwrap(),
            half_int(0)
        );
    }

    #[test]
    fn scaling_invariance_small() {
        let p = rp(&[-2, 0, 1]);
        let numer = rp(&[1, 1]);
        let base = cindex_polyE(&q(-3), &q(3), &numer, &p).unwrap();
        for c in [q(3), q(-5), Rational::new(2, 7)] {
            let scaled = cindex_polyE(&q(-3), &q(3), &numer.scale(&c), &p.scale(&c)).unwrap();
            assert_eq!(scaled, base);
        }
    }
}
