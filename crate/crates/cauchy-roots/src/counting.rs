//! Exact root counting: multiplicity-counted complex roots of a polynomial
//! in an open rectangle, the upper half-plane, or a general open half-plane,
//! plus the Routh–Hurwitz stability test.
//!
//! Each counter first certifies that no root lies on the region border and
//! refuses to count otherwise ([`Error::RootOnBorder`]); the certificate of
//! those border checks is part of the returned report so external tools can
//! audit the result. Counts come from Cauchy indices of the
//! real/imaginary-part rational functions along the border, evaluated as
//! sign-variation differences of signed remainder chains.

use rayon::prelude::*;

use crate::error::{BorderLocation, Error};
use crate::exactnum::{GaussianRational, Rational};
use crate::poly::GaussPoly;
use crate::sturm::{changes_alt_itv_smods, changes_itv_smods, changes_R_smods};

/// Axis-aligned open rectangle, corners strictly ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rectangle {
    lower_left: GaussianRational,
    upper_right: GaussianRational,
}

impl Rectangle {
    pub fn new(
        lower_left: GaussianRational,
        upper_right: GaussianRational,
    ) -> Result<Rectangle, Error> {
        if lower_left.re() >= upper_right.re() || lower_left.im() >= upper_right.im() {
            return Err(Error::DegenerateRectangle);
        }
        Ok(Rectangle {
            lower_left,
            upper_right,
        })
    }

    pub fn lower_left(&self) -> &GaussianRational {
        &self.lower_left
    }

    pub fn upper_right(&self) -> &GaussianRational {
        &self.upper_right
    }

    pub fn width(&self) -> Rational {
        self.upper_right.re() - self.lower_left.re()
    }

    pub fn height(&self) -> Rational {
        self.upper_right.im() - self.lower_left.im()
    }

    /// Corners counterclockwise from the lower left.
    pub fn corners(&self) -> [GaussianRational; 4] {
        let a1 = self.lower_left.clone();
        let a3 = self.upper_right.clone();
        let a2 = GaussianRational::new(a3.re().clone(), a1.im().clone());
        let a4 = GaussianRational::new(a1.re().clone(), a3.im().clone());
        [a1, a2, a3, a4]
    }

    /// Border edges counterclockwise: bottom, right, top, left.
    pub fn edges(&self) -> [(GaussianRational, GaussianRational); 4] {
        let [a1, a2, a3, a4] = self.corners();
        [
            (a1.clone(), a2.clone()),
            (a2, a3.clone()),
            (a3, a4.clone()),
            (a4, a1),
        ]
    }

    /// Whether `z` lies strictly inside.
    pub fn contains_open(&self, z: &GaussianRational) -> bool {
        self.lower_left.re() < z.re()
            && z.re() < self.upper_right.re()
            && self.lower_left.im() < z.im()
            && z.im() < self.upper_right.im()
    }

    /// Splits at the vertical line `Re = x`, which must be strictly inside.
    pub fn split_at_re(&self, x: &Rational) -> Result<(Rectangle, Rectangle), Error> {
        if !(self.lower_left.re() < x && x < self.upper_right.re()) {
            return Err(Error::BadInterval);
        }
        let left = Rectangle::new(
            self.lower_left.clone(),
            GaussianRational::new(x.clone(), self.upper_right.im().clone()),
        )?;
        let right = Rectangle::new(
            GaussianRational::new(x.clone(), self.lower_left.im().clone()),
            self.upper_right.clone(),
        )?;
        Ok((left, right))
    }

    /// Splits at the horizontal line `Im = y`, which must be strictly inside.
    pub fn split_at_im(&self, y: &Rational) -> Result<(Rectangle, Rectangle), Error> {
        if !(self.lower_left.im() < y && y < self.upper_right.im()) {
            return Err(Error::BadInterval);
        }
        let bottom = Rectangle::new(
            self.lower_left.clone(),
            GaussianRational::new(self.upper_right.re().clone(), y.clone()),
        )?;
        let top = Rectangle::new(
            GaussianRational::new(self.lower_left.re().clone(), y.clone()),
            self.upper_right.clone(),
        )?;
        Ok((bottom, top))
    }
}

/// The counting region a report refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Region {
    Rectangle(Rectangle),
    UpperHalfPlane,
    /// Points `w` with `Im((w - a) / (b - a)) > 0`: the half-plane to the
    /// left of the vector from `a` to `b`.
    HalfPlane {
        a: GaussianRational,
        b: GaussianRational,
    },
}

/// Outcome of one border check, kept as an auditable certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum BorderCheck {
    /// A rectangle edge: root-free verdict plus the variation count that
    /// entered the index sum.
    Edge {
        start: GaussianRational,
        end: GaussianRational,
        no_root: bool,
        variation: Option<i64>,
    },
    /// The real axis (after any affine change of variable), with the
    /// variation count of the index over all of R.
    RealAxis { no_root: bool, variation: i64 },
}

/// Result record of a counting operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCountReport {
    /// Multiplicity-counted roots strictly inside the region.
    pub count: u32,
    pub region: Region,
    pub border: Vec<BorderCheck>,
}

/// True iff `p` has no root on the closed segment `[a, b]`.
///
/// Route: reject roots at the endpoints directly, compose `p` with the
/// segment's affine parameterization, take the gcd `g` of the real and
/// imaginary part polynomials, and check by Sturm that `g` has no real root
/// in `[0, 1]`.
pub fn no_proots_line(
    p: &GaussPoly,
    a: &GaussianRational,
    b: &GaussianRational,
) -> Result<bool, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.eval(a).is_zero() || p.eval(b).is_zero() {
        return Ok(false);
    }
    let pc = p.compose_affine(a, &(b - a));
    let (p_re, p_im) = pc.re_im_parts();
    let g = p_re.gcd(&p_im);
    // endpoints of [0,1] are not roots of g: p(a) != 0 and p(b) != 0
    let v = changes_itv_smods(
        &Rational::zero(),
        &Rational::one(),
        &g,
        &g.derivative(),
    )?;
    Ok(v == 0)
}

/// Variation count of one rectangle edge: the alternative variation of the
/// remainder chain of the coprime real/imaginary parts of `p` composed with
/// the edge.
fn edge_variation(
    p: &GaussPoly,
    start: &GaussianRational,
    end: &GaussianRational,
) -> Result<i64, Error> {
    let pc = p.compose_affine(start, &(end - start));
    let (p_re, p_im) = pc.re_im_parts();
    let g = p_re.gcd(&p_im);
    let re_red = p_re.div_exact(&g)?;
    let im_red = p_im.div_exact(&g)?;
    changes_alt_itv_smods(&Rational::zero(), &Rational::one(), &re_red, &im_red)
}

/// Multiplicity-counted roots of `p` strictly inside `rect`.
///
/// The four border edges are certified root-free first; the count is then
/// minus a quarter of the summed edge variations, all four edges taken
/// counterclockwise.
pub fn proots_rectangle(p: &GaussPoly, rect: &Rectangle) -> Result<RootCountReport, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let edges = rect.edges();
    let checked: Vec<(bool, GaussianRational, GaussianRational)> = edges
        .par_iter()
        .map(|(start, end)| {
            no_proots_line(p, start, end).map(|ok| (ok, start.clone(), end.clone()))
        })
        .collect::<Result<_, _>>()?;
    for (ok, start, end) in &checked {
        if !ok {
            return Err(Error::RootOnBorder(Box::new(BorderLocation::Edge {
                start: start.clone(),
                end: end.clone(),
            })));
        }
    }
    let variations: Vec<i64> = edges
        .par_iter()
        .map(|(start, end)| edge_variation(p, start, end))
        .collect::<Result<_, _>>()?;
    let sum: i64 = variations.iter().sum();
    if sum % 4 != 0 || sum > 0 {
        return Err(Error::Internal("edge variation sum is not -4N"));
    }
    let count = u32::try_from(-sum / 4)
        .map_err(|_| Error::Internal("root count out of range"))?;
    if let Some(d) = p.degree() {
        if count as usize > d {
            return Err(Error::Internal("count exceeds degree"));
        }
    }
    let border = edges
        .iter()
        .zip(&variations)
        .map(|((start, end), &variation)| BorderCheck::Edge {
            start: start.clone(),
            end: end.clone(),
            no_root: true,
            variation: Some(variation),
        })
        .collect();
    Ok(RootCountReport {
        count,
        region: Region::Rectangle(rect.clone()),
        border,
    })
}

/// Multiplicity-counted roots of `p` with `Im > 0`.
///
/// `p` is made monic, its real/imaginary parts are split off, and the real
/// axis is certified root-free by checking that `gcd(Im-part, Re-part)` has
/// no real root. The count is `(degree - V) / 2` where `V` is the variation
/// of the remainder chain of the two parts between the infinities.
pub fn proots_upper(p: &GaussPoly) -> Result<RootCountReport, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let monic = p.monic().expect("nonzero");
    let (p_re, p_im) = monic.re_im_parts();
    let g = p_im.gcd(&p_re);
    let axis_variation = if g.degree().is_some_and(|d| d > 0) {
        changes_R_smods(&g, &g.derivative())?
    } else {
        0
    };
    if axis_variation != 0 {
        return Err(Error::RootOnBorder(Box::new(BorderLocation::RealAxis)));
    }
    let v = changes_R_smods(&p_re, &p_im)?;
    let degree = monic.degree().expect("nonzero") as i64;
    let twice_count = degree - v;
    if twice_count % 2 != 0 || twice_count < 0 || twice_count > 2 * degree {
        return Err(Error::Internal("upper half-plane index out of range"));
    }
    Ok(RootCountReport {
        count: (twice_count / 2) as u32,
        region: Region::UpperHalfPlane,
        border: vec![BorderCheck::RealAxis {
            no_root: true,
            variation: v,
        }],
    })
}

/// Multiplicity-counted roots `w` of `p` with `Im((w - a)/(b - a)) > 0`,
/// by the change of variable `x = a + (b - a) t` and an upper-half-plane
/// count.
pub fn proots_half(
    p: &GaussPoly,
    a: &GaussianRational,
    b: &GaussianRational,
) -> Result<RootCountReport, Error> {
    if a == b {
        return Err(Error::DegenerateDirection);
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let composed = p.compose_affine(a, &(b - a));
    let inner = proots_upper(&composed).map_err(|e| match e {
        Error::RootOnBorder(_) => Error::RootOnBorder(Box::new(BorderLocation::Line {
            a: a.clone(),
            b: b.clone(),
        })),
        other => other,
    })?;
    Ok(RootCountReport {
        count: inner.count,
        region: Region::HalfPlane {
            a: a.clone(),
            b: b.clone(),
        },
        border: inner.border,
    })
}

/// Routh–Hurwitz stability: true iff every root of `p` has `Re < 0`.
///
/// A root exactly on the imaginary axis makes the system not asymptotically
/// stable, so a border detection returns `false` rather than an error.
pub fn routh_stable(p: &GaussPoly) -> Result<bool, Error> {
    let degree = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    match proots_half(p, &GaussianRational::zero(), &GaussianRational::i()) {
        Ok(report) => Ok(report.count as usize == degree),
        Err(Error::RootOnBorder(_)) => Ok(false),
        Err(other) => Err(other),
    }
}
