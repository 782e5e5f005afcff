//! Piecewise paths built from line segments and quarter-aligned circular
//! arcs, their Cauchy indices about a point, and winding numbers of closed
//! loops.
//!
//! For a path `g` and a point `z0` off its image, the path index is the
//! Cauchy index over `[0, 1]` of `t -> Im(g(t) - z0) / Re(g(t) - z0)`: a
//! half-unit tally of how the path crosses the vertical line through `z0`.
//! For a closed loop the winding number is minus half the index, and the
//! index of a concatenation is the sum of the segment indices, endpoint
//! jumps included (right-jumps count on `[0, 1)`, left-jumps on `(0, 1]`,
//! so each junction is counted exactly once).
//!
//! Arc angles are restricted to integer multiples of a quarter turn. That
//! keeps arc endpoints at rational coordinates, so loop closure and
//! point-on-path tests stay exact; every index computation below reduces to
//! rational comparisons plus one square-root sign comparison handled by
//! comparing squares.

use num::bigint::BigInt;
use num::Zero;

use crate::error::Error;
use crate::exactnum::{GaussianRational, HalfInteger, Rational, Sign};

/// Straight segment from `a` to `b`, parameterized `(1-t)a + tb`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSeg {
    pub a: GaussianRational,
    pub b: GaussianRational,
}

impl LineSeg {
    pub fn new(a: GaussianRational, b: GaussianRational) -> LineSeg {
        LineSeg { a, b }
    }

    /// Exact membership: collinearity plus parameter range.
    pub fn contains(&self, z: &GaussianRational) -> bool {
        let v = &self.b - &self.a;
        let u = z - &self.a;
        if v.is_zero() {
            return u.is_zero();
        }
        let cross = v.re() * u.im() - v.im() * u.re();
        if !cross.is_zero() {
            return false;
        }
        let dot = u.re() * v.re() + u.im() * v.im();
        !dot.is_negative() && dot <= v.norm_sqr()
    }
}

/// Circular arc centred at `center`, radius `radius > 0`, traversed from
/// angle `start_quarter * pi/2` to `end_quarter * pi/2` (counterclockwise
/// iff `end_quarter > start_quarter`, at most one full turn).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSeg {
    center: GaussianRational,
    radius: Rational,
    start_quarter: i64,
    end_quarter: i64,
}

impl ArcSeg {
    pub fn new(
        center: GaussianRational,
        radius: Rational,
        start_quarter: i64,
        end_quarter: i64,
    ) -> Result<ArcSeg, Error> {
        if !radius.is_positive() {
            return Err(Error::InvalidArc("radius must be positive"));
        }
        if start_quarter == end_quarter {
            return Err(Error::InvalidArc("zero angular span"));
        }
        if (end_quarter - start_quarter).abs() > 4 {
            return Err(Error::InvalidArc("span exceeds one full turn"));
        }
        Ok(ArcSeg {
            center,
            radius,
            start_quarter,
            end_quarter,
        })
    }

    pub fn center(&self) -> &GaussianRational {
        &self.center
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    pub fn start_quarter(&self) -> i64 {
        self.start_quarter
    }

    pub fn end_quarter(&self) -> i64 {
        self.end_quarter
    }

    /// The point at angle `k * pi/2`.
    pub fn quarter_point(&self, k: i64) -> GaussianRational {
        let (c, s) = cos_sin_quarter(k);
        GaussianRational::new(
            self.center.re() + &self.radius * &Rational::from_int(c),
            self.center.im() + &self.radius * &Rational::from_int(s),
        )
    }

    /// Exact membership: on the circle and inside the traversed angle range.
    pub fn contains(&self, z: &GaussianRational) -> bool {
        let u = z - &self.center;
        if u.norm_sqr() != &self.radius * &self.radius {
            return false;
        }
        let x = u.re();
        let y = u.im();
        let lo = self.start_quarter.min(self.end_quarter);
        let hi = self.start_quarter.max(self.end_quarter);
        (lo..hi).any(|k| match k.rem_euclid(4) {
            0 => !x.is_negative() && !y.is_negative(),
            1 => !x.is_positive() && !y.is_negative(),
            2 => !x.is_positive() && !y.is_positive(),
            _ => !x.is_negative() && !y.is_positive(),
        })
    }
}

fn cos_sin_quarter(k: i64) -> (i64, i64) {
    match k.rem_euclid(4) {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    }
}

/// One piece of a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathSeg {
    Line(LineSeg),
    Arc(ArcSeg),
}

impl PathSeg {
    /// Exact start and end points.
    pub fn endpoints(&self) -> (GaussianRational, GaussianRational) {
        match self {
            PathSeg::Line(l) => (l.a.clone(), l.b.clone()),
            PathSeg::Arc(a) => (
                a.quarter_point(a.start_quarter),
                a.quarter_point(a.end_quarter),
            ),
        }
    }

    /// Exact point-on-segment test.
    pub fn contains(&self, z: &GaussianRational) -> bool {
        match self {
            PathSeg::Line(l) => l.contains(z),
            PathSeg::Arc(a) => a.contains(z),
        }
    }

    /// Cauchy index of this segment about `z0`.
    pub fn cindex(&self, z0: &GaussianRational) -> Result<HalfInteger, Error> {
        match self {
            PathSeg::Line(l) => cindex_line(&l.a, &l.b, z0),
            PathSeg::Arc(a) => cindex_arc(a, z0),
        }
    }

    /// The same segment traversed backwards.
    pub fn reversed(&self) -> PathSeg {
        match self {
            PathSeg::Line(l) => PathSeg::Line(LineSeg::new(l.b.clone(), l.a.clone())),
            PathSeg::Arc(a) => PathSeg::Arc(ArcSeg {
                center: a.center.clone(),
                radius: a.radius.clone(),
                start_quarter: a.end_quarter,
                end_quarter: a.start_quarter,
            }),
        }
    }
}

/// Cauchy index of the line path from `a` to `b` about `z0`, by the exact
/// five-quantity case split on the endpoint coordinates. The result always
/// lies in `{-1, -1/2, 0, 1/2, 1}`.
pub fn cindex_line(
    a: &GaussianRational,
    b: &GaussianRational,
    z0: &GaussianRational,
) -> Result<HalfInteger, Error> {
    if LineSeg::new(a.clone(), b.clone()).contains(z0) {
        return Err(Error::PointOnPath);
    }
    let c1 = a.re() - z0.re();
    let c2 = b.re() - z0.re();
    let c3 = a.im() * b.re() + z0.re() * b.im() + z0.im() * a.re()
        - z0.im() * b.re()
        - b.im() * a.re()
        - z0.re() * a.im();
    let d1 = a.im() - z0.im();
    let d2 = b.im() - z0.im();

    let halves = if (c1.is_positive() && c2.is_negative())
        || (c1.is_negative() && c2.is_positive())
    {
        // proper crossing of the vertical line
        if c3.is_positive() {
            2
        } else {
            -2
        }
    } else if (c1.is_zero() != c2.is_zero())
        && (!c1.is_zero() || !d1.is_zero())
        && (!c2.is_zero() || !d2.is_zero())
    {
        // exactly one endpoint on the line: a half jump
        if (c1.is_zero() && (c2.is_positive() == d1.is_positive()))
            || (c2.is_zero() && (c1.is_positive() == d2.is_negative()))
        {
            1
        } else {
            -1
        }
    } else {
        0
    };
    Ok(HalfInteger::from_halves(halves))
}

/// Cauchy index of a quarter-aligned arc about `z0`.
///
/// The arc is cut into unit quarter turns; on each quarter the cosine is
/// strictly monotone, so the vertical line through `z0` is crossed at most
/// once and the crossing sits at an exactly classifiable position (interior,
/// start, or end of the quarter). Interior crossings contribute a full jump,
/// quarter-corner crossings a half jump on the side the quarter owns, and
/// tangential touches (corner cosine `+/-1`) contribute half jumps of equal
/// sign that cancel across the junction.
pub fn cindex_arc(arc: &ArcSeg, z0: &GaussianRational) -> Result<HalfInteger, Error> {
    if arc.contains(z0) {
        return Err(Error::PointOnPath);
    }
    let d: i64 = if arc.end_quarter > arc.start_quarter {
        1
    } else {
        -1
    };
    let r = &arc.radius;
    // crossing condition in scaled form: r*cos(theta) = cx
    let cx = z0.re() - arc.center.re();
    let dy = arc.center.im() - z0.im();
    let mut halves: i64 = 0;
    let span = (arc.end_quarter - arc.start_quarter).abs();
    for j in 0..span {
        let ka = arc.start_quarter + d * j;
        let kb = ka + d;
        halves += quarter_halves(r, &cx, &dy, ka, kb, d);
    }
    Ok(HalfInteger::from_halves(halves))
}

/// Index contribution (in halves) of the unit quarter from corner `ka` to
/// corner `kb = ka + d`, for the crossing line `r*cos(theta) = cx`.
fn quarter_halves(r: &Rational, cx: &Rational, dy: &Rational, ka: i64, kb: i64, d: i64) -> i64 {
    let cos_at = |k: i64| -> Rational {
        let (c, _) = cos_sin_quarter(k);
        r * &Rational::from_int(c)
    };
    let cos_a = cos_at(ka);
    let cos_b = cos_at(kb);
    let (lo, hi) = if cos_a < cos_b {
        (&cos_a, &cos_b)
    } else {
        (&cos_b, &cos_a)
    };
    if cx < lo || cx > hi {
        return 0;
    }
    if cx == &cos_a || cx == &cos_b {
        // crossing at a quarter corner
        let k_star = if cx == &cos_a { ka } else { kb };
        let (cos_star, sin_star) = cos_sin_quarter(k_star);
        if sin_star != 0 {
            // simple crossing owned half by this quarter
            let numer = dy + &(r * &Rational::from_int(sin_star));
            let sigma_n = numer.sign();
            debug_assert!(sigma_n != Sign::Zero, "point on arc slipped past contains()");
            let delta = -sin_star * d;
            (sigma_n.to_i8() as i64) * delta
        } else {
            // tangency: the denominator keeps one sign on this side
            let sigma_d = -cos_star;
            let sigma_n = dy.sign().to_i8() as i64;
            debug_assert!(sigma_n != 0, "tangent point on arc slipped past contains()");
            let side = if cx == &cos_a { 1 } else { -1 };
            side * sigma_n * sigma_d
        }
    } else {
        // interior crossing: sin(theta*) = s * sqrt(1 - (cx/r)^2) with the
        // quarter's interior sign s; compare squares to decide the numerator
        let kmin = ka.min(kb);
        let s: i64 = match kmin.rem_euclid(4) {
            0 | 1 => 1,
            _ => -1,
        };
        // sign of dy + s*sqrt(r^2 - cx^2)
        let disc = r * r - cx * cx;
        debug_assert!(disc.is_positive());
        let sigma_n: i64 = if dy.is_zero() || (dy.sign().to_i8() as i64) == s {
            s
        } else {
            let dy2 = dy * dy;
            match dy2.cmp(&disc) {
                std::cmp::Ordering::Greater => dy.sign().to_i8() as i64,
                std::cmp::Ordering::Less => s,
                std::cmp::Ordering::Equal => {
                    unreachable!("point on arc slipped past contains()")
                }
            }
        };
        let delta = -s * d;
        2 * sigma_n * delta
    }
}

/// A closed loop of consecutive segments: each segment ends exactly where
/// the next begins, and the last ends at the start of the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    segs: Vec<PathSeg>,
}

impl Loop {
    pub fn new(segs: Vec<PathSeg>) -> Result<Loop, Error> {
        if segs.is_empty() {
            return Err(Error::EmptyLoop);
        }
        for k in 0..segs.len() {
            let (_, end) = segs[k].endpoints();
            let (next_start, _) = segs[(k + 1) % segs.len()].endpoints();
            if end != next_start {
                return Err(Error::NotClosed);
            }
        }
        Ok(Loop { segs })
    }

    pub fn segments(&self) -> &[PathSeg] {
        &self.segs
    }

    /// The loop traversed backwards.
    pub fn reversed(&self) -> Loop {
        Loop {
            segs: self.segs.iter().rev().map(PathSeg::reversed).collect(),
        }
    }

    /// The same loop started at segment `k`.
    pub fn rotated(&self, k: usize) -> Loop {
        let mut segs = self.segs.clone();
        let n = segs.len();
        segs.rotate_left(k % n);
        Loop { segs }
    }

    /// Splits line segment `index` at interior parameter `t`, keeping the
    /// loop geometrically identical.
    pub fn with_line_split(&self, index: usize, t: &Rational) -> Result<Loop, Error> {
        if !(t.is_positive() && t < &Rational::one()) {
            return Err(Error::BadInterval);
        }
        let PathSeg::Line(l) = &self.segs[index] else {
            return Err(Error::Internal("split target is not a line segment"));
        };
        let one_minus = Rational::one() - t.clone();
        let mid = GaussianRational::new(
            l.a.re() * &one_minus + l.b.re() * t,
            l.a.im() * &one_minus + l.b.im() * t,
        );
        let mut segs = self.segs.clone();
        segs.splice(
            index..=index,
            [
                PathSeg::Line(LineSeg::new(l.a.clone(), mid.clone())),
                PathSeg::Line(LineSeg::new(mid, l.b.clone())),
            ],
        );
        Loop::new(segs)
    }
}

/// Winding number of a closed loop about `z0`: minus half the summed
/// segment indices, which is guaranteed to be an integer for a valid loop.
/// A parity failure is reported as [`Error::NonIntegerResult`]; it means a
/// validation hole, never a value to round.
pub fn winding_number(loop_: &Loop, z0: &GaussianRational) -> Result<i64, Error> {
    let mut total = HalfInteger::zero();
    for seg in loop_.segments() {
        if seg.contains(z0) {
            return Err(Error::PointOnPath);
        }
        total = total + seg.cindex(z0)?;
    }
    // n = -(total/2); total stores twice its value
    let twice: &BigInt = total.twice();
    if (twice % BigInt::from(4)).is_zero() {
        let n = -(twice / BigInt::from(4));
        i64::try_from(n).map_err(|_| Error::Internal("winding number out of i64 range"))
    } else {
        Err(Error::NonIntegerResult)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::half_int;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(Rational::from_int(re), Rational::from_int(im))
    }

    fn arc(c: GaussianRational, r: i64, k0: i64, k1: i64) -> ArcSeg {
        ArcSeg::new(c, Rational::from_int(r), k0, k1).unwrap()
    }

    #[test]
    fn seg_endpoints_examples() {
        let l = PathSeg::Line(LineSeg::new(g(-2, 0), g(2, 0)));
        assert_eq!(l.endpoints(), (g(-2, 0), g(2, 0)));

        let half = PathSeg::Arc(arc(g(0, 0), 2, 0, 2));
        assert_eq!(half.endpoints(), (g(2, 0), g(-2, 0)));

        let quarter = PathSeg::Arc(arc(g(0, 1), 1, 2, 3));
        assert_eq!(quarter.endpoints(), (g(-1, 1), g(0, 0)));
    }

    #[test]
    fn point_on_seg_examples() {
        let l = PathSeg::Line(LineSeg::new(g(-2, 0), g(2, 0)));
        assert!(l.contains(&g(0, 0)));
        assert!(!l.contains(&g(3, 0)));
        assert!(!l.contains(&g(0, 1)));

        let half = PathSeg::Arc(arc(g(0, 0), 2, 0, 2));
        assert!(half.contains(&g(0, 2)));
        assert!(!half.contains(&g(0, -2)));
        assert!(half.contains(&g(2, 0)));
        assert!(!half.contains(&g(1, 1)));
    }

    #[test]
    fn cindex_line_examples() {
        assert_eq!(cindex_line(&g(-2, 0), &g(2, 0), &g(0, 1)).unwrap(), half_int(-2));
        assert_eq!(cindex_line(&g(-2, 0), &g(2, 0), &g(0, -1)).unwrap(), half_int(2));
        assert_eq!(cindex_line(&g(1, 0), &g(2, 0), &g(0, 0)).unwrap(), half_int(0));
        assert_eq!(
            cindex_line(&g(-2, 0), &g(2, 0), &g(0, 0)),
            Err(Error::PointOnPath)
        );
    }

    #[test]
    fn cindex_line_endpoint_half_jumps() {
        // starts on the vertical line above z0
        assert_eq!(cindex_line(&g(0, 2), &g(2, 0), &g(0, 1)).unwrap(), half_int(1));
        // ends on the vertical line
        assert_eq!(cindex_line(&g(2, 0), &g(0, 2), &g(0, 1)).unwrap(), half_int(-1));
    }

    #[test]
    fn cindex_arc_examples() {
        let half = arc(g(0, 0), 2, 0, 2);
        assert_eq!(cindex_arc(&half, &g(0, 1)).unwrap(), half_int(-2));
        assert_eq!(cindex_arc(&half, &g(0, -1)).unwrap(), half_int(-2));
        let quarter = arc(g(0, 0), 2, 0, 1);
        assert_eq!(cindex_arc(&quarter, &g(0, 3)).unwrap(), half_int(1));
        assert_eq!(
            cindex_arc(&half, &g(0, 2)),
            Err(Error::PointOnPath)
        );
    }

    #[test]
    fn cindex_arc_full_circle() {
        let full = arc(g(0, 0), 1, 0, 4);
        assert_eq!(cindex_arc(&full, &g(0, 0)).unwrap(), half_int(-4));
        let full_cw = arc(g(0, 0), 1, 4, 0);
        assert_eq!(cindex_arc(&full_cw, &g(0, 0)).unwrap(), half_int(4));
    }

    #[test]
    fn cindex_arc_tangency_cancels() {
        // arc through the tangent point (1, 0) of the line Re = 1
        let a = arc(g(0, 0), 1, -1, 1);
        assert_eq!(cindex_arc(&a, &g(1, 1)).unwrap(), half_int(0));
        assert_eq!(cindex_arc(&a, &g(1, -1)).unwrap(), half_int(0));
    }

    fn half_disk() -> Loop {
        Loop::new(vec![
            PathSeg::Line(LineSeg::new(g(-2, 0), g(2, 0))),
            PathSeg::Arc(arc(g(0, 0), 2, 0, 2)),
        ])
        .unwrap()
    }

    #[test]
    fn winding_number_half_disk() {
        let l = half_disk();
        assert_eq!(winding_number(&l, &g(0, 1)).unwrap(), 1);
        assert_eq!(winding_number(&l, &g(0, -1)).unwrap(), 0);
        assert_eq!(winding_number(&l, &g(0, 0)), Err(Error::PointOnPath));
    }

    #[test]
    fn winding_number_ccw_square() {
        let l = Loop::new(vec![
            PathSeg::Line(LineSeg::new(g(1, 1), g(-1, 1))),
            PathSeg::Line(LineSeg::new(g(-1, 1), g(-1, -1))),
            PathSeg::Line(LineSeg::new(g(-1, -1), g(1, -1))),
            PathSeg::Line(LineSeg::new(g(1, -1), g(1, 1))),
        ])
        .unwrap();
        assert_eq!(winding_number(&l, &g(0, 0)).unwrap(), 1);
        // outside
        assert_eq!(winding_number(&l, &g(3, 0)).unwrap(), 0);
    }

    #[test]
    fn loop_validation() {
        assert_eq!(Loop::new(vec![]), Err(Error::EmptyLoop));
        let open = Loop::new(vec![
            PathSeg::Line(LineSeg::new(g(0, 0), g(1, 0))),
            PathSeg::Line(LineSeg::new(g(1, 1), g(0, 0))),
        ]);
        assert_eq!(open, Err(Error::NotClosed));
    }

    #[test]
    fn reverse_rotate_split_basics() {
        let l = half_disk();
        let z = g(0, 1);
        assert_eq!(winding_number(&l.reversed(), &z).unwrap(), -1);
        assert_eq!(winding_number(&l.rotated(1), &z).unwrap(), 1);
        let split = l.with_line_split(0, &Rational::new(1, 3)).unwrap();
        assert_eq!(split.segments().len(), 3);
        assert_eq!(winding_number(&split, &z).unwrap(), 1);
        // splitting at the point under z0's vertical line still works:
        // the junction jumps are counted once
        let split_mid = l.with_line_split(0, &Rational::new(1, 2)).unwrap();
        assert_eq!(winding_number(&split_mid, &z).unwrap(), 1);
    }

    #[test]
    fn arc_validation() {
        assert!(ArcSeg::new(g(0, 0), Rational::from_int(0), 0, 1).is_err());
        assert!(ArcSeg::new(g(0, 0), Rational::from_int(1), 1, 1).is_err());
        assert!(ArcSeg::new(g(0, 0), Rational::from_int(1), 0, 5).is_err());
        assert!(ArcSeg::new(g(0, 0), Rational::from_int(1), -2, 2).is_ok());
    }
}
