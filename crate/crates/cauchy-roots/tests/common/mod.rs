//! Shared helpers for the integration and acceptance suites: seeded random
//! generators for exact scalars/polynomials/loops, and an exact real-root
//! isolator that is independent of the signed-remainder machinery it is
//! used to check.

#![allow(dead_code)]

use cauchy_roots::exactnum::{GaussianRational, Rational};
use cauchy_roots::path::{ArcSeg, LineSeg, Loop, PathSeg};
use cauchy_roots::poly::{GaussPoly, Poly, RatPoly};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn gi(re: i64, im: i64) -> GaussianRational {
    GaussianRational::new(Rational::from_int(re), Rational::from_int(im))
}

pub fn rpoly(coeffs: &[i64]) -> RatPoly {
    RatPoly::from_coeffs(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
}

pub fn gpoly(pairs: &[(i64, i64)]) -> GaussPoly {
    GaussPoly::from_coeffs(
        pairs
            .iter()
            .map(|&(re, im)| GaussianRational::new(Rational::from_int(re), Rational::from_int(im)))
            .collect(),
    )
}

pub fn rand_rational(rng: &mut ChaCha8Rng, num_bound: i64, den_bound: i64) -> Rational {
    Rational::new(
        rng.gen_range(-num_bound..=num_bound),
        rng.gen_range(1..=den_bound),
    )
}

pub fn rand_nonzero_rational(rng: &mut ChaCha8Rng, num_bound: i64, den_bound: i64) -> Rational {
    loop {
        let r = rand_rational(rng, num_bound, den_bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn rand_gauss(rng: &mut ChaCha8Rng, num_bound: i64, den_bound: i64) -> GaussianRational {
    GaussianRational::new(
        rand_rational(rng, num_bound, den_bound),
        rand_rational(rng, num_bound, den_bound),
    )
}

/// Random rational polynomial of exactly the given degree.
pub fn rand_rpoly(rng: &mut ChaCha8Rng, degree: usize, num_bound: i64, den_bound: i64) -> RatPoly {
    let mut coeffs: Vec<Rational> = (0..degree)
        .map(|_| rand_rational(rng, num_bound, den_bound))
        .collect();
    coeffs.push(rand_nonzero_rational(rng, num_bound, den_bound));
    RatPoly::from_coeffs(coeffs)
}

/// Random Gaussian-rational polynomial of exactly the given degree.
pub fn rand_gpoly(rng: &mut ChaCha8Rng, degree: usize, num_bound: i64, den_bound: i64) -> GaussPoly {
    let mut coeffs: Vec<GaussianRational> = (0..degree)
        .map(|_| rand_gauss(rng, num_bound, den_bound))
        .collect();
    coeffs.push(loop {
        let c = rand_gauss(rng, num_bound, den_bound);
        if !c.is_zero() {
            break c;
        }
    });
    GaussPoly::from_coeffs(coeffs)
}

/// Naive monic Euclid gcd over the rationals. Deliberately separate from the
/// library's pseudo-remainder route so the isolator below stays an
/// independent oracle.
pub fn euclid_gcd(p: &RatPoly, q: &RatPoly) -> RatPoly {
    let mut a = p.clone();
    let mut b = q.clone();
    if a.is_zero() && b.is_zero() {
        return RatPoly::zero();
    }
    while !b.is_zero() {
        let bm = b.monic().expect("nonzero");
        let (_, r) = a.divrem(&bm);
        a = bm;
        b = r;
    }
    a.monic().expect("nonzero gcd")
}

fn oracle_squarefree(p: &RatPoly) -> RatPoly {
    let g = euclid_gcd(p, &p.derivative());
    p.div_exact(&g)
        .expect("gcd divides")
        .monic()
        .expect("nonzero")
}

/// A closed interval [lo, hi] containing exactly one distinct real root;
/// `lo == hi` pins the root exactly, otherwise the endpoint values of the
/// isolated polynomial have strictly opposite signs.
#[derive(Debug, Clone)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn mid_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }
}

fn abs_bound(p: &RatPoly) -> Rational {
    // 1 + max |c_k / c_n|, a bound on every real root's magnitude
    let lead = p.leading().expect("nonzero").abs();
    let mut max = Rational::zero();
    let coeffs = p.coeffs();
    for c in &coeffs[..coeffs.len() - 1] {
        let r = c.abs() / lead.clone();
        if r > max {
            max = r;
        }
    }
    Rational::one() + max
}

/// Certifies that `p` has no root on `[lo, hi]` from an exact slope bound:
/// `|p(lo)| > (hi - lo) * sup |p'|` on the interval.
fn no_root_certificate(p: &RatPoly, lo: &Rational, hi: &Rational) -> bool {
    let p_lo = p.eval(lo);
    if p_lo.is_zero() || p.eval(hi).is_zero() {
        return false;
    }
    let width = hi - lo;
    let big = if lo.abs() > hi.abs() { lo.abs() } else { hi.abs() };
    let dp = p.derivative();
    let mut slope = Rational::zero();
    let mut pow = Rational::one();
    for c in dp.coeffs() {
        slope = slope + c.abs() * pow.clone();
        pow = pow * big.clone();
    }
    p_lo.abs() > width * slope
}

enum Barrier {
    Point(Rational),
    Gap(Rational, Rational),
}

/// Shrinks a sign-change interval of `dpsf` (exactly one root inside) until
/// it is certified free of roots of `p`.
fn shrink_to_barrier(p: &RatPoly, dpsf: &RatPoly, mut lo: Rational, mut hi: Rational) -> Barrier {
    let nudge_in = |fixed: &Rational, other: &Rational, p: &RatPoly, dpsf: &RatPoly| -> Rational {
        // replace an endpoint where p vanishes by a nearby interior point on
        // the same side of the dpsf root
        let side_sign = dpsf.eval(fixed).sign();
        let mut step = (other - fixed) / Rational::from_int(4);
        loop {
            let cand = fixed + &step;
            if dpsf.eval(&cand).sign() == side_sign && !p.eval(&cand).is_zero() {
                return cand;
            }
            step = step / Rational::from_int(4);
        }
    };
    loop {
        if p.eval(&lo).is_zero() {
            lo = nudge_in(&lo.clone(), &hi, p, dpsf);
        }
        if p.eval(&hi).is_zero() {
            hi = nudge_in(&hi.clone(), &lo, p, dpsf);
        }
        if no_root_certificate(p, &lo, &hi) {
            return Barrier::Gap(lo, hi);
        }
        let mid = (&lo + &hi) / Rational::from_int(2);
        let m = dpsf.eval(&mid);
        if m.is_zero() {
            return Barrier::Point(mid);
        }
        if dpsf.eval(&lo).sign() != m.sign() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Bisects a sign-change interval of `p` until it avoids every point in
/// `avoid` (none of which may be a root), or pins the root exactly.
fn refine_avoiding(p: &RatPoly, mut lo: Rational, mut hi: Rational, avoid: &[Rational]) -> RootInterval {
    let straddles =
        |lo: &Rational, hi: &Rational| avoid.iter().any(|t| lo <= t && t <= hi);
    while straddles(&lo, &hi) {
        let mid = (&lo + &hi) / Rational::from_int(2);
        let m = p.eval(&mid);
        if m.is_zero() {
            return RootInterval {
                lo: mid.clone(),
                hi: mid,
            };
        }
        if p.eval(&lo).sign() != m.sign() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RootInterval { lo, hi }
}

/// Exact isolation of all distinct real roots of `p` (nonzero), sorted and
/// pairwise disjoint, by recursive critical-point bisection: roots of the
/// squarefree derivative cut the line into certified monotone pieces, and
/// each sign change over a piece pins exactly one root.
pub fn isolate_real_roots_exact(p: &RatPoly) -> Vec<RootInterval> {
    let sf = oracle_squarefree(p);
    isolate_squarefree(&sf)
}

fn isolate_squarefree(p: &RatPoly) -> Vec<RootInterval> {
    let n = p.degree().expect("nonzero polynomial");
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        let root = -(p.coeff(0) / p.coeff(1));
        return vec![RootInterval {
            lo: root.clone(),
            hi: root,
        }];
    }
    let dpsf = oracle_squarefree(&p.derivative());
    let crits = isolate_squarefree(&dpsf);

    let mut bound = abs_bound(p);
    if dpsf.degree().is_some_and(|d| d > 0) {
        bound = bound + abs_bound(&dpsf);
    }
    // separator points between monotone pieces; gap barriers are root-free
    let mut cuts: Vec<Rational> = vec![-&bound];
    for c in crits {
        if c.is_point() {
            // an exact critical point; p cannot vanish there (squarefree)
            assert!(!p.eval(&c.lo).is_zero());
            cuts.push(c.lo);
        } else {
            match shrink_to_barrier(p, &dpsf, c.lo, c.hi) {
                Barrier::Point(t) => cuts.push(t),
                Barrier::Gap(lo, hi) => {
                    cuts.push(lo);
                    cuts.push(hi);
                }
            }
        }
    }
    cuts.push(bound.clone());

    let mut out = Vec::new();
    for w in cuts.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        if lo >= hi {
            continue;
        }
        let s_lo = p.eval(lo).sign();
        let s_hi = p.eval(hi).sign();
        assert!(!s_lo.is_zero() && !s_hi.is_zero(), "cut landed on a root");
        if s_lo != s_hi {
            out.push(RootInterval {
                lo: lo.clone(),
                hi: hi.clone(),
            });
        }
    }
    out
}

/// Number of distinct real roots of `p` strictly inside `(a, b)`; `a` and
/// `b` must not be roots.
pub fn exact_distinct_count_in(p: &RatPoly, a: &Rational, b: &Rational) -> usize {
    assert!(!p.eval(a).is_zero() && !p.eval(b).is_zero());
    let sf = oracle_squarefree(p);
    isolate_squarefree(&sf)
        .into_iter()
        .map(|iv| refine_avoiding(&sf, iv.lo, iv.hi, &[a.clone(), b.clone()]))
        .filter(|iv| {
            if iv.is_point() {
                a < &iv.lo && &iv.lo < b
            } else {
                a < &iv.lo && &iv.hi < b
            }
        })
        .count()
}

/// f64 distance from a point to the sampled image of a segment; sampling is
/// fine enough that the estimate is within 5e-3 of the true distance.
pub fn seg_distance_f64(seg: &PathSeg, z: (f64, f64)) -> f64 {
    let samples = 1 + (seg_len_f64(seg) / 0.005).ceil() as usize;
    let mut best = f64::INFINITY;
    for k in 0..=samples {
        let t = k as f64 / samples as f64;
        let (x, y) = seg_point_f64(seg, t);
        let d = ((x - z.0).powi(2) + (y - z.1).powi(2)).sqrt();
        best = best.min(d);
    }
    best
}

pub fn seg_len_f64(seg: &PathSeg) -> f64 {
    match seg {
        PathSeg::Line(l) => {
            let (ar, ai) = l.a.to_f64_pair();
            let (br, bi) = l.b.to_f64_pair();
            ((br - ar).powi(2) + (bi - ai).powi(2)).sqrt()
        }
        PathSeg::Arc(a) => {
            let quarters = (a.end_quarter() - a.start_quarter()).abs() as f64;
            a.radius().to_f64() * quarters * std::f64::consts::FRAC_PI_2
        }
    }
}

pub fn seg_point_f64(seg: &PathSeg, t: f64) -> (f64, f64) {
    match seg {
        PathSeg::Line(l) => {
            let (ar, ai) = l.a.to_f64_pair();
            let (br, bi) = l.b.to_f64_pair();
            (ar + (br - ar) * t, ai + (bi - ai) * t)
        }
        PathSeg::Arc(a) => {
            let (cr, ci) = a.center().to_f64_pair();
            let r = a.radius().to_f64();
            let th0 = a.start_quarter() as f64 * std::f64::consts::FRAC_PI_2;
            let th1 = a.end_quarter() as f64 * std::f64::consts::FRAC_PI_2;
            let th = th0 + (th1 - th0) * t;
            (cr + r * th.cos(), ci + r * th.sin())
        }
    }
}

/// Random closed loop: either a polygon with rational vertices or an arc
/// closed by its chord.
pub fn rand_loop(rng: &mut ChaCha8Rng) -> Loop {
    if rng.gen_bool(0.5) {
        let n = rng.gen_range(3..=8);
        let mut vertices: Vec<GaussianRational> = Vec::with_capacity(n);
        while vertices.len() < n {
            let v = rand_gauss(rng, 8, 3);
            if vertices.last() != Some(&v) {
                vertices.push(v);
            }
        }
        if vertices.first() == vertices.last() {
            vertices.pop();
        }
        let m = vertices.len();
        let segs: Vec<PathSeg> = (0..m)
            .map(|k| {
                PathSeg::Line(LineSeg::new(
                    vertices[k].clone(),
                    vertices[(k + 1) % m].clone(),
                ))
            })
            .collect();
        Loop::new(segs).expect("polygon closes")
    } else {
        let center = rand_gauss(rng, 4, 2);
        let radius = Rational::new(rng.gen_range(1..=8), rng.gen_range(1..=2));
        let k0 = rng.gen_range(-4..=4);
        let span = rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let arc = ArcSeg::new(center, radius, k0, k0 + span).expect("valid arc");
        let arc_seg = PathSeg::Arc(arc);
        let (start, end) = arc_seg.endpoints();
        let chord = PathSeg::Line(LineSeg::new(end, start));
        Loop::new(vec![arc_seg, chord]).expect("arc plus chord closes")
    }
}

/// A point off the loop: exact non-membership plus a comfortable f64
/// distance from every segment.
pub fn rand_point_off_loop(rng: &mut ChaCha8Rng, l: &Loop) -> GaussianRational {
    loop {
        let z = rand_gauss(rng, 10, 3);
        if l.segments().iter().any(|s| s.contains(&z)) {
            continue;
        }
        let zf = z.to_f64_pair();
        let min_dist = l
            .segments()
            .iter()
            .map(|s| seg_distance_f64(s, zf))
            .fold(f64::INFINITY, f64::min);
        if min_dist >= 0.05 {
            return z;
        }
    }
}

/// Monic Gaussian polynomial with the given exact roots.
pub fn gpoly_from_roots(roots: &[GaussianRational]) -> GaussPoly {
    Poly::from_roots(roots)
}

/// A rational function with known rational poles: the denominator is a
/// product of distinct linear factors (some repeated) and optionally a
/// real-root-free quadratic; the numerator is coprime by construction.
pub struct PoleFunction {
    pub numer: RatPoly,
    pub denom: RatPoly,
    pub poles: Vec<Rational>,
}

pub fn rand_pole_function(rng: &mut ChaCha8Rng, max_deg: usize) -> PoleFunction {
    let n_lin = rng.gen_range(1..=3usize);
    let mut poles: Vec<Rational> = Vec::new();
    while poles.len() < n_lin {
        let r = rand_rational(rng, 5, 3);
        if !poles.contains(&r) {
            poles.push(r);
        }
    }
    let mut denom = RatPoly::constant(rand_nonzero_rational(rng, 5, 2));
    let mut budget = max_deg;
    let mut used_poles = Vec::new();
    for r in &poles {
        if budget == 0 {
            break;
        }
        let mult = if budget >= 2 && rng.gen_bool(0.25) { 2 } else { 1 };
        let lin = RatPoly::from_coeffs(vec![-r, Rational::one()]);
        for _ in 0..mult {
            denom = &denom * &lin;
        }
        budget -= mult;
        used_poles.push(r.clone());
    }
    if budget >= 2 && rng.gen_bool(0.4) {
        let c = rand_nonzero_rational(rng, 4, 2);
        let quad = RatPoly::from_coeffs(vec![
            &c * &c + Rational::one(),
            Rational::zero(),
            Rational::one(),
        ]);
        denom = &denom * &quad;
    }
    // numerator coprime to the denominator: nonzero at every pole and no
    // shared quadratic factor
    let numer = loop {
        let deg = rng.gen_range(0..=max_deg);
        let q = rand_rpoly(rng, deg, 6, 3);
        if q.is_zero() {
            continue;
        }
        if used_poles.iter().any(|r| q.eval(r).is_zero()) {
            continue;
        }
        if euclid_gcd(&q, &denom).degree() == Some(0) {
            break q;
        }
    };
    PoleFunction {
        numer,
        denom,
        poles: used_poles,
    }
}

/// Direct Cauchy index over [a, b]: right-jumps on [a, b) minus left-jumps
/// on (a, b], enumerated at the known poles.
pub fn jump_sum_index(
    f: &cauchy_roots::cindex::RationalFunction,
    poles: &[Rational],
    a: &Rational,
    b: &Rational,
) -> cauchy_roots::exactnum::HalfInteger {
    use cauchy_roots::cindex::{jump_at, Side};
    use cauchy_roots::exactnum::HalfInteger;
    let mut total = HalfInteger::zero();
    for x in poles {
        if a <= x && x < b {
            total = total + jump_at(f, x, Side::Right);
        }
        if a < x && x <= b {
            total = total - jump_at(f, x, Side::Left);
        }
    }
    total
}
