//! Floating-point test oracles: a Durand–Kerner simultaneous root finder
//! and a discretized argument-accumulation winding evaluator.
//!
//! Nothing here is on a correctness-critical path. The oracles exist so the
//! test suites can cross-check every exact result at desk scale, and they
//! are deterministic: the root finder perturbs its initial guesses with a
//! fixed-seed generator, so a failing comparison replays exactly.

use num::complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::exactnum::GaussianRational;
use crate::path::{Loop, PathSeg};
use crate::poly::GaussPoly;

/// One approximate root with its evaluation residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxRoot {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

impl ApproxRoot {
    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

const DK_SEED: u64 = 0x00C4_0C1E;
const DK_MAX_ITERS: usize = 1000;

/// Degree-many root approximations of `p` by Durand–Kerner iteration from
/// perturbed-circle initial guesses. Multiple roots show up as clusters.
pub fn numeric_roots(p: &GaussPoly, tol: f64) -> Result<Vec<ApproxRoot>, Error> {
    let degree = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    let monic = p.monic().expect("nonzero");
    let coeffs: Vec<Complex64> = monic
        .coeffs()
        .iter()
        .map(|c| {
            let (re, im) = c.to_f64_pair();
            if re.is_finite() && im.is_finite() {
                Ok(Complex64::new(re, im))
            } else {
                Err(Error::NumericOverflow)
            }
        })
        .collect::<Result<_, _>>()?;
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };

    let radius = 1.0
        + coeffs[..degree]
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let mut rng = ChaCha8Rng::seed_from_u64(DK_SEED);
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (degree as f64) + 0.41;
            let jitter = 1.0 + 0.01 * rng.gen_range(-1.0..1.0);
            Complex64::from_polar(radius * 0.7 * jitter, angle)
        })
        .collect();

    let mut converged = false;
    for _ in 0..DK_MAX_ITERS {
        let mut max_step = 0.0f64;
        for j in 0..degree {
            let mut denom = Complex64::new(1.0, 0.0);
            for k in 0..degree {
                if k != j {
                    denom *= roots[j] - roots[k];
                }
            }
            if denom.norm() == 0.0 {
                // collided guesses; nudge deterministically
                roots[j] += Complex64::new(1e-4, 1e-4 * (j as f64 + 1.0));
                max_step = f64::MAX;
                continue;
            }
            let step = eval(roots[j]) / denom;
            roots[j] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence);
    }
    Ok(roots
        .into_iter()
        .map(|z| ApproxRoot {
            re: z.re,
            im: z.im,
            residual: eval(z).norm(),
        })
        .collect())
}

fn seg_samples(seg: &PathSeg, n: usize) -> Vec<Complex64> {
    let at = |t: f64| -> Complex64 {
        match seg {
            PathSeg::Line(l) => {
                let (ar, ai) = l.a.to_f64_pair();
                let (br, bi) = l.b.to_f64_pair();
                Complex64::new(ar + (br - ar) * t, ai + (bi - ai) * t)
            }
            PathSeg::Arc(a) => {
                let (cr, ci) = a.center().to_f64_pair();
                let r = a.radius().to_f64();
                let th0 = a.start_quarter() as f64 * std::f64::consts::FRAC_PI_2;
                let th1 = a.end_quarter() as f64 * std::f64::consts::FRAC_PI_2;
                let th = th0 + (th1 - th0) * t;
                Complex64::new(cr + r * th.cos(), ci + r * th.sin())
            }
        }
    };
    (0..=n).map(|k| at(k as f64 / n as f64)).collect()
}

fn seg_length_f64(seg: &PathSeg) -> f64 {
    match seg {
        PathSeg::Line(l) => {
            let (ar, ai) = l.a.to_f64_pair();
            let (br, bi) = l.b.to_f64_pair();
            ((br - ar).powi(2) + (bi - ai).powi(2)).sqrt()
        }
        PathSeg::Arc(a) => {
            let r = a.radius().to_f64();
            let quarters = (a.end_quarter() - a.start_quarter()).abs() as f64;
            r * quarters * std::f64::consts::FRAC_PI_2
        }
    }
}

/// Discretized winding estimate: the summed principal-branch argument
/// increments over `steps` path samples, divided by `2*pi`. Near-integer
/// for valid loops. Fails when the point is closer to the sampled path than
/// ten sample spacings.
pub fn numeric_winding(
    loop_: &Loop,
    z0: &GaussianRational,
    steps: usize,
) -> Result<f64, Error> {
    assert!(steps >= 2, "need at least two steps");
    let total_len: f64 = loop_.segments().iter().map(seg_length_f64).sum();
    let (zr, zi) = z0.to_f64_pair();
    let z = Complex64::new(zr, zi);

    let mut samples: Vec<Complex64> = Vec::with_capacity(steps + loop_.segments().len());
    for seg in loop_.segments() {
        let len = seg_length_f64(seg);
        let share = if total_len > 0.0 { len / total_len } else { 0.0 };
        let n = ((steps as f64 * share).ceil() as usize).max(8);
        let pts = seg_samples(seg, n);
        // segment samples overlap at junctions; drop the duplicated start
        let skip = usize::from(!samples.is_empty());
        samples.extend(pts.into_iter().skip(skip));
    }

    let spacing = total_len / steps as f64;
    let min_dist = samples
        .iter()
        .map(|w| (w - z).norm())
        .fold(f64::INFINITY, f64::min);
    if min_dist < 10.0 * spacing {
        return Err(Error::TooCloseToPath);
    }

    let mut total_arg = 0.0f64;
    for pair in samples.windows(2) {
        total_arg += ((pair[1] - z) / (pair[0] - z)).arg();
    }
    Ok(total_arg / (2.0 * std::f64::consts::PI))
}
