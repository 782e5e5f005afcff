//! Complex root isolation by rectangle bisection driven by exact counts.
//!
//! The driver works on the squarefree part `q` of the input, starts from a
//! certified root-free bounding square, and keeps bisecting along the longer
//! side until every surviving box holds exactly one distinct root. Split
//! lines are perturbed through a deterministic rational sequence until they
//! are root-free, so the procedure never stalls on a root that happens to
//! sit on a candidate split; `q` has finitely many roots, hence only
//! finitely many excluded lines. Multiplicities in the original `p` are
//! recovered from its repeated-gcd chain, counted inside each box.
//!
//! This route is deliberately simple; it targets desk-scale inputs and
//! trades speed for exactness and auditability.

use rayon::prelude::*;

use crate::counting::{no_proots_line, proots_rectangle, Rectangle};
use crate::error::Error;
use crate::exactnum::{GaussianRational, Rational};
use crate::poly::GaussPoly;

/// A rectangle certified to contain exactly one distinct root of the input,
/// together with that root's multiplicity in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolationBox {
    pub rect: Rectangle,
    pub multiplicity: u32,
}

/// A rectangle tagged with its root count and bisection depth.
type CountedBox = (Rectangle, u32, u32);

/// Instrumentation for the bisection run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IsolationStats {
    /// Deepest bisection level reached (initial box = depth 0).
    pub max_depth: u32,
    /// Rectangles whose root count was evaluated.
    pub boxes_counted: u64,
}

/// A square `[-B-d, B+d]^2` certified root-free on its border, with `B` the
/// root bound of `p` and `d` scanned through `B/3, B/9, ...`.
pub fn initial_box(p: &GaussPoly) -> Result<Rectangle, Error> {
    let bound = p.cauchy_root_bound()?;
    let mut delta = &bound / &Rational::from_int(3);
    for _ in 0..64 {
        let half = &bound + &delta;
        let rect = Rectangle::new(
            GaussianRational::new(-&half, -&half),
            GaussianRational::new(half.clone(), half.clone()),
        )?;
        if border_root_free(p, &rect)? {
            return Ok(rect);
        }
        delta = &delta / &Rational::from_int(3);
    }
    // Every root satisfies |z| <= B < B + d, so some scan step must succeed.
    Err(Error::Internal("initial box scan did not terminate"))
}

fn border_root_free(p: &GaussPoly, rect: &Rectangle) -> Result<bool, Error> {
    for (start, end) in rect.edges() {
        if !no_proots_line(p, &start, &end)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Isolates the distinct roots of `p` into pairwise disjoint open boxes,
/// each holding exactly one root, tagged with its multiplicity in `p`.
/// With `max_width` given, boxes are refined until both side lengths are at
/// most `max_width`. Boxes are returned sorted by lower-left corner.
pub fn isolate_roots(
    p: &GaussPoly,
    max_width: Option<&Rational>,
) -> Result<Vec<IsolationBox>, Error> {
    isolate_roots_with_stats(p, max_width).map(|(boxes, _)| boxes)
}

/// Same as [`isolate_roots`], returning bisection instrumentation.
pub fn isolate_roots_with_stats(
    p: &GaussPoly,
    max_width: Option<&Rational>,
) -> Result<(Vec<IsolationBox>, IsolationStats), Error> {
    match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(_) => {}
    }
    let q = p.squarefree_part()?;
    let mut stats = IsolationStats::default();

    if q.degree() == Some(0) {
        return Err(Error::Internal("squarefree part of nonconstant p is constant"));
    }

    let root_box = initial_box(&q)?;
    let total = proots_rectangle(&q, &root_box)?.count;
    stats.boxes_counted += 1;

    // Frontier bisection. Each entry carries its root count of q, which is
    // already known when the box is enqueued.
    let mut frontier: Vec<CountedBox> = vec![(root_box, total, 0)];
    let mut emitted: Vec<Rectangle> = Vec::new();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        let processed: Vec<Result<Vec<CountedBox>, Error>> = frontier
            .par_iter()
            .map(|(rect, count, depth)| split_box(&q, rect, *count, *depth))
            .collect();
        for item in processed {
            for (rect, count, depth) in item? {
                stats.boxes_counted += 1;
                stats.max_depth = stats.max_depth.max(depth);
                let done = count == 1 && fits(&rect, max_width);
                if done {
                    emitted.push(rect);
                } else if count > 0 {
                    next.push((rect, count, depth));
                }
            }
        }
        frontier = next;
    }

    // Multiplicities from the repeated-gcd chain of p: a root of order m
    // survives in the first m-1 chain levels.
    let mut chain: Vec<GaussPoly> = Vec::new();
    let mut level = p.gcd(&p.derivative());
    while level.degree().is_some_and(|d| d > 0) {
        let next = level.gcd(&level.derivative());
        chain.push(level);
        level = next;
    }
    let mut boxes = Vec::with_capacity(emitted.len());
    for rect in emitted {
        let mut multiplicity = 1u32;
        for levelled in &chain {
            if proots_rectangle(levelled, &rect)?.count == 0 {
                break;
            }
            multiplicity += 1;
        }
        boxes.push(IsolationBox { rect, multiplicity });
    }
    boxes.sort_by(|x, y| {
        let a = x.rect.lower_left();
        let b = y.rect.lower_left();
        (a.re(), a.im()).cmp(&(b.re(), b.im()))
    });
    Ok((boxes, stats))
}

fn fits(rect: &Rectangle, max_width: Option<&Rational>) -> bool {
    match max_width {
        None => true,
        Some(w) => &rect.width() <= w && &rect.height() <= w,
    }
}

/// Bisects `rect` along its longer side (ties split vertically), walking
/// the split coordinate through `mid + extent/(3*2^k)` until the split
/// segment is root-free. Returns the children paired with their counts;
/// counting the first child fixes the second by additivity.
fn split_box(
    q: &GaussPoly,
    rect: &Rectangle,
    count: u32,
    depth: u32,
) -> Result<Vec<CountedBox>, Error> {
    let vertical = rect.width() >= rect.height();
    let (lo, hi) = if vertical {
        (rect.lower_left().re().clone(), rect.upper_right().re().clone())
    } else {
        (rect.lower_left().im().clone(), rect.upper_right().im().clone())
    };
    let extent = &hi - &lo;
    let mid = (&lo + &hi) / Rational::from_int(2);
    let mut offset = &extent / &Rational::from_int(3);
    let mut split_at = None;
    for _ in 0..128 {
        let candidate = &mid + &offset;
        debug_assert!(lo < candidate && candidate < hi);
        let (seg_a, seg_b) = if vertical {
            (
                GaussianRational::new(candidate.clone(), rect.lower_left().im().clone()),
                GaussianRational::new(candidate.clone(), rect.upper_right().im().clone()),
            )
        } else {
            (
                GaussianRational::new(rect.lower_left().re().clone(), candidate.clone()),
                GaussianRational::new(rect.upper_right().re().clone(), candidate.clone()),
            )
        };
        if no_proots_line(q, &seg_a, &seg_b)? {
            split_at = Some(candidate);
            break;
        }
        offset = &offset / &Rational::from_int(2);
    }
    let Some(split_at) = split_at else {
        return Err(Error::Internal("split scan did not find a root-free line"));
    };
    let (first, second) = if vertical {
        rect.split_at_re(&split_at)?
    } else {
        rect.split_at_im(&split_at)?
    };
    let first_count = proots_rectangle(q, &first)?.count;
    let second_count = count.checked_sub(first_count).ok_or(Error::Internal(
        "child count exceeds parent count",
    ))?;
    Ok(vec![
        (first, first_count, depth + 1),
        (second, second_count, depth + 1),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational as Q;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(Q::from_int(re), Q::from_int(im))
    }

    fn gp(pairs: &[(i64, i64)]) -> GaussPoly {
        GaussPoly::from_coeffs(
            pairs
                .iter()
                .map(|&(re, im)| GaussianRational::new(Q::from_int(re), Q::from_int(im)))
                .collect(),
        )
    }

    #[test]
    fn initial_box_contains_roots() {
        let p = gp(&[(1, 0), (0, 0), (1, 0)]); // x^2 + 1
        let rect = initial_box(&p).unwrap();
        assert!(rect.contains_open(&g(0, 1)));
        assert!(rect.contains_open(&g(0, -1)));

        let lin = gp(&[(-1, -1), (1, 0)]); // x - (1+i)
        let rect = initial_box(&lin).unwrap();
        assert!(rect.contains_open(&g(1, 1)));
    }

    #[test]
    fn initial_box_rejects_degenerate_inputs() {
        assert_eq!(initial_box(&GaussPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(initial_box(&gp(&[(3, 1)])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn isolates_conjugate_pair() {
        let p = gp(&[(1, 0), (0, 0), (1, 0)]); // roots +/- i
        let boxes = isolate_roots(&p, None).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(boxes.iter().all(|b| b.multiplicity == 1));
        assert!(boxes[0].rect.contains_open(&g(0, -1)));
        assert!(boxes[1].rect.contains_open(&g(0, 1)));
    }

    #[test]
    fn isolates_double_root_with_multiplicity() {
        // (x - i)^2
        let p = gp(&[(-1, 0), (0, -2), (1, 0)]);
        let boxes = isolate_roots(&p, None).unwrap();
        assert_eq!(boxes.len(), 1);
        assert_eq!(boxes[0].multiplicity, 2);
        assert!(boxes[0].rect.contains_open(&g(0, 1)));
    }

    #[test]
    fn isolates_linear_root() {
        let p = gp(&[(-1, -1), (1, 0)]);
        let boxes = isolate_roots(&p, None).unwrap();
        assert_eq!(boxes.len(), 1);
        assert_eq!(boxes[0].multiplicity, 1);
        assert!(boxes[0].rect.contains_open(&g(1, 1)));
    }

    #[test]
    fn max_width_refines_boxes() {
        let p = gp(&[(1, 0), (0, 0), (1, 0)]);
        let w = Q::new(1, 8);
        let boxes = isolate_roots(&p, Some(&w)).unwrap();
        assert_eq!(boxes.len(), 2);
        for b in &boxes {
            assert!(b.rect.width() <= w);
            assert!(b.rect.height() <= w);
        }
        assert!(boxes[0].rect.contains_open(&g(0, -1)));
        assert!(boxes[1].rect.contains_open(&g(0, 1)));
    }

    #[test]
    fn multiplicities_sum_to_degree_mixed() {
        // (x - i)^2 (x + i) (x - 3)
        let i = GaussianRational::i();
        let p = GaussPoly::from_roots(&[i.clone(), i.clone(), -i, g(3, 0)]);
        let boxes = isolate_roots(&p, None).unwrap();
        assert_eq!(boxes.len(), 3);
        let total: u32 = boxes.iter().map(|b| b.multiplicity).sum();
        assert_eq!(total as usize, p.degree().unwrap());
        let mults: Vec<u32> = boxes.iter().map(|b| b.multiplicity).collect();
        assert_eq!(mults.iter().filter(|&&m| m == 2).count(), 1);
    }
}
