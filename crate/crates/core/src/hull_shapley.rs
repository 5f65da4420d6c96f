//! Shapley values of the convex-hull area and perimeter games.
//!
//! A player `p` gains the triangle `p q q'` whenever `q` and `q'` arrive
//! before it and it precedes every other point left of `q -> q'`. Levels of
//! all directed pairs come from an angular sweep around each point, and the
//! per-pair weights are spread over the angular windows with prefix sums.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Property, Result, ShapleyError};
use crate::games::{GameKind, ShapleyVector};
use crate::geometry::hull::{hull_area, hull_perimeter, hull_vertices};
use crate::geometry::{PlanarPointSet, Point2, Predicates, Sign};
use crate::permcount;
use crate::scalar::{CompensatedSum, Scalar};

/// Pencils per work unit upper bound; the unit count never depends on the pool size.
const WORK_UNITS: usize = 64;

/// `level(q, q')` for every ordered pair: points strictly left of `q -> q'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairLevels {
    n: usize,
    levels: Vec<u32>,
}

impl PairLevels {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, q: usize, q2: usize) -> usize {
        assert_ne!(q, q2, "a pair needs two distinct points");
        self.levels[q * self.n + q2] as usize
    }
}

pub fn rho<T: Scalar>(level: usize) -> Result<T> {
    permcount::rho(level)
}

pub fn rho_prime<T: Scalar>(level: usize) -> T {
    permcount::rho_prime(level)
}

/// Other points sorted counterclockwise around `pts[q]` with the window ends of
/// each ray: `ends[k]` is the first unwrapped index not strictly left of `q -> order[k]`.
struct Pencil {
    order: Vec<usize>,
    ends: Vec<usize>,
}

fn sweep_pencil<T: Scalar>(pts: &[Point2<T>], q: usize, pred: &Predicates<T>) -> Result<Pencil> {
    let c = pts[q];
    let mut keyed: Vec<(T, usize)> = (0..pts.len())
        .filter(|&r| r != q)
        .map(|r| {
            let d = pts[r] - c;
            (d.y.atan2(d.x), r)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal).then(a.1.cmp(&b.1)));
    let order: Vec<usize> = keyed.into_iter().map(|(_, r)| r).collect();
    let m = order.len();
    let at = |i: usize| pts[order[i % m]];
    let collinear = |a: usize, b: usize| {
        ShapleyError::position(Property::NoThreeCollinear, vec![q, order[a % m], order[b % m]])
    };
    let mut ends = Vec::with_capacity(m);
    let mut e = 1;
    for k in 0..m {
        e = e.max(k + 1);
        let dir = at(k);
        while e < k + m {
            match pred.orientation(c, dir, at(e)) {
                Sign::Positive => e += 1,
                Sign::Zero => return Err(collinear(k, e)),
                Sign::Negative => break,
            }
        }
        if e < k + m && e > k + 1 && pred.orientation(c, dir, at(e - 1)) == Sign::Zero {
            return Err(collinear(k, e - 1));
        }
        ends.push(e);
    }
    Ok(Pencil { order, ends })
}

fn pencils<T: Scalar>(set: &PlanarPointSet<T>) -> Result<Vec<Pencil>> {
    let pts = set.points();
    let pred = Predicates::for_points(pts);
    (0..pts.len()).into_par_iter().map(|q| sweep_pencil(pts, q, &pred)).collect()
}

/// Levels of all ordered pairs by angular sweeps.
pub fn all_pair_levels<T: Scalar>(set: &PlanarPointSet<T>) -> Result<PairLevels> {
    let n = set.len();
    let mut levels = vec![0u32; n * n];
    for (q, pencil) in pencils(set)?.into_iter().enumerate() {
        for (k, &r) in pencil.order.iter().enumerate() {
            levels[q * n + r] = (pencil.ends[k] - k - 1) as u32;
        }
    }
    Ok(PairLevels { n, levels })
}

/// Levels by testing every point against every directed pair.
pub fn all_pair_levels_naive<T: Scalar>(set: &PlanarPointSet<T>) -> Result<PairLevels> {
    let pts = set.points();
    let n = pts.len();
    let pred = Predicates::for_points(pts);
    let mut levels = vec![0u32; n * n];
    for q in 0..n {
        for q2 in 0..n {
            if q == q2 {
                continue;
            }
            let mut count = 0;
            for r in 0..n {
                if r == q || r == q2 {
                    continue;
                }
                match pred.orientation(pts[q], pts[q2], pts[r]) {
                    Sign::Positive => count += 1,
                    Sign::Zero => {
                        return Err(ShapleyError::position(Property::NoThreeCollinear, vec![q, q2, r]))
                    }
                    Sign::Negative => {}
                }
            }
            levels[q * n + q2] = count;
        }
    }
    Ok(PairLevels { n, levels })
}

fn centered<T: Scalar>(set: &PlanarPointSet<T>) -> Vec<Point2<T>> {
    let n = T::of_usize(set.len());
    let pts = set.points();
    let cx = pts.iter().map(|p| p.x).sum::<T>() / n;
    let cy = pts.iter().map(|p| p.y).sum::<T>() / n;
    let c = Point2::new(cx, cy);
    pts.iter().map(|&p| p - c).collect()
}

/// Coefficients of `p -> area(p q q')` for `p` left of `q -> q'`.
fn area_form<T: Scalar>(q: Point2<T>, q2: Point2<T>) -> [T; 3] {
    let half = T::of(0.5);
    [
        -half * (q2.y - q.y),
        half * (q2.x - q.x),
        half * (q.x * q2.y - q.y * q2.x),
    ]
}

/// For every point, the sum of `weight(q, q', level)` over directed pairs with
/// the point strictly left of `q -> q'`. Each pencil sees every line through its
/// center from both sides, so every pair is met twice and the total is halved.
fn halfplane_sums<T: Scalar, const K: usize>(
    pts: &[Point2<T>],
    pencils: &[Pencil],
    weight: impl Fn(usize, usize, usize) -> [T; K] + Sync,
) -> Vec<[T; K]> {
    let n = pts.len();
    let chunk = n.div_ceil(WORK_UNITS).max(1);
    let zero = [T::zero(); K];
    let partials: Vec<Vec<[CompensatedSum<T>; K]>> = pencils
        .par_chunks(chunk)
        .enumerate()
        .map(|(ci, group)| {
            let mut acc = vec![[CompensatedSum::new(); K]; n];
            let mut diff = Vec::new();
            for (off, pencil) in group.iter().enumerate() {
                let q = ci * chunk + off;
                let m = pencil.order.len();
                diff.clear();
                diff.resize(2 * m + 1, zero);
                let mut add = |lo: usize, hi: usize, w: [T; K]| {
                    for t in 0..K {
                        diff[lo][t] = diff[lo][t] + w[t];
                        diff[hi][t] = diff[hi][t] - w[t];
                    }
                };
                for (k, &r) in pencil.order.iter().enumerate() {
                    let e = pencil.ends[k];
                    let left = e - k - 1;
                    let right = m - 1 - left;
                    if left > 0 {
                        add(k + 1, e, weight(q, r, left));
                    }
                    if right > 0 {
                        add(e, k + m, weight(r, q, right));
                    }
                }
                let mut run = zero;
                let mut folded = vec![zero; m];
                for (i, d) in diff.iter().take(2 * m).enumerate() {
                    for t in 0..K {
                        run[t] = run[t] + d[t];
                        folded[i % m][t] = folded[i % m][t] + run[t];
                    }
                }
                for (i, &r) in pencil.order.iter().enumerate() {
                    for t in 0..K {
                        acc[r][t].add(folded[i][t]);
                    }
                }
            }
            acc
        })
        .collect();
    let half = T::of(0.5);
    (0..n)
        .map(|p| {
            let mut out = zero;
            for t in 0..K {
                let mut s = CompensatedSum::new();
                for part in &partials {
                    s.add(part[p][t].value());
                }
                out[t] = s.value() * half;
            }
            out
        })
        .collect()
}

fn rho_or_fault<T: Scalar>(level: usize, fault: bool, q: usize, q2: usize) -> T {
    let r: T = permcount::rho(level).expect("level is positive at every call site");
    if fault && q == 0 && q2 == 1 {
        r * T::of(1.5)
    } else {
        r
    }
}

pub fn shapley_hull_area<T: Scalar>(set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    hull_area_impl(set, false)
}

pub(crate) fn hull_area_impl<T: Scalar>(set: &PlanarPointSet<T>, fault: bool) -> Result<ShapleyVector<T>> {
    let total = hull_area(&hull_vertices(set.points()));
    if set.len() < 3 {
        return Ok(ShapleyVector::new(GameKind::HullArea, vec![T::zero(); set.len()], total));
    }
    let pts = centered(set);
    let pencils = pencils(set)?;
    let sums = halfplane_sums(&pts, &pencils, |q, q2, level| {
        let rho = rho_or_fault::<T>(level, fault, q, q2);
        area_form(pts[q], pts[q2]).map(|v| v * rho)
    });
    let values = pts
        .iter()
        .zip(&sums)
        .map(|(p, s)| s[0] * p.x + s[1] * p.y + s[2])
        .collect();
    Ok(ShapleyVector::new(GameKind::HullArea, values, total))
}

/// Direct per-point evaluation over all directed pairs, cubic overall.
pub fn shapley_hull_area_naive<T: Scalar>(set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    let n = set.len();
    let total = hull_area(&hull_vertices(set.points()));
    if n < 3 {
        return Ok(ShapleyVector::new(GameKind::HullArea, vec![T::zero(); n], total));
    }
    let levels = all_pair_levels_naive(set)?;
    let pts = set.points();
    let values = (0..n)
        .into_par_iter()
        .map(|p| {
            let mut s = CompensatedSum::new();
            for q in 0..n {
                for q2 in 0..n {
                    if q == q2 || p == q || p == q2 {
                        continue;
                    }
                    let twice = crate::geometry::orient2d(pts[q], pts[q2], pts[p]);
                    if twice > T::zero() {
                        let rho: T = permcount::rho(levels.get(q, q2)).expect("p lies in the halfplane");
                        s.add(twice * T::of(0.5) * rho);
                    }
                }
            }
            s.value()
        })
        .collect();
    Ok(ShapleyVector::new(GameKind::HullArea, values, total))
}

pub fn shapley_hull_perimeter<T: Scalar>(set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    hull_perimeter_impl(set, false)
}

pub(crate) fn hull_perimeter_impl<T: Scalar>(set: &PlanarPointSet<T>, fault: bool) -> Result<ShapleyVector<T>> {
    let n = set.len();
    let pts = set.points();
    let total = hull_perimeter(&hull_vertices(pts));
    if n == 1 {
        return Ok(ShapleyVector::new(GameKind::HullPerimeter, vec![T::zero()], total));
    }
    let pencils = pencils(set)?;
    let gain: Vec<T> = pencils
        .par_iter()
        .enumerate()
        .map(|(q, pencil)| {
            let mut s = CompensatedSum::new();
            for (k, &r) in pencil.order.iter().enumerate() {
                let out = pencil.ends[k] - k - 1;
                let back = n - 2 - out;
                let w = rho_prime::<T>(out) + rho_prime::<T>(back);
                s.add(pts[q].dist(pts[r]) * w);
            }
            s.value()
        })
        .collect();
    let loss = halfplane_sums(pts, &pencils, |q, q2, level| {
        [pts[q].dist(pts[q2]) * rho_or_fault::<T>(level, fault, q, q2)]
    });
    let values = gain.iter().zip(&loss).map(|(&g, l)| g - l[0]).collect();
    Ok(ShapleyVector::new(GameKind::HullPerimeter, values, total))
}

/// Perimeter values from a level table, quadratic per point.
pub fn shapley_hull_perimeter_naive<T: Scalar>(set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    let n = set.len();
    let pts = set.points();
    let total = hull_perimeter(&hull_vertices(pts));
    if n == 1 {
        return Ok(ShapleyVector::new(GameKind::HullPerimeter, vec![T::zero()], total));
    }
    let levels = all_pair_levels_naive(set)?;
    let values = (0..n)
        .into_par_iter()
        .map(|p| {
            let mut s = CompensatedSum::new();
            for q in 0..n {
                if q == p {
                    continue;
                }
                let w = rho_prime::<T>(levels.get(q, p)) + rho_prime::<T>(levels.get(p, q));
                s.add(pts[p].dist(pts[q]) * w);
                for q2 in 0..n {
                    if q2 == q || q2 == p {
                        continue;
                    }
                    if crate::geometry::orient2d(pts[q], pts[q2], pts[p]) > T::zero() {
                        let rho: T = permcount::rho(levels.get(q, q2)).expect("p lies in the halfplane");
                        s.add(-pts[q].dist(pts[q2]) * rho);
                    }
                }
            }
            s.value()
        })
        .collect();
    Ok(ShapleyVector::new(GameKind::HullPerimeter, values, total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[(f64, f64)]) -> PlanarPointSet<f64> {
        PlanarPointSet::from_xy(v).unwrap()
    }

    #[test]
    fn triangle_levels() {
        let s = set(&[(0., 0.), (1., 0.), (0., 1.)]);
        let l = all_pair_levels(&s).unwrap();
        assert_eq!(l.get(0, 1), 1);
        assert_eq!(l.get(1, 0), 0);
        assert_eq!(l, all_pair_levels_naive(&s).unwrap());
    }

    #[test]
    fn convex_quad_levels() {
        let s = set(&[(0., 0.), (2., 0.1), (2.1, 2.), (-0.2, 1.9)]);
        let l = all_pair_levels(&s).unwrap();
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            assert_eq!(l.get(a, b), 2);
            assert_eq!(l.get(b, a), 0);
        }
    }

    #[test]
    fn triangle_area_thirds() {
        let s = set(&[(0., 0.), (3., 0.5), (1., 2.)]);
        let a = hull_area(&hull_vertices(s.points()));
        for v in shapley_hull_area(&s).unwrap().values {
            assert!((v - a / 3.0).abs() < 1e-14);
        }
        for v in shapley_hull_area_naive(&s).unwrap().values {
            assert!((v - a / 3.0).abs() < 1e-14);
        }
    }

    #[test]
    fn two_points_perimeter() {
        let s = set(&[(0., 0.), (3., 4.)]);
        assert_eq!(shapley_hull_perimeter(&s).unwrap().values, vec![5.0, 5.0]);
        assert_eq!(shapley_hull_area(&s).unwrap().values, vec![0.0, 0.0]);
    }

    #[test]
    fn equilateral_perimeter() {
        let h = 3f64.sqrt() / 2.0;
        let s = set(&[(0., 0.), (1., 0.), (0.5, h)]);
        for v in shapley_hull_perimeter(&s).unwrap().values {
            assert!((v - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn collinear_rejected() {
        let s = set(&[(0., 0.), (1., 1.), (2., 2.), (0., 3.)]);
        assert!(matches!(
            shapley_hull_area(&s),
            Err(ShapleyError::GeneralPosition { property: Property::NoThreeCollinear, .. })
        ));
        assert!(shapley_hull_area_naive(&s).is_err());
    }

    #[test]
    fn rho_values() {
        assert!((rho::<f64>(1).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(rho::<f64>(0).is_err());
        assert_eq!(rho_prime::<f64>(0), 0.5);
    }
}
