//! Brute-force Shapley values used as ground truth.

use rayon::prelude::*;

use crate::error::{Result, ShapleyError};
use crate::games::{EvalContext, GameKind, ShapleyVector};
use crate::geometry::{PlanarPointSet, Point2};
use crate::scalar::{CompensatedSum, Scalar};

pub const PERMUTATION_LIMIT: usize = 10;
pub const SUBSET_LIMIT: usize = 22;

/// `v(S)` for every coalition, indexed by bitmask (bit `i` is player `i`).
#[derive(Clone, Debug)]
pub struct CharacteristicTable<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Scalar> CharacteristicTable<T> {
    pub fn build(game: GameKind, set: &PlanarPointSet<T>) -> Result<Self> {
        let n = set.len();
        if n > SUBSET_LIMIT {
            return Err(ShapleyError::SizeLimit { n, limit: SUBSET_LIMIT });
        }
        let ctx = EvalContext::new(game, set)?;
        let pts = set.points();
        let values = (0..1usize << n)
            .into_par_iter()
            .map_init(Vec::new, |buf: &mut Vec<Point2<T>>, mask| {
                buf.clear();
                buf.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| pts[i]));
                ctx.eval(buf)
            })
            .collect();
        Ok(Self { n, values })
    }

    pub fn players(&self) -> usize {
        self.n
    }

    pub fn value(&self, mask: usize) -> T {
        self.values[mask]
    }

    pub fn grand_total(&self) -> T {
        self.values[(1 << self.n) - 1]
    }
}

/// Average marginal contribution over all `n!` insertion orders.
pub fn shapley_by_permutations<T: Scalar>(game: GameKind, set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    let n = set.len();
    if n > PERMUTATION_LIMIT {
        return Err(ShapleyError::SizeLimit { n, limit: PERMUTATION_LIMIT });
    }
    let table = CharacteristicTable::build(game, set)?;
    // one work unit per leading player, reduced in a fixed order
    let parts: Vec<Vec<CompensatedSum<T>>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut acc = vec![CompensatedSum::new(); n];
            let mut rest: Vec<usize> = (0..n).filter(|&i| i != first).collect();
            let start = 1usize << first;
            acc[first].add(table.value(start));
            let mut visit = |perm: &[usize]| {
                let mut mask = start;
                let mut prev = table.value(mask);
                for &p in perm {
                    mask |= 1 << p;
                    let v = table.value(mask);
                    acc[p].add(v - prev);
                    prev = v;
                }
            };
            heap_permutations(&mut rest, &mut visit);
            // the leading player's term was counted once per permutation of the rest
            let reps = T::of_usize(factorial(n - 1));
            let lead = acc[first].value() * reps;
            acc[first] = CompensatedSum::new();
            acc[first].add(lead);
            acc
        })
        .collect();
    let scale = T::one() / T::of_usize(factorial(n));
    let values = (0..n)
        .map(|p| {
            let mut s = CompensatedSum::new();
            for part in &parts {
                s.add(part[p].value());
            }
            s.value() * scale
        })
        .collect();
    Ok(ShapleyVector::new(game, values, table.grand_total()))
}

/// Weighted sum over coalitions not containing each player.
pub fn shapley_by_subsets<T: Scalar>(game: GameKind, set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    let n = set.len();
    let table = CharacteristicTable::build(game, set)?;
    let w: Vec<T> = subset_weights::<T>(n);
    let values = (0..n)
        .into_par_iter()
        .map(|p| {
            let bit = 1usize << p;
            let mut s = CompensatedSum::new();
            for mask in 0..1usize << n {
                if mask & bit != 0 {
                    continue;
                }
                let k = mask.count_ones() as usize;
                s.add(w[k] * (table.value(mask | bit) - table.value(mask)));
            }
            s.value()
        })
        .collect();
    Ok(ShapleyVector::new(game, values, table.grand_total()))
}

/// `|S|! (n-|S|-1)! / n!` for `|S| = 0..n-1`, built as a running product.
pub fn subset_weights<T: Scalar>(n: usize) -> Vec<T> {
    if n == 0 {
        return Vec::new();
    }
    let mut w = Vec::with_capacity(n);
    w.push(T::one() / T::of_usize(n));
    for k in 1..n {
        let prev = w[k - 1];
        w.push(prev * T::of_usize(k) / T::of_usize(n - k));
    }
    w
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Heap's algorithm; calls `f` on every ordering of `a`.
fn heap_permutations(a: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let n = a.len();
    let mut c = vec![0usize; n];
    f(a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heap_visits_all() {
        let mut a = vec![0, 1, 2, 3];
        let mut seen = std::collections::HashSet::new();
        heap_permutations(&mut a, &mut |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
        let mut e: Vec<usize> = vec![];
        let mut count = 0;
        heap_permutations(&mut e, &mut |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn weight_identity() {
        for n in 1..=22 {
            let w = subset_weights::<f64>(n);
            let mut binom = 1.0f64;
            let mut total = 0.0;
            for (k, wk) in w.iter().enumerate() {
                total += binom * wk;
                binom = binom * (n - 1 - k) as f64 / (k + 1) as f64;
            }
            assert!((total - 1.0).abs() < 1e-12, "n = {n}: {total}");
        }
    }

    #[test]
    fn anchors() {
        let t = PlanarPointSet::<f64>::from_xy(&[(0., 0.), (1., 0.), (0., 1.)]).unwrap();
        let s = shapley_by_permutations(GameKind::HullArea, &t).unwrap();
        for v in &s.values {
            assert!((v - 1.0 / 6.0).abs() < 1e-15);
        }
        let d = PlanarPointSet::<f64>::from_xy(&[(-1., 0.), (1., 0.)]).unwrap();
        let s = shapley_by_permutations(GameKind::DiskArea, &d).unwrap();
        for v in &s.values {
            assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-14);
        }
        let r = PlanarPointSet::<f64>::from_xy(&[(1., 1.), (2., 2.)]).unwrap();
        let s = shapley_by_subsets(GameKind::AnchoredRects, &r).unwrap();
        assert!((s.values[0] - 0.5).abs() < 1e-15 && (s.values[1] - 3.5).abs() < 1e-15);
        let sq = PlanarPointSet::<f64>::from_xy(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.), (0.5, 0.5)]).unwrap();
        let s = shapley_by_subsets(GameKind::HullArea, &sq).unwrap();
        // the center adds a quarter square to each pair of adjacent corners,
        // weight 2!2!/5! each: 4 * 1/4 * 1/30
        for v in &s.values[..4] {
            assert!((v - 29.0 / 120.0).abs() < 1e-15);
        }
        assert!((s.values[4] - 1.0 / 30.0).abs() < 1e-15);
    }

    #[test]
    fn guards() {
        let pts: Vec<(f64, f64)> = (0..11).map(|i| (i as f64 + 1.0, (i * i) as f64)).collect();
        let s = PlanarPointSet::<f64>::from_xy(&pts).unwrap();
        assert_eq!(
            shapley_by_permutations(GameKind::AnchoredRects, &s).unwrap_err(),
            ShapleyError::SizeLimit { n: 11, limit: 10 }
        );
    }
}
