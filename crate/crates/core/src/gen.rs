//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, ShapleyError};
use crate::games::GameKind;
use crate::geometry::{validate_general_position, PlanarPointSet, Point2};
use crate::scalar::Scalar;

const ATTEMPTS: usize = 64;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points uniform in `[lo, hi]^2`.
pub fn uniform<T: Scalar>(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> Vec<Point2<T>> {
    (0..n)
        .map(|_| Point2::new(T::of(rng.gen_range(lo..hi)), T::of(rng.gen_range(lo..hi))))
        .collect()
}

/// Monotone chain in `(0, 1]^2`; decreasing means `y` falls as `x` grows.
pub fn chain<T: Scalar>(rng: &mut ChaCha8Rng, n: usize, decreasing: bool) -> Vec<Point2<T>> {
    let mut xs: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0) + 1e-3).collect();
    let mut ys: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0) + 1e-3).collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if decreasing {
        ys.reverse();
    }
    xs.iter().zip(&ys).map(|(&x, &y)| Point2::new(T::of(x), T::of(y))).collect()
}

fn sample<T: Scalar>(rng: &mut ChaCha8Rng, game: GameKind, n: usize) -> Vec<Point2<T>> {
    match game {
        GameKind::Airport => uniform(rng, n, 0.0, 1.0)
            .into_iter()
            .map(|p: Point2<T>| Point2::new(p.x + T::of(1e-3), p.y))
            .collect(),
        _ => uniform(rng, n, -1.0, 1.0),
    }
}

/// A random set satisfying what the fast engine for `game` assumes, redrawn
/// until it does.
pub fn instance<T: Scalar>(game: GameKind, n: usize, seed: u64) -> Result<PlanarPointSet<T>> {
    let mut r = rng(seed);
    for _ in 0..ATTEMPTS {
        let pts = sample(&mut r, game, n);
        if game.is_axis_game() && pts.iter().any(|p| p.x == T::zero() || p.y == T::zero()) {
            continue;
        }
        let Ok(set) = PlanarPointSet::new(pts) else { continue };
        if validate_general_position(&set, game.required_properties()).is_ok() {
            return Ok(set);
        }
    }
    Err(ShapleyError::Internal(format!(
        "no {game} instance of size {n} in general position after {ATTEMPTS} draws"
    )))
}

/// A random monotone chain in the positive quadrant.
pub fn chain_instance<T: Scalar>(n: usize, seed: u64, decreasing: bool) -> Result<PlanarPointSet<T>> {
    let mut r = rng(seed);
    for _ in 0..ATTEMPTS {
        if let Ok(set) = PlanarPointSet::new(chain(&mut r, n, decreasing)) {
            if validate_general_position(&set, &[crate::Property::DistinctCoords]).is_ok() {
                return Ok(set);
            }
        }
    }
    Err(ShapleyError::Internal(format!("no chain of size {n} with distinct coordinates")))
}
