//! Shapley values of the axis-parallel games: union of anchored rectangles,
//! anchored bounding box and bounding box.

mod bands;
mod block;
mod chain;
mod grid;
mod quadratic;
mod sums;

pub use block::{
    shifted_reciprocal_sums, sigma_psi_slabs_empty_block, sigma_slabs_empty_block, Block, PsiSlabs, SlabAxis,
};
pub use grid::{
    build_dominance_index, ChainShape, DecreasingChainCounts, DominanceCounter, DominanceCounts, DominanceIndex,
    DominanceQuery, IndexedCounts, RankGrid, Transposed,
};

use crate::algebra::MultipointMode;
use crate::error::{Result, ShapleyError};
use crate::games::basic::{airport_values, interval_length_values};
use crate::games::{eval_characteristic, GameKind, ShapleyVector};
use crate::geometry::{PlanarPointSet, Point2, Quadrant};
use crate::scalar::Scalar;

/// How the fast engine treats chains.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AxisStrategy {
    /// Chain solvers when the input is a chain, bands otherwise.
    #[default]
    Auto,
    General,
    /// Fail unless every quadrant is a chain.
    Chain,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AxisOptions {
    pub strategy: AxisStrategy,
    pub multipoint: MultipointMode,
}

#[derive(Clone, Copy)]
enum Engine {
    Fast(AxisOptions),
    Quadratic,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Game {
    Rects,
    Bbox,
}

/// Values for points in the closed positive quadrant.
fn positive<T: Scalar>(pts: &[Point2<T>], game: Game, engine: Engine) -> Result<Vec<T>> {
    if pts.is_empty() {
        return Ok(Vec::new());
    }
    let g = RankGrid::new(pts);
    let opts = match engine {
        Engine::Quadratic => {
            return Ok(match game {
                Game::Rects => quadratic::ar_values(&g),
                Game::Bbox => quadratic::abb_values(&g),
            })
        }
        Engine::Fast(o) => o,
    };
    let shape = match opts.strategy {
        AxisStrategy::General => ChainShape::General,
        AxisStrategy::Auto => g.shape(),
        AxisStrategy::Chain => match g.shape() {
            ChainShape::General => return Err(ShapleyError::domain("input is not a monotone chain")),
            s => s,
        },
    };
    let mode = opts.multipoint;
    match (shape, game) {
        (ChainShape::Increasing, _) => {
            let areas: Vec<T> = pts.iter().map(|p| p.x * p.y).collect();
            Ok(airport_values(&areas))
        }
        (ChainShape::Decreasing, Game::Rects) => chain::ar_values(&g, mode),
        (ChainShape::Decreasing, Game::Bbox) => chain::abb_values(&g, mode),
        (ChainShape::General, Game::Rects) => bands::ar_values(&g, mode),
        (ChainShape::General, Game::Bbox) => bands::abb_values(&g, mode),
    }
}

fn quadrant_of<T: Scalar>(set: &PlanarPointSet<T>, i: usize) -> Result<Quadrant> {
    Quadrant::of(set.point(i)).ok_or(ShapleyError::AxisDegeneracy { index: i })
}

fn rects<T: Scalar>(set: &PlanarPointSet<T>, engine: Engine) -> Result<ShapleyVector<T>> {
    let quads = (0..set.len()).map(|i| quadrant_of(set, i)).collect::<Result<Vec<_>>>()?;
    let mut values = vec![T::zero(); set.len()];
    for q in Quadrant::ALL {
        let iso = q.isometry();
        let idx: Vec<usize> = (0..set.len()).filter(|&i| quads[i] == q).collect();
        let pts: Vec<Point2<T>> = idx.iter().map(|&i| iso.apply(set.point(i))).collect();
        for (&i, v) in idx.iter().zip(positive(&pts, Game::Rects, engine)?) {
            values[i] = v;
        }
    }
    let total = eval_characteristic(GameKind::AnchoredRects, set, &(0..set.len()).collect::<Vec<_>>())?;
    Ok(ShapleyVector::new(GameKind::AnchoredRects, values, total))
}

/// Anchored bounding-box values of arbitrary points, as the sum of the four
/// sign-quadrant games on clamped coordinates.
fn abb_any<T: Scalar>(pts: &[Point2<T>], engine: Engine) -> Result<Vec<T>> {
    let mut values = vec![T::zero(); pts.len()];
    for (sx, sy) in [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)] {
        let (sx, sy) = (T::of(sx), T::of(sy));
        let clamp = |p: &Point2<T>| Point2::new((sx * p.x).max(T::zero()), (sy * p.y).max(T::zero()));
        let idx: Vec<usize> = (0..pts.len())
            .filter(|&i| clamp(&pts[i]) != Point2::origin())
            .collect();
        let sub: Vec<Point2<T>> = idx.iter().map(|&i| clamp(&pts[i])).collect();
        for (&i, v) in idx.iter().zip(positive(&sub, Game::Bbox, engine)?) {
            values[i] = values[i] + v;
        }
    }
    Ok(values)
}

fn abb<T: Scalar>(set: &PlanarPointSet<T>, engine: Engine) -> Result<ShapleyVector<T>> {
    for i in 0..set.len() {
        quadrant_of(set, i)?;
    }
    let values = abb_any(set.points(), engine)?;
    let total = eval_characteristic(GameKind::AnchoredBboxArea, set, &(0..set.len()).collect::<Vec<_>>())?;
    Ok(ShapleyVector::new(GameKind::AnchoredBboxArea, values, total))
}

fn bbox<T: Scalar>(set: &PlanarPointSet<T>, engine: Engine) -> Result<ShapleyVector<T>> {
    let n = set.len();
    let (xs, ys) = (set.xs(), set.ys());
    let lo = |v: &[T]| v.iter().copied().fold(T::infinity(), T::min);
    let hi = |v: &[T]| v.iter().copied().fold(T::neg_infinity(), T::max);
    let (x0, x1, y0, y1) = (lo(&xs), hi(&xs), lo(&ys), hi(&ys));
    let (w, h) = (x1 - x0, y1 - y0);
    // corner frames: every translated point lies in the closed positive quadrant
    let mut values = vec![-(w * h) / T::of_usize(n); n];
    for (fx, fy) in [(false, false), (true, false), (false, true), (true, true)] {
        let pts: Vec<Point2<T>> = set
            .points()
            .iter()
            .map(|p| {
                let x = if fx { x1 - p.x } else { p.x - x0 };
                let y = if fy { y1 - p.y } else { p.y - y0 };
                Point2::new(x, y)
            })
            .collect();
        for (v, c) in values.iter_mut().zip(abb_any(&pts, engine)?) {
            *v = *v + c;
        }
    }
    let (lx, ly) = (interval_length_values(&xs), interval_length_values(&ys));
    for i in 0..n {
        values[i] = values[i] - h * lx[i] - w * ly[i];
    }
    Ok(ShapleyVector::new(GameKind::BboxArea, values, w * h))
}

pub fn shapley_anchored_rects<T: Scalar>(set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    rects(set, Engine::Fast(AxisOptions::default()))
}

pub fn shapley_anchored_rects_with<T: Scalar>(set: &PlanarPointSet<T>, opts: AxisOptions) -> Result<ShapleyVector<T>> {
    rects(set, Engine::Fast(opts))
}

/// Row-sweep baseline, `O(n^2)` time and `O(n)` memory.
pub fn shapley_anchored_rects_quadratic<T: Scalar>(set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    rects(set, Engine::Quadratic)
}

pub fn shapley_anchored_bbox<T: Scalar>(set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    abb(set, Engine::Fast(AxisOptions::default()))
}

pub fn shapley_anchored_bbox_with<T: Scalar>(set: &PlanarPointSet<T>, opts: AxisOptions) -> Result<ShapleyVector<T>> {
    abb(set, Engine::Fast(opts))
}

pub fn shapley_anchored_bbox_quadratic<T: Scalar>(set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    abb(set, Engine::Quadratic)
}

pub fn shapley_bbox<T: Scalar>(set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    bbox(set, Engine::Fast(AxisOptions::default()))
}

pub fn shapley_bbox_with<T: Scalar>(set: &PlanarPointSet<T>, opts: AxisOptions) -> Result<ShapleyVector<T>> {
    bbox(set, Engine::Fast(opts))
}

pub fn shapley_bbox_quadratic<T: Scalar>(set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    bbox(set, Engine::Quadratic)
}
