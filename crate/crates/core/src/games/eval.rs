use crate::error::{Result, ShapleyError};
use crate::geometry::disk::enclosing_radius;
use crate::geometry::hull::{hull_area, hull_perimeter, hull_vertices};
use crate::geometry::{PlanarPointSet, Point2};
use crate::scalar::Scalar;

use super::GameKind;

/// `v(Q)` for the coalition given by indices into `set`.
pub fn eval_characteristic<T: Scalar>(game: GameKind, set: &PlanarPointSet<T>, subset: &[usize]) -> Result<T> {
    let ctx = EvalContext::new(game, set)?;
    let pts: Vec<Point2<T>> = subset.iter().map(|&i| set.point(i)).collect();
    Ok(ctx.eval(&pts))
}

/// Per-instance data some games read from the full player set.
#[derive(Clone, Copy, Debug)]
pub(crate) struct EvalContext<T> {
    game: GameKind,
    band: T,
}

impl<T: Scalar> EvalContext<T> {
    pub(crate) fn new(game: GameKind, set: &PlanarPointSet<T>) -> Result<Self> {
        if game == GameKind::Airport {
            if let Some(i) = set.points().iter().position(|p| !(p.x > T::zero())) {
                return Err(ShapleyError::domain(format!(
                    "airport players need positive coordinates, point {i} has {}",
                    set.point(i).x
                )));
            }
        }
        let (lo, hi) = min_max(set.points().iter().map(|p| p.y));
        Ok(Self { game, band: hi - lo })
    }

    pub(crate) fn eval(&self, pts: &[Point2<T>]) -> T {
        if pts.is_empty() {
            return T::zero();
        }
        let two = T::of(2.0);
        let xs = || pts.iter().map(|p| p.x);
        let ys = || pts.iter().map(|p| p.y);
        match self.game {
            GameKind::HullArea => hull_area(&hull_vertices(pts)),
            GameKind::HullPerimeter => hull_perimeter(&hull_vertices(pts)),
            GameKind::DiskArea => {
                let r = enclosing_radius(pts);
                T::pi() * r * r
            }
            GameKind::DiskPerimeter => two * T::pi() * enclosing_radius(pts),
            GameKind::AnchoredRects => anchored_union_area(pts),
            GameKind::BboxArea => span(xs()) * span(ys()),
            GameKind::AnchoredBboxArea => anchored_span(xs()) * anchored_span(ys()),
            GameKind::Airport => xs().fold(T::zero(), T::max),
            GameKind::IntervalLength => span(xs()),
            GameKind::AreaBand => span(xs()) * self.band,
            GameKind::BboxPerimeter => two * (span(xs()) + span(ys())),
            GameKind::AnchoredBboxPerimeter => two * (anchored_span(xs()) + anchored_span(ys())),
        }
    }
}

fn min_max<T: Scalar>(it: impl Iterator<Item = T>) -> (T, T) {
    it.fold((T::infinity(), T::neg_infinity()), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

fn span<T: Scalar>(it: impl Iterator<Item = T>) -> T {
    let (lo, hi) = min_max(it);
    hi - lo
}

fn anchored_span<T: Scalar>(it: impl Iterator<Item = T>) -> T {
    let (lo, hi) = min_max(it);
    hi.max(T::zero()) - lo.min(T::zero())
}

/// Area of the union of the rectangles spanned by the origin and each point.
/// Rectangles from different quadrants meet only along the axes, so each
/// quadrant is a staircase swept in order of decreasing `|x|`.
pub fn anchored_union_area<T: Scalar>(pts: &[Point2<T>]) -> T {
    let mut total = T::zero();
    for (sx, sy) in [(1, 1), (-1, 1), (-1, -1), (1, -1)] {
        let mut q: Vec<(T, T)> = pts
            .iter()
            .map(|p| {
                let x = if sx > 0 { p.x } else { -p.x };
                let y = if sy > 0 { p.y } else { -p.y };
                (x, y)
            })
            .filter(|&(x, y)| x > T::zero() && y > T::zero())
            .collect();
        q.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        let mut top = T::zero();
        for (x, y) in q {
            if y > top {
                total = total + x * (y - top);
                top = y;
            }
        }
    }
    total
}
