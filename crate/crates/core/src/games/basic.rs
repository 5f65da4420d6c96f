//! Closed-form solvers for the one-dimensional games and their combinations.

use crate::error::{Result, ShapleyError};
use crate::geometry::PlanarPointSet;
use crate::scalar::Scalar;

use super::{GameKind, ShapleyVector};

/// Littlechild–Owen values for `v(Q) = max(Q)` with nonnegative entries.
pub(crate) fn airport_values<T: Scalar>(coords: &[T]) -> Vec<T> {
    let n = coords.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| coords[a].partial_cmp(&coords[b]).unwrap());
    let mut out = vec![T::zero(); n];
    let (mut prev, mut acc) = (T::zero(), T::zero());
    for (k, &i) in order.iter().enumerate() {
        acc = acc + (coords[i] - prev) / T::of_usize(n - k);
        prev = coords[i];
        out[i] = acc;
    }
    out
}

pub(crate) fn interval_length_values<T: Scalar>(coords: &[T]) -> Vec<T> {
    let n = coords.len();
    let lo = coords.iter().copied().fold(T::infinity(), T::min);
    let hi = coords.iter().copied().fold(T::neg_infinity(), T::max);
    let up: Vec<T> = coords.iter().map(|&x| x - lo).collect();
    let down: Vec<T> = coords.iter().map(|&x| hi - x).collect();
    let (v1, v2) = (airport_values(&up), airport_values(&down));
    let v3 = (lo - hi) / T::of_usize(n);
    (0..n).map(|i| v1[i] + v2[i] + v3).collect()
}

/// Airport values of the positive and negative parts, for spans anchored at 0.
pub(crate) fn anchored_span_values<T: Scalar>(coords: &[T]) -> Vec<T> {
    let pos: Vec<T> = coords.iter().map(|&x| x.max(T::zero())).collect();
    let neg: Vec<T> = coords.iter().map(|&x| (-x).max(T::zero())).collect();
    let (a, b) = (airport_values(&pos), airport_values(&neg));
    a.iter().zip(&b).map(|(&u, &v)| u + v).collect()
}

fn span<T: Scalar>(v: &[T]) -> T {
    let lo = v.iter().copied().fold(T::infinity(), T::min);
    let hi = v.iter().copied().fold(T::neg_infinity(), T::max);
    hi - lo
}

pub fn shapley_airport<T: Scalar>(set: &PlanarPointSet<T>) -> Result<ShapleyVector<T>> {
    let xs = set.xs();
    if let Some(i) = xs.iter().position(|&x| !(x > T::zero())) {
        return Err(ShapleyError::domain(format!(
            "airport players need positive coordinates, point {i} has {}",
            xs[i]
        )));
    }
    let total = xs.iter().copied().fold(T::zero(), T::max);
    Ok(ShapleyVector::new(GameKind::Airport, airport_values(&xs), total))
}

pub fn shapley_interval_length<T: Scalar>(set: &PlanarPointSet<T>) -> ShapleyVector<T> {
    let xs = set.xs();
    ShapleyVector::new(GameKind::IntervalLength, interval_length_values(&xs), span(&xs))
}

pub fn shapley_area_band<T: Scalar>(set: &PlanarPointSet<T>) -> ShapleyVector<T> {
    let (xs, ys) = (set.xs(), set.ys());
    let h = span(&ys);
    let values = interval_length_values(&xs).into_iter().map(|v| v * h).collect();
    ShapleyVector::new(GameKind::AreaBand, values, span(&xs) * h)
}

pub fn shapley_bbox_perimeter<T: Scalar>(set: &PlanarPointSet<T>) -> ShapleyVector<T> {
    let (xs, ys) = (set.xs(), set.ys());
    let two = T::of(2.0);
    let (a, b) = (interval_length_values(&xs), interval_length_values(&ys));
    let values = a.iter().zip(&b).map(|(&u, &v)| two * (u + v)).collect();
    ShapleyVector::new(GameKind::BboxPerimeter, values, two * (span(&xs) + span(&ys)))
}

pub fn shapley_anchored_bbox_perimeter<T: Scalar>(set: &PlanarPointSet<T>) -> ShapleyVector<T> {
    let (xs, ys) = (set.xs(), set.ys());
    let two = T::of(2.0);
    let (a, b) = (anchored_span_values(&xs), anchored_span_values(&ys));
    let values = a.iter().zip(&b).map(|(&u, &v)| two * (u + v)).collect();
    let aspan = |v: &[T]| {
        v.iter().copied().fold(T::zero(), T::max) - v.iter().copied().fold(T::zero(), T::min)
    };
    ShapleyVector::new(GameKind::AnchoredBboxPerimeter, values, two * (aspan(&xs) + aspan(&ys)))
}
