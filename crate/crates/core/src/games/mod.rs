//! Characteristic functions and the closed-form basic games.

pub mod basic;
mod eval;
mod kind;

pub use basic::{
    shapley_airport, shapley_anchored_bbox_perimeter, shapley_area_band, shapley_bbox_perimeter,
    shapley_interval_length,
};
pub use eval::{anchored_union_area, eval_characteristic};
pub(crate) use eval::EvalContext;
pub use kind::GameKind;

use crate::scalar::{compensated_sum, Scalar};

/// Shapley values aligned with the input order, plus `v(P)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShapleyVector<T> {
    pub values: Vec<T>,
    pub game_total: T,
    pub game: GameKind,
}

impl<T: Scalar> ShapleyVector<T> {
    pub fn new(game: GameKind, values: Vec<T>, game_total: T) -> Self {
        Self {
            values,
            game_total,
            game,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> T {
        compensated_sum(&self.values)
    }

    /// `sum(values) - v(P)`.
    pub fn efficiency_residual(&self) -> T {
        self.sum() - self.game_total
    }

    /// Largest absolute difference to another allocation of the same players.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.len(), other.len(), "allocations of different sizes");
        self.values
            .iter()
            .zip(&other.values)
            .fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()))
    }
}
