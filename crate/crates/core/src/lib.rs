//! Exact Shapley values for games whose players are points in the plane.

pub mod algebra;
pub mod axis;
pub mod disk_shapley;
pub mod error;
pub mod games;
pub mod gen;
pub mod geometry;
pub mod harness;
pub mod hull_shapley;
pub mod oracle;
pub mod permcount;
pub mod scalar;
pub mod solve;

pub use error::{Property, Result, ShapleyError};
pub use scalar::{CompensatedSum, Scalar};
pub use games::{GameKind, ShapleyVector};
pub use geometry::{PlanarPointSet, Point2};
pub use solve::{solve, Algorithm, SolveOptions};

pub type Point = Point2<f64>;
pub type PointSet = PlanarPointSet<f64>;
pub type Shapley = ShapleyVector<f64>;
