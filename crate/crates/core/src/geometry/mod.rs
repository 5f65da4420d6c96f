//! Points, predicates, hulls, enclosing disks and quadrant handling.

pub mod disk;
pub mod hull;
pub mod point;
pub mod position;
pub mod predicates;
pub mod quadrant;

pub use disk::{min_enclosing_disk, Disk};
pub use hull::{convex_hull, hull_area, hull_perimeter, hull_vertices};
pub use point::{PlanarPointSet, Point2};
pub use position::{validate_general_position, GeneralPositionReport, Violation};
pub use predicates::{incircle, orient2d, Predicates, Sign};
pub use quadrant::{reflect_to_positive_quadrant, Isometry, Quadrant};
