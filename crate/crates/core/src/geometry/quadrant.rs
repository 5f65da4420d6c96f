use std::fmt;
use std::str::FromStr;

use super::point::{PlanarPointSet, Point2};
use crate::error::{Result, ShapleyError};
use crate::scalar::Scalar;

/// Open quadrant of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quadrant {
    NE,
    NW,
    SW,
    SE,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::NE, Quadrant::NW, Quadrant::SW, Quadrant::SE];

    /// Quadrant holding `p`, or `None` when `p` lies on an axis.
    pub fn of<T: Scalar>(p: Point2<T>) -> Option<Quadrant> {
        let z = T::zero();
        match (p.x > z, p.x < z, p.y > z, p.y < z) {
            (true, _, true, _) => Some(Quadrant::NE),
            (_, true, true, _) => Some(Quadrant::NW),
            (_, true, _, true) => Some(Quadrant::SW),
            (true, _, _, true) => Some(Quadrant::SE),
            _ => None,
        }
    }

    pub fn isometry(self) -> Isometry {
        match self {
            Quadrant::NE => Isometry::default(),
            Quadrant::NW => Isometry { flip_x: true, flip_y: false },
            Quadrant::SW => Isometry { flip_x: true, flip_y: true },
            Quadrant::SE => Isometry { flip_x: false, flip_y: true },
        }
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quadrant::NE => "ne",
            Quadrant::NW => "nw",
            Quadrant::SW => "sw",
            Quadrant::SE => "se",
        })
    }
}

impl FromStr for Quadrant {
    type Err = ShapleyError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ne" => Ok(Quadrant::NE),
            "nw" => Ok(Quadrant::NW),
            "sw" => Ok(Quadrant::SW),
            "se" => Ok(Quadrant::SE),
            _ => Err(ShapleyError::domain(format!("unknown quadrant `{s}`"))),
        }
    }
}

/// Composition of axis reflections. Every such map is its own inverse.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Isometry {
    pub flip_x: bool,
    pub flip_y: bool,
}

impl Isometry {
    pub fn apply<T: Scalar>(&self, p: Point2<T>) -> Point2<T> {
        Point2::new(
            if self.flip_x { -p.x } else { p.x },
            if self.flip_y { -p.y } else { p.y },
        )
    }

    pub fn inverse(&self) -> Isometry {
        *self
    }

    pub fn is_identity(&self) -> bool {
        !self.flip_x && !self.flip_y
    }
}

/// Mirror a point set lying in `quadrant` onto the open positive quadrant.
/// Shapley values are unchanged and keep their indices.
pub fn reflect_to_positive_quadrant<T: Scalar>(
    set: &PlanarPointSet<T>,
    quadrant: Quadrant,
) -> Result<(PlanarPointSet<T>, Isometry)> {
    for (i, &p) in set.points().iter().enumerate() {
        match Quadrant::of(p) {
            None => return Err(ShapleyError::AxisDegeneracy { index: i }),
            Some(q) if q != quadrant => {
                return Err(ShapleyError::domain(format!(
                    "point {i} lies in quadrant {q}, expected {quadrant}"
                )))
            }
            _ => {}
        }
    }
    let iso = quadrant.isometry();
    let image = set.points().iter().map(|&p| iso.apply(p)).collect();
    Ok((PlanarPointSet::new(image)?, iso))
}
