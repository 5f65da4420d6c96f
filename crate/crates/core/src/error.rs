use std::fmt;

use thiserror::Error;

/// General-position property that an input can violate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    DistinctCoords,
    NoThreeCollinear,
    NoFourCocircular,
    NoDiametralConflict,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::DistinctCoords => "distinct-coords",
            Property::NoThreeCollinear => "no-three-collinear",
            Property::NoFourCocircular => "no-four-cocircular",
            Property::NoDiametralConflict => "no-diametral-conflict",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ShapleyError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("general position violated ({property}): offending tuples {tuples:?}")]
    GeneralPosition {
        property: Property,
        tuples: Vec<Vec<usize>>,
    },
    #[error("point {index} lies on a coordinate axis")]
    AxisDegeneracy { index: usize },
    #[error("{n} players exceeds the limit of {limit} for this algorithm")]
    SizeLimit { n: usize, limit: usize },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl ShapleyError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        ShapleyError::Domain(msg.into())
    }

    pub(crate) fn position(property: Property, tuple: Vec<usize>) -> Self {
        ShapleyError::GeneralPosition {
            property,
            tuples: vec![tuple],
        }
    }
}

pub type Result<T> = std::result::Result<T, ShapleyError>;
