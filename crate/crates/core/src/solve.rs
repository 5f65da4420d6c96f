//! One entry point over every game and algorithm.

use std::fmt;
use std::str::FromStr;

use crate::axis::{self, AxisOptions};
use crate::disk_shapley::{shapley_disk, shapley_disk_naive, DiskMeasure};
use crate::error::{Result, ShapleyError};
use crate::games::{self, GameKind, ShapleyVector};
use crate::geometry::{validate_general_position, PlanarPointSet};
use crate::hull_shapley::{hull_area_impl, hull_perimeter_impl, shapley_hull_area_naive, shapley_hull_perimeter_naive};
use crate::oracle::{shapley_by_permutations, shapley_by_subsets};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Algorithm {
    #[default]
    Auto,
    Fast,
    Quadratic,
    Naive,
    OraclePerm,
    OracleSubset,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Auto,
        Algorithm::Fast,
        Algorithm::Quadratic,
        Algorithm::Naive,
        Algorithm::OraclePerm,
        Algorithm::OracleSubset,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Fast => "fast",
            Algorithm::Quadratic => "quadratic",
            Algorithm::Naive => "naive",
            Algorithm::OraclePerm => "oracle-perm",
            Algorithm::OracleSubset => "oracle-subset",
        }
    }

    pub fn is_oracle(self) -> bool {
        matches!(self, Algorithm::OraclePerm | Algorithm::OracleSubset)
    }

    /// Concrete algorithms implemented for `game`, fastest first.
    pub fn available(game: GameKind) -> &'static [Algorithm] {
        use Algorithm::*;
        match game {
            GameKind::HullArea | GameKind::HullPerimeter | GameKind::DiskArea | GameKind::DiskPerimeter => {
                &[Fast, Naive, OraclePerm, OracleSubset]
            }
            GameKind::AnchoredRects | GameKind::BboxArea | GameKind::AnchoredBboxArea => {
                &[Fast, Quadratic, OraclePerm, OracleSubset]
            }
            _ => &[Fast, OraclePerm, OracleSubset],
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Algorithm {
    type Err = ShapleyError;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.tag() == s)
            .ok_or_else(|| ShapleyError::domain(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    pub axis: AxisOptions,
    /// Skip the general-position check the engines rely on.
    pub skip_validation: bool,
    /// Test hook: scales one hull pair weight so results go wrong.
    #[doc(hidden)]
    pub fault_injection: bool,
}

pub fn solve<T: Scalar>(
    game: GameKind,
    set: &PlanarPointSet<T>,
    algorithm: Algorithm,
    opts: SolveOptions,
) -> Result<ShapleyVector<T>> {
    // every game has a fast engine; chains are routed inside the axis engine
    let algorithm = match algorithm {
        Algorithm::Auto => Algorithm::Fast,
        a => a,
    };
    if !Algorithm::available(game).contains(&algorithm) {
        return Err(ShapleyError::domain(format!("no {algorithm} algorithm for {game}")));
    }
    match algorithm {
        Algorithm::OraclePerm => return shapley_by_permutations(game, set),
        Algorithm::OracleSubset => return shapley_by_subsets(game, set),
        _ => {}
    }
    if !opts.skip_validation {
        validate_general_position(set, game.required_properties()).into_result()?;
    }
    let fault = opts.fault_injection;
    let quadratic = algorithm == Algorithm::Quadratic;
    let naive = algorithm == Algorithm::Naive;
    match game {
        GameKind::HullArea if naive => shapley_hull_area_naive(set),
        GameKind::HullArea => hull_area_impl(set, fault),
        GameKind::HullPerimeter if naive => shapley_hull_perimeter_naive(set),
        GameKind::HullPerimeter => hull_perimeter_impl(set, fault),
        GameKind::DiskArea if naive => shapley_disk_naive(set, DiskMeasure::Area),
        GameKind::DiskArea => shapley_disk(set, DiskMeasure::Area),
        GameKind::DiskPerimeter if naive => shapley_disk_naive(set, DiskMeasure::Perimeter),
        GameKind::DiskPerimeter => shapley_disk(set, DiskMeasure::Perimeter),
        GameKind::AnchoredRects if quadratic => axis::shapley_anchored_rects_quadratic(set),
        GameKind::AnchoredRects => axis::shapley_anchored_rects_with(set, opts.axis),
        GameKind::AnchoredBboxArea if quadratic => axis::shapley_anchored_bbox_quadratic(set),
        GameKind::AnchoredBboxArea => axis::shapley_anchored_bbox_with(set, opts.axis),
        GameKind::BboxArea if quadratic => axis::shapley_bbox_quadratic(set),
        GameKind::BboxArea => axis::shapley_bbox_with(set, opts.axis),
        GameKind::Airport => games::shapley_airport(set),
        GameKind::IntervalLength => Ok(games::shapley_interval_length(set)),
        GameKind::AreaBand => Ok(games::shapley_area_band(set)),
        GameKind::BboxPerimeter => Ok(games::shapley_bbox_perimeter(set)),
        GameKind::AnchoredBboxPerimeter => Ok(games::shapley_anchored_bbox_perimeter(set)),
    }
}
