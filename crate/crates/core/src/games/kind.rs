use std::fmt;
use std::str::FromStr;

use crate::error::{Property, ShapleyError};

/// The characteristic functions supported by the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GameKind {
    HullArea,
    HullPerimeter,
    DiskArea,
    DiskPerimeter,
    AnchoredRects,
    BboxArea,
    AnchoredBboxArea,
    Airport,
    IntervalLength,
    AreaBand,
    BboxPerimeter,
    AnchoredBboxPerimeter,
}

impl GameKind {
    pub const ALL: [GameKind; 12] = [
        GameKind::HullArea,
        GameKind::HullPerimeter,
        GameKind::DiskArea,
        GameKind::DiskPerimeter,
        GameKind::AnchoredRects,
        GameKind::BboxArea,
        GameKind::AnchoredBboxArea,
        GameKind::Airport,
        GameKind::IntervalLength,
        GameKind::AreaBand,
        GameKind::BboxPerimeter,
        GameKind::AnchoredBboxPerimeter,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            GameKind::HullArea => "hull-area",
            GameKind::HullPerimeter => "hull-perimeter",
            GameKind::DiskArea => "disk-area",
            GameKind::DiskPerimeter => "disk-perimeter",
            GameKind::AnchoredRects => "anchored-rects",
            GameKind::BboxArea => "bbox-area",
            GameKind::AnchoredBboxArea => "anchored-bbox-area",
            GameKind::Airport => "airport",
            GameKind::IntervalLength => "interval-length",
            GameKind::AreaBand => "area-band",
            GameKind::BboxPerimeter => "bbox-perimeter",
            GameKind::AnchoredBboxPerimeter => "anchored-bbox-perimeter",
        }
    }

    /// Games whose players live on a line (only `x` is read).
    pub fn is_one_dimensional(self) -> bool {
        matches!(self, GameKind::Airport | GameKind::IntervalLength)
    }

    /// Whether the game is solved by the rank-grid engine.
    pub fn is_axis_game(self) -> bool {
        matches!(
            self,
            GameKind::AnchoredRects | GameKind::BboxArea | GameKind::AnchoredBboxArea
        )
    }

    /// Input conditions the fast engines assume.
    pub fn required_properties(self) -> &'static [Property] {
        match self {
            GameKind::HullArea | GameKind::HullPerimeter => &[Property::NoThreeCollinear],
            GameKind::DiskArea | GameKind::DiskPerimeter => &[
                Property::NoThreeCollinear,
                Property::NoFourCocircular,
                Property::NoDiametralConflict,
            ],
            GameKind::AnchoredRects | GameKind::BboxArea | GameKind::AnchoredBboxArea => {
                &[Property::DistinctCoords]
            }
            _ => &[],
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GameKind {
    type Err = ShapleyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GameKind::ALL
            .into_iter()
            .find(|g| g.tag() == s)
            .ok_or_else(|| ShapleyError::domain(format!("unknown game `{s}`")))
    }
}
