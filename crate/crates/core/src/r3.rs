//! Catalog of oriented third Reidemeister moves at the Gauss-code level.
//!
//! Three strands meet pairwise in three crossings:
//!
//! * the top strand is over at `x` and `y`,
//! * the middle strand is under at `x` and over at `z`,
//! * the bottom strand is under at `y` and `z`.
//!
//! A template records, for each strand, which of its two crossings comes
//! first along the orientation, together with the signs of `x`, `y`, `z`.
//! The move reverses all three orders and keeps the signs, so templates
//! come in pairs. The sixteen entries below are exactly the patterns cut
//! out by three oriented straight lines in general position; the test
//! module regenerates them from that geometry. Whether a smaller subset
//! generates the rest (together with R2) is not used anywhere.

use crate::diagram::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct R3Template {
    /// Top strand meets `x` before `y`.
    pub top_x_first: bool,
    /// Middle strand meets `x` before `z`.
    pub middle_x_first: bool,
    /// Bottom strand meets `y` before `z`.
    pub bottom_y_first: bool,
    /// Signs of `x`, `y`, `z`.
    pub signs: [Sign; 3],
}

const P: Sign = Sign::Positive;
const N: Sign = Sign::Negative;

const fn t(top: bool, middle: bool, bottom: bool, signs: [Sign; 3]) -> R3Template {
    R3Template { top_x_first: top, middle_x_first: middle, bottom_y_first: bottom, signs }
}

pub const CATALOG: [R3Template; 16] = [
    t(false, false, false, [P, P, P]),
    t(false, false, false, [N, N, N]),
    t(false, false, true, [P, N, N]),
    t(false, false, true, [N, P, P]),
    t(false, true, false, [P, N, P]),
    t(false, true, false, [N, P, N]),
    t(false, true, true, [P, P, N]),
    t(false, true, true, [N, N, P]),
    t(true, false, false, [P, P, N]),
    t(true, false, false, [N, N, P]),
    t(true, false, true, [P, N, P]),
    t(true, false, true, [N, P, N]),
    t(true, true, false, [P, N, N]),
    t(true, true, false, [N, P, P]),
    t(true, true, true, [P, P, P]),
    t(true, true, true, [N, N, N]),
];

impl R3Template {
    /// The template seen after the move.
    pub fn reversed(self) -> R3Template {
        R3Template {
            top_x_first: !self.top_x_first,
            middle_x_first: !self.middle_x_first,
            bottom_y_first: !self.bottom_y_first,
            signs: self.signs,
        }
    }
}

pub fn template_index(pattern: &R3Template) -> Option<usize> {
    CATALOG.iter().position(|t| t == pattern)
}
