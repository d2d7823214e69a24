//! The combinatorial maps between partition families.
//!
//! Every map checks its domain and returns [`Error::OutsideDomain`] rather
//! than producing a result for an input it was not defined on.
//!
//! [`Error::OutsideDomain`]: crate::Error::OutsideDomain

mod colors;
mod modular;
mod overpartition;
mod pairs;
mod phi;
mod theta;

pub use colors::{paint_colors, strip_colors};
pub use modular::{
    from_modular_diagram, modular4_transform, staircase, to_modular_diagram, ModularDiagram,
    Orientation, SquareFrame, StaircaseKind, TransformOutcome,
};
pub use overpartition::{from_overpartition, to_overpartition};
pub use pairs::{pair_merge, pair_split};
pub use phi::{phi, phi_traced, PhiCase};
pub use theta::theta;

use crate::error::Error;
use crate::partition::{Color, Part};

pub(crate) fn outside(map: &'static str, input: &impl std::fmt::Display, reason: &'static str) -> Error {
    Error::OutsideDomain {
        map,
        input: input.to_string(),
        reason,
    }
}

/// Removes `count` copies of `(value, color)`; the caller guarantees they exist.
pub(crate) fn remove_copies(parts: &mut Vec<Part>, value: u32, color: Color, count: usize) {
    for _ in 0..count {
        let pos = parts
            .iter()
            .position(|p| p.value == value && p.color == color)
            .expect("part to remove is present");
        parts.remove(pos);
    }
}
