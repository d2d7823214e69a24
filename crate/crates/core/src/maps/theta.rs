use super::outside;
use crate::error::Result;
use crate::family::{member, FamilyId};
use crate::partition::{ColoredPartition, Part};

/// Flips the color of the largest even value present in exactly one color.
pub fn theta(lambda: &ColoredPartition) -> Result<ColoredPartition> {
    if !member(FamilyId::M, lambda) {
        return Err(outside("theta", lambda, "not in M"));
    }
    let parts = lambda.parts();
    let target = parts
        .iter()
        .filter(|p| p.is_even())
        .map(|p| p.value)
        .find(|&v| parts.iter().filter(|p| p.value == v).count() == 1)
        .expect("M member has an even value in exactly one color");
    Ok(ColoredPartition::from_parts(
        parts
            .iter()
            .map(|p| {
                if p.value == target {
                    Part {
                        color: p.color.flipped(),
                        ..*p
                    }
                } else {
                    *p
                }
            })
            .collect(),
    ))
}
