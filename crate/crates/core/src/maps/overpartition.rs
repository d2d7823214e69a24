use super::outside;
use crate::error::Result;
use crate::family::{member, FamilyId};
use crate::partition::{Color, ColoredPartition, OverPart, Overpartition, Part};

/// Green parts become plain parts and Blue parts become overlined parts.
pub fn to_overpartition(lambda: &ColoredPartition) -> Result<Overpartition> {
    if !member(FamilyId::Q, lambda) {
        return Err(outside("to_overpartition", lambda, "not in Q"));
    }
    Overpartition::new(
        lambda
            .parts()
            .iter()
            .map(|p| OverPart {
                value: p.value,
                overlined: p.color == Color::Blue,
            })
            .collect(),
    )
}

/// Inverse of [`to_overpartition`] on overpartitions into odd parts.
pub fn from_overpartition(beta: &Overpartition) -> Result<ColoredPartition> {
    if !beta.all_odd() {
        return Err(outside("from_overpartition", beta, "has an even part"));
    }
    Ok(ColoredPartition::from_parts(
        beta.parts()
            .iter()
            .map(|p| Part {
                value: p.value,
                color: if p.overlined { Color::Blue } else { Color::Green },
            })
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabels_colors_as_overlines() {
        let lambda: ColoredPartition = "3b,1g,1g".parse().unwrap();
        let beta = to_overpartition(&lambda).unwrap();
        assert_eq!(beta.to_string(), "3o,1,1");
        assert_eq!(from_overpartition(&beta).unwrap(), lambda);
    }

    #[test]
    fn empty_maps_to_empty() {
        let beta = to_overpartition(&ColoredPartition::empty()).unwrap();
        assert!(beta.is_empty());
        assert!(from_overpartition(&beta).unwrap().is_empty());
    }

    #[test]
    fn domain_errors() {
        assert!(to_overpartition(&"3b,3b".parse().unwrap()).is_err());
        assert!(from_overpartition(&"2o,1".parse().unwrap()).is_err());
    }
}
