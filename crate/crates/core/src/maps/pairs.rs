use super::outside;
use crate::error::Result;
use crate::family::{has_unpaired_even, member, FamilyId};
use crate::partition::{Color, ColoredPartition, Part};

/// Merges each Blue/Green pair of equal evens into one part and drops colors.
/// Defined on `L \ M`, where every even value occurs once in each color.
pub fn pair_merge(lambda: &ColoredPartition) -> Result<ColoredPartition> {
    if !member(FamilyId::L, lambda) {
        return Err(outside("pair_merge", lambda, "not in L"));
    }
    if has_unpaired_even(lambda.parts()) {
        return Err(outside("pair_merge", lambda, "in M (unpaired even value)"));
    }
    let parts = lambda
        .parts()
        .iter()
        .filter_map(|p| match (p.is_even(), p.color) {
            (false, _) => Some(Part::blue(p.value)),
            (true, Color::Blue) => Some(Part::blue(2 * p.value)),
            (true, Color::Green) => None,
        })
        .collect();
    Ok(ColoredPartition::from_parts(parts))
}

/// Halves every even part into a Blue and a Green copy; odd parts stay Blue.
pub fn pair_split(mu: &ColoredPartition) -> Result<ColoredPartition> {
    if !member(FamilyId::N, mu) {
        return Err(outside("pair_split", mu, "not in N"));
    }
    let mut parts = Vec::with_capacity(mu.len() * 2);
    for v in mu.values() {
        if v % 2 == 0 {
            parts.push(Part::blue(v / 2));
            parts.push(Part::green(v / 2));
        } else {
            parts.push(Part::blue(v));
        }
    }
    Ok(ColoredPartition::from_parts(parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(s: &str) -> ColoredPartition {
        s.parse().unwrap()
    }

    #[test]
    fn merges_worked_example() {
        let gamma = cp("6g,6b,5b,4g,4b,3b,2g,2b,1b");
        let lambda = pair_merge(&gamma).unwrap();
        assert_eq!(lambda.to_plain_string(), "12,8,5,4,3,1");
        assert_eq!(pair_split(&lambda).unwrap(), gamma);
    }

    #[test]
    fn split_halves_evens() {
        assert_eq!(pair_split(&cp("9,7,5,4,3,1")).unwrap(), cp("9b,7b,5b,3b,2b,2g,1b"));
    }

    #[test]
    fn domain_errors() {
        assert!(pair_merge(&cp("4b,1b")).is_err());
        assert!(pair_merge(&cp("3b,3b")).is_err());
        assert!(pair_split(&cp("6,1")).is_err());
        assert!(pair_split(&cp("4g")).is_err());
    }
}
