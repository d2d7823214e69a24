use super::outside;
use crate::error::Result;
use crate::family::{member, FamilyId};
use crate::partition::{Color, ColoredPartition, Part};

/// Forgets the colors of a partition in `R`, landing in `H`.
pub fn strip_colors(lambda: &ColoredPartition) -> Result<ColoredPartition> {
    if !member(FamilyId::R, lambda) {
        return Err(outside("strip_colors", lambda, "not in R"));
    }
    Ok(ColoredPartition::from_parts(
        lambda.values().map(Part::blue).collect(),
    ))
}

/// Odd parts Blue, even parts Green.
pub fn paint_colors(mu: &ColoredPartition) -> Result<ColoredPartition> {
    if !member(FamilyId::H, mu) {
        return Err(outside("paint_colors", mu, "not in H"));
    }
    Ok(ColoredPartition::from_parts(
        mu.values()
            .map(|v| Part {
                value: v,
                color: if v % 2 == 0 { Color::Green } else { Color::Blue },
            })
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strip_and_paint() {
        let lambda: ColoredPartition = "3b,2g,2g,1b".parse().unwrap();
        assert_eq!(strip_colors(&lambda).unwrap().to_plain_string(), "3,2,2,1");
        let mu: ColoredPartition = "5,4,4".parse().unwrap();
        assert_eq!(paint_colors(&mu).unwrap().to_string(), "5b,4g,4g");
    }

    #[test]
    fn domain_errors() {
        assert!(strip_colors(&"3b,3b".parse().unwrap()).is_err());
        assert!(strip_colors(&"2b".parse().unwrap()).is_err());
        assert!(paint_colors(&"3,3".parse().unwrap()).is_err());
        assert!(paint_colors(&"2g".parse().unwrap()).is_err());
    }
}
