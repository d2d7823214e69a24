//! Colored partitions, overpartitions and the counting statistics on them.
//!
//! Every partition is stored in canonical order: decreasing value, and for
//! equal values Blue before Green (overlined before plain). Multiset equality
//! is therefore plain list equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    Blue,
    Green,
}

impl Color {
    pub fn flipped(self) -> Color {
        match self {
            Color::Blue => Color::Green,
            Color::Green => Color::Blue,
        }
    }

    fn suffix(self) -> char {
        match self {
            Color::Blue => 'b',
            Color::Green => 'g',
        }
    }
}

/// A single part: a positive value together with its color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Part {
    pub value: u32,
    pub color: Color,
}

impl Part {
    pub fn new(value: u32, color: Color) -> Result<Self> {
        if value == 0 {
            return Err(Error::NonPositivePart);
        }
        Ok(Part { value, color })
    }

    pub fn blue(value: u32) -> Self {
        assert!(value >= 1, "part values must be at least 1");
        Part { value, color: Color::Blue }
    }

    pub fn green(value: u32) -> Self {
        assert!(value >= 1, "part values must be at least 1");
        Part { value, color: Color::Green }
    }

    pub fn is_even(&self) -> bool {
        self.value % 2 == 0
    }
}

/// Canonical order: larger values first, Blue before Green on ties.
impl Ord for Part {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .value
            .cmp(&self.value)
            .then(self.color.cmp(&other.color))
    }
}

impl PartialOrd for Part {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, self.color.suffix())
    }
}

/// A two-color partition held as a canonical multiset of parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Part>", into = "Vec<Part>")]
pub struct ColoredPartition {
    parts: Vec<Part>,
}

impl ColoredPartition {
    pub fn empty() -> Self {
        ColoredPartition { parts: Vec::new() }
    }

    /// Sorts `(value, color)` pairs into canonical order.
    pub fn canonicalize<I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, Color)>,
    {
        let parts = parts
            .into_iter()
            .map(|(v, c)| Part::new(v, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(parts))
    }

    pub fn from_parts(mut parts: Vec<Part>) -> Self {
        parts.sort_unstable();
        ColoredPartition { parts }
    }

    /// All-Blue partition, the representation used for single-color families.
    pub fn monochrome<I: IntoIterator<Item = u32>>(values: I) -> Result<Self> {
        Self::canonicalize(values.into_iter().map(|v| (v, Color::Blue)))
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Part> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| u64::from(p.value)).sum()
    }

    pub fn is_monochrome(&self) -> bool {
        self.parts.iter().all(|p| p.color == Color::Blue)
    }

    pub fn multiplicity(&self, value: u32, color: Color) -> usize {
        self.parts
            .iter()
            .filter(|p| p.value == value && p.color == color)
            .count()
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats::of_parts(self.parts.iter().map(|p| (p.value, p.color == Color::Blue)))
    }

    /// Values only, in canonical order.
    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.parts.iter().map(|p| p.value)
    }

    /// Comma-separated values without color suffixes, e.g. `12,8,5`.
    pub fn to_plain_string(&self) -> String {
        if self.parts.is_empty() {
            return "()".to_string();
        }
        self.values()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl From<ColoredPartition> for Vec<Part> {
    fn from(p: ColoredPartition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<Part>> for ColoredPartition {
    type Error = Error;

    fn try_from(parts: Vec<Part>) -> Result<Self> {
        if parts.iter().any(|p| p.value == 0) {
            return Err(Error::NonPositivePart);
        }
        Ok(Self::from_parts(parts))
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn split_tokens(spec: &str) -> Vec<&str> {
    let trimmed = spec.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(trimmed)
        .trim();
    if inner.is_empty() {
        return Vec::new();
    }
    inner.split(',').map(str::trim).collect()
}

fn parse_value(spec: &str, digits: &str) -> Result<u32> {
    let value: u32 = digits.parse().map_err(|_| Error::Parse {
        spec: spec.to_string(),
        reason: format!("bad part {digits:?}"),
    })?;
    if value == 0 {
        return Err(Error::NonPositivePart);
    }
    Ok(value)
}

/// Parses `8b,1b`, `5b,2b,1g` or bare `12,8,5` (bare values are Blue).
/// `()` and the empty string denote the empty partition.
impl FromStr for ColoredPartition {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for token in split_tokens(spec) {
            let (digits, color) = match token.chars().last() {
                Some('b') | Some('B') => (&token[..token.len() - 1], Color::Blue),
                Some('g') | Some('G') => (&token[..token.len() - 1], Color::Green),
                _ => (token, Color::Blue),
            };
            parts.push(Part {
                value: parse_value(spec, digits)?,
                color,
            });
        }
        Ok(Self::from_parts(parts))
    }
}

/// One part of an overpartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OverPart {
    pub value: u32,
    pub overlined: bool,
}

impl Ord for OverPart {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .value
            .cmp(&self.value)
            .then(other.overlined.cmp(&self.overlined))
    }
}

impl PartialOrd for OverPart {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OverPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.overlined {
            write!(f, "{}o", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// A partition in which the first occurrence of each value may be overlined.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<OverPart>", into = "Vec<OverPart>")]
pub struct Overpartition {
    parts: Vec<OverPart>,
}

impl Overpartition {
    pub fn empty() -> Self {
        Overpartition { parts: Vec::new() }
    }

    pub fn new(mut parts: Vec<OverPart>) -> Result<Self> {
        if parts.iter().any(|p| p.value == 0) {
            return Err(Error::NonPositivePart);
        }
        parts.sort_unstable();
        if let Some(w) = parts
            .windows(2)
            .find(|w| w[0].overlined && w[1].overlined && w[0].value == w[1].value)
        {
            return Err(Error::RepeatedOverline(w[0].value));
        }
        Ok(Overpartition { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<OverPart>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        Overpartition { parts }
    }

    pub fn parts(&self) -> &[OverPart] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| u64::from(p.value)).sum()
    }

    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|p| p.value % 2 == 1)
    }

    /// Statistics with overlined parts playing the role of Blue parts.
    pub fn stats(&self) -> PartitionStats {
        PartitionStats::of_parts(self.parts.iter().map(|p| (p.value, p.overlined)))
    }
}

impl From<Overpartition> for Vec<OverPart> {
    fn from(p: Overpartition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<OverPart>> for Overpartition {
    type Error = Error;

    fn try_from(parts: Vec<OverPart>) -> Result<Self> {
        Overpartition::new(parts)
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `3o,1,1`: a trailing `o` marks an overlined part.
impl FromStr for Overpartition {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for token in split_tokens(spec) {
            let (digits, overlined) = match token.strip_suffix(['o', 'O']) {
                Some(d) => (d, true),
                None => (token, false),
            };
            parts.push(OverPart {
                value: parse_value(spec, digits)?,
                overlined,
            });
        }
        Overpartition::new(parts)
    }
}

/// Counting statistics of a partition.
///
/// Invariant: `n_parts = n_even_parts + n_odd_parts = n_blue_parts + n_green_parts`,
/// and `sign = (-1)^n_even_parts`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionStats {
    pub n_parts: usize,
    pub n_even_parts: usize,
    pub n_odd_parts: usize,
    pub n_blue_parts: usize,
    pub n_blue_even_parts: usize,
    pub n_green_parts: usize,
    pub sign: i8,
}

impl PartitionStats {
    fn of_parts(parts: impl Iterator<Item = (u32, bool)>) -> Self {
        let mut s = PartitionStats::default();
        for (value, blue) in parts {
            let even = value % 2 == 0;
            s.n_parts += 1;
            if even {
                s.n_even_parts += 1;
            } else {
                s.n_odd_parts += 1;
            }
            if blue {
                s.n_blue_parts += 1;
                if even {
                    s.n_blue_even_parts += 1;
                }
            } else {
                s.n_green_parts += 1;
            }
        }
        s.sign = if s.n_even_parts % 2 == 0 { 1 } else { -1 };
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(s: &str) -> ColoredPartition {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_order_sorts_by_value_then_color() {
        let p = ColoredPartition::canonicalize([(1, Color::Blue), (8, Color::Blue)]).unwrap();
        assert_eq!(p.to_string(), "8b,1b");
        let p = ColoredPartition::canonicalize([(2, Color::Green), (2, Color::Blue)]).unwrap();
        assert_eq!(p.parts(), &[Part::blue(2), Part::green(2)]);
    }

    #[test]
    fn empty_partition() {
        let p = ColoredPartition::canonicalize(Vec::new()).unwrap();
        assert!(p.is_empty());
        assert_eq!(p.weight(), 0);
        assert_eq!(p.to_string(), "()");
        assert_eq!(cp("()"), p);
        assert_eq!(cp(""), p);
    }

    #[test]
    fn zero_part_rejected() {
        assert_eq!(
            ColoredPartition::canonicalize([(0, Color::Blue)]),
            Err(Error::NonPositivePart)
        );
        assert!("3b,0g".parse::<ColoredPartition>().is_err());
        assert!("3x".parse::<ColoredPartition>().is_err());
    }

    #[test]
    fn bare_values_are_blue() {
        assert_eq!(cp("12,8,5"), cp("12b,8b,5b"));
        assert_eq!(cp("5,12,8").to_plain_string(), "12,8,5");
    }

    #[test]
    fn stats_examples() {
        let s = cp("5b,2b,1g").stats();
        assert_eq!((s.n_parts, s.n_even_parts, s.n_blue_parts, s.n_blue_even_parts), (3, 1, 2, 1));
        assert_eq!(s.sign, -1);

        let s = ColoredPartition::empty().stats();
        assert_eq!(s, PartitionStats { sign: 1, ..Default::default() });

        let s = cp("6g,6b,5b,4g,4b,3b,2g,2b,1b").stats();
        assert_eq!((s.n_parts, s.n_blue_parts, s.n_blue_even_parts), (9, 6, 3));
    }

    #[test]
    fn overpartition_rejects_double_overline() {
        assert_eq!(
            "3o,3o".parse::<Overpartition>(),
            Err(Error::RepeatedOverline(3))
        );
        let o: Overpartition = "1,3o,1".parse().unwrap();
        assert_eq!(o.to_string(), "3o,1,1");
        let o: Overpartition = "5,5o".parse().unwrap();
        assert_eq!(o.to_string(), "5o,5");
    }

    #[test]
    fn serde_keeps_canonical_form() {
        let p = cp("1b,8b,2g");
        let json = serde_json::to_string(&p).unwrap();
        let back: ColoredPartition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        let bad = r#"[{"value":0,"color":"Blue"}]"#;
        assert!(serde_json::from_str::<ColoredPartition>(bad).is_err());
    }
}
