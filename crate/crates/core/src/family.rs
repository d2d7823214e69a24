//! Partition families: membership, exhaustive enumeration and counting.
//!
//! Every family is described by a per-slot multiplicity rule: for each value
//! and color, a part may be forbidden, allowed once, or allowed any number of
//! times. The only exception is `M`, which is `L` restricted to partitions
//! with an even value present in exactly one color.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Color, ColoredPartition, OverPart, Overpartition, Part, PartitionStats};

/// Environment variable overriding the enumeration ceiling.
pub const MAX_ENUM_ENV: &str = "PARTITION_LAB_MAX_ENUM";

/// Largest `n` for which enumeration-based operations will run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ceiling(pub u32);

impl Ceiling {
    pub const DEFAULT: Ceiling = Ceiling(40);

    /// Reads `PARTITION_LAB_MAX_ENUM`, falling back to the default when the
    /// variable is unset or not a number.
    pub fn from_env() -> Ceiling {
        std::env::var(MAX_ENUM_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Ceiling)
            .unwrap_or_default()
    }

    pub fn check(self, n: u32) -> Result<()> {
        if n > self.0 {
            Err(Error::CeilingExceeded { n, ceiling: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Ceiling {
    fn default() -> Self {
        Ceiling::DEFAULT
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    /// Two colors, even parts Blue only.
    F,
    /// `F` with the Blue parts distinct and odd.
    Q,
    /// Two colors, odd parts Blue only.
    G,
    /// `G` with the Blue parts distinct and odd.
    R,
    /// One color, odd parts distinct.
    H,
    /// One color, distinct parts, even parts congruent to 2 mod 4; counted with sign.
    K,
    /// Parts distinct within each color, odd parts Blue only.
    L,
    /// `L` with some even value present in exactly one color.
    M,
    /// One color, distinct parts, even parts divisible by 4.
    N,
    #[serde(rename = "OVER")]
    Over,
    #[serde(rename = "OVER_ODD")]
    OverOdd,
}

impl FamilyId {
    pub const ALL: [FamilyId; 11] = [
        FamilyId::F,
        FamilyId::Q,
        FamilyId::G,
        FamilyId::R,
        FamilyId::H,
        FamilyId::K,
        FamilyId::L,
        FamilyId::M,
        FamilyId::N,
        FamilyId::Over,
        FamilyId::OverOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::F => "F",
            FamilyId::Q => "Q",
            FamilyId::G => "G",
            FamilyId::R => "R",
            FamilyId::H => "H",
            FamilyId::K => "K",
            FamilyId::L => "L",
            FamilyId::M => "M",
            FamilyId::N => "N",
            FamilyId::Over => "OVER",
            FamilyId::OverOdd => "OVER_ODD",
        }
    }

    pub fn is_overpartition(self) -> bool {
        matches!(self, FamilyId::Over | FamilyId::OverOdd)
    }

    pub fn is_monochrome(self) -> bool {
        matches!(self, FamilyId::H | FamilyId::K | FamilyId::N)
    }

    /// Whether `count` weights each member by `(-1)^(number of even parts)`.
    pub fn is_signed(self) -> bool {
        self == FamilyId::K
    }

    /// Multiplicity allowed for `value` in `color`. For overpartition
    /// families Blue stands for overlined and Green for plain.
    fn slot(self, value: u32, color: Color) -> Slot {
        use Color::*;
        use Slot::*;
        let even = value % 2 == 0;
        match self {
            FamilyId::F => match (even, color) {
                (true, Green) => Forbidden,
                _ => Many,
            },
            FamilyId::Q => match (even, color) {
                (true, _) => Forbidden,
                (false, Blue) => Once,
                (false, Green) => Many,
            },
            FamilyId::G => match (even, color) {
                (false, Green) => Forbidden,
                _ => Many,
            },
            FamilyId::R => match (even, color) {
                (true, Blue) => Forbidden,
                (false, Blue) => Once,
                (false, Green) => Forbidden,
                (true, Green) => Many,
            },
            FamilyId::H => match (even, color) {
                (_, Green) => Forbidden,
                (false, Blue) => Once,
                (true, Blue) => Many,
            },
            FamilyId::K => match color {
                Green => Forbidden,
                Blue if !even || value % 4 == 2 => Once,
                Blue => Forbidden,
            },
            FamilyId::L | FamilyId::M => match (even, color) {
                (false, Green) => Forbidden,
                _ => Once,
            },
            FamilyId::N => match color {
                Green => Forbidden,
                Blue if !even || value % 4 == 0 => Once,
                Blue => Forbidden,
            },
            FamilyId::Over => match color {
                Blue => Once,
                Green => Many,
            },
            FamilyId::OverOdd => match (even, color) {
                (true, _) => Forbidden,
                (false, Blue) => Once,
                (false, Green) => Many,
            },
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase().replace('-', "_");
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == upper)
            .ok_or_else(|| Error::Unknown {
                kind: "family",
                name: s.to_string(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Forbidden,
    Once,
    Many,
}

impl Slot {
    fn cap(self, fits: u32) -> u32 {
        match self {
            Slot::Forbidden => 0,
            Slot::Once => fits.min(1),
            Slot::Many => fits,
        }
    }
}

/// True when some even value occurs in exactly one color.
pub(crate) fn has_unpaired_even(parts: &[Part]) -> bool {
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i].value;
        let j = parts[i..].iter().take_while(|p| p.value == v).count() + i;
        if v % 2 == 0 {
            let blue = parts[i..j].iter().any(|p| p.color == Color::Blue);
            let green = parts[i..j].iter().any(|p| p.color == Color::Green);
            if blue != green {
                return true;
            }
        }
        i = j;
    }
    false
}

fn satisfies_slots(family: FamilyId, parts: &[Part]) -> bool {
    let mut i = 0;
    while i < parts.len() {
        let part = parts[i];
        let run = parts[i..].iter().take_while(|p| **p == part).count();
        let ok = match family.slot(part.value, part.color) {
            Slot::Forbidden => false,
            Slot::Once => run == 1,
            Slot::Many => true,
        };
        if !ok {
            return false;
        }
        i += run;
    }
    true
}

/// Membership of a canonical colored partition in `family`. Overpartition
/// families never contain colored partitions; see [`member_overpartition`].
pub fn member(family: FamilyId, p: &ColoredPartition) -> bool {
    if family.is_overpartition() {
        return false;
    }
    satisfies_slots(family, p.parts()) && (family != FamilyId::M || has_unpaired_even(p.parts()))
}

pub fn member_overpartition(family: FamilyId, o: &Overpartition) -> bool {
    match family {
        FamilyId::Over => true,
        FamilyId::OverOdd => o.all_odd(),
        _ => false,
    }
}

/// Either kind of enumerated object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyMember {
    Colored(ColoredPartition),
    Over(Overpartition),
}

impl FamilyMember {
    pub fn weight(&self) -> u64 {
        match self {
            FamilyMember::Colored(p) => p.weight(),
            FamilyMember::Over(o) => o.weight(),
        }
    }

    pub fn stats(&self) -> PartitionStats {
        match self {
            FamilyMember::Colored(p) => p.stats(),
            FamilyMember::Over(o) => o.stats(),
        }
    }
}

impl fmt::Display for FamilyMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyMember::Colored(p) => p.fmt(f),
            FamilyMember::Over(o) => o.fmt(f),
        }
    }
}

fn walk<F: FnMut(&[Part])>(
    family: FamilyId,
    value: u32,
    remaining: u32,
    buf: &mut Vec<Part>,
    visit: &mut F,
) {
    if remaining == 0 {
        visit(buf);
        return;
    }
    let value = value.min(remaining);
    if value == 0 {
        return;
    }
    let start = buf.len();
    let max_blue = family.slot(value, Color::Blue).cap(remaining / value);
    for blues in 0..=max_blue {
        let after_blue = remaining - blues * value;
        let mark = buf.len();
        let max_green = family.slot(value, Color::Green).cap(after_blue / value);
        for greens in 0..=max_green {
            walk(family, value - 1, after_blue - greens * value, buf, visit);
            if greens < max_green {
                buf.push(Part {
                    value,
                    color: Color::Green,
                });
            }
        }
        buf.truncate(mark);
        if blues < max_blue {
            buf.push(Part {
                value,
                color: Color::Blue,
            });
        }
    }
    buf.truncate(start);
}

/// Visits every member of weight `n` as a canonical slice of parts, in a
/// deterministic order. Overpartition families are visited with Blue meaning
/// overlined.
fn for_each_raw<F: FnMut(&[Part])>(family: FamilyId, n: u32, ceiling: Ceiling, mut visit: F) -> Result<()> {
    ceiling.check(n)?;
    let mut buf = Vec::new();
    if family == FamilyId::M {
        walk(FamilyId::L, n, n, &mut buf, &mut |parts: &[Part]| {
            if has_unpaired_even(parts) {
                visit(parts)
            }
        });
    } else {
        walk(family, n, n, &mut buf, &mut visit);
    }
    Ok(())
}

fn as_overpartition(parts: &[Part]) -> Overpartition {
    Overpartition::from_sorted_unchecked(
        parts
            .iter()
            .map(|p| OverPart {
                value: p.value,
                overlined: p.color == Color::Blue,
            })
            .collect(),
    )
}

/// Every colored partition of `n` in `family`.
pub fn enumerate_colored(family: FamilyId, n: u32, ceiling: Ceiling) -> Result<Vec<ColoredPartition>> {
    if family.is_overpartition() {
        return Err(Error::Unsupported(format!(
            "{family} contains overpartitions, not colored partitions"
        )));
    }
    let mut out = Vec::new();
    for_each_raw(family, n, ceiling, |parts| {
        out.push(ColoredPartition::from_parts(parts.to_vec()))
    })?;
    Ok(out)
}

/// Every overpartition of `n` (into odd parts when `odd_only`).
pub fn enumerate_overpartitions(odd_only: bool, n: u32, ceiling: Ceiling) -> Result<Vec<Overpartition>> {
    let family = if odd_only {
        FamilyId::OverOdd
    } else {
        FamilyId::Over
    };
    let mut out = Vec::new();
    for_each_raw(family, n, ceiling, |parts| out.push(as_overpartition(parts)))?;
    Ok(out)
}

/// The members of `family` with weight `n`, each exactly once.
pub fn enumerate_family(family: FamilyId, n: u32, ceiling: Ceiling) -> Result<Vec<FamilyMember>> {
    if family.is_overpartition() {
        let odd = family == FamilyId::OverOdd;
        Ok(enumerate_overpartitions(odd, n, ceiling)?
            .into_iter()
            .map(FamilyMember::Over)
            .collect())
    } else {
        Ok(enumerate_colored(family, n, ceiling)?
            .into_iter()
            .map(FamilyMember::Colored)
            .collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Parity {
        if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn index(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Statistic restriction applied before counting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StatFilter {
    All,
    EvenParts(Parity),
    Parts(Parity),
    BlueParts(Parity),
    BlueEvenParts(Parity),
}

impl StatFilter {
    pub fn accepts(self, s: &PartitionStats) -> bool {
        match self {
            StatFilter::All => true,
            StatFilter::EvenParts(p) => Parity::of(s.n_even_parts) == p,
            StatFilter::Parts(p) => Parity::of(s.n_parts) == p,
            StatFilter::BlueParts(p) => Parity::of(s.n_blue_parts) == p,
            StatFilter::BlueEvenParts(p) => Parity::of(s.n_blue_even_parts) == p,
        }
    }
}

impl fmt::Display for StatFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (stat, parity) = match self {
            StatFilter::All => return f.write_str("all"),
            StatFilter::EvenParts(p) => ("even-parts", p),
            StatFilter::Parts(p) => ("parts", p),
            StatFilter::BlueParts(p) => ("blue-parts", p),
            StatFilter::BlueEvenParts(p) => ("blue-even-parts", p),
        };
        let parity = match parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        write!(f, "{stat}:{parity}")
    }
}

/// Parses `all` or `<stat>:<even|odd>` with stat one of `even-parts`,
/// `parts`, `blue-parts`, `blue-even-parts`.
impl FromStr for StatFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Unknown {
            kind: "filter",
            name: s.to_string(),
        };
        let s_trim = s.trim();
        if s_trim == "all" {
            return Ok(StatFilter::All);
        }
        let (stat, parity) = s_trim.split_once(':').ok_or_else(unknown)?;
        let parity = match parity {
            "even" => Parity::Even,
            "odd" => Parity::Odd,
            _ => return Err(unknown()),
        };
        Ok(match stat {
            "even-parts" => StatFilter::EvenParts(parity),
            "parts" => StatFilter::Parts(parity),
            "blue-parts" => StatFilter::BlueParts(parity),
            "blue-even-parts" => StatFilter::BlueEvenParts(parity),
            _ => return Err(unknown()),
        })
    }
}

/// All counting statistics of one family at one weight, gathered in a single
/// enumeration pass. Index 0 of each pair is the even class, index 1 the odd.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub total: i64,
    /// Sum of `(-1)^(number of even parts)` over all members.
    pub signed: i64,
    pub even_parts: [i64; 2],
    pub parts: [i64; 2],
    pub blue_parts: [i64; 2],
    pub blue_even_parts: [i64; 2],
}

impl Tally {
    fn add(&mut self, s: &PartitionStats) {
        self.total += 1;
        self.signed += i64::from(s.sign);
        self.even_parts[Parity::of(s.n_even_parts).index()] += 1;
        self.parts[Parity::of(s.n_parts).index()] += 1;
        self.blue_parts[Parity::of(s.n_blue_parts).index()] += 1;
        self.blue_even_parts[Parity::of(s.n_blue_even_parts).index()] += 1;
    }

    /// Unsigned number of members passing `filter`.
    pub fn filtered(&self, filter: StatFilter) -> i64 {
        match filter {
            StatFilter::All => self.total,
            StatFilter::EvenParts(p) => self.even_parts[p.index()],
            StatFilter::Parts(p) => self.parts[p.index()],
            StatFilter::BlueParts(p) => self.blue_parts[p.index()],
            StatFilter::BlueEvenParts(p) => self.blue_even_parts[p.index()],
        }
    }
}

/// Gathers every statistic of `family` at weight `n`.
pub fn tally(family: FamilyId, n: u32, ceiling: Ceiling) -> Result<Tally> {
    let mut t = Tally::default();
    if family.is_overpartition() {
        for_each_raw(family, n, ceiling, |parts| t.add(&as_overpartition(parts).stats()))?;
    } else {
        for_each_raw(family, n, ceiling, |parts| {
            t.add(&ColoredPartition::from_parts(parts.to_vec()).stats())
        })?;
    }
    Ok(t)
}

/// Number of members of `family` with weight `n` passing `filter`. For `K`
/// each member is weighted by `(-1)^(number of even parts)`.
pub fn count(family: FamilyId, n: u32, filter: StatFilter, ceiling: Ceiling) -> Result<i64> {
    let mut total = 0i64;
    let mut add = |s: PartitionStats| {
        if filter.accepts(&s) {
            total += if family.is_signed() { i64::from(s.sign) } else { 1 };
        }
    };
    if family.is_overpartition() {
        for_each_raw(family, n, ceiling, |parts| add(as_overpartition(parts).stats()))?;
    } else {
        for_each_raw(family, n, ceiling, |parts| {
            add(ColoredPartition::from_parts(parts.to_vec()).stats())
        })?;
    }
    Ok(total)
}

/// Returns `k` with `k(k+1)/2 = n`, if there is one.
pub fn is_triangular(n: u64) -> Option<u64> {
    let k = ((8 * u128::from(n) + 1).isqrt() as u64 - 1) / 2;
    (k * (k + 1) / 2 == n).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(s: &str) -> ColoredPartition {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(member(FamilyId::F, &cp("5b,2b,1g")));
        assert!(!member(FamilyId::F, &cp("2g,1b")));
        assert!(member(FamilyId::N, &cp("12,8,5,4,3,1")));
        assert!(member(FamilyId::M, &cp("5b,4b,3b,2g,2b")));
        assert!(!member(FamilyId::M, &cp("5b,4b,4g,3b,2g,2b")));
        assert!(member(FamilyId::L, &cp("6g,6b,5b,4g,4b,3b,2g,2b,1b")));
        assert!(!member(FamilyId::L, &cp("6b,6b")));
        assert!(!member(FamilyId::L, &cp("3g")));
        assert!(member(FamilyId::K, &cp("6,3")));
        assert!(!member(FamilyId::K, &cp("4,3")));
        assert!(!member(FamilyId::H, &cp("3g")));
        assert!(!member(FamilyId::Over, &cp("3b")));
    }

    #[test]
    fn empty_partition_belongs_everywhere() {
        for family in FamilyId::ALL {
            let all = enumerate_family(family, 0, Ceiling::DEFAULT).unwrap();
            if family == FamilyId::M {
                // M needs an unpaired even part, so its weight-0 slice is empty.
                assert!(all.is_empty());
                continue;
            }
            assert_eq!(all.len(), 1, "{family}");
            assert_eq!(all[0].weight(), 0);
        }
    }

    #[test]
    fn overpartitions_of_three() {
        let all = enumerate_overpartitions(false, 3, Ceiling::DEFAULT).unwrap();
        assert_eq!(all.len(), 8);
    }

    #[test]
    fn count_examples() {
        let c = Ceiling::DEFAULT;
        assert_eq!(count(FamilyId::F, 0, StatFilter::All, c).unwrap(), 1);
        let even = count(FamilyId::L, 6, StatFilter::BlueEvenParts(Parity::Even), c).unwrap();
        let odd = count(FamilyId::L, 6, StatFilter::BlueEvenParts(Parity::Odd), c).unwrap();
        assert_eq!(even - odd, 1);
        assert_eq!(count(FamilyId::K, 2, StatFilter::All, c).unwrap(), -1);
    }

    #[test]
    fn ceiling_is_enforced() {
        let err = count(FamilyId::F, 41, StatFilter::All, Ceiling::DEFAULT).unwrap_err();
        assert_eq!(err, Error::CeilingExceeded { n: 41, ceiling: 40 });
        assert!(enumerate_family(FamilyId::H, 6, Ceiling(5)).is_err());
    }

    #[test]
    fn triangular_numbers() {
        assert_eq!(is_triangular(0), Some(0));
        assert_eq!(is_triangular(1), Some(1));
        assert_eq!(is_triangular(6), Some(3));
        assert_eq!(is_triangular(7), None);
        assert_eq!(is_triangular(5050), Some(100));
    }

    #[test]
    fn filter_round_trips_through_text() {
        for text in ["all", "even-parts:odd", "parts:even", "blue-parts:odd", "blue-even-parts:even"] {
            let f: StatFilter = text.parse().unwrap();
            assert_eq!(f.to_string(), text);
        }
        assert!("parts:maybe".parse::<StatFilter>().is_err());
    }

    #[test]
    fn family_names_parse() {
        for f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>().unwrap(), f);
        }
        assert_eq!("over-odd".parse::<FamilyId>().unwrap(), FamilyId::OverOdd);
        assert!("Z".parse::<FamilyId>().is_err());
    }
}
