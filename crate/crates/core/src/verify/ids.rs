use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FamilyId;

/// The thirteen counting identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    /// `F(n) = pbar(n)`
    T11a,
    /// `F0(n) = (pbar(n) + pbar_o(n)) / 2`
    T11b,
    /// `F1(n) = (pbar(n) - pbar_o(n)) / 2`
    T11c,
    /// `F2(n) = (pbar(n) + (-1)^n pbar_o(n)) / 2`
    T11d,
    /// `F3(n) = (pbar(n) - (-1)^n pbar_o(n)) / 2`
    T11e,
    /// `G0(n) = (G(n) + H(n)) / 2`
    T15a,
    /// `G1(n) = (G(n) - H(n)) / 2`
    T15b,
    /// `G2(n) = (G(n) + (-1)^n H(n)) / 2`
    T15c,
    /// `G3(n) = (G(n) - (-1)^n H(n)) / 2`
    T15d,
    /// `G4(n) = (G(n) + (-1)^n K(n)) / 2`
    T15e,
    /// `G5(n) = (G(n) - (-1)^n K(n)) / 2`
    T15f,
    /// `L0(n) - L1(n) = [n triangular]`
    T17f,
    /// `L2(n) - L3(n) = (-1)^n [n triangular]`
    T17g,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::T11a,
        IdentityId::T11b,
        IdentityId::T11c,
        IdentityId::T11d,
        IdentityId::T11e,
        IdentityId::T15a,
        IdentityId::T15b,
        IdentityId::T15c,
        IdentityId::T15d,
        IdentityId::T15e,
        IdentityId::T15f,
        IdentityId::T17f,
        IdentityId::T17g,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::T11a => "T11a",
            IdentityId::T11b => "T11b",
            IdentityId::T11c => "T11c",
            IdentityId::T11d => "T11d",
            IdentityId::T11e => "T11e",
            IdentityId::T15a => "T15a",
            IdentityId::T15b => "T15b",
            IdentityId::T15c => "T15c",
            IdentityId::T15d => "T15d",
            IdentityId::T15e => "T15e",
            IdentityId::T15f => "T15f",
            IdentityId::T17f => "T17f",
            IdentityId::T17g => "T17g",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Unknown {
                kind: "identity",
                name: s.to_string(),
            })
    }
}

/// Product identities checked coefficientwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GfDisplayId {
    /// `(-q;q)/(q;q) = 1/((q;q^2)^2 (q^2;q^2))`
    OverEqualsF,
    /// `1/((q;q^2)^2 (-q^2;q^2)) = (-q;q^2)/(q;q^2)`
    F0MinusF1EqualsOverOdd,
    /// `1/((-q;q^2)^2 (-q^2;q^2)) = sum (-1)^n pbar_o(n) q^n`
    F2MinusF3EqualsAltOverOdd,
    /// `1/((-q^2;q^2)(q;q)) = (-q;q^2)/(q^2;q^2)`
    G0MinusG1EqualsH,
    /// `1/((q^2;q^2)(-q;q)) = sum (-1)^n H(n) q^n`
    G2MinusG3EqualsAltH,
    /// `1/((-q^2;q^2)(-q;q)) = (q;q^2)/(-q^2;q^2)`
    G4MinusG5EqualsQuotient,
    /// `(q;q^2)/(-q^2;q^2) = sum (-1)^n K(n) q^n`
    QuotientEqualsAltK,
    /// `(q^2;q^4)(-q;q^2) = (-q;q^2)/(-q^2;q^2)`
    KProductForms,
    /// `(q^2;q^2)(-q;q) = (q^2;q^2)/(q;q^2)`
    L0MinusL1Quotient,
    /// `(q^2;q^2)/(q;q^2) = sum q^{T_k}`
    L0MinusL1EqualsStaircase,
    /// `(-q^2;q^2)(q;q) = sum (-1)^{T_k} q^{T_k}`
    L2MinusL3EqualsSignedStaircase,
}

impl GfDisplayId {
    pub const ALL: [GfDisplayId; 11] = [
        GfDisplayId::OverEqualsF,
        GfDisplayId::F0MinusF1EqualsOverOdd,
        GfDisplayId::F2MinusF3EqualsAltOverOdd,
        GfDisplayId::G0MinusG1EqualsH,
        GfDisplayId::G2MinusG3EqualsAltH,
        GfDisplayId::G4MinusG5EqualsQuotient,
        GfDisplayId::QuotientEqualsAltK,
        GfDisplayId::KProductForms,
        GfDisplayId::L0MinusL1Quotient,
        GfDisplayId::L0MinusL1EqualsStaircase,
        GfDisplayId::L2MinusL3EqualsSignedStaircase,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfDisplayId::OverEqualsF => "over=F",
            GfDisplayId::F0MinusF1EqualsOverOdd => "F0-F1=over_odd",
            GfDisplayId::F2MinusF3EqualsAltOverOdd => "F2-F3=alt_over_odd",
            GfDisplayId::G0MinusG1EqualsH => "G0-G1=H",
            GfDisplayId::G2MinusG3EqualsAltH => "G2-G3=alt_H",
            GfDisplayId::G4MinusG5EqualsQuotient => "G4-G5=quotient",
            GfDisplayId::QuotientEqualsAltK => "quotient=alt_K",
            GfDisplayId::KProductForms => "K_product_forms",
            GfDisplayId::L0MinusL1Quotient => "L0-L1=quotient",
            GfDisplayId::L0MinusL1EqualsStaircase => "L0-L1=staircase",
            GfDisplayId::L2MinusL3EqualsSignedStaircase => "L2-L3=signed_staircase",
        }
    }
}

/// Parity relations between statistics, checked by enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelationId {
    /// `F2 - F3 = (-1)^n (F0 - F1)`
    FPartsFromEvenParts,
    /// `G2 - G3 = (-1)^n (G0 - G1)`
    GBluePartsFromBlueEven,
    /// `L2 - L3 = (-1)^n (L0 - L1)`
    LBluePartsFromBlueEven,
    /// Even and odd classes of every statistic add up to the total.
    ParitySplit(FamilyId),
}

impl RelationId {
    pub fn name(self) -> String {
        match self {
            RelationId::FPartsFromEvenParts => "F2-F3=(-1)^n(F0-F1)".into(),
            RelationId::GBluePartsFromBlueEven => "G2-G3=(-1)^n(G0-G1)".into(),
            RelationId::LBluePartsFromBlueEven => "L2-L3=(-1)^n(L0-L1)".into(),
            RelationId::ParitySplit(f) => format!("parity_split:{f}"),
        }
    }
}

/// What an [`IdentityReport`](super::IdentityReport) checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum CheckId {
    Identity(IdentityId),
    /// Generating-function coefficients against exhaustive counts.
    GfVsCount(FamilyId),
    GfDisplay(GfDisplayId),
    Relation(RelationId),
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckId::Identity(id) => write!(f, "{id}"),
            CheckId::GfVsCount(fam) => write!(f, "gf:{fam}"),
            CheckId::GfDisplay(d) => write!(f, "display:{}", d.name()),
            CheckId::Relation(r) => write!(f, "relation:{}", r.name()),
        }
    }
}

impl From<CheckId> for String {
    fn from(c: CheckId) -> String {
        c.to_string()
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Unknown {
            kind: "check",
            name: s.to_string(),
        };
        if let Some(fam) = s.strip_prefix("gf:") {
            return Ok(CheckId::GfVsCount(fam.parse()?));
        }
        if let Some(d) = s.strip_prefix("display:") {
            return GfDisplayId::ALL
                .into_iter()
                .find(|x| x.name() == d)
                .map(CheckId::GfDisplay)
                .ok_or_else(unknown);
        }
        if let Some(r) = s.strip_prefix("relation:") {
            if let Some(fam) = r.strip_prefix("parity_split:") {
                return Ok(CheckId::Relation(RelationId::ParitySplit(fam.parse()?)));
            }
            return [
                RelationId::FPartsFromEvenParts,
                RelationId::GBluePartsFromBlueEven,
                RelationId::LBluePartsFromBlueEven,
            ]
            .into_iter()
            .find(|x| x.name() == r)
            .map(CheckId::Relation)
            .ok_or_else(unknown);
        }
        s.parse().map(CheckId::Identity).map_err(|_| unknown())
    }
}

impl TryFrom<String> for CheckId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// How the two sides of a check were evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Enumeration,
    SeriesCoefficient,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "enum" | "enumeration" => Ok(Mode::Enumeration),
            "series" | "seriescoefficient" | "series-coefficient" => Ok(Mode::SeriesCoefficient),
            _ => Err(Error::Unknown {
                kind: "mode",
                name: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Enumeration => "enum",
            Mode::SeriesCoefficient => "series",
        })
    }
}
