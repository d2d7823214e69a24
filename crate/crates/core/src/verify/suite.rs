use serde::{Deserialize, Serialize};

use super::ids::{GfDisplayId, IdentityId, Mode, RelationId};
use super::identities::{check_gf_display, check_identity, check_relation, cross_check_gf};
use super::maps::{check_map, MapId, MapReport};
use super::{IdentityReport, VerifyConfig};
use crate::error::Result;
use crate::family::FamilyId;

/// Version of the serialized [`SuiteReport`] layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Families whose generating function is compared against enumeration.
pub const GF_FAMILIES: [FamilyId; 7] = [
    FamilyId::F,
    FamilyId::G,
    FamilyId::H,
    FamilyId::K,
    FamilyId::L,
    FamilyId::Over,
    FamilyId::OverOdd,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteLimits {
    pub n_max_enum: u32,
    pub n_max_series: u32,
    pub ceiling: u32,
    pub truncation: usize,
}

/// Everything the suite ran, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub limits: SuiteLimits,
    pub identities: Vec<IdentityReport>,
    pub maps: Vec<MapReport>,
    /// Every identity, display, cross-check and relation report passed.
    pub identities_pass: bool,
    /// No map check produced a finding.
    pub maps_pass: bool,
    pub pass: bool,
}

/// Runs every identity in both modes, every display, every generating-function
/// cross-check, every parity relation and every map check.
///
/// Enumeration-based checks run to `n_max_enum`, series-based checks to
/// `n_max_series`.
pub fn full_suite(n_max_enum: u32, n_max_series: u32, config: &VerifyConfig) -> Result<SuiteReport> {
    let mut identities = Vec::new();
    for id in IdentityId::ALL {
        identities.push(check_identity(id, n_max_enum, Mode::Enumeration, config)?);
    }
    for id in IdentityId::ALL {
        identities.push(check_identity(id, n_max_series, Mode::SeriesCoefficient, config)?);
    }
    for id in GfDisplayId::ALL {
        identities.push(check_gf_display(id, n_max_series, config)?);
    }
    for family in GF_FAMILIES {
        identities.push(cross_check_gf(family, n_max_enum, config)?);
    }
    let relations = [
        RelationId::FPartsFromEvenParts,
        RelationId::GBluePartsFromBlueEven,
        RelationId::LBluePartsFromBlueEven,
    ]
    .into_iter()
    .chain(FamilyId::ALL.into_iter().map(RelationId::ParitySplit));
    for rel in relations {
        identities.push(check_relation(rel, n_max_enum, config)?);
    }

    let maps = MapId::ALL
        .into_iter()
        .map(|m| check_map(m, n_max_enum, config))
        .collect::<Result<Vec<_>>>()?;

    let identities_pass = identities.iter().all(|r| r.all_pass);
    let maps_pass = maps.iter().all(|r| r.all_pass);
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        limits: SuiteLimits {
            n_max_enum,
            n_max_series,
            ceiling: config.ceiling.0,
            truncation: config.truncation,
        },
        identities,
        maps,
        identities_pass,
        maps_pass,
        pass: identities_pass && maps_pass,
    })
}
