//! Verification of the partition identities, the generating-function
//! displays and the map contracts, with structured reports.
//!
//! Every check is exact. Reports are assembled in increasing `n` regardless of
//! the order in which the per-`n` work ran.

mod identities;
mod ids;
mod maps;
mod suite;

pub use identities::{check_gf_display, check_identity, check_relation, cross_check_gf};
pub use ids::{CheckId, GfDisplayId, IdentityId, Mode, RelationId};
pub use maps::{check_map, Finding, FindingKind, MapId, MapReport, MapRow};
pub use suite::{full_suite, SuiteLimits, SuiteReport, GF_FAMILIES, SCHEMA_VERSION};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::family::Ceiling;
use crate::qseries::DEFAULT_TRUNCATION;

/// Limits shared by every check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub ceiling: Ceiling,
    pub truncation: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            ceiling: Ceiling::DEFAULT,
            truncation: DEFAULT_TRUNCATION,
        }
    }
}

/// One weight of an identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRow {
    pub n: u32,
    #[serde(with = "bigint_text")]
    pub lhs: BigInt,
    #[serde(with = "bigint_text")]
    pub rhs: BigInt,
    pub equal: bool,
    pub mode: Mode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub check: CheckId,
    pub mode: Mode,
    pub per_n: Vec<IdentityRow>,
    pub all_pass: bool,
}

impl IdentityReport {
    pub(crate) fn new(check: CheckId, mode: Mode, per_n: Vec<IdentityRow>) -> Self {
        let all_pass = per_n.iter().all(|r| r.equal);
        IdentityReport {
            check,
            mode,
            per_n,
            all_pass,
        }
    }
}

/// Big integers travel as decimal strings so no precision is lost in JSON.
pub(crate) mod bigint_text {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}
