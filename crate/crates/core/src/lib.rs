//! Two-color partition families, their generating functions, and the
//! combinatorial maps (involutions, bijections, 4-modular diagram
//! transformation) that relate them.
//!
//! The crate is organised bottom-up:
//!
//! - [`partition`]: colored partitions, overpartitions and their statistics.
//! - [`family`]: membership predicates, exhaustive enumeration and counting.
//! - [`qseries`]: exact truncated power series and q-Pochhammer products.
//! - [`maps`]: the sign-reversing involutions and bijections.
//! - [`verify`]: identity, generating-function and map verification reports.

pub mod error;
pub mod family;
pub mod maps;
pub mod partition;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
pub use family::{
    count, enumerate_colored, enumerate_family, enumerate_overpartitions, is_triangular, member, member_overpartition, tally, Ceiling,
    FamilyId, FamilyMember, Parity, StatFilter, Tally,
};
pub use partition::{Color, ColoredPartition, OverPart, Overpartition, Part, PartitionStats};
pub use qseries::{family_gf, series_from_factors, staircase_series, GfId, PochhammerFactor, TruncatedSeries};
