use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::VerifyConfig;
use crate::error::{Error, Result};
use crate::family::{enumerate_colored, enumerate_overpartitions, is_triangular, member, member_overpartition, FamilyId};
use crate::maps::{
    from_overpartition, modular4_transform, paint_colors, pair_merge, pair_split, phi_traced, staircase,
    strip_colors, theta, to_overpartition, StaircaseKind, TransformOutcome,
};
use crate::partition::ColoredPartition;

/// The maps with exhaustively checked contracts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapId {
    Phi,
    ToOverpartition,
    StripColors,
    Theta,
    PairMerge,
    Modular4,
}

impl MapId {
    pub const ALL: [MapId; 6] = [
        MapId::Phi,
        MapId::ToOverpartition,
        MapId::StripColors,
        MapId::Theta,
        MapId::PairMerge,
        MapId::Modular4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapId::Phi => "phi",
            MapId::ToOverpartition => "to_overpartition",
            MapId::StripColors => "strip_colors",
            MapId::Theta => "theta",
            MapId::PairMerge => "pair_merge",
            MapId::Modular4 => "modular4",
        }
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        MapId::ALL
            .into_iter()
            .find(|m| m.name() == key)
            .ok_or_else(|| Error::Unknown {
                kind: "map",
                name: s.to_string(),
            })
    }
}

/// What went wrong on one input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    /// The map rejected an element of its own domain.
    Rejected,
    WeightChanged,
    OutsideCodomain,
    /// Applying an involution twice did not return the input.
    NotSelfInverse,
    /// The stated inverse did not undo the map.
    InverseMismatch,
    /// Two inputs share an image.
    NotInjective,
    /// Some codomain element has no preimage.
    NotSurjective,
    /// The parity (or statistic) contract failed.
    StatisticContract,
    /// A fixed point other than the staircase of this weight.
    UnexpectedFixedPoint,
    /// A triangular weight without its staircase fixed point.
    MissingFixedPoint,
}

/// One anomaly, with the offending input serialized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub map: MapId,
    pub n: u32,
    pub kind: FindingKind,
    pub input: String,
    pub output: Option<String>,
    pub detail: String,
}

/// One weight of a map check. Each flag is true when no finding of the
/// corresponding kind was recorded at this weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRow {
    pub n: u32,
    pub domain_size: usize,
    pub weight_ok: bool,
    pub codomain_ok: bool,
    pub involution_or_bijection_ok: bool,
    /// `None` for maps without a parity or statistic contract.
    pub parity_ok: Option<bool>,
    /// Inputs the map leaves fixed (only `modular4` has any).
    pub fixed_points: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapReport {
    pub map: MapId,
    pub per_n: Vec<MapRow>,
    pub findings: Vec<Finding>,
    /// True iff `findings` is empty.
    pub all_pass: bool,
}

/// Exhaustively checks every contract of `map` for `0 <= n <= n_max`.
///
/// Contract violations are returned as findings; only an enumeration ceiling
/// breach is an error.
pub fn check_map(map: MapId, n_max: u32, config: &VerifyConfig) -> Result<MapReport> {
    config.ceiling.check(n_max)?;
    let rows = (0..=n_max)
        .into_par_iter()
        .map(|n| check_weight(map, n, config))
        .collect::<Result<Vec<_>>>()?;
    let mut per_n = Vec::with_capacity(rows.len());
    let mut findings = Vec::new();
    for (row, mut f) in rows {
        per_n.push(row);
        findings.append(&mut f);
    }
    Ok(MapReport {
        map,
        all_pass: findings.is_empty(),
        per_n,
        findings,
    })
}

struct Recorder {
    map: MapId,
    n: u32,
    findings: Vec<Finding>,
}

impl Recorder {
    fn push(&mut self, kind: FindingKind, input: &dyn fmt::Display, output: Option<&dyn fmt::Display>, detail: String) {
        self.findings.push(Finding {
            map: self.map,
            n: self.n,
            kind,
            input: input.to_string(),
            output: output.map(|o| o.to_string()),
            detail,
        });
    }

    fn ok(&self, kinds: &[FindingKind]) -> bool {
        !self.findings.iter().any(|f| kinds.contains(&f.kind))
    }

    fn row(self, domain_size: usize, has_parity: bool, fixed_points: Vec<String>) -> (MapRow, Vec<Finding>) {
        use FindingKind::*;
        let row = MapRow {
            n: self.n,
            domain_size,
            weight_ok: self.ok(&[WeightChanged]),
            codomain_ok: self.ok(&[OutsideCodomain, Rejected]),
            involution_or_bijection_ok: self.ok(&[NotSelfInverse, InverseMismatch, NotInjective, NotSurjective]),
            parity_ok: has_parity.then(|| self.ok(&[StatisticContract])),
            fixed_points,
        };
        (row, self.findings)
    }
}

fn check_weight(map: MapId, n: u32, config: &VerifyConfig) -> Result<(MapRow, Vec<Finding>)> {
    let mut rec = Recorder {
        map,
        n,
        findings: Vec::new(),
    };
    let ceiling = config.ceiling;
    let out = match map {
        MapId::Phi => {
            let domain: Vec<_> = enumerate_colored(FamilyId::F, n, ceiling)?
                .into_iter()
                .filter(|p| !member(FamilyId::Q, p))
                .collect();
            for lambda in &domain {
                check_phi(&mut rec, lambda);
            }
            rec.row(domain.len(), true, Vec::new())
        }
        MapId::Theta => {
            let domain = enumerate_colored(FamilyId::M, n, ceiling)?;
            for lambda in &domain {
                check_theta(&mut rec, lambda);
            }
            rec.row(domain.len(), true, Vec::new())
        }
        MapId::ToOverpartition => {
            let domain = enumerate_colored(FamilyId::Q, n, ceiling)?;
            let target: BTreeSet<String> = enumerate_overpartitions(true, n, ceiling)?
                .iter()
                .map(|o| o.to_string())
                .collect();
            let mut images = BTreeSet::new();
            for lambda in &domain {
                match to_overpartition(lambda) {
                    Err(e) => rec.push(FindingKind::Rejected, lambda, None, e.to_string()),
                    Ok(beta) => {
                        if beta.weight() != lambda.weight() {
                            rec.push(FindingKind::WeightChanged, lambda, Some(&beta), String::new());
                        }
                        if !member_overpartition(FamilyId::OverOdd, &beta) {
                            rec.push(FindingKind::OutsideCodomain, lambda, Some(&beta), "not an overpartition into odd parts".into());
                        }
                        match from_overpartition(&beta) {
                            Ok(back) if &back == lambda => {}
                            other => rec.push(FindingKind::InverseMismatch, lambda, Some(&beta), describe(other)),
                        }
                        if !images.insert(beta.to_string()) {
                            rec.push(FindingKind::NotInjective, lambda, Some(&beta), "image already hit".into());
                        }
                    }
                }
            }
            surjectivity(&mut rec, &images, &target);
            rec.row(domain.len(), false, Vec::new())
        }
        MapId::StripColors => {
            let domain = enumerate_colored(FamilyId::R, n, ceiling)?;
            let target = enumerate_colored(FamilyId::H, n, ceiling)?;
            bijection(&mut rec, &domain, &target, FamilyId::H, strip_colors, paint_colors, |_, _| true);
            rec.row(domain.len(), false, Vec::new())
        }
        MapId::PairMerge => {
            let domain: Vec<_> = enumerate_colored(FamilyId::L, n, ceiling)?
                .into_iter()
                .filter(|p| !member(FamilyId::M, p))
                .collect();
            let target = enumerate_colored(FamilyId::N, n, ceiling)?;
            bijection(&mut rec, &domain, &target, FamilyId::N, pair_merge, pair_split, |lambda, mu| {
                lambda.stats().n_blue_even_parts == mu.stats().n_even_parts
            });
            rec.row(domain.len(), true, Vec::new())
        }
        MapId::Modular4 => {
            let domain = enumerate_colored(FamilyId::N, n, ceiling)?;
            let mut fixed = Vec::new();
            for mu in &domain {
                if let Some(point) = check_modular4(&mut rec, mu) {
                    fixed.push(point);
                }
            }
            check_fixed_points(&mut rec, &fixed);
            let labels = fixed.iter().map(|p| p.to_string()).collect();
            rec.row(domain.len(), true, labels)
        }
    };
    Ok(out)
}

fn describe<T: fmt::Display>(r: Result<T>) -> String {
    match r {
        Ok(v) => format!("round trip gave {v}"),
        Err(e) => format!("inverse failed: {e}"),
    }
}

fn parity_flipped(a: usize, b: usize) -> bool {
    a % 2 != b % 2
}

fn check_phi(rec: &mut Recorder, lambda: &ColoredPartition) {
    let (mu, case) = match phi_traced(lambda) {
        Ok(x) => x,
        Err(e) => return rec.push(FindingKind::Rejected, lambda, None, e.to_string()),
    };
    if mu.weight() != lambda.weight() {
        rec.push(FindingKind::WeightChanged, lambda, Some(&mu), format!("case {case}"));
    }
    if !member(FamilyId::F, &mu) || member(FamilyId::Q, &mu) {
        rec.push(FindingKind::OutsideCodomain, lambda, Some(&mu), format!("case {case}: image not in F \\ Q"));
    }
    if !parity_flipped(lambda.stats().n_even_parts, mu.stats().n_even_parts) {
        rec.push(FindingKind::StatisticContract, lambda, Some(&mu), format!("case {case}: even-part parity kept"));
    }
    match phi_traced(&mu) {
        Ok((back, _)) if &back == lambda => {}
        Ok((back, second)) => rec.push(
            FindingKind::NotSelfInverse,
            lambda,
            Some(&mu),
            format!("case {case} then {second} returns {back}"),
        ),
        Err(e) => rec.push(FindingKind::NotSelfInverse, lambda, Some(&mu), format!("case {case}, then {e}")),
    }
}

fn check_theta(rec: &mut Recorder, lambda: &ColoredPartition) {
    let mu = match theta(lambda) {
        Ok(x) => x,
        Err(e) => return rec.push(FindingKind::Rejected, lambda, None, e.to_string()),
    };
    if mu.weight() != lambda.weight() {
        rec.push(FindingKind::WeightChanged, lambda, Some(&mu), String::new());
    }
    if !member(FamilyId::M, &mu) {
        rec.push(FindingKind::OutsideCodomain, lambda, Some(&mu), "image not in M".into());
    }
    let (a, b) = (lambda.stats(), mu.stats());
    if !parity_flipped(a.n_blue_even_parts, b.n_blue_even_parts) || !parity_flipped(a.n_blue_parts, b.n_blue_parts) {
        rec.push(FindingKind::StatisticContract, lambda, Some(&mu), "blue parity kept".into());
    }
    match theta(&mu) {
        Ok(back) if &back == lambda => {}
        other => rec.push(FindingKind::NotSelfInverse, lambda, Some(&mu), describe(other)),
    }
}

fn bijection(
    rec: &mut Recorder,
    domain: &[ColoredPartition],
    target: &[ColoredPartition],
    codomain: FamilyId,
    forward: fn(&ColoredPartition) -> Result<ColoredPartition>,
    backward: fn(&ColoredPartition) -> Result<ColoredPartition>,
    statistic: impl Fn(&ColoredPartition, &ColoredPartition) -> bool,
) {
    let mut images = BTreeSet::new();
    for lambda in domain {
        let mu = match forward(lambda) {
            Ok(x) => x,
            Err(e) => {
                rec.push(FindingKind::Rejected, lambda, None, e.to_string());
                continue;
            }
        };
        if mu.weight() != lambda.weight() {
            rec.push(FindingKind::WeightChanged, lambda, Some(&mu), String::new());
        }
        if !member(codomain, &mu) {
            rec.push(FindingKind::OutsideCodomain, lambda, Some(&mu), format!("image not in {codomain}"));
        }
        if !statistic(lambda, &mu) {
            rec.push(FindingKind::StatisticContract, lambda, Some(&mu), "statistic not carried over".into());
        }
        match backward(&mu) {
            Ok(back) if &back == lambda => {}
            other => rec.push(FindingKind::InverseMismatch, lambda, Some(&mu), describe(other)),
        }
        if !images.insert(mu.to_string()) {
            rec.push(FindingKind::NotInjective, lambda, Some(&mu), "image already hit".into());
        }
    }
    let target: BTreeSet<String> = target.iter().map(|p| p.to_string()).collect();
    surjectivity(rec, &images, &target);
}

fn surjectivity(rec: &mut Recorder, images: &BTreeSet<String>, target: &BTreeSet<String>) {
    for missed in target.difference(images) {
        rec.push(FindingKind::NotSurjective, missed, None, "no preimage".into());
    }
}

/// Returns the input when it is a fixed point.
fn check_modular4(rec: &mut Recorder, mu: &ColoredPartition) -> Option<ColoredPartition> {
    let outcome = match modular4_transform(mu) {
        Ok(x) => x,
        Err(e) => {
            rec.push(FindingKind::Rejected, mu, None, e.to_string());
            return None;
        }
    };
    let moved = match outcome {
        TransformOutcome::FixedStaircase { kind, k } => {
            if &staircase(kind, k) != mu {
                rec.push(
                    FindingKind::UnexpectedFixedPoint,
                    mu,
                    None,
                    format!("reported as {kind} staircase with k = {k}"),
                );
            }
            return Some(mu.clone());
        }
        TransformOutcome::Moved(m) => m,
    };
    if moved.weight() != mu.weight() {
        rec.push(FindingKind::WeightChanged, mu, Some(&moved), String::new());
    }
    if !member(FamilyId::N, &moved) {
        rec.push(FindingKind::OutsideCodomain, mu, Some(&moved), "image not in N".into());
    }
    if !parity_flipped(mu.stats().n_even_parts, moved.stats().n_even_parts) {
        rec.push(FindingKind::StatisticContract, mu, Some(&moved), "even-part parity kept".into());
    }
    match modular4_transform(&moved) {
        Ok(TransformOutcome::Moved(back)) if &back == mu => {}
        Ok(TransformOutcome::Moved(back)) => {
            rec.push(FindingKind::NotSelfInverse, mu, Some(&moved), format!("returns {back}"))
        }
        Ok(TransformOutcome::FixedStaircase { kind, k }) => rec.push(
            FindingKind::NotSelfInverse,
            mu,
            Some(&moved),
            format!("image is the {kind} staircase k = {k}"),
        ),
        Err(e) => rec.push(FindingKind::NotSelfInverse, mu, Some(&moved), e.to_string()),
    }
    None
}

/// The staircase of weight `n`, if `n` is triangular: `T_{2k-1} = 2k^2 - k`
/// is the C1 staircase with `k` parts and `T_{2k} = 2k^2 + k` the C3 one.
pub(crate) fn expected_fixed_point(n: u32) -> Option<ColoredPartition> {
    let t = is_triangular(n.into())? as u32;
    Some(if t % 2 == 1 {
        staircase(StaircaseKind::C1Staircase, t.div_ceil(2))
    } else if t == 0 {
        ColoredPartition::empty()
    } else {
        staircase(StaircaseKind::C3Staircase, t / 2)
    })
}

fn check_fixed_points(rec: &mut Recorder, fixed: &[ColoredPartition]) {
    let expected = expected_fixed_point(rec.n);
    for p in fixed {
        if Some(p) != expected.as_ref() {
            rec.push(FindingKind::UnexpectedFixedPoint, p, None, "not the staircase of this weight".into());
        }
    }
    if let Some(e) = expected {
        if !fixed.contains(&e) {
            rec.push(FindingKind::MissingFixedPoint, &e, None, "staircase not fixed".into());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_staircases() {
        assert_eq!(expected_fixed_point(0), Some(ColoredPartition::empty()));
        assert_eq!(expected_fixed_point(1).unwrap().to_plain_string(), "1");
        assert_eq!(expected_fixed_point(3).unwrap().to_plain_string(), "3");
        assert_eq!(expected_fixed_point(6).unwrap().to_plain_string(), "5,1");
        assert_eq!(expected_fixed_point(10).unwrap().to_plain_string(), "7,3");
        assert_eq!(expected_fixed_point(7), None);
    }

    #[test]
    fn theta_at_zero_is_trivial() {
        let r = check_map(MapId::Theta, 0, &VerifyConfig::default()).unwrap();
        assert!(r.all_pass);
        assert_eq!(r.per_n[0].domain_size, 0);
    }

    #[test]
    fn clean_maps_small_range() {
        let cfg = VerifyConfig::default();
        for m in [MapId::ToOverpartition, MapId::StripColors, MapId::Theta, MapId::PairMerge, MapId::Modular4] {
            let r = check_map(m, 14, &cfg).unwrap();
            assert!(r.all_pass, "{m}: {:?}", r.findings.first());
        }
    }

    #[test]
    fn phi_findings_are_self_inverse_gaps_only() {
        let r = check_map(MapId::Phi, 14, &VerifyConfig::default()).unwrap();
        assert!(r.findings.iter().all(|f| f.kind == FindingKind::NotSelfInverse));
        assert!(r.per_n.iter().all(|row| row.weight_ok && row.codomain_ok && row.parity_ok == Some(true)));
    }

    #[test]
    fn map_names_round_trip() {
        for m in MapId::ALL {
            assert_eq!(m.name().parse::<MapId>().unwrap(), m);
        }
        assert!("psi".parse::<MapId>().is_err());
    }
}
