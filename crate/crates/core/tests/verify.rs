mod common;

use num_bigint::BigInt;
use partition_lab::verify::*;
use partition_lab::{Ceiling, FamilyId};

#[test]
fn identity_rows_match_brute_force_counts() {
    // T11a row values are F(n), computed here from the generic oracle.
    let r = check_identity(IdentityId::T11a, 10, Mode::Enumeration, &VerifyConfig::default()).unwrap();
    for row in &r.per_n {
        let brute = common::all_colored(row.n).iter().filter(|p| common::oracle_member(FamilyId::F, p)).count();
        assert_eq!(row.lhs, BigInt::from(brute));
        assert!(row.equal);
    }
}

#[test]
fn t17f_indicator() {
    let r = check_identity(IdentityId::T17f, 10, Mode::Enumeration, &VerifyConfig::default()).unwrap();
    for row in &r.per_n {
        let expected = i64::from(common::triangular(row.n));
        assert_eq!((row.lhs.clone(), row.rhs.clone()), (expected.into(), expected.into()));
    }
}

#[test]
fn modes_agree_where_both_defined() {
    let cfg = VerifyConfig::default();
    for id in IdentityId::ALL {
        let e = check_identity(id, 16, Mode::Enumeration, &cfg).unwrap();
        let s = check_identity(id, 16, Mode::SeriesCoefficient, &cfg).unwrap();
        for (a, b) in e.per_n.iter().zip(&s.per_n) {
            assert_eq!((&a.lhs, &a.rhs), (&b.lhs, &b.rhs), "{id} n={}", a.n);
        }
    }
}

#[test]
fn limits_are_errors() {
    let cfg = VerifyConfig::default();
    assert!(check_map(MapId::Phi, 41, &cfg).is_err());
    assert!(cross_check_gf(FamilyId::F, 41, &cfg).is_err());
    assert!(check_identity(IdentityId::T11a, 201, Mode::SeriesCoefficient, &cfg).is_err());
    let low = VerifyConfig { ceiling: Ceiling(10), truncation: 200 };
    let r = check_identity(IdentityId::T15e, 14, Mode::Enumeration, &low).unwrap();
    assert!(r.all_pass);
    assert_eq!(r.per_n.iter().filter(|row| row.mode == Mode::SeriesCoefficient).count(), 4);
}

#[test]
fn modular4_fixed_points_to_36() {
    let r = check_map(MapId::Modular4, 36, &VerifyConfig::default()).unwrap();
    assert!(r.all_pass);
    let with_fixed: Vec<u32> = r.per_n.iter().filter(|row| !row.fixed_points.is_empty()).map(|row| row.n).collect();
    assert_eq!(with_fixed, vec![0, 1, 3, 6, 10, 15, 21, 28, 36]);
    assert!(r.per_n.iter().all(|row| row.fixed_points.len() <= 1));
    assert_eq!(r.per_n[6].fixed_points, vec!["5b,1b".to_string()]);
}

#[test]
fn phi_findings_carry_inputs() {
    let r = check_map(MapId::Phi, 14, &VerifyConfig::default()).unwrap();
    assert!(!r.all_pass);
    let f = r.findings.iter().find(|f| f.input == "8b,3b,3b").unwrap();
    assert_eq!(f.kind, FindingKind::NotSelfInverse);
    assert_eq!(f.output.as_deref(), Some("4b,4b,3b,3b"));
    assert!(f.detail.contains("split-largest-even"));
}

#[test]
fn suite_json_round_trips() {
    let cfg = VerifyConfig::default();
    let suite = full_suite(6, 20, &cfg).unwrap();
    let text = serde_json::to_string(&suite).unwrap();
    let back: SuiteReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, suite);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["schema_version"], 1);
    assert!(value["identities"].is_array() && value["maps"].is_array());
    assert!(value["pass"].is_boolean());
    assert!(value["identities"][0]["per_n"][0]["lhs"].is_string());
    assert_eq!(value["identities"][0]["check"], "T11a");
}

#[test]
fn trivial_suite() {
    assert!(full_suite(0, 0, &VerifyConfig::default()).unwrap().pass);
}

#[test]
fn check_ids_round_trip() {
    let suite = full_suite(2, 2, &VerifyConfig::default()).unwrap();
    for r in suite.identities {
        assert_eq!(r.check.to_string().parse::<CheckId>().unwrap(), r.check);
    }
}
