mod common;

use std::collections::BTreeSet;

use common::{all_colored, all_overpartitions, oracle_member, raw_stats};
use partition_lab::{
    count, enumerate_colored, enumerate_family, enumerate_overpartitions, is_triangular, member, tally, Ceiling,
    FamilyId, Parity, StatFilter,
};

const COLORED: [FamilyId; 9] = [
    FamilyId::F,
    FamilyId::Q,
    FamilyId::G,
    FamilyId::R,
    FamilyId::H,
    FamilyId::K,
    FamilyId::L,
    FamilyId::M,
    FamilyId::N,
];

#[test]
fn enumerators_match_generic_filter() {
    for n in 0..=12 {
        let universe = all_colored(n);
        for family in COLORED {
            let expected: BTreeSet<_> = universe.iter().filter(|p| oracle_member(family, p)).cloned().collect();
            let got = enumerate_colored(family, n, Ceiling::DEFAULT).unwrap();
            let got_set: BTreeSet<_> = got.iter().cloned().collect();
            assert_eq!(got.len(), got_set.len(), "{family} n={n}: duplicates");
            assert_eq!(got_set, expected, "{family} n={n}");
            for p in &got {
                assert!(member(family, p));
                assert_eq!(p.weight(), u64::from(n));
            }
        }
    }
}

#[test]
fn predicate_matches_oracle_on_universe() {
    for n in 0..=10 {
        for p in all_colored(n) {
            for family in COLORED {
                assert_eq!(member(family, &p), oracle_member(family, &p), "{family} {p}");
            }
        }
    }
}

#[test]
fn overpartitions_match_generic_enumerator() {
    for n in 0..=12 {
        let all: BTreeSet<_> = all_overpartitions(n).into_iter().collect();
        let odd: BTreeSet<_> = all.iter().filter(|o| o.all_odd()).cloned().collect();
        let got: BTreeSet<_> = enumerate_overpartitions(false, n, Ceiling::DEFAULT).unwrap().into_iter().collect();
        let got_odd: BTreeSet<_> = enumerate_overpartitions(true, n, Ceiling::DEFAULT).unwrap().into_iter().collect();
        assert_eq!(got, all, "n={n}");
        assert_eq!(got_odd, odd, "n={n}");
    }
    assert_eq!(enumerate_family(FamilyId::Over, 3, Ceiling::DEFAULT).unwrap().len(), 8);
}

#[test]
fn h_of_five_matches_brute_force() {
    let expected = common::plain_partitions(5)
        .into_iter()
        .filter(|p| {
            let odd: Vec<_> = p.iter().filter(|v| *v % 2 == 1).collect();
            let mut d = odd.clone();
            d.dedup();
            d.len() == odd.len()
        })
        .count();
    assert_eq!(enumerate_family(FamilyId::H, 5, Ceiling::DEFAULT).unwrap().len(), expected);
}

#[test]
fn empty_partition_at_zero() {
    for family in FamilyId::ALL {
        let list = enumerate_family(family, 0, Ceiling::DEFAULT).unwrap();
        // The empty partition has no even value at all, so it is not in M.
        let expected = usize::from(family != FamilyId::M);
        assert_eq!(list.len(), expected, "{family}");
    }
    assert_eq!(count(FamilyId::F, 0, StatFilter::All, Ceiling::DEFAULT).unwrap(), 1);
    assert_eq!(count(FamilyId::F, 0, StatFilter::EvenParts(Parity::Even), Ceiling::DEFAULT).unwrap(), 1);
    assert_eq!(count(FamilyId::F, 0, StatFilter::EvenParts(Parity::Odd), Ceiling::DEFAULT).unwrap(), 0);
}

#[test]
fn stats_agree_with_raw_counts() {
    for n in 0..=14 {
        for family in COLORED {
            for p in enumerate_colored(family, n, Ceiling::DEFAULT).unwrap() {
                let s = p.stats();
                let (even, blue, blue_even, parts) = raw_stats(&p);
                assert_eq!((s.n_even_parts, s.n_blue_parts, s.n_blue_even_parts, s.n_parts), (even, blue, blue_even, parts));
                assert_eq!(s.n_parts, s.n_even_parts + s.n_odd_parts);
                assert_eq!(s.n_parts, s.n_blue_parts + s.n_green_parts);
                assert_eq!(s.sign == 1, s.n_even_parts % 2 == 0);
            }
        }
    }
}

#[test]
fn parity_filters_split_the_total() {
    let filters = |p| {
        [
            StatFilter::EvenParts(p),
            StatFilter::Parts(p),
            StatFilter::BlueParts(p),
            StatFilter::BlueEvenParts(p),
        ]
    };
    for n in 0..=14 {
        for family in FamilyId::ALL {
            let t = tally(family, n, Ceiling::DEFAULT).unwrap();
            for (e, o) in filters(Parity::Even).into_iter().zip(filters(Parity::Odd)) {
                assert_eq!(t.filtered(e) + t.filtered(o), t.total, "{family} n={n} {e}");
            }
        }
    }
}

#[test]
fn counts_follow_enumeration() {
    for n in 0..=12 {
        for family in COLORED {
            let list = enumerate_colored(family, n, Ceiling::DEFAULT).unwrap();
            let blue_even_even = list.iter().filter(|p| p.stats().n_blue_even_parts % 2 == 0).count() as i64;
            let filter = StatFilter::BlueEvenParts(Parity::Even);
            let counted = count(family, n, filter, Ceiling::DEFAULT).unwrap();
            if family == FamilyId::K {
                let signed: i64 = list
                    .iter()
                    .filter(|p| p.stats().n_blue_even_parts % 2 == 0)
                    .map(|p| i64::from(p.stats().sign))
                    .sum();
                assert_eq!(counted, signed);
            } else {
                assert_eq!(counted, blue_even_even, "{family} n={n}");
            }
        }
    }
}

#[test]
fn q_has_no_even_parts() {
    for n in 0..=20 {
        for p in enumerate_colored(FamilyId::Q, n, Ceiling::DEFAULT).unwrap() {
            assert_eq!(p.stats().n_even_parts, 0, "{p}");
        }
    }
}

#[test]
fn spec_count_examples() {
    let c = Ceiling::DEFAULT;
    let l6 = count(FamilyId::L, 6, StatFilter::BlueEvenParts(Parity::Even), c).unwrap()
        - count(FamilyId::L, 6, StatFilter::BlueEvenParts(Parity::Odd), c).unwrap();
    assert_eq!(l6, 1);
    for n in 0..=16 {
        assert_eq!(
            count(FamilyId::Over, n, StatFilter::All, c).unwrap(),
            count(FamilyId::F, n, StatFilter::All, c).unwrap()
        );
    }
}

#[test]
fn ceiling_is_enforced() {
    let low = Ceiling(5);
    assert!(enumerate_family(FamilyId::F, 6, low).is_err());
    assert!(count(FamilyId::F, 6, StatFilter::All, low).is_err());
    assert!(enumerate_family(FamilyId::F, 5, low).is_ok());
}

#[test]
fn triangular_indices() {
    for n in 0..=500u64 {
        let brute = (0..=n).find(|k| k * (k + 1) / 2 == n);
        assert_eq!(is_triangular(n), brute, "n={n}");
    }
    assert_eq!(is_triangular(6), Some(3));
    assert_eq!(is_triangular(7), None);
}

#[test]
fn spec_membership_examples() {
    use common::cp;
    assert!(member(FamilyId::F, &cp("5b,2b,1g")));
    assert!(!member(FamilyId::F, &cp("2g,1b")));
    assert!(member(FamilyId::N, &cp("12,8,5,4,3,1")));
    assert!(member(FamilyId::M, &cp("5b,4b,3b,2g,2b")));
    assert!(member(FamilyId::L, &cp("6g,6b,5b,4g,4b,3b,2g,2b,1b")));
}
