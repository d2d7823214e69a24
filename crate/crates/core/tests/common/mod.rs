//! Brute-force oracles shared by the integration tests. They avoid the
//! library's enumerators and predicates entirely.

#![allow(dead_code)]

use std::collections::BTreeMap;

use partition_lab::{Color, ColoredPartition, FamilyId, OverPart, Overpartition};

/// Every partition of `n` as a non-increasing list.
pub fn plain_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=rest.min(max)).rev() {
            cur.push(v);
            go(rest - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every two-color partition of `n`: each part of a plain partition gets a
/// color, and duplicates of the resulting multiset are collapsed.
pub fn all_colored(n: u32) -> Vec<ColoredPartition> {
    let mut seen = std::collections::BTreeSet::new();
    for p in plain_partitions(n) {
        let k = p.len();
        for mask in 0u64..(1u64 << k) {
            let parts = p.iter().enumerate().map(|(i, &v)| {
                let c = if mask >> i & 1 == 1 { Color::Green } else { Color::Blue };
                (v, c)
            });
            seen.insert(ColoredPartition::canonicalize(parts).unwrap());
        }
    }
    seen.into_iter().collect()
}

/// Every overpartition of `n`.
pub fn all_overpartitions(n: u32) -> Vec<Overpartition> {
    let mut out = Vec::new();
    for p in plain_partitions(n) {
        let mut distinct: Vec<u32> = p.clone();
        distinct.dedup();
        for mask in 0u64..(1u64 << distinct.len()) {
            let mut parts: Vec<OverPart> = Vec::new();
            for (i, &v) in distinct.iter().enumerate() {
                let copies = p.iter().filter(|&&x| x == v).count();
                let over = mask >> i & 1 == 1;
                for j in 0..copies {
                    parts.push(OverPart { value: v, overlined: over && j == 0 });
                }
            }
            out.push(Overpartition::new(parts).unwrap());
        }
    }
    out
}

fn counts(p: &ColoredPartition) -> BTreeMap<(u32, Color), usize> {
    let mut m = BTreeMap::new();
    for part in p.parts() {
        *m.entry((part.value, part.color)).or_insert(0) += 1;
    }
    m
}

/// Family predicates written out from their definitions.
pub fn oracle_member(family: FamilyId, p: &ColoredPartition) -> bool {
    let c = counts(p);
    let any = |f: &dyn Fn(u32, Color, usize) -> bool| c.iter().any(|(&(v, col), &k)| f(v, col, k));
    let all = |f: &dyn Fn(u32, Color, usize) -> bool| c.iter().all(|(&(v, col), &k)| f(v, col, k));
    let even = |v: u32| v % 2 == 0;
    let mono = all(&|_, col, _| col == Color::Blue);
    let in_f = !any(&|v, col, _| even(v) && col == Color::Green);
    let in_g = !any(&|v, col, _| !even(v) && col == Color::Green);
    let blue_distinct_odd = all(&|v, col, k| col == Color::Green || (!even(v) && k == 1));
    let in_l = all(&|_, _, k| k == 1) && in_g;
    match family {
        FamilyId::F => in_f,
        FamilyId::Q => in_f && blue_distinct_odd,
        FamilyId::G => in_g,
        FamilyId::R => in_g && blue_distinct_odd,
        FamilyId::H => mono && all(&|v, _, k| even(v) || k == 1),
        FamilyId::K => mono && all(&|v, _, k| k == 1 && (!even(v) || v % 4 == 2)),
        FamilyId::N => mono && all(&|v, _, k| k == 1 && (!even(v) || v % 4 == 0)),
        FamilyId::L => in_l,
        FamilyId::M => {
            in_l && any(&|v, col, _| even(v) && !c.contains_key(&(v, col.flipped())))
        }
        FamilyId::Over | FamilyId::OverOdd => false,
    }
}

/// Number of even parts, Blue parts, Blue even parts and parts.
pub fn raw_stats(p: &ColoredPartition) -> (usize, usize, usize, usize) {
    let parts = p.parts();
    (
        parts.iter().filter(|x| x.value % 2 == 0).count(),
        parts.iter().filter(|x| x.color == Color::Blue).count(),
        parts.iter().filter(|x| x.color == Color::Blue && x.value % 2 == 0).count(),
        parts.len(),
    )
}

pub fn triangular(n: u32) -> bool {
    (0..=n).any(|k| k * (k + 1) / 2 == n)
}

pub fn sign(n: u32) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn cp(spec: &str) -> ColoredPartition {
    spec.parse().unwrap()
}
