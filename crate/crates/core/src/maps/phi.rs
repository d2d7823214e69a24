use std::fmt;

use serde::{Deserialize, Serialize};

use super::{outside, remove_copies};
use crate::error::Result;
use crate::family::{member, FamilyId};
use crate::partition::{Color, ColoredPartition, Part};

/// Which branch of the case analysis produced a `phi` image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PhiCase {
    /// No even part: merge the largest repeated Blue odd `a` into `2a`.
    MergeOddNoEven,
    /// Twice the largest repeated Blue odd exceeds the largest even: merge it.
    MergeOddAboveEven,
    /// Largest even not repeated: split it into two halves.
    SplitLargestEven,
    /// Largest even `c = 4k` not repeated, with a repeated even above `c/2`: merge that even.
    MergeEvenAboveHalf,
    /// Largest even repeated: merge two copies.
    MergeLargestEven,
}

impl fmt::Display for PhiCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PhiCase::MergeOddNoEven => "merge-odd-no-even",
            PhiCase::MergeOddAboveEven => "merge-odd-above-even",
            PhiCase::SplitLargestEven => "split-largest-even",
            PhiCase::MergeEvenAboveHalf => "merge-even-above-half",
            PhiCase::MergeLargestEven => "merge-largest-even",
        })
    }
}

fn multiplicity(parts: &[Part], value: u32) -> usize {
    parts.iter().filter(|p| p.value == value && p.color == Color::Blue).count()
}

/// Involution candidate on `F \ Q` that flips the parity of the number of
/// even parts. See [`phi_traced`] for the branch taken.
pub fn phi(lambda: &ColoredPartition) -> Result<ColoredPartition> {
    phi_traced(lambda).map(|(mu, _)| mu)
}

/// Applies the merge/split case analysis and reports which branch fired.
///
/// Let `c` be the largest even part and `d` the largest Blue odd value of
/// multiplicity at least two:
///
/// 1. no even part: merge two `d` into `2d`;
/// 2. with `d`: if `2d > c` merge two `d`; else if `c` is repeated merge two
///    `c`; else split or merge-above-half on `c`;
/// 3. without `d`: if `c` is repeated merge two `c`; else split or
///    merge-above-half on `c`.
///
/// "Split or merge-above-half": `c ≡ 2 (mod 4)` is split into two Blue
/// halves; for `c ≡ 0 (mod 4)`, if some even value in `(c/2, c)` is repeated
/// the largest such is merged, otherwise `c` is split.
///
/// The branches are applied exactly as listed, without repair. They do not
/// always compose to the identity; the verifier records every such input.
pub fn phi_traced(lambda: &ColoredPartition) -> Result<(ColoredPartition, PhiCase)> {
    if !member(FamilyId::F, lambda) {
        return Err(outside("phi", lambda, "not in F (green even part)"));
    }
    if member(FamilyId::Q, lambda) {
        return Err(outside("phi", lambda, "in Q (blue parts distinct odd)"));
    }
    let parts = lambda.parts();
    let largest_even = parts.iter().filter(|p| p.is_even()).map(|p| p.value).max();
    let repeated_odd = parts
        .iter()
        .filter(|p| !p.is_even() && p.color == Color::Blue)
        .map(|p| p.value)
        .filter(|&v| multiplicity(parts, v) >= 2)
        .max();

    let mut out = parts.to_vec();
    let merge = |out: &mut Vec<Part>, v: u32| {
        remove_copies(out, v, Color::Blue, 2);
        out.push(Part::blue(2 * v));
    };

    let case = match (largest_even, repeated_odd) {
        (None, Some(a)) => {
            merge(&mut out, a);
            PhiCase::MergeOddNoEven
        }
        (None, None) => unreachable!("F \\ Q member without even part has a repeated blue odd"),
        (Some(c), Some(d)) if 2 * d > c => {
            merge(&mut out, d);
            PhiCase::MergeOddAboveEven
        }
        (Some(c), _) if multiplicity(parts, c) >= 2 => {
            merge(&mut out, c);
            PhiCase::MergeLargestEven
        }
        (Some(c), _) => {
            let repeated_above_half = (c % 4 == 0)
                .then(|| {
                    parts
                        .iter()
                        .filter(|p| p.is_even() && p.value > c / 2 && p.value != c)
                        .map(|p| p.value)
                        .filter(|&v| multiplicity(parts, v) >= 2)
                        .max()
                })
                .flatten();
            match repeated_above_half {
                Some(e) => {
                    merge(&mut out, e);
                    PhiCase::MergeEvenAboveHalf
                }
                None => {
                    remove_copies(&mut out, c, Color::Blue, 1);
                    out.push(Part::blue(c / 2));
                    out.push(Part::blue(c / 2));
                    PhiCase::SplitLargestEven
                }
            }
        }
    };
    Ok((ColoredPartition::from_parts(out), case))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(s: &str) -> ColoredPartition {
        s.parse().unwrap()
    }

    const TABLE: [(&str, &str); 4] = [
        ("8b,1b", "4b,4b,1b"),
        ("5b,2b,1b,1g", "5b,1b,1b,1b,1g"),
        ("8b,8b,3b,3b,3b,1b,1b,1g", "16b,3b,3b,3b,1b,1b,1g"),
        ("7g,6b,4b,4b,3b,1b,1b", "7g,4b,4b,3b,3b,3b,1b,1b"),
    ];

    #[test]
    fn worked_table_both_directions() {
        for (left, right) in TABLE {
            assert_eq!(phi(&cp(left)).unwrap(), cp(right), "{left}");
            assert_eq!(phi(&cp(right)).unwrap(), cp(left), "{right}");
        }
    }

    #[test]
    fn rejects_q_and_non_f() {
        assert!(phi(&cp("3b,1g,1g")).is_err());
        assert!(phi(&ColoredPartition::empty()).is_err());
        assert!(phi(&cp("2g,1b,1b")).is_err());
    }

    #[test]
    fn case_labels() {
        assert_eq!(phi_traced(&cp("3b,3b")).unwrap().1, PhiCase::MergeOddNoEven);
        assert_eq!(phi_traced(&cp("4b,3b,3b")).unwrap().1, PhiCase::MergeOddAboveEven);
        assert_eq!(phi_traced(&cp("6b")).unwrap(), (cp("3b,3b"), PhiCase::SplitLargestEven));
        assert_eq!(
            phi_traced(&cp("12b,8b,8b")).unwrap(),
            (cp("16b,12b"), PhiCase::MergeEvenAboveHalf)
        );
        assert_eq!(phi_traced(&cp("4b,4b")).unwrap().1, PhiCase::MergeLargestEven);
    }

    #[test]
    fn known_non_involutive_input() {
        // Splitting 8 leaves 4,4 below 2*3, so the second application merges the 3s.
        let start = cp("8b,3b,3b");
        let once = phi(&start).unwrap();
        assert_eq!(once, cp("4b,4b,3b,3b"));
        assert_eq!(phi(&once).unwrap(), cp("6b,4b,4b"));
    }
}
