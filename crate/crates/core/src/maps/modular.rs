//! 4-modular diagrams of partitions into distinct parts whose even parts are
//! multiples of 4, and the sign-reversing transformation on them.
//!
//! A part `4a + 3` is drawn as a row above the main diagonal (`a` squares and
//! a triangle labelled 3), a part `4b + 1` as a column below it (`b` squares
//! and a triangle labelled 1). Parts of each kind sit on consecutive diagonal
//! cells ending at the same last cell, so the smallest `1`-part and the
//! smallest `3`-part share a diagonal cell. Even parts are kept aside.
//!
//! Gluing each pair of triangles sharing a diagonal cell into a square leaves
//! `k = ||C1| - |C3||` lone triangles at the start of the diagonal, followed
//! by a region made only of squares. Read along rows (when `|C3| <= |C1|`) or
//! columns (otherwise), that region is a list of non-increasing line lengths.
//! The transformation compares the longest line against the largest even part
//! and moves one into the place of the other.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::outside;
use crate::error::{Error, Result};
use crate::family::{member, FamilyId};
use crate::partition::ColoredPartition;

/// The three components of a 4-modular diagram, each strictly decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModularDiagram {
    pub lambda_e: Vec<u32>,
    pub lambda_c1: Vec<u32>,
    pub lambda_c3: Vec<u32>,
}

fn strictly_decreasing(xs: &[u32]) -> bool {
    xs.windows(2).all(|w| w[0] > w[1])
}

impl ModularDiagram {
    pub fn new(lambda_e: Vec<u32>, lambda_c1: Vec<u32>, lambda_c3: Vec<u32>) -> Result<Self> {
        let d = ModularDiagram {
            lambda_e,
            lambda_c1,
            lambda_c3,
        };
        let ok = strictly_decreasing(&d.lambda_e)
            && strictly_decreasing(&d.lambda_c1)
            && strictly_decreasing(&d.lambda_c3)
            && d.lambda_e.iter().all(|&v| v > 0 && v % 4 == 0)
            && d.lambda_c1.iter().all(|&v| v % 4 == 1)
            && d.lambda_c3.iter().all(|&v| v % 4 == 3);
        if !ok {
            return Err(outside("ModularDiagram", &d, "components out of shape"));
        }
        Ok(d)
    }

    pub fn weight(&self) -> u64 {
        self.lambda_e
            .iter()
            .chain(&self.lambda_c1)
            .chain(&self.lambda_c3)
            .map(|&v| u64::from(v))
            .sum()
    }

    /// Number of cells on the main diagonal.
    pub fn diagonal_len(&self) -> usize {
        self.lambda_c1.len().max(self.lambda_c3.len())
    }

    /// Squares below the diagonal in each `1`-column, largest part first.
    pub fn column_squares(&self) -> Vec<u32> {
        self.lambda_c1.iter().map(|v| (v - 1) / 4).collect()
    }

    /// Squares right of the diagonal in each `3`-row, largest part first.
    pub fn row_squares(&self) -> Vec<u32> {
        self.lambda_c3.iter().map(|v| (v - 3) / 4).collect()
    }
}

fn fmt_parts(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

impl fmt::Display for ModularDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("e=")?;
        fmt_parts(f, &self.lambda_e)?;
        f.write_str(" c1=")?;
        fmt_parts(f, &self.lambda_c1)?;
        f.write_str(" c3=")?;
        fmt_parts(f, &self.lambda_c3)
    }
}

pub fn to_modular_diagram(mu: &ColoredPartition) -> Result<ModularDiagram> {
    if !member(FamilyId::N, mu) {
        return Err(outside("to_modular_diagram", mu, "not in N"));
    }
    let mut d = ModularDiagram::default();
    for v in mu.values() {
        match v % 4 {
            0 => d.lambda_e.push(v),
            1 => d.lambda_c1.push(v),
            _ => d.lambda_c3.push(v),
        }
    }
    Ok(d)
}

pub fn from_modular_diagram(d: &ModularDiagram) -> Result<ColoredPartition> {
    let d = ModularDiagram::new(d.lambda_e.clone(), d.lambda_c1.clone(), d.lambda_c3.clone())?;
    ColoredPartition::monochrome(
        d.lambda_e
            .iter()
            .chain(&d.lambda_c1)
            .chain(&d.lambda_c3)
            .copied(),
    )
}

/// Direction in which the all-square region is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// `|C3| <= |C1|`: lone triangles are `1`s, lines are rows.
    Rows,
    /// `|C3| > |C1|`: lone triangles are `3`s, lines are columns.
    Columns,
}

/// A diagram after gluing adjoined triangles: `triangles` lone triangles at
/// the head of the diagonal, then all-square lines of non-increasing length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SquareFrame {
    pub orientation: Orientation,
    pub triangles: usize,
    pub lines: Vec<u32>,
}

impl SquareFrame {
    /// Glues adjoined triangles and measures the square lines.
    pub fn of(d: &ModularDiagram) -> SquareFrame {
        let (orientation, major, minor) = if d.lambda_c3.len() > d.lambda_c1.len() {
            (Orientation::Columns, d.row_squares(), d.column_squares())
        } else {
            (Orientation::Rows, d.column_squares(), d.row_squares())
        };
        let (triangles, lines) = measure_lines(&major, &minor);
        SquareFrame {
            orientation,
            triangles,
            lines,
        }
    }

    /// Draws the diagonal back in and reads off the odd components.
    pub fn to_diagram(&self, lambda_e: Vec<u32>) -> ModularDiagram {
        let (major, minor) = read_lines(self.triangles, &self.lines);
        let ones = |b: &Vec<u32>| b.iter().map(|x| 4 * x + 1).collect::<Vec<_>>();
        let threes = |a: &Vec<u32>| a.iter().map(|x| 4 * x + 3).collect::<Vec<_>>();
        let (lambda_c1, lambda_c3) = match self.orientation {
            Orientation::Rows => (ones(&major), threes(&minor)),
            Orientation::Columns => (ones(&minor), threes(&major)),
        };
        ModularDiagram {
            lambda_e,
            lambda_c1,
            lambda_c3,
        }
    }

    /// Total value of the lone triangles and the squares beside them.
    pub fn staircase_weight(&self) -> u64 {
        let k = self.triangles as u64;
        match self.orientation {
            Orientation::Rows => 2 * k * k - k,
            Orientation::Columns => 2 * k * k + k,
        }
    }
}

/// `major` holds the square counts of the kind occupying every diagonal cell
/// (`r` entries), `minor` those of the other kind (`s <= r` entries), both
/// decreasing. Line `t` (1-based) sits at position `k + t` with `k = r - s`.
fn measure_lines(major: &[u32], minor: &[u32]) -> (usize, Vec<u32>) {
    let r = major.len();
    let s = minor.len();
    debug_assert!(s <= r);
    let k = r - s;
    let mut lines: Vec<u32> = minor
        .iter()
        .enumerate()
        .map(|(t, a)| (k + t + 1) as u32 + a)
        .collect();
    // Lines past the diagonal only cross major lines long enough to reach them.
    let mut pos = r + 1;
    loop {
        let len = major
            .iter()
            .enumerate()
            .filter(|(p, b)| p + 1 + **b as usize >= pos)
            .count();
        if len == 0 {
            break;
        }
        lines.push(len as u32);
        pos += 1;
    }
    (k, lines)
}

/// Inverse of [`measure_lines`].
fn read_lines(k: usize, lines: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let s = lines
        .iter()
        .enumerate()
        .take_while(|(t, &len)| len as usize >= k + t + 1)
        .count();
    let minor = lines[..s]
        .iter()
        .enumerate()
        .map(|(t, &len)| len - (k + t + 1) as u32)
        .collect();
    let r = k + s;
    let major = (1..=r)
        .map(|p| {
            let from_triangles = k.saturating_sub(p);
            let from_lines = lines
                .iter()
                .enumerate()
                .filter(|(t, &len)| k + t + 1 > p && len as usize >= p)
                .count();
            (from_triangles + from_lines) as u32
        })
        .collect();
    (major, minor)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StaircaseKind {
    /// `(4k-3, ..., 9, 5, 1)`, weight `2k^2 - k`.
    C1Staircase,
    /// `(4k-1, ..., 11, 7, 3)`, weight `2k^2 + k`.
    C3Staircase,
}

impl fmt::Display for StaircaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StaircaseKind::C1Staircase => "C1",
            StaircaseKind::C3Staircase => "C3",
        })
    }
}

/// The staircase partition of the given kind with `k` parts.
pub fn staircase(kind: StaircaseKind, k: u32) -> ColoredPartition {
    let offset = match kind {
        StaircaseKind::C1Staircase => 1,
        StaircaseKind::C3Staircase => 3,
    };
    ColoredPartition::monochrome((0..k).map(|i| 4 * i + offset)).expect("positive parts")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TransformOutcome {
    Moved(ColoredPartition),
    /// No square line and no even part. `k = 0` is the empty partition.
    FixedStaircase { kind: StaircaseKind, k: u32 },
}

/// The sign-reversing transformation on `N`.
///
/// After gluing, let `l` be the longest square line (0 if none) and `m` the
/// largest even part (0 if none). If `4l > m` the line is removed and `4l`
/// joins the even parts; otherwise `m` is inserted as a new longest line
/// (directly beside the current longest, or after the lone triangles when
/// there is none). Then the diagonal is redrawn and the parts read off.
pub fn modular4_transform(mu: &ColoredPartition) -> Result<TransformOutcome> {
    let diagram = to_modular_diagram(mu).map_err(|e| match e {
        Error::OutsideDomain { input, reason, .. } => Error::OutsideDomain {
            map: "modular4_transform",
            input,
            reason,
        },
        other => other,
    })?;
    let mut frame = SquareFrame::of(&diagram);
    let mut evens = diagram.lambda_e;
    let longest = frame.lines.first().copied().unwrap_or(0);
    let largest_even = evens.first().copied().unwrap_or(0);

    if longest == 0 && largest_even == 0 {
        let kind = match frame.orientation {
            Orientation::Rows => StaircaseKind::C1Staircase,
            Orientation::Columns => StaircaseKind::C3Staircase,
        };
        return Ok(TransformOutcome::FixedStaircase {
            kind,
            k: frame.triangles as u32,
        });
    }

    if 4 * longest > largest_even {
        frame.lines.remove(0);
        evens.insert(0, 4 * longest);
    } else {
        evens.remove(0);
        frame.lines.insert(0, largest_even / 4);
    }
    let moved = frame.to_diagram(evens);
    Ok(TransformOutcome::Moved(from_modular_diagram(&moved)?))
}
