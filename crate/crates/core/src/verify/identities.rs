use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::ids::{CheckId, GfDisplayId, IdentityId, Mode, RelationId};
use super::{IdentityReport, IdentityRow, VerifyConfig};
use crate::error::{Error, Result};
use crate::family::{is_triangular, tally, Ceiling, FamilyId, Tally};
use crate::qseries::{family_gf, series_from_factors, staircase_series, GfId, PochhammerFactor, TruncatedSeries};

/// Plain integer quantities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Basic {
    Total(FamilyId),
    /// Signed count of `K`.
    K,
    Triangular,
    /// `(-1)^n` at triangular `n`, else 0.
    SignedTriangular,
}

/// Parity classes of a statistic; evaluated doubled so that series-side
/// values `(total ± difference) / 2` stay integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Stat {
    /// `F0`, `F1`: even-part count even / odd.
    FEvenParts(usize),
    /// `F2`, `F3`: part count even / odd.
    FParts(usize),
    /// `G0`, `G1`: blue even part count.
    GBlueEven(usize),
    /// `G2`, `G3`: blue part count.
    GBlue(usize),
    /// `G4`, `G5`: part count.
    GParts(usize),
    /// `L0`, `L1`: blue even part count.
    LBlueEven(usize),
    /// `L2`, `L3`: blue part count.
    LBlue(usize),
}

trait Source {
    fn basic(&self, q: Basic, n: u32) -> BigInt;
    fn stat2(&self, s: Stat, n: u32) -> BigInt;
}

fn alt(n: u32) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

struct EnumSource {
    tallies: HashMap<FamilyId, Vec<Tally>>,
}

impl EnumSource {
    fn build(families: &[FamilyId], n_max: u32, ceiling: Ceiling) -> Result<Self> {
        let jobs: Vec<(FamilyId, u32)> = families
            .iter()
            .flat_map(|&f| (0..=n_max).map(move |n| (f, n)))
            .collect();
        let results = jobs
            .par_iter()
            .map(|&(f, n)| tally(f, n, ceiling).map(|t| (f, n, t)))
            .collect::<Result<Vec<_>>>()?;
        let mut tallies: HashMap<FamilyId, Vec<Tally>> = HashMap::new();
        for (f, n, t) in results {
            let v = tallies
                .entry(f)
                .or_insert_with(|| vec![Tally::default(); n_max as usize + 1]);
            v[n as usize] = t;
        }
        Ok(EnumSource { tallies })
    }

    fn get(&self, f: FamilyId, n: u32) -> &Tally {
        &self.tallies[&f][n as usize]
    }
}

impl Source for EnumSource {
    fn basic(&self, q: Basic, n: u32) -> BigInt {
        match q {
            Basic::Total(f) => self.get(f, n).total.into(),
            Basic::K => self.get(FamilyId::K, n).signed.into(),
            Basic::Triangular => i64::from(is_triangular(n.into()).is_some()).into(),
            Basic::SignedTriangular => {
                (alt(n) * i64::from(is_triangular(n.into()).is_some())).into()
            }
        }
    }

    fn stat2(&self, s: Stat, n: u32) -> BigInt {
        let v = match s {
            Stat::FEvenParts(i) => self.get(FamilyId::F, n).even_parts[i],
            Stat::FParts(i) => self.get(FamilyId::F, n).parts[i],
            Stat::GBlueEven(i) => self.get(FamilyId::G, n).blue_even_parts[i],
            Stat::GBlue(i) => self.get(FamilyId::G, n).blue_parts[i],
            Stat::GParts(i) => self.get(FamilyId::G, n).parts[i],
            Stat::LBlueEven(i) => self.get(FamilyId::L, n).blue_even_parts[i],
            Stat::LBlue(i) => self.get(FamilyId::L, n).blue_parts[i],
        };
        BigInt::from(2 * v)
    }
}

struct SeriesSource {
    gfs: HashMap<GfId, TruncatedSeries>,
    staircase: TruncatedSeries,
    signed_staircase: TruncatedSeries,
}

impl SeriesSource {
    fn build(trunc: usize) -> Self {
        let gfs = GfId::ALL
            .par_iter()
            .map(|&g| (g, family_gf(g, trunc)))
            .collect();
        SeriesSource {
            gfs,
            staircase: staircase_series(false, trunc),
            signed_staircase: staircase_series(true, trunc),
        }
    }

    fn c(&self, g: GfId, n: u32) -> &BigInt {
        self.gfs[&g].coeff(n as usize)
    }

    /// `total ± difference` for parity index 0 / 1.
    fn split(&self, total: GfId, diff: GfId, i: usize, n: u32) -> BigInt {
        if i == 0 {
            self.c(total, n) + self.c(diff, n)
        } else {
            self.c(total, n) - self.c(diff, n)
        }
    }
}

impl Source for SeriesSource {
    fn basic(&self, q: Basic, n: u32) -> BigInt {
        let g = match q {
            Basic::Total(FamilyId::F) => GfId::F,
            Basic::Total(FamilyId::G) => GfId::G,
            Basic::Total(FamilyId::H) => GfId::H,
            Basic::Total(FamilyId::L) => GfId::L,
            Basic::Total(FamilyId::Over) => GfId::Over,
            Basic::Total(FamilyId::OverOdd) => GfId::OverOdd,
            Basic::K => GfId::K,
            Basic::Triangular => return self.staircase.coeff(n as usize).clone(),
            Basic::SignedTriangular => return self.signed_staircase.coeff(n as usize).clone(),
            Basic::Total(f) => unreachable!("no generating function for {f}"),
        };
        self.c(g, n).clone()
    }

    fn stat2(&self, s: Stat, n: u32) -> BigInt {
        match s {
            Stat::FEvenParts(i) => self.split(GfId::F, GfId::F0MinusF1, i, n),
            Stat::FParts(i) => self.split(GfId::F, GfId::F2MinusF3, i, n),
            Stat::GBlueEven(i) => self.split(GfId::G, GfId::G0MinusG1, i, n),
            Stat::GBlue(i) => self.split(GfId::G, GfId::G2MinusG3, i, n),
            Stat::GParts(i) => self.split(GfId::G, GfId::G4MinusG5, i, n),
            Stat::LBlueEven(i) => self.split(GfId::L, GfId::L0MinusL1, i, n),
            Stat::LBlue(i) => self.split(GfId::L, GfId::L2MinusL3, i, n),
        }
    }
}

fn families_for(id: IdentityId) -> &'static [FamilyId] {
    use IdentityId::*;
    match id {
        T11a | T11b | T11c | T11d | T11e => &[FamilyId::F, FamilyId::Over, FamilyId::OverOdd],
        T15a | T15b | T15c | T15d => &[FamilyId::G, FamilyId::H],
        T15e | T15f => &[FamilyId::G, FamilyId::K],
        T17f | T17g => &[FamilyId::L],
    }
}

/// Both sides of `id` at `n`, doubled.
fn sides2(id: IdentityId, src: &dyn Source, n: u32) -> (BigInt, BigInt) {
    use IdentityId::*;
    let b = |q| src.basic(q, n);
    let s = |q| src.stat2(q, n);
    let sign = BigInt::from(alt(n));
    let over = || b(Basic::Total(FamilyId::Over));
    let over_odd = || b(Basic::Total(FamilyId::OverOdd));
    let g = || b(Basic::Total(FamilyId::G));
    let h = || b(Basic::Total(FamilyId::H));
    match id {
        T11a => (2 * b(Basic::Total(FamilyId::F)), 2 * over()),
        T11b => (s(Stat::FEvenParts(0)), over() + over_odd()),
        T11c => (s(Stat::FEvenParts(1)), over() - over_odd()),
        T11d => (s(Stat::FParts(0)), over() + &sign * over_odd()),
        T11e => (s(Stat::FParts(1)), over() - &sign * over_odd()),
        T15a => (s(Stat::GBlueEven(0)), g() + h()),
        T15b => (s(Stat::GBlueEven(1)), g() - h()),
        T15c => (s(Stat::GBlue(0)), g() + &sign * h()),
        T15d => (s(Stat::GBlue(1)), g() - &sign * h()),
        T15e => (s(Stat::GParts(0)), g() + &sign * b(Basic::K)),
        T15f => (s(Stat::GParts(1)), g() - &sign * b(Basic::K)),
        T17f => (
            s(Stat::LBlueEven(0)) - s(Stat::LBlueEven(1)),
            2 * b(Basic::Triangular),
        ),
        T17g => (
            s(Stat::LBlue(0)) - s(Stat::LBlue(1)),
            2 * b(Basic::SignedTriangular),
        ),
    }
}

fn row_from_doubled(n: u32, lhs2: BigInt, rhs2: BigInt, mode: Mode) -> IdentityRow {
    let two = BigInt::from(2);
    let equal = lhs2 == rhs2 && (&lhs2 % &two).is_zero();
    IdentityRow {
        n,
        lhs: lhs2 / &two,
        rhs: rhs2 / &two,
        equal,
        mode,
    }
}

fn row(n: u32, lhs: BigInt, rhs: BigInt, mode: Mode) -> IdentityRow {
    IdentityRow {
        n,
        equal: lhs == rhs,
        lhs,
        rhs,
        mode,
    }
}

fn check_truncation(n_max: u32, config: &VerifyConfig) -> Result<()> {
    if n_max as usize > config.truncation {
        return Err(Error::TruncationExceeded {
            n: n_max,
            truncation: config.truncation,
        });
    }
    Ok(())
}

/// Checks one identity for `0 <= n <= n_max`.
///
/// In enumeration mode, weights above the enumeration ceiling fall back to
/// series coefficients; each row records the mode it was evaluated in.
pub fn check_identity(id: IdentityId, n_max: u32, mode: Mode, config: &VerifyConfig) -> Result<IdentityReport> {
    let enum_max = match mode {
        Mode::Enumeration => Some(n_max.min(config.ceiling.0)),
        Mode::SeriesCoefficient => None,
    };
    let needs_series = enum_max.map_or(true, |m| m < n_max);
    if needs_series {
        check_truncation(n_max, config)?;
    }
    let enum_src = enum_max
        .map(|m| EnumSource::build(families_for(id), m, config.ceiling))
        .transpose()?;
    let series_src = needs_series.then(|| SeriesSource::build(n_max as usize));

    let per_n = (0..=n_max)
        .map(|n| {
            let (src, row_mode): (&dyn Source, Mode) = match (&enum_src, enum_max) {
                (Some(e), Some(m)) if n <= m => (e, Mode::Enumeration),
                _ => (series_src.as_ref().expect("series source built"), Mode::SeriesCoefficient),
            };
            let (l, r) = sides2(id, src, n);
            row_from_doubled(n, l, r, row_mode)
        })
        .collect();
    Ok(IdentityReport::new(CheckId::Identity(id), mode, per_n))
}

fn gf_for_family(family: FamilyId) -> Result<GfId> {
    Ok(match family {
        FamilyId::F => GfId::F,
        FamilyId::G => GfId::G,
        FamilyId::H => GfId::H,
        FamilyId::K => GfId::K,
        FamilyId::L => GfId::L,
        FamilyId::Over => GfId::Over,
        FamilyId::OverOdd => GfId::OverOdd,
        other => {
            return Err(Error::Unsupported(format!(
                "family {other} has no generating function"
            )))
        }
    })
}

/// Generating-function coefficients against exhaustive (signed, for `K`)
/// counts for `0 <= n <= n_max`.
pub fn cross_check_gf(family: FamilyId, n_max: u32, config: &VerifyConfig) -> Result<IdentityReport> {
    let gf = gf_for_family(family)?;
    config.ceiling.check(n_max)?;
    check_truncation(n_max, config)?;
    let series = family_gf(gf, n_max as usize);
    let src = EnumSource::build(&[family], n_max, config.ceiling)?;
    let per_n = (0..=n_max)
        .map(|n| {
            let t = src.get(family, n);
            let count = if family.is_signed() { t.signed } else { t.total };
            row(n, series.coeff(n as usize).clone(), count.into(), Mode::Enumeration)
        })
        .collect();
    Ok(IdentityReport::new(CheckId::GfVsCount(family), Mode::Enumeration, per_n))
}

fn display_sides(id: GfDisplayId, trunc: usize) -> (TruncatedSeries, TruncatedSeries) {
    use GfDisplayId::*;
    use PochhammerFactor as P;
    let gf = |g| family_gf(g, trunc);
    let prod = |fs: &[PochhammerFactor]| series_from_factors(fs, trunc);
    match id {
        OverEqualsF => (gf(GfId::Over), gf(GfId::F)),
        F0MinusF1EqualsOverOdd => (gf(GfId::F0MinusF1), gf(GfId::OverOdd)),
        F2MinusF3EqualsAltOverOdd => (gf(GfId::F2MinusF3), gf(GfId::OverOdd).alternate()),
        G0MinusG1EqualsH => (gf(GfId::G0MinusG1), gf(GfId::H)),
        G2MinusG3EqualsAltH => (gf(GfId::G2MinusG3), gf(GfId::H).alternate()),
        G4MinusG5EqualsQuotient => (gf(GfId::G4MinusG5), prod(&[P::minus(1, 2), P::plus(2, 2).inv()])),
        QuotientEqualsAltK => (prod(&[P::minus(1, 2), P::plus(2, 2).inv()]), gf(GfId::K).alternate()),
        KProductForms => (gf(GfId::K), prod(&[P::plus(1, 2), P::plus(2, 2).inv()])),
        L0MinusL1Quotient => (gf(GfId::L0MinusL1), prod(&[P::minus(2, 2), P::minus(1, 2).inv()])),
        L0MinusL1EqualsStaircase => (
            prod(&[P::minus(2, 2), P::minus(1, 2).inv()]),
            staircase_series(false, trunc),
        ),
        L2MinusL3EqualsSignedStaircase => (gf(GfId::L2MinusL3), staircase_series(true, trunc)),
    }
}

/// Coefficientwise check of one product identity up to `n_max`.
pub fn check_gf_display(id: GfDisplayId, n_max: u32, config: &VerifyConfig) -> Result<IdentityReport> {
    check_truncation(n_max, config)?;
    let (lhs, rhs) = display_sides(id, n_max as usize);
    let per_n = (0..=n_max)
        .map(|n| {
            row(
                n,
                lhs.coeff(n as usize).clone(),
                rhs.coeff(n as usize).clone(),
                Mode::SeriesCoefficient,
            )
        })
        .collect();
    Ok(IdentityReport::new(CheckId::GfDisplay(id), Mode::SeriesCoefficient, per_n))
}

/// Checks a parity relation between enumerated statistics.
pub fn check_relation(rel: RelationId, n_max: u32, config: &VerifyConfig) -> Result<IdentityReport> {
    let family = match rel {
        RelationId::FPartsFromEvenParts => FamilyId::F,
        RelationId::GBluePartsFromBlueEven => FamilyId::G,
        RelationId::LBluePartsFromBlueEven => FamilyId::L,
        RelationId::ParitySplit(f) => f,
    };
    let src = EnumSource::build(&[family], n_max, config.ceiling)?;
    let per_n = (0..=n_max)
        .map(|n| {
            let t = src.get(family, n);
            let diff = |pair: [i64; 2]| pair[0] - pair[1];
            let (lhs, rhs) = match rel {
                RelationId::FPartsFromEvenParts => (diff(t.parts), alt(n) * diff(t.even_parts)),
                RelationId::GBluePartsFromBlueEven | RelationId::LBluePartsFromBlueEven => {
                    (diff(t.blue_parts), alt(n) * diff(t.blue_even_parts))
                }
                RelationId::ParitySplit(_) => {
                    let sums = [t.even_parts, t.parts, t.blue_parts, t.blue_even_parts].map(|p| p[0] + p[1]);
                    let lhs = sums.into_iter().find(|&s| s != t.total).unwrap_or(t.total);
                    (lhs, t.total)
                }
            };
            row(n, lhs.into(), rhs.into(), Mode::Enumeration)
        })
        .collect();
    Ok(IdentityReport::new(CheckId::Relation(rel), Mode::Enumeration, per_n))
}
