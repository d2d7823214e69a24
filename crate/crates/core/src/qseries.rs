//! Exact truncated power series in `q` and q-Pochhammer products.
//!
//! Coefficients are arbitrary-precision integers. Infinite products
//! `(±q^s; q^t)_∞^{±1}` are expanded factor by factor directly into the
//! running series, so denominators never need an explicit inverse.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::is_triangular;

/// Default truncation degree for generating-function work.
pub const DEFAULT_TRUNCATION: usize = 200;

/// Power series `sum c_i q^i` known exactly for `i <= trunc`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(trunc: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from leading coefficients, padding with zeros or
    /// dropping terms beyond `trunc`.
    pub fn from_coeffs<I, T>(coeffs: I, trunc: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(trunc);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn same_trunc(&self, other: &Self) -> Result<()> {
        if self.trunc() != other.trunc() {
            return Err(Error::TruncationMismatch(self.trunc(), other.trunc()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_trunc(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_trunc(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cauchy product, truncated.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_trunc(other)?;
        let n = self.trunc();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NotInvertible(c0.to_string()));
        }
        let n = self.trunc();
        let mut inv = Self::zero(n);
        inv.coeffs[0] = c0.clone();
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &inv.coeffs[k - j];
                }
            }
            // c0 is its own inverse.
            inv.coeffs[k] = -(acc * c0);
        }
        Ok(inv)
    }

    /// `f(q) -> f(-q)`, i.e. coefficient `i` multiplied by `(-1)^i`.
    pub fn alternate(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Halves every coefficient, failing if any is odd.
    pub fn halve(&self) -> Option<Self> {
        let two = BigInt::from(2);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !(c % &two).is_zero() {
                return None;
            }
            coeffs.push(c / &two);
        }
        Some(TruncatedSeries { coeffs })
    }

    /// In place: multiply by `(1 + sign q^m)`.
    fn mul_binomial(&mut self, sign: Sign, m: usize) {
        let n = self.trunc();
        if m > n {
            return;
        }
        for i in (m..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            match sign {
                Sign::Plus => hi[0] += &lo[i - m],
                Sign::Minus => hi[0] -= &lo[i - m],
            }
        }
    }

    /// In place: divide by `(1 + sign q^m)`.
    fn div_binomial(&mut self, sign: Sign, m: usize) {
        let n = self.trunc();
        if m > n {
            return;
        }
        for i in m..=n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            match sign {
                Sign::Plus => hi[0] -= &lo[i - m],
                Sign::Minus => hi[0] += &lo[i - m],
            }
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.trunc() + 1)
    }
}

/// The sign inside each binomial `(1 ± q^m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// `(∓q^s; q^t)_∞^{±1}`: the product over `m = s, s+t, s+2t, …` of
/// `(1 ± q^m)`, in the numerator or the denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PochhammerFactor {
    pub sign: Sign,
    pub base_exponent: u32,
    pub step: u32,
    pub inverted: bool,
}

impl PochhammerFactor {
    /// `(q^s; q^t)_∞ = prod (1 - q^m)`.
    pub fn minus(s: u32, t: u32) -> Self {
        Self::new(Sign::Minus, s, t)
    }

    /// `(-q^s; q^t)_∞ = prod (1 + q^m)`.
    pub fn plus(s: u32, t: u32) -> Self {
        Self::new(Sign::Plus, s, t)
    }

    fn new(sign: Sign, s: u32, t: u32) -> Self {
        assert!(s >= 1 && t >= 1, "Pochhammer exponents must be positive");
        PochhammerFactor {
            sign,
            base_exponent: s,
            step: t,
            inverted: false,
        }
    }

    /// The same product moved to the denominator.
    pub fn inv(self) -> Self {
        PochhammerFactor {
            inverted: !self.inverted,
            ..self
        }
    }

    fn apply(&self, series: &mut TruncatedSeries) {
        let n = series.trunc();
        let mut m = self.base_exponent as usize;
        while m <= n {
            if self.inverted {
                series.div_binomial(self.sign, m);
            } else {
                series.mul_binomial(self.sign, m);
            }
            m += self.step as usize;
        }
    }
}

/// Expands a product of Pochhammer factors to degree `trunc`.
pub fn series_from_factors(factors: &[PochhammerFactor], trunc: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(trunc);
    for f in factors {
        f.apply(&mut s);
    }
    s
}

/// `sum_k q^{T_k}`, or with `signed` the alternating version
/// `sum_k (-1)^{T_k} q^{T_k}` whose coefficients are `L_2(n) - L_3(n)`.
pub fn staircase_series(signed: bool, trunc: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(trunc);
    for (m, c) in s.coeffs.iter_mut().enumerate() {
        if is_triangular(m as u64).is_some() {
            *c = if signed && m % 2 == 1 {
                -BigInt::one()
            } else {
                BigInt::one()
            };
        }
    }
    s
}

/// `sum_k (-1)^k q^{T_k}`: alternating in the staircase index rather than in
/// the exponent. Kept for comparison only; it is not the `L_2 - L_3` series.
pub fn index_alternating_staircase(trunc: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(trunc);
    for (m, c) in s.coeffs.iter_mut().enumerate() {
        if let Some(k) = is_triangular(m as u64) {
            *c = if k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        }
    }
    s
}

/// Generating functions with a closed product form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GfId {
    /// `1/((q;q^2)^2 (q^2;q^2))`
    F,
    /// `1/((q;q^2)^2 (-q^2;q^2))`: even-part parity split of `F`.
    F0MinusF1,
    /// `1/((-q;q^2)^2 (-q^2;q^2))`: part-count parity split of `F`.
    F2MinusF3,
    /// `1/((q^2;q^2)(q;q))`
    G,
    /// `1/((-q^2;q^2)(q;q))`
    G0MinusG1,
    /// `1/((q^2;q^2)(-q;q))`
    G2MinusG3,
    /// `1/((-q^2;q^2)(-q;q))`
    G4MinusG5,
    /// `(-q;q^2)/(q^2;q^2)`
    H,
    /// `(q^2;q^4)(-q;q^2)`
    K,
    /// `(-q^2;q^2)(-q;q)`
    L,
    /// `(q^2;q^2)(-q;q)`
    L0MinusL1,
    /// `(-q^2;q^2)(q;q)`
    L2MinusL3,
    /// `(-q;q)/(q;q)`
    Over,
    /// `(-q;q^2)/(q;q^2)`
    OverOdd,
}

impl GfId {
    pub const ALL: [GfId; 14] = [
        GfId::F,
        GfId::F0MinusF1,
        GfId::F2MinusF3,
        GfId::G,
        GfId::G0MinusG1,
        GfId::G2MinusG3,
        GfId::G4MinusG5,
        GfId::H,
        GfId::K,
        GfId::L,
        GfId::L0MinusL1,
        GfId::L2MinusL3,
        GfId::Over,
        GfId::OverOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfId::F => "F",
            GfId::F0MinusF1 => "F0_minus_F1",
            GfId::F2MinusF3 => "F2_minus_F3",
            GfId::G => "G",
            GfId::G0MinusG1 => "G0_minus_G1",
            GfId::G2MinusG3 => "G2_minus_G3",
            GfId::G4MinusG5 => "G4_minus_G5",
            GfId::H => "H",
            GfId::K => "K",
            GfId::L => "L",
            GfId::L0MinusL1 => "L0_minus_L1",
            GfId::L2MinusL3 => "L2_minus_L3",
            GfId::Over => "OVER",
            GfId::OverOdd => "OVER_ODD",
        }
    }

    pub fn factors(self) -> Vec<PochhammerFactor> {
        use PochhammerFactor as P;
        match self {
            GfId::F => vec![P::minus(1, 2).inv(), P::minus(1, 2).inv(), P::minus(2, 2).inv()],
            GfId::F0MinusF1 => vec![P::minus(1, 2).inv(), P::minus(1, 2).inv(), P::plus(2, 2).inv()],
            GfId::F2MinusF3 => vec![P::plus(1, 2).inv(), P::plus(1, 2).inv(), P::plus(2, 2).inv()],
            GfId::G => vec![P::minus(2, 2).inv(), P::minus(1, 1).inv()],
            GfId::G0MinusG1 => vec![P::plus(2, 2).inv(), P::minus(1, 1).inv()],
            GfId::G2MinusG3 => vec![P::minus(2, 2).inv(), P::plus(1, 1).inv()],
            GfId::G4MinusG5 => vec![P::plus(2, 2).inv(), P::plus(1, 1).inv()],
            GfId::H => vec![P::plus(1, 2), P::minus(2, 2).inv()],
            GfId::K => vec![P::minus(2, 4), P::plus(1, 2)],
            GfId::L => vec![P::plus(2, 2), P::plus(1, 1)],
            GfId::L0MinusL1 => vec![P::minus(2, 2), P::plus(1, 1)],
            GfId::L2MinusL3 => vec![P::plus(2, 2), P::minus(1, 1)],
            GfId::Over => vec![P::plus(1, 1), P::minus(1, 1).inv()],
            GfId::OverOdd => vec![P::plus(1, 2), P::minus(1, 2).inv()],
        }
    }
}

impl fmt::Display for GfId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GfId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        GfId::ALL
            .into_iter()
            .find(|g| g.name().to_ascii_uppercase() == wanted)
            .ok_or_else(|| Error::Unknown {
                kind: "generating function",
                name: s.to_string(),
            })
    }
}

pub fn family_gf(id: GfId, trunc: usize) -> TruncatedSeries {
    series_from_factors(&id.factors(), trunc)
}
