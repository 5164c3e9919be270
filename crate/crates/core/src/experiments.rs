//! Constructed instance families: the sharpness family, where both sides of
//! the quotient inequality approach 1 as `p` grows, and the two
//! `K`-parameterized families, one closing the gap and one blowing it up.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::inequality::{check_main_inequality_with, InequalityReport};
use crate::tuple::{PairedTuples, PositiveTuple};

/// Largest `K` for which `10^{-2K}` is still a normal `f64`.
pub const MAX_FAMILY_K: u32 = 150;

/// Correctly rounded `10^e`.
pub fn pow10(e: i32) -> f64 {
    // the decimal parser rounds correctly; powi does not
    format!("1e{e}").parse().expect("decimal literal")
}

/// `a = (1/p, …, 1/p, 1)` with `n − 1` copies of `1/p`, `b = (1, …, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SharpnessInstance {
    pub n: usize,
    pub p: f64,
    pub pair: PairedTuples,
}

impl SharpnessInstance {
    pub fn new(n: usize, p: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooShort { min: 2, got: n });
        }
        if p.is_nan() || p <= 0.0 {
            return Err(Error::InvalidArgument(format!("sharpness exponent must be positive, got {p}")));
        }
        Exponent::finite(p)?;
        let mut a = vec![1.0 / p; n - 1];
        a.push(1.0);
        let pair = PairedTuples::new(PositiveTuple::new(a)?, PositiveTuple::new(vec![1.0; n])?)?;
        Ok(Self { n, p, pair })
    }

    /// `(n − 1)/p + 1`.
    pub fn closed_form_rhs(&self) -> f64 {
        (self.n - 1) as f64 / self.p + 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyVariant {
    /// `a_{1..n−1} = 10^{−2K}`, `b_{1..n−1} = 10^{−K}`.
    Convergent,
    /// `a_{1..n−1} = 10^{−K}`, `b_{1..n−1} = 10^{−2K}`.
    Divergent,
}

impl std::str::FromStr for FamilyVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "convergent" => Ok(Self::Convergent),
            "divergent" => Ok(Self::Divergent),
            _ => Err(Error::Parse(format!("unknown variant {s:?}; expected convergent|divergent"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExampleFamilyK {
    pub n: usize,
    pub k: u32,
    pub variant: FamilyVariant,
    pub pair: PairedTuples,
}

impl ExampleFamilyK {
    pub fn new(n: usize, k: u32, variant: FamilyVariant) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooShort { min: 2, got: n });
        }
        if k == 0 || k > MAX_FAMILY_K {
            return Err(Error::InvalidArgument(format!("K must lie in 1..={MAX_FAMILY_K}, got {k}")));
        }
        let small = pow10(-(2 * k as i32));
        let mid = pow10(-(k as i32));
        let (head_a, head_b) = match variant {
            FamilyVariant::Convergent => (small, mid),
            FamilyVariant::Divergent => (mid, small),
        };
        let mut a = vec![head_a; n - 1];
        let mut b = vec![head_b; n - 1];
        a.push(1.0);
        b.push(1.0);
        let pair = PairedTuples::new(PositiveTuple::new(a)?, PositiveTuple::new(b)?)?;
        Ok(Self { n, k, variant, pair })
    }

    /// `(n − 1)·10^{−K} + 1` or `(n − 1)·10^{K} + 1`.
    pub fn closed_form_rhs(&self) -> f64 {
        let e = match self.variant {
            FamilyVariant::Convergent => -(self.k as i32),
            FamilyVariant::Divergent => self.k as i32,
        };
        (self.n - 1) as f64 * pow10(e) + 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SharpnessRow {
    #[serde(flatten)]
    pub report: InequalityReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FamilyRow {
    #[serde(rename = "K")]
    pub k: u32,
    #[serde(flatten)]
    pub report: InequalityReport,
}

/// Powers of two `2^0 ..= 2^max_k`.
pub fn doubling_grid(max_k: u32) -> Vec<f64> {
    (0..=max_k).map(|k| 2f64.powi(k as i32)).collect()
}

pub fn sharpness_table(n: usize, p_grid: &[f64], tolerance: f64) -> Result<Vec<SharpnessRow>> {
    if p_grid.is_empty() {
        return Err(Error::InvalidArgument("p grid is empty".into()));
    }
    if p_grid.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less)) {
        return Err(Error::InvalidArgument("p grid must be strictly ascending".into()));
    }
    p_grid
        .iter()
        .map(|&p| {
            let inst = SharpnessInstance::new(n, p)?;
            let report = check_main_inequality_with(&inst.pair, Exponent::Finite(p), tolerance)?;
            Ok(SharpnessRow { report })
        })
        .collect()
}

pub fn example_family_table(
    n: usize,
    variant: FamilyVariant,
    k_range: RangeInclusive<u32>,
    p: Exponent,
    tolerance: f64,
) -> Result<Vec<FamilyRow>> {
    p.require_finite()?;
    if k_range.is_empty() {
        return Err(Error::InvalidArgument("K range is empty".into()));
    }
    k_range
        .map(|k| {
            let fam = ExampleFamilyK::new(n, k, variant)?;
            let report = check_main_inequality_with(&fam.pair, p, tolerance)?;
            Ok(FamilyRow { k, report })
        })
        .collect()
}
