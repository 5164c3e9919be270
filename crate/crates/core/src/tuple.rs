use std::ops::Deref;

use crate::error::{Error, Result};

/// Nonempty sequence of strictly positive finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct PositiveTuple(Vec<f64>);

impl PositiveTuple {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::NonPositive { index, value });
        }
        Ok(Self(values))
    }

    pub fn from_slice(values: &[f64]) -> Result<Self> {
        Self::new(values.to_vec())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(0.0, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.0.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Element-wise reciprocals.
    pub fn reciprocals(&self) -> Result<Self> {
        Self::new(self.0.iter().map(|v| 1.0 / v).collect())
    }

    /// Every element multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.0.iter().map(|v| v * c).collect())
    }

    /// Reorders the tuple so that position `k` holds the old element `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.0.len() {
            return Err(Error::LengthMismatch { a: self.0.len(), b: perm.len() });
        }
        Self::new(perm.iter().map(|&i| self.0[i]).collect())
    }
}

impl Deref for PositiveTuple {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for PositiveTuple {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Self::new(values)
    }
}

impl TryFrom<&[f64]> for PositiveTuple {
    type Error = Error;

    fn try_from(values: &[f64]) -> Result<Self> {
        Self::from_slice(values)
    }
}

/// Two positive tuples of equal length.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedTuples {
    a: PositiveTuple,
    b: PositiveTuple,
}

impl PairedTuples {
    pub fn new(a: PositiveTuple, b: PositiveTuple) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch { a: a.len(), b: b.len() });
        }
        Ok(Self { a, b })
    }

    /// Validates both slices and pairs them.
    pub fn from_slices(a: &[f64], b: &[f64]) -> Result<Self> {
        Self::new(PositiveTuple::from_slice(a)?, PositiveTuple::from_slice(b)?)
    }

    pub fn a(&self) -> &PositiveTuple {
        &self.a
    }

    pub fn b(&self) -> &PositiveTuple {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Iterator over `a_k / b_k`.
    pub fn ratios(&self) -> impl Iterator<Item = f64> + '_ {
        self.a.iter().zip(self.b.iter()).map(|(x, y)| x / y)
    }

    /// Swaps the roles of the two tuples.
    pub fn swapped(&self) -> Self {
        Self { a: self.b.clone(), b: self.a.clone() }
    }

    /// The same simultaneous permutation applied to both tuples.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        Self::new(self.a.permuted(perm)?, self.b.permuted(perm)?)
    }
}
