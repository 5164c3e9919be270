//! Hölder functionals `(Σ a_k^p)^{1/p}` and their quotients over the
//! extended exponent line.
//!
//! Every finite-exponent evaluation goes through [`ScaledPowerSum`]: the sum
//! is factored around a pivot element (the maximum for `p > 0`, the minimum
//! for `p < 0`) so that every remaining term lies in `(0, 1]`. Nothing
//! overflows, and the pivot's contribution is exact.

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::sum::{ratio_sum, NeumaierSum};
use crate::tuple::{PairedTuples, PositiveTuple};

/// Below this magnitude a finite exponent is evaluated with the `p -> 0`
/// limit (geometric mean of the ratios).
pub const SMALL_EXPONENT: f64 = 1e-8;

/// Below this magnitude [`lhs_quotient`] measures each power sum through
/// `ln1p(mean expm1(p·ln(x_k/pivot)))`, which keeps the `O(p)` information
/// that `ln1p(rest)` would round away before the division by `p`.
pub const EXPM1_EXPONENT: f64 = 1.0;

/// `Σ x_k^p = pivot^p · (1 + rest)`, with `rest` a compensated sum of terms
/// in `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledPowerSum {
    pub p: f64,
    pub pivot: f64,
    pub rest: f64,
}

impl ScaledPowerSum {
    /// Factors `Σ x_k^p` for a finite nonzero `p`.
    pub fn new(x: &[f64], p: f64) -> Self {
        debug_assert!(!x.is_empty() && p != 0.0 && p.is_finite());
        let pivot_idx = if p > 0.0 { argmax(x) } else { argmin(x) };
        let pivot = x[pivot_idx];
        let rest: NeumaierSum = x
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != pivot_idx)
            .map(|(_, &v)| relative_power(v, pivot, p))
            .collect();
        Self { p, pivot, rest: rest.value() }
    }

    /// `ln Σ x_k^p`.
    pub fn ln(&self) -> f64 {
        self.p * self.pivot.ln() + self.rest.ln_1p()
    }

    /// `ln(Σ (x_k/pivot)^p / n)` via `expm1`; accurate to `O(eps·|p|)`
    /// absolute when `|p|` is small.
    pub fn ln_mean_small_p(x: &[f64], pivot: f64, p: f64) -> f64 {
        let m: NeumaierSum = x.iter().map(|&v| (p * log_ratio(v, pivot)).exp_m1()).collect();
        (m.value() / x.len() as f64).ln_1p()
    }

    /// `(1 + rest)^{1/p}`, the factor multiplying the pivot in the functional.
    pub fn root_factor(&self) -> f64 {
        (self.rest.ln_1p() / self.p).exp()
    }
}

/// `(x / pivot)^p`, never overflowing when the pivot is the extremal element.
#[inline]
fn relative_power(x: f64, pivot: f64, p: f64) -> f64 {
    let r = x / pivot;
    if r.is_normal() {
        r.powf(p)
    } else {
        (p * (x.ln() - pivot.ln())).exp()
    }
}

fn argmax(x: &[f64]) -> usize {
    let mut best = 0;
    for (k, &v) in x.iter().enumerate().skip(1) {
        if v > x[best] {
            best = k;
        }
    }
    best
}

fn argmin(x: &[f64]) -> usize {
    let mut best = 0;
    for (k, &v) in x.iter().enumerate().skip(1) {
        if v < x[best] {
            best = k;
        }
    }
    best
}

fn in_range(v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::OutOfRange)
    }
}

/// `ln Σ x_k^p` for finite nonzero `p`.
pub fn log_power_sum(x: &PositiveTuple, p: f64) -> Result<f64> {
    let p = Exponent::finite(p)?.require_finite()?;
    Ok(ScaledPowerSum::new(x, p).ln())
}

/// The Hölder functional `‖a‖_p`; `max(a)` at `+inf`, `min(a)` at `-inf`.
pub fn holder_functional(a: &PositiveTuple, p: Exponent) -> Result<f64> {
    match p {
        Exponent::Zero => Err(Error::UndefinedAtZero),
        Exponent::PosInf => Ok(a.max()),
        Exponent::NegInf => Ok(a.min()),
        Exponent::Finite(p) => {
            let s = ScaledPowerSum::new(a, p);
            in_range(s.pivot * s.root_factor())
        }
    }
}

/// The quotient `‖a‖_p / ‖b‖_p`, including its limits at `p = 0, ±inf`.
pub fn lhs_quotient(pair: &PairedTuples, p: Exponent) -> Result<f64> {
    let (a, b) = (pair.a(), pair.b());
    match p {
        Exponent::Zero => geometric_mean_ratio(pair),
        Exponent::PosInf => in_range(a.max() / b.max()),
        Exponent::NegInf => in_range(a.min() / b.min()),
        Exponent::Finite(p) if p.abs() < SMALL_EXPONENT => geometric_mean_ratio(pair),
        Exponent::Finite(p) => {
            let sa = ScaledPowerSum::new(a, p);
            let sb = ScaledPowerSum::new(b, p);
            // both tails drop the same ln n when the expm1 form is used
            let tail = if p.abs() < EXPM1_EXPONENT {
                (ScaledPowerSum::ln_mean_small_p(a, sa.pivot, p) - ScaledPowerSum::ln_mean_small_p(b, sb.pivot, p)) / p
            } else {
                (sa.rest.ln_1p() - sb.rest.ln_1p()) / p
            };
            let base = sa.pivot / sb.pivot;
            let v = if base.is_normal() {
                base * tail.exp()
            } else {
                (sa.pivot.ln() - sb.pivot.ln() + tail).exp()
            };
            in_range(v)
        }
    }
}

/// `Σ a_k / b_k`, compensated, including each division's rounding error.
pub fn rhs_ratio_sum(pair: &PairedTuples) -> Result<f64> {
    in_range(ratio_sum(pair.a().iter().copied().zip(pair.b().iter().copied())))
}

/// `(Π a_k / b_k)^{1/n}`, evaluated as the exponential of the mean log-ratio.
pub fn geometric_mean_ratio(pair: &PairedTuples) -> Result<f64> {
    let logs: NeumaierSum = pair
        .a()
        .iter()
        .zip(pair.b().iter())
        .map(|(&x, &y)| log_ratio(x, y))
        .collect();
    in_range((logs.value() / pair.len() as f64).exp())
}

#[inline]
fn log_ratio(x: f64, y: f64) -> f64 {
    let r = x / y;
    if r.is_normal() {
        r.ln()
    } else {
        x.ln() - y.ln()
    }
}
