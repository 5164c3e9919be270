//! Compensated summation.
//!
//! Plain Kahan loses the correction term when an addend is larger than the
//! running sum; the Neumaier variant swaps operands so both orders are exact
//! up to the final rounding.

use std::ops::{Add, AddAssign};

/// Running sum with a Neumaier error-compensation term.
#[derive(Debug, Default, Clone, Copy, PartialEq)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub const fn new() -> Self {
        Self { sum: 0.0, comp: 0.0 }
    }

    #[inline]
    pub fn push(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Adds `a / b` including the rounding error of the division.
    #[inline]
    pub fn push_ratio(&mut self, a: f64, b: f64) {
        let (q, e) = div_with_error(a, b);
        self.push(q);
        self.comp += e;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// The sum as a normalized double-double `(hi, lo)`; comparing these
    /// lexicographically orders sums that round to the same `f64`.
    pub fn value_dd(&self) -> (f64, f64) {
        let hi = self.sum + self.comp;
        let lo = if self.sum.abs() >= self.comp.abs() {
            (self.sum - hi) + self.comp
        } else {
            (self.comp - hi) + self.sum
        };
        (hi, lo)
    }

    /// Multiplies the accumulated value (and its correction) by `factor`.
    pub fn scale(&mut self, factor: f64) {
        self.sum *= factor;
        self.comp *= factor;
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, rhs: f64) {
        self.push(rhs);
    }
}

impl Add<f64> for NeumaierSum {
    type Output = Self;

    fn add(mut self, rhs: f64) -> Self {
        self.push(rhs);
        self
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for x in iter {
            acc.push(x);
        }
        acc
    }
}

/// `a / b` split into the rounded quotient and the rounding error of the
/// division, `a / b = q + e` up to the rounding of `e` itself.
#[inline]
pub fn div_with_error(a: f64, b: f64) -> (f64, f64) {
    let q = a / b;
    // fma gives the exact remainder a - q·b
    let e = (-q).mul_add(b, a) / b;
    (q, if e.is_finite() { e } else { 0.0 })
}

/// Compensated sum of the exact ratios `a_k / b_k`: each quotient's
/// rounding error is carried into the correction term.
pub fn ratio_sum<I: IntoIterator<Item = (f64, f64)>>(pairs: I) -> f64 {
    let mut acc = NeumaierSum::new();
    for (a, b) in pairs {
        acc.push_ratio(a, b);
    }
    acc.value()
}

/// Compensated sum of an iterator.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<NeumaierSum>().value()
}

/// Streaming `ln(Σ exp(t_k))` with a running pivot.
///
/// Holds `ln Σ exp(t_k) = pivot + ln(1 + rest)` where `rest` is the
/// compensated sum of `exp(t_k - pivot)` over all terms except the pivot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogSumExp {
    pivot: f64,
    rest: NeumaierSum,
    empty: bool,
}

impl Default for LogSumExp {
    fn default() -> Self {
        Self::new()
    }
}

impl LogSumExp {
    pub const fn new() -> Self {
        Self {
            pivot: f64::NEG_INFINITY,
            rest: NeumaierSum::new(),
            empty: true,
        }
    }

    pub fn push(&mut self, t: f64) {
        if self.empty {
            self.pivot = t;
            self.empty = false;
        } else if t > self.pivot {
            // old pivot becomes an ordinary term relative to the new one
            let shift = (self.pivot - t).exp();
            self.rest.scale(shift);
            self.rest.push(shift);
            self.pivot = t;
        } else {
            self.rest.push((t - self.pivot).exp());
        }
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    /// `ln Σ exp(t_k)`; negative infinity when empty.
    pub fn value(&self) -> f64 {
        if self.empty {
            f64::NEG_INFINITY
        } else {
            self.pivot + self.rest.value().ln_1p()
        }
    }
}
