//! Prefix verification of the power-sum form
//! `Σ a_k^p  ⋚  (Σ b_k^p) · (Σ a_k / b_k)^p` over a stream of pairs.
//!
//! Raising the quotient inequality to the power `p` keeps its direction for
//! `p > 0` (`≤`) and reverses it for `p < 0` (`≥`).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::inequality::{InequalityReport, Verdict, DEFAULT_TOLERANCE};
use crate::sum::{LogSumExp, NeumaierSum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Direction {
    /// `Σ a^p ≤ Σ b^p · S^p`, for `p > 0`.
    Le,
    /// `Σ a^p ≥ Σ b^p · S^p`, for `p < 0`.
    Ge,
}

/// Running log power sums and compensated ratio sum of a paired stream.
///
/// Single owner; clone to snapshot.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioStreamAccumulator {
    p: f64,
    count: usize,
    log_a: LogSumExp,
    log_b: LogSumExp,
    ratio_sum: NeumaierSum,
    tolerance: f64,
}

/// Result of a prefix check: the quotient-form report plus both sides of
/// the power-sum form on the log scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StreamCheck {
    #[serde(flatten)]
    pub report: InequalityReport,
    pub log_lhs: f64,
    pub log_rhs: f64,
    pub direction: Direction,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DivergenceProbe {
    pub count: usize,
    /// `ln Σ a_k^p`
    pub log_left: f64,
    /// `ln(Σ b_k^p · S^p)`
    pub log_right: f64,
    pub within_band: bool,
}

impl RatioStreamAccumulator {
    /// Empty accumulator. Only finite nonzero exponents are accepted.
    pub fn new(p: Exponent) -> Result<Self> {
        Self::with_tolerance(p, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(p: Exponent, tolerance: f64) -> Result<Self> {
        let p = Exponent::finite(p.require_finite()?)?.as_f64();
        Ok(Self {
            p,
            count: 0,
            log_a: LogSumExp::new(),
            log_b: LogSumExp::new(),
            ratio_sum: NeumaierSum::new(),
            tolerance,
        })
    }

    pub fn push(&mut self, a: f64, b: f64) -> Result<()> {
        for (index, value) in [(0, a), (1, b)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::NonPositive { index, value });
            }
        }
        self.log_a.push(self.p * a.ln());
        self.log_b.push(self.p * b.ln());
        self.ratio_sum.push_ratio(a, b);
        self.count += 1;
        Ok(())
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn direction(&self) -> Direction {
        if self.p > 0.0 {
            Direction::Le
        } else {
            Direction::Ge
        }
    }

    pub fn log_sum_a_p(&self) -> f64 {
        self.log_a.value()
    }

    pub fn log_sum_b_p(&self) -> f64 {
        self.log_b.value()
    }

    pub fn ratio_sum(&self) -> f64 {
        self.ratio_sum.value()
    }

    fn sides(&self) -> Result<(f64, f64)> {
        if self.count == 0 {
            return Err(Error::EmptyStream);
        }
        let left = self.log_sum_a_p();
        let right = self.log_sum_b_p() + self.p * self.ratio_sum().ln();
        Ok((left, right))
    }

    /// Checks the current prefix in the orientation given by the sign of `p`.
    pub fn prefix_check(&self) -> Result<StreamCheck> {
        let (log_lhs, log_rhs) = self.sides()?;
        let direction = self.direction();
        // margin = |p| · (ln S - ln quotient), positive when the inequality holds
        let margin = match direction {
            Direction::Le => log_rhs - log_lhs,
            Direction::Ge => log_lhs - log_rhs,
        };
        let band = self.tolerance * self.p.abs();
        let verdict = if self.count == 1 {
            if margin.abs() <= band {
                Verdict::EqualityN1
            } else {
                Verdict::Violated
            }
        } else if margin > band {
            Verdict::HoldsStrict
        } else if margin.abs() <= band {
            Verdict::NearEquality
        } else {
            Verdict::Violated
        };
        let lhs = ((self.log_sum_a_p() - self.log_sum_b_p()) / self.p).exp();
        let rhs = self.ratio_sum();
        let report = InequalityReport {
            p: Exponent::Finite(self.p),
            n: self.count,
            lhs,
            rhs,
            gap: rhs - lhs,
            verdict,
        };
        Ok(StreamCheck { report, log_lhs, log_rhs, direction })
    }

    /// Log magnitudes of both power-sum sides; only meaningful for `p > 0`,
    /// where a divergent left side forces a divergent right side.
    pub fn divergence_probe(&self) -> Result<DivergenceProbe> {
        if self.p < 0.0 {
            return Err(Error::Orientation(self.p));
        }
        let (log_left, log_right) = self.sides()?;
        Ok(DivergenceProbe {
            count: self.count,
            log_left,
            log_right,
            within_band: log_left <= log_right + self.tolerance * self.p,
        })
    }
}
