//! Verdicts for `‖a‖_p / ‖b‖_p < Σ a_k / b_k` and its companions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::functionals::{geometric_mean_ratio, lhs_quotient, rhs_ratio_sum};
use crate::sum::NeumaierSum;
use crate::rearrangement::extremal_ratio_sums;
use crate::tuple::{PairedTuples, PositiveTuple};

/// Default near-equality band, relative to the right-hand side.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    HoldsStrict,
    EqualityN1,
    NearEquality,
    Violated,
}

impl Verdict {
    pub fn is_violation(self) -> bool {
        self == Verdict::Violated
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::HoldsStrict => "HOLDS_STRICT",
            Verdict::EqualityN1 => "EQUALITY_N1",
            Verdict::NearEquality => "NEAR_EQUALITY",
            Verdict::Violated => "VIOLATED",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One evaluated instance of the quotient inequality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InequalityReport {
    pub p: Exponent,
    pub n: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    pub verdict: Verdict,
}

impl InequalityReport {
    /// Builds a report from already-evaluated sides. `tolerance` is relative
    /// to `rhs`.
    pub fn classify(p: Exponent, n: usize, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let gap = rhs - lhs;
        let band = tolerance * rhs.abs();
        let verdict = if n == 1 {
            if gap.abs() <= band {
                Verdict::EqualityN1
            } else {
                Verdict::Violated
            }
        } else if gap > band {
            Verdict::HoldsStrict
        } else if gap.abs() <= band {
            Verdict::NearEquality
        } else {
            Verdict::Violated
        };
        Self { p, n, lhs, rhs, gap, verdict }
    }
}

pub fn check_main_inequality(pair: &PairedTuples, p: Exponent) -> Result<InequalityReport> {
    check_main_inequality_with(pair, p, DEFAULT_TOLERANCE)
}

/// [`check_main_inequality`] with an explicit near-equality band.
///
/// At `p = 0` the left side is the geometric mean of the ratios; the report
/// is additionally downgraded to `VIOLATED` if that mean exceeds the
/// arithmetic mean beyond the band.
pub fn check_main_inequality_with(
    pair: &PairedTuples,
    p: Exponent,
    tolerance: f64,
) -> Result<InequalityReport> {
    let lhs = lhs_quotient(pair, p)?;
    let rhs = rhs_ratio_sum(pair)?;
    let mut report = InequalityReport::classify(p, pair.len(), lhs, rhs, tolerance);
    if p == Exponent::Zero {
        let am = rhs / pair.len() as f64;
        if lhs - am > tolerance * am {
            report.verdict = Verdict::Violated;
        }
    }
    Ok(report)
}

/// The inequality against the smallest possible right side, i.e. with both
/// tuples paired in the same sorted order.
pub fn check_worst_arrangement(
    pair: &PairedTuples,
    p: Exponent,
    tolerance: f64,
) -> Result<InequalityReport> {
    let lhs = lhs_quotient(pair, p)?;
    let rhs = extremal_ratio_sums(pair)?.min_sum;
    Ok(InequalityReport::classify(p, pair.len(), lhs, rhs, tolerance))
}

/// Geometric mean, arithmetic mean and sum of the ratios `a_k / b_k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AmGmChain {
    pub gm: f64,
    pub am: f64,
    pub sum: f64,
}

impl AmGmChain {
    /// `gm <= am <= sum`, with `gm` allowed to exceed `am` by `tolerance`
    /// relative (equal ratios make them agree only up to rounding).
    pub fn is_ordered(&self, tolerance: f64) -> bool {
        self.gm <= self.am * (1.0 + tolerance) && self.am <= self.sum
    }
}

pub fn am_gm_chain(pair: &PairedTuples) -> Result<AmGmChain> {
    let sum = rhs_ratio_sum(pair)?;
    Ok(AmGmChain {
        gm: geometric_mean_ratio(pair)?,
        am: sum / pair.len() as f64,
        sum,
    })
}

/// `ln ‖x‖_p` from `ln x_k`, factored around the dominant term.
fn ln_functional(logs: &[f64], p: f64) -> f64 {
    let pivot = if p > 0.0 {
        logs.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    } else {
        logs.iter().copied().fold(f64::INFINITY, f64::min)
    };
    let mut skipped = false;
    let mut rest = NeumaierSum::new();
    for &l in logs {
        if !skipped && l == pivot {
            skipped = true;
            continue;
        }
        rest.push((p * (l - pivot)).exp());
    }
    pivot + rest.value().ln_1p() / p
}

/// Relative change of `‖a‖_p` when the last two entries are replaced by
/// their own functional `(a_{n-1}^p + a_n^p)^{1/p}`.
///
/// Evaluated on log magnitudes, so it stays defined where `‖a‖_p` itself
/// overflows (tiny `|p|`).
pub fn merge_identity_residual(a: &PositiveTuple, p: Exponent) -> Result<f64> {
    let p = p.require_finite()?;
    let n = a.len();
    if n < 2 {
        return Err(Error::TooShort { min: 2, got: n });
    }
    let logs: Vec<f64> = a.iter().map(|v| v.ln()).collect();
    let whole = ln_functional(&logs, p);
    let mut merged = logs[..n - 2].to_vec();
    merged.push(ln_functional(&logs[n - 2..], p));
    let merged = ln_functional(&merged, p);
    Ok((whole - merged).exp_m1().abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapPoint {
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

/// The inequality sampled over a grid of exponents, in grid order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapCurve {
    pub reports: Vec<InequalityReport>,
}

impl GapCurve {
    pub fn grid(&self) -> Vec<Exponent> {
        self.reports.iter().map(|r| r.p).collect()
    }

    pub fn points(&self) -> Vec<GapPoint> {
        self.reports
            .iter()
            .map(|r| GapPoint { lhs: r.lhs, rhs: r.rhs, gap: r.gap })
            .collect()
    }

    pub fn any_violation(&self) -> bool {
        self.reports.iter().any(|r| r.verdict.is_violation())
    }
}

pub fn gap_curve(pair: &PairedTuples, grid: &[Exponent], tolerance: f64) -> Result<GapCurve> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("exponent grid is empty".into()));
    }
    let reports = grid
        .iter()
        .map(|&p| check_main_inequality_with(pair, p, tolerance))
        .collect::<Result<Vec<_>>>()?;
    Ok(GapCurve { reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: &[f64], b: &[f64]) -> PairedTuples {
        PairedTuples::from_slices(a, b).unwrap()
    }

    #[test]
    fn singleton_is_trivial_equality() {
        let pr = pair(&[7.0], &[2.0]);
        for p in [Exponent::NegInf, Exponent::Finite(-3.0), Exponent::Zero, Exponent::Finite(2.0), Exponent::PosInf] {
            let r = check_main_inequality(&pr, p).unwrap();
            assert_eq!(r.verdict, Verdict::EqualityN1, "{p}");
            assert!((r.lhs - 3.5).abs() < 1e-15);
            assert_eq!(r.rhs, 3.5);
        }
    }

    #[test]
    fn ones_at_two() {
        let r = check_main_inequality(&pair(&[1.0, 1.0], &[1.0, 1.0]), Exponent::Finite(2.0)).unwrap();
        assert_eq!((r.lhs, r.rhs, r.gap, r.verdict), (1.0, 2.0, 1.0, Verdict::HoldsStrict));
    }

    #[test]
    fn first_family_k1() {
        let r = check_main_inequality(&pair(&[1e-2, 1.0], &[1e-1, 1.0]), Exponent::Finite(1.0)).unwrap();
        assert!((r.lhs - 1.01 / 1.1).abs() < 1e-15);
        assert!((r.rhs - 1.1).abs() < 1e-15);
        assert_eq!(r.verdict, Verdict::HoldsStrict);
    }

    #[test]
    fn classify_bands() {
        let p = Exponent::Finite(1.0);
        assert_eq!(InequalityReport::classify(p, 2, 1.0, 1.0, 1e-12).verdict, Verdict::NearEquality);
        assert_eq!(InequalityReport::classify(p, 2, 1.0 + 1e-13, 1.0, 1e-12).verdict, Verdict::NearEquality);
        assert_eq!(InequalityReport::classify(p, 2, 1.1, 1.0, 1e-12).verdict, Verdict::Violated);
        assert_eq!(InequalityReport::classify(p, 1, 1.1, 1.0, 1e-12).verdict, Verdict::Violated);
        assert_eq!(InequalityReport::classify(p, 3, 0.5, 1.0, 1e-12).verdict, Verdict::HoldsStrict);
    }

    #[test]
    fn verdict_serializes_screaming() {
        let r = InequalityReport::classify(Exponent::NegInf, 2, 0.5, 1.0, 1e-12);
        let j = serde_json::to_string(&r).unwrap();
        assert_eq!(j, r#"{"p":"-inf","n":2,"lhs":0.5,"rhs":1.0,"gap":0.5,"verdict":"HOLDS_STRICT"}"#);
    }

    #[test]
    fn chain_examples() {
        let c = am_gm_chain(&pair(&[1.0, 4.0], &[2.0, 2.0])).unwrap();
        assert_eq!((c.gm, c.am, c.sum), (1.0, 1.25, 2.5));
        let c = am_gm_chain(&pair(&[3.0, 6.0, 1.5], &[2.0, 4.0, 1.0])).unwrap();
        assert!((c.gm - 1.5).abs() < 1e-12 && (c.am - 1.5).abs() < 1e-12);
        assert_eq!(c.sum, 4.5);
        assert!(c.is_ordered(1e-12));
        let c = am_gm_chain(&pair(&[7.0], &[2.0])).unwrap();
        assert_eq!((c.gm, c.am, c.sum), (3.5, 3.5, 3.5));
    }

    #[test]
    fn merge_examples() {
        let a = PositiveTuple::from_slice(&[3.0, 4.0]).unwrap();
        assert!(merge_identity_residual(&a, Exponent::Finite(2.0)).unwrap() < 1e-15);
        let a = PositiveTuple::from_slice(&[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(merge_identity_residual(&a, Exponent::Finite(1.0)).unwrap(), 0.0);
    }

    #[test]
    fn merge_rejects_bad_input() {
        let a = PositiveTuple::from_slice(&[3.0]).unwrap();
        assert_eq!(
            merge_identity_residual(&a, Exponent::Finite(2.0)),
            Err(Error::TooShort { min: 2, got: 1 })
        );
        let a = PositiveTuple::from_slice(&[3.0, 4.0]).unwrap();
        assert!(merge_identity_residual(&a, Exponent::PosInf).is_err());
        assert!(merge_identity_residual(&a, Exponent::Zero).is_err());
    }

    #[test]
    fn curve_of_identical_tuples() {
        let pr = pair(&[0.5, 2.0, 9.0], &[0.5, 2.0, 9.0]);
        let grid = [Exponent::NegInf, Exponent::Finite(-1.0), Exponent::Zero, Exponent::Finite(1.0), Exponent::PosInf];
        let c = gap_curve(&pr, &grid, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(c.grid(), grid.to_vec());
        for pt in c.points() {
            assert!((pt.lhs - 1.0).abs() < 1e-15);
            assert_eq!(pt.rhs, 3.0);
        }
        assert!(gap_curve(&pr, &[], DEFAULT_TOLERANCE).is_err());
    }
}
