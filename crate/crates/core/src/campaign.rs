//! Seeded random verification campaign over the standard exponent grid.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::inequality::{
    am_gm_chain, check_main_inequality_with, check_worst_arrangement, merge_identity_residual,
    InequalityReport, Verdict, DEFAULT_TOLERANCE,
};
use crate::tuple::{PairedTuples, PositiveTuple};

pub const DEFAULT_SEED: u64 = 0x5eed_1d0c;
pub const DEFAULT_CASES: usize = 10_000;

/// Fifteen exponents spanning the extended line, both infinities and zero
/// included.
pub fn standard_grid() -> Vec<Exponent> {
    let mut g = vec![Exponent::NegInf];
    g.extend(
        [-64.0, -8.0, -2.0, -1.0, -0.5, -1e-7]
            .into_iter()
            .map(Exponent::Finite),
    );
    g.push(Exponent::Zero);
    g.extend([1e-7, 0.5, 1.0, 2.0, 8.0, 64.0].into_iter().map(Exponent::Finite));
    g.push(Exponent::PosInf);
    g
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    pub seed: u64,
    pub cases: usize,
    pub min_len: usize,
    pub max_len: usize,
    /// Values are drawn log-uniformly from `[lo, hi]`.
    pub lo: f64,
    pub hi: f64,
    pub grid: Vec<Exponent>,
    pub tolerance: f64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            cases: DEFAULT_CASES,
            min_len: 2,
            max_len: 10,
            lo: 1e-6,
            hi: 1e6,
            grid: standard_grid(),
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

/// Draws `n` values log-uniformly from `[lo, hi]`.
pub fn log_uniform_tuple<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: f64, hi: f64) -> Result<PositiveTuple> {
    let (l, h) = (lo.ln(), hi.ln());
    PositiveTuple::new((0..n).map(|_| rng.random_range(l..=h).exp()).collect())
}

/// Random pair with length uniform in `[min_len, max_len]`.
pub fn random_pair<R: Rng + ?Sized>(
    rng: &mut R,
    min_len: usize,
    max_len: usize,
    lo: f64,
    hi: f64,
) -> Result<PairedTuples> {
    let n = rng.random_range(min_len..=max_len);
    let a = log_uniform_tuple(rng, n, lo, hi)?;
    let b = log_uniform_tuple(rng, n, lo, hi)?;
    PairedTuples::new(a, b)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignFailure {
    pub case: usize,
    pub check: &'static str,
    pub report: Option<InequalityReport>,
    pub residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignSummary {
    pub seed: u64,
    pub cases: usize,
    pub grid: Vec<Exponent>,
    pub evaluations: usize,
    pub holds_strict: usize,
    pub near_equality: usize,
    pub violated: usize,
    pub strict_fraction: f64,
    pub worst_arrangement_violations: usize,
    pub chain_violations: usize,
    pub max_merge_residual: f64,
    /// First few failures, in case order.
    pub failures: Vec<CampaignFailure>,
}

impl CampaignSummary {
    pub fn any_violation(&self) -> bool {
        self.violated > 0 || self.worst_arrangement_violations > 0 || self.chain_violations > 0
    }
}

const MAX_RECORDED_FAILURES: usize = 20;
const MERGE_RESIDUAL_LIMIT: f64 = 1e-12;

/// Runs every check on `cfg.cases` random pairs at every grid exponent:
/// the main inequality, the same against the worst-case arrangement, the
/// AM–GM chain, and the merge identity for finite `0.5 <= |p| <= 64`.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignSummary> {
    if cfg.grid.is_empty() || cfg.min_len < 2 || cfg.min_len > cfg.max_len {
        return Err(Error::InvalidArgument("campaign needs a nonempty grid and 2 <= min_len <= max_len".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut s = CampaignSummary {
        seed: cfg.seed,
        cases: cfg.cases,
        grid: cfg.grid.clone(),
        evaluations: 0,
        holds_strict: 0,
        near_equality: 0,
        violated: 0,
        strict_fraction: 0.0,
        worst_arrangement_violations: 0,
        chain_violations: 0,
        max_merge_residual: 0.0,
        failures: Vec::new(),
    };
    let record = |s: &mut CampaignSummary, f: CampaignFailure| {
        if s.failures.len() < MAX_RECORDED_FAILURES {
            s.failures.push(f);
        }
    };

    for case in 0..cfg.cases {
        let pair = random_pair(&mut rng, cfg.min_len, cfg.max_len, cfg.lo, cfg.hi)?;
        for &p in &cfg.grid {
            let r = check_main_inequality_with(&pair, p, cfg.tolerance)?;
            s.evaluations += 1;
            match r.verdict {
                Verdict::HoldsStrict => s.holds_strict += 1,
                Verdict::NearEquality => s.near_equality += 1,
                Verdict::Violated | Verdict::EqualityN1 => {
                    s.violated += 1;
                    record(&mut s, CampaignFailure { case, check: "main", report: Some(r), residual: None });
                }
            }
            let w = check_worst_arrangement(&pair, p, cfg.tolerance)?;
            if w.verdict.is_violation() {
                s.worst_arrangement_violations += 1;
                record(&mut s, CampaignFailure { case, check: "worst_arrangement", report: Some(w), residual: None });
            }
            if let Exponent::Finite(q) = p {
                if (0.5..=64.0).contains(&q.abs()) {
                    let res = merge_identity_residual(pair.a(), p)?;
                    s.max_merge_residual = s.max_merge_residual.max(res);
                    if res > MERGE_RESIDUAL_LIMIT {
                        record(&mut s, CampaignFailure { case, check: "merge", report: None, residual: Some(res) });
                    }
                }
            }
        }
        let chain = am_gm_chain(&pair)?;
        if !chain.is_ordered(cfg.tolerance) || chain.am >= chain.sum {
            s.chain_violations += 1;
            record(&mut s, CampaignFailure { case, check: "am_gm_chain", report: None, residual: None });
        }
    }
    s.strict_fraction = if s.evaluations == 0 {
        1.0
    } else {
        s.holds_strict as f64 / s.evaluations as f64
    };
    Ok(s)
}
