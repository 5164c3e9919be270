//! Test-only oracles and generators, independent of the library's kernels.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

/// Exact value of an `f64` as a rational.
pub fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

/// `x^k` for integer `k`, exactly.
pub fn exact_pow(x: &BigRational, k: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= x;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// `Σ x_k^p` exactly, for integer `p`.
pub fn exact_power_sum(x: &[f64], p: i32) -> BigRational {
    x.iter()
        .map(|&v| exact_pow(&exact(v), p))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Relative error of `h` as a candidate for `S^{1/p}`, judged by `h^p / S`
/// in exact arithmetic.
pub fn rel_err_of_root(h: f64, s: &BigRational, p: i32) -> f64 {
    let rho = (exact_pow(&exact(h), p) / s).to_f64().expect("ratio near 1");
    (rho.powf(1.0 / p as f64) - 1.0).abs()
}

/// Exactly rounded `Σ a_k / b_k`.
pub fn exact_ratio_sum(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| exact(x) / exact(y))
        .fold(BigRational::zero(), |s, r| s + r)
        .to_f64()
        .unwrap()
}

pub fn ulp(x: f64) -> f64 {
    x.next_up() - x
}

pub fn rel(x: f64, y: f64) -> f64 {
    ((x - y) / y).abs()
}

/// Log-uniform sample in `[lo, hi]`.
pub fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo.ln()..=hi.ln()).exp()
}

pub fn log_uniform_vec<R: Rng>(rng: &mut R, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| log_uniform(rng, lo, hi)).collect()
}

/// Every permutation of `0..n`, by recursive insertion.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Min and max of `Σ a_k / b_{σ(k)}` over all σ, exact rationals compared.
pub fn enumerate_extrema(a: &[f64], b: &[f64]) -> (f64, f64) {
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for perm in all_permutations(a.len()) {
        let s = perm
            .iter()
            .enumerate()
            .map(|(k, &j)| exact(a[k]) / exact(b[j]))
            .fold(BigRational::zero(), |s, r| s + r);
        if lo.as_ref().is_none_or(|l| &s < l) {
            lo = Some(s.clone());
        }
        if hi.as_ref().is_none_or(|h| &s > h) {
            hi = Some(s);
        }
    }
    (lo.unwrap().to_f64().unwrap(), hi.unwrap().to_f64().unwrap())
}

/// `ln(‖a‖_p / ‖b‖_p)` for small `|p|` without the pivot kernel:
/// `(1/p)·[ln1p(mean expm1(p ln a)) − ln1p(mean expm1(p ln b))]`.
pub fn ln_quotient_small_p(a: &[f64], b: &[f64], p: f64) -> f64 {
    let m = |x: &[f64]| (x.iter().map(|v| (p * v.ln()).exp_m1()).sum::<f64>() / x.len() as f64).ln_1p();
    (m(a) - m(b)) / p
}

/// Population variance of `ln x`.
pub fn log_variance(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mean = x.iter().map(|v| v.ln()).sum::<f64>() / n;
    x.iter().map(|v| (v.ln() - mean).powi(2)).sum::<f64>() / n
}
