//! Property tests for the invariants of the functionals, the rearrangement
//! bounds, the inequality suite and the stream accumulator.

mod common;

use common::rel;
use holderq::rearrangement::permuted_ratio_sum;
use holderq::streaming::Direction;
use holderq::{
    am_gm_chain, check_main_inequality, extremal_ratio_sums, geometric_mean_ratio, holder_functional, lhs_quotient,
    log_power_sum, merge_identity_residual, rhs_ratio_sum, Exponent, PairedTuples, PositiveTuple,
    RatioStreamAccumulator, Verdict,
};
use proptest::prelude::*;

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.ln()..=hi.ln()).prop_map(f64::exp)
}

fn tuple(n: std::ops::RangeInclusive<usize>, lo: f64, hi: f64) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(log_uniform(lo, hi), n)
}

fn paired(n: std::ops::RangeInclusive<usize>, lo: f64, hi: f64) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    n.prop_flat_map(move |n| (tuple(n..=n, lo, hi), tuple(n..=n, lo, hi)))
}

fn finite_exponent() -> impl Strategy<Value = f64> {
    prop_oneof![
        (-64.0..-0.01f64),
        (0.01..64.0f64),
        Just(1.0),
        Just(-1.0),
        Just(2.0),
    ]
}

fn any_exponent() -> impl Strategy<Value = Exponent> {
    prop_oneof![
        Just(Exponent::NegInf),
        Just(Exponent::Zero),
        Just(Exponent::PosInf),
        finite_exponent().prop_map(Exponent::Finite),
    ]
}

fn pt(v: &[f64]) -> PositiveTuple {
    PositiveTuple::from_slice(v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn functional_scale_covariance(x in tuple(1..=10, 1e-6, 1e6), c in log_uniform(1e-3, 1e3), p in finite_exponent()) {
        let p = Exponent::Finite(p);
        let base = holder_functional(&pt(&x), p).unwrap();
        let scaled: Vec<f64> = x.iter().map(|v| v * c).collect();
        let got = holder_functional(&pt(&scaled), p).unwrap();
        prop_assert!(rel(got, c * base) < 1e-12, "{} vs {}", got, c * base);
    }

    #[test]
    fn quotient_scale_invariance((a, b) in paired(1..=10, 1e-6, 1e6), c in log_uniform(1e-3, 1e3), d in log_uniform(1e-3, 1e3), p in any_exponent()) {
        let base = lhs_quotient(&PairedTuples::from_slices(&a, &b).unwrap(), p).unwrap();
        let ca: Vec<f64> = a.iter().map(|v| v * c).collect();
        let db: Vec<f64> = b.iter().map(|v| v * d).collect();
        let got = lhs_quotient(&PairedTuples::from_slices(&ca, &db).unwrap(), p).unwrap();
        prop_assert!(rel(got, c / d * base) < 1e-12);
    }

    #[test]
    fn simultaneous_permutation_invariance((a, b) in paired(1..=10, 1e-6, 1e6), p in any_exponent(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let pair = PairedTuples::from_slices(&a, &b).unwrap();
        let mut perm: Vec<usize> = (0..a.len()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let shuffled = pair.permuted(&perm).unwrap();
        prop_assert!(rel(lhs_quotient(&shuffled, p).unwrap(), lhs_quotient(&pair, p).unwrap()) < 1e-14);
        if p != Exponent::Zero {
            prop_assert!(rel(holder_functional(shuffled.a(), p).unwrap(), holder_functional(pair.a(), p).unwrap()) < 1e-14);
        }
    }

    #[test]
    fn sign_flip_duality((a, b) in paired(1..=10, 1e-6, 1e6), q in 0.01..64.0f64) {
        // negating p equals swapping the tuples and taking reciprocals
        let pair = PairedTuples::from_slices(&a, &b).unwrap();
        let ra: Vec<f64> = a.iter().map(|v| 1.0 / v).collect();
        let rb: Vec<f64> = b.iter().map(|v| 1.0 / v).collect();
        let neg = lhs_quotient(&pair, Exponent::Finite(-q)).unwrap();
        let swapped = lhs_quotient(&PairedTuples::from_slices(&rb, &ra).unwrap(), Exponent::Finite(q)).unwrap();
        let same = lhs_quotient(&PairedTuples::from_slices(&ra, &rb).unwrap(), Exponent::Finite(q)).unwrap();
        prop_assert!(rel(neg, swapped) < 1e-12);
        prop_assert!(rel(neg, 1.0 / same) < 1e-12);
    }

    #[test]
    fn infinite_exponent_limits(
        (a, b) in paired(2..=8, 1e-3, 1e3),
        ia in any::<prop::sample::Index>(),
        ib in any::<prop::sample::Index>(),
    ) {
        // unique maxima with second/max <= 0.9
        let (mut a, mut b) = (a, b);
        let n = a.len();
        let (ia, ib) = (ia.index(n), ib.index(n));
        a[ia] = a.iter().copied().fold(0.0, f64::max) / 0.9;
        b[ib] = b.iter().copied().fold(0.0, f64::max) / 0.9;
        let pair = PairedTuples::from_slices(&a, &b).unwrap();
        let lim = lhs_quotient(&pair, Exponent::PosInf).unwrap();
        prop_assert!(rel(lhs_quotient(&pair, Exponent::Finite(2f64.powi(20))).unwrap(), lim) < 1e-6);
        let mut a2 = a.clone();
        let mut b2 = b.clone();
        a2[ia] = a.iter().copied().fold(f64::INFINITY, f64::min) * 0.9;
        b2[ib] = b.iter().copied().fold(f64::INFINITY, f64::min) * 0.9;
        let pair = PairedTuples::from_slices(&a2, &b2).unwrap();
        let lim = lhs_quotient(&pair, Exponent::NegInf).unwrap();
        prop_assert!(rel(lhs_quotient(&pair, Exponent::Finite(-(2f64.powi(20)))).unwrap(), lim) < 1e-6);
    }

    #[test]
    fn small_exponent_matches_first_order_expansion((a, b) in paired(1..=10, 1e-3, 1e3), p in prop_oneof![Just(1e-7), Just(-1e-7), Just(1e-6)]) {
        // ln LHS_p = ln GM + p·(Var ln a − Var ln b)/2 + O(p²)
        let pair = PairedTuples::from_slices(&a, &b).unwrap();
        let gm = geometric_mean_ratio(&pair).unwrap();
        let predicted = gm * (p * (common::log_variance(&a) - common::log_variance(&b)) / 2.0).exp();
        let got = lhs_quotient(&pair, Exponent::Finite(p)).unwrap();
        prop_assert!(rel(got, predicted) < 1e-9, "{} vs {}", got, predicted);
        let exact = common::ln_quotient_small_p(&a, &b, p).exp();
        prop_assert!(rel(got, exact) < 1e-13);
    }

    #[test]
    fn main_inequality_is_strict((a, b) in paired(2..=10, 1e-6, 1e6), p in any_exponent()) {
        let pair = PairedTuples::from_slices(&a, &b).unwrap();
        let r = check_main_inequality(&pair, p).unwrap();
        prop_assert_eq!(r.verdict, Verdict::HoldsStrict);
        prop_assert_eq!(r.gap, r.rhs - r.lhs);
        // worst-case arrangement: the sorted pairing's ratio sum still dominates
        let worst = extremal_ratio_sums(&pair).unwrap().min_sum;
        prop_assert!(r.lhs < worst);
    }

    #[test]
    fn zero_exponent_chain((a, b) in paired(1..=10, 1e-6, 1e6)) {
        let pair = PairedTuples::from_slices(&a, &b).unwrap();
        let c = am_gm_chain(&pair).unwrap();
        prop_assert!(c.is_ordered(1e-12));
        let r = check_main_inequality(&pair, Exponent::Zero).unwrap();
        prop_assert_eq!(r.lhs, c.gm);
        prop_assert!(r.lhs <= c.am * (1.0 + 1e-12));
        if a.len() >= 2 {
            prop_assert!(c.am < c.sum);
        }
    }

    #[test]
    fn equal_ratios_make_gm_equal_am(x in tuple(1..=10, 1e-3, 1e3), r in log_uniform(1e-3, 1e3)) {
        let a: Vec<f64> = x.iter().map(|v| v * r).collect();
        let c = am_gm_chain(&PairedTuples::from_slices(&a, &x).unwrap()).unwrap();
        prop_assert!(rel(c.gm, c.am) < 1e-12);
    }

    #[test]
    fn rearrangement_bounds_every_permutation((a, b) in paired(1..=8, 1e-6, 1e6), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let pair = PairedTuples::from_slices(&a, &b).unwrap();
        let bounds = extremal_ratio_sums(&pair).unwrap();
        prop_assert!(bounds.min_sum <= bounds.max_sum);
        prop_assert!(rel(permuted_ratio_sum(&pair, &bounds.min_perm).unwrap(), bounds.min_sum) < 1e-12);
        prop_assert!(rel(permuted_ratio_sum(&pair, &bounds.max_perm).unwrap(), bounds.max_sum) < 1e-12);
        let mut perm: Vec<usize> = (0..a.len()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let s = permuted_ratio_sum(&pair, &perm).unwrap();
        prop_assert!(bounds.min_sum <= s * (1.0 + 1e-15) && s <= bounds.max_sum * (1.0 + 1e-15));
        // ascending pairing is the smallest right side
        prop_assert!(bounds.min_sum <= rhs_ratio_sum(&pair).unwrap() * (1.0 + 1e-15));
    }

    #[test]
    fn merge_residual_small(x in tuple(2..=10, 1e-6, 1e6), p in prop_oneof![(-64.0..-0.5f64), (0.5..64.0f64)]) {
        prop_assert!(merge_identity_residual(&pt(&x), Exponent::Finite(p)).unwrap() <= 1e-12);
    }

    #[test]
    fn stream_matches_batch((a, b) in paired(1..=60, 1e-6, 1e6), p in prop_oneof![(-8.0..-0.1f64), (0.1..8.0f64)]) {
        let mut acc = RatioStreamAccumulator::new(Exponent::Finite(p)).unwrap();
        for (&x, &y) in a.iter().zip(&b) {
            acc.push(x, y).unwrap();
        }
        let c = acc.prefix_check().unwrap();
        prop_assert_eq!(c.direction, if p > 0.0 { Direction::Le } else { Direction::Ge });
        let pair = PairedTuples::from_slices(&a, &b).unwrap();
        let la = log_power_sum(pair.a(), p).unwrap();
        let lr = log_power_sum(pair.b(), p).unwrap() + p * rhs_ratio_sum(&pair).unwrap().ln();
        prop_assert!((c.log_lhs - la).abs() <= 1e-10 * la.abs().max(1.0));
        prop_assert!((c.log_rhs - lr).abs() <= 1e-10 * lr.abs().max(1.0));
        let expected = if a.len() == 1 { Verdict::EqualityN1 } else { Verdict::HoldsStrict };
        prop_assert_eq!(c.report.verdict, expected);
    }

    #[test]
    fn stream_is_order_insensitive((a, b) in paired(1..=60, 1e-6, 1e6), p in prop_oneof![(-8.0..-0.1f64), (0.1..8.0f64)]) {
        let mut fwd = RatioStreamAccumulator::new(Exponent::Finite(p)).unwrap();
        let mut rev = fwd.clone();
        for (&x, &y) in a.iter().zip(&b) {
            fwd.push(x, y).unwrap();
        }
        for (&x, &y) in a.iter().zip(&b).rev() {
            rev.push(x, y).unwrap();
        }
        prop_assert!(rel(fwd.ratio_sum(), rev.ratio_sum()) <= 1e-14);
        prop_assert!((fwd.log_sum_a_p() - rev.log_sum_a_p()).abs() <= 1e-14 * fwd.log_sum_a_p().abs().max(1.0));
        prop_assert!((fwd.log_sum_b_p() - rev.log_sum_b_p()).abs() <= 1e-14 * fwd.log_sum_b_p().abs().max(1.0));
    }
}

#[test]
fn stream_random_1000_pairs_p2() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
    let a = common::log_uniform_vec(&mut rng, 1000, 1e-6, 1e6);
    let b = common::log_uniform_vec(&mut rng, 1000, 1e-6, 1e6);
    let mut acc = RatioStreamAccumulator::new(Exponent::Finite(2.0)).unwrap();
    for (k, (&x, &y)) in a.iter().zip(&b).enumerate() {
        acc.push(x, y).unwrap();
        let v = acc.prefix_check().unwrap().report.verdict;
        assert_eq!(v, if k == 0 { Verdict::EqualityN1 } else { Verdict::HoldsStrict });
    }
}
