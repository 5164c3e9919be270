//! Extremal pairings of the ratio sum `Σ a_k / b_σ(k)`.
//!
//! Pairing both tuples in the same sorted order minimizes the sum; pairing
//! them in opposite orders maximizes it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sum::NeumaierSum;
use crate::tuple::PairedTuples;

/// Largest `n` accepted by [`brute_force_extrema`] (8! = 40320 pairings).
pub const BRUTE_FORCE_LIMIT: usize = 8;

/// Extremal ratio sums with witnessing permutations.
///
/// Permutations are 0-based and indexed by position in `a`: `min_perm[k]` is
/// the index of the `b` element paired with `a[k]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PermutationBounds {
    pub min_sum: f64,
    pub max_sum: f64,
    pub min_perm: Vec<usize>,
    pub max_perm: Vec<usize>,
}

/// `Σ a_k / b_{perm[k]}`.
pub fn permuted_ratio_sum(pair: &PairedTuples, perm: &[usize]) -> Result<f64> {
    Ok(permuted_sum(pair, perm)?.value())
}

fn permuted_sum(pair: &PairedTuples, perm: &[usize]) -> Result<NeumaierSum> {
    if perm.len() != pair.len() {
        return Err(Error::LengthMismatch { a: pair.len(), b: perm.len() });
    }
    let (a, b) = (pair.a(), pair.b());
    let mut acc = NeumaierSum::new();
    for (k, &j) in perm.iter().enumerate() {
        let bj = *b.get(j).ok_or_else(|| Error::InvalidArgument(format!("index {j} out of range")))?;
        acc.push_ratio(a[k], bj);
    }
    Ok(acc)
}

fn sorted_indices(x: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..x.len()).collect();
    // sort_by is stable: ties keep their original order
    idx.sort_by(|&i, &j| x[i].total_cmp(&x[j]));
    idx
}

/// Closed-form extremal pairings via sorting.
pub fn extremal_ratio_sums(pair: &PairedTuples) -> Result<PermutationBounds> {
    let n = pair.len();
    let ia = sorted_indices(pair.a());
    let ib = sorted_indices(pair.b());
    let mut min_perm = vec![0; n];
    let mut max_perm = vec![0; n];
    for i in 0..n {
        min_perm[ia[i]] = ib[i];
        max_perm[ia[i]] = ib[n - 1 - i];
    }
    Ok(PermutationBounds {
        min_sum: permuted_ratio_sum(pair, &min_perm)?,
        max_sum: permuted_ratio_sum(pair, &max_perm)?,
        min_perm,
        max_perm,
    })
}

/// Exhaustive search over all `n!` pairings; `n` is capped at
/// [`BRUTE_FORCE_LIMIT`].
pub fn brute_force_extrema(pair: &PairedTuples) -> Result<PermutationBounds> {
    let n = pair.len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let first = permuted_sum(pair, &perm)?.value_dd();
    let (mut lo, mut hi) = (first, first);
    let mut min_perm = perm.clone();
    let mut max_perm = perm.clone();

    // Heap's algorithm, iterative form. Sums are compared as double-doubles:
    // distinct pairings can differ by less than one ulp of the total.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let s = permuted_sum(pair, &perm)?.value_dd();
            if s < lo {
                lo = s;
                min_perm.clone_from(&perm);
            }
            if s > hi {
                hi = s;
                max_perm.clone_from(&perm);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(PermutationBounds {
        min_sum: lo.0,
        max_sum: hi.0,
        min_perm,
        max_perm,
    })
}
