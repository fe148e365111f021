//! Rank statistics estimating τ, ρ, φ and ξ from a sample.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::copula::SampleBatch;
use crate::error::{Error, Result};
use crate::measures::MeasureVector;

/// A permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankVector(Vec<usize>);

impl RankVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Ranks starting at 1. Exact ties are broken by uniform jitter drawn from `seed`.
pub fn ranks(values: &[f64], seed: u64) -> RankVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let jitter: Vec<u64> = values.iter().map(|_| rng.gen()).collect();
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]).then(jitter[i].cmp(&jitter[j])));

    let mut out = vec![0; values.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank + 1;
    }
    RankVector(out)
}

/// Number of pairs `i < j` with `xs[i] > xs[j]`, by merge sort. Sorts `xs`.
pub fn count_inversions(xs: &mut [usize]) -> u64 {
    let mut buf = xs.to_vec();
    merge_count(xs, &mut buf)
}

fn merge_count(xs: &mut [usize], buf: &mut [usize]) -> u64 {
    let n = xs.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = merge_count(&mut xs[..mid], &mut buf[..mid]) + merge_count(&mut xs[mid..], &mut buf[mid..]);

    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if xs[i] <= xs[j] {
            buf[k] = xs[i];
            i += 1;
        } else {
            buf[k] = xs[j];
            j += 1;
            count += (mid - i) as u64;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&xs[i..mid]);
    k += mid - i;
    buf[k..k + n - j].copy_from_slice(&xs[j..n]);
    xs.copy_from_slice(&buf[..n]);
    count
}

/// Rank estimates of all four measures.
///
/// ```text
/// τ̂ = (concordant − discordant)/C(n,2)
/// ρ̂ = Pearson correlation of the rank vectors
/// φ̂ = 1 − 3Σ|R_i − S_i|/(n² − 1)
/// ξ̂ = 1 − 3Σ|r_(i+1) − r_(i)|/(n² − 1),  V-ranks in ascending U order
/// ```
pub fn estimate_all(batch: &SampleBatch, seed: u64) -> Result<MeasureVector> {
    let n = batch.len();
    if n < 2 {
        return Err(Error::domain(format!("need at least 2 pairs, got {n}")));
    }
    let ru = ranks(&batch.us(), seed);
    let rv = ranks(&batch.vs(), seed.wrapping_add(1));
    let (ru, rv) = (ru.as_slice(), rv.as_slice());

    // V-ranks listed in ascending U order
    let mut by_u = vec![0usize; n];
    for (i, &r) in ru.iter().enumerate() {
        by_u[r - 1] = rv[i];
    }

    let nf = n as f64;
    let denom = nf * nf - 1.0;

    let xi_sum: f64 = by_u.windows(2).map(|w| w[0].abs_diff(w[1]) as f64).sum();
    let xi = 1.0 - 3.0 * xi_sum / denom;

    let phi_sum: f64 = ru.iter().zip(rv).map(|(a, b)| a.abs_diff(*b) as f64).sum();
    let phi = 1.0 - 3.0 * phi_sum / denom;

    let mean = (nf + 1.0) / 2.0;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&a, &b) in ru.iter().zip(rv) {
        let (x, y) = (a as f64 - mean, b as f64 - mean);
        sxy += x * y;
        sxx += x * x;
        syy += y * y;
    }
    let rho = sxy / (sxx * syy).sqrt();

    let pairs = nf * (nf - 1.0) / 2.0;
    let discordant = count_inversions(&mut by_u) as f64;
    let tau = (pairs - 2.0 * discordant) / pairs;

    Ok(MeasureVector { tau, rho, phi, xi })
}
