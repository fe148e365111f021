//! Lower semilinear copulas `S_δ`, Marshall–Olkin copulas, conditional laws
//! and inverse-conditional sampling.

use rand::distributions::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::diagonal::Diagonal;
use crate::error::{check_unit, Error, Result};

/// Bisection budget for the upper branch of the conditional quantile.
const MAX_BISECTIONS: usize = 200;
const BISECTION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct LowerSemilinearCopula {
    diagonal: Diagonal,
}

impl LowerSemilinearCopula {
    pub fn new(diagonal: Diagonal) -> Self {
        LowerSemilinearCopula { diagonal }
    }

    pub fn diagonal(&self) -> &Diagonal {
        &self.diagonal
    }

    /// `S_δ(u, v) = v·δ(u)/u` for `v ≤ u`, `u·δ(v)/v` otherwise.
    pub fn eval(&self, u: f64, v: f64) -> Result<f64> {
        check_unit("u", u)?;
        check_unit("v", v)?;
        Ok(self.value(u, v))
    }

    pub(crate) fn value(&self, u: f64, v: f64) -> f64 {
        let (hi, lo) = if v <= u { (u, v) } else { (v, u) };
        if hi == 0.0 {
            0.0
        } else {
            lo * self.diagonal.value(hi) / hi
        }
    }

    /// `G_u(v) = P(V ≤ v | U = u)`, the partial derivative `∂₁S_δ(u, v)`.
    ///
    /// Linear below `v = u`, equal to `δ(v)/v` from `u` on, with an atom of
    /// mass [`atom_mass`](Self::atom_mass) at `v = u`.
    pub fn conditional_cdf(&self, u: f64, v: f64) -> Result<f64> {
        check_open_unit(u)?;
        check_unit("v", v)?;
        Ok(if v < u {
            v * self.lower_slope(u)
        } else {
            self.diagonal.value(v) / v
        })
    }

    /// Mass of the conditional law of `V` given `U = u` sitting at `v = u`.
    pub fn atom_mass(&self, u: f64) -> Result<f64> {
        check_open_unit(u)?;
        let d = &self.diagonal;
        Ok((2.0 * d.value(u) - u * d.slope(u)) / u)
    }

    fn lower_slope(&self, u: f64) -> f64 {
        let d = &self.diagonal;
        (u * d.slope(u) - d.value(u)) / (u * u)
    }

    /// Generalized inverse `inf{v : G_u(v) ≥ w}` of the conditional cdf.
    pub fn conditional_quantile(&self, u: f64, w: f64) -> Result<f64> {
        check_open_unit(u)?;
        check_unit("w", w)?;
        Ok(self.quantile(u, w))
    }

    fn quantile(&self, u: f64, w: f64) -> f64 {
        let slope = self.lower_slope(u);
        let below = slope * u;
        if w <= below {
            return if slope > 0.0 { (w / slope).min(u) } else { 0.0 };
        }
        let ratio = |v: f64| self.diagonal.value(v) / v;
        if w <= ratio(u) {
            return u;
        }
        // δ(v)/v is continuous and non-decreasing on [u, 1] with value 1 at 1.
        let (mut lo, mut hi) = (u, 1.0);
        for _ in 0..MAX_BISECTIONS {
            if hi - lo <= BISECTION_TOL {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if ratio(mid) >= w {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    /// Draws `n` pairs by inverse-conditional sampling.
    ///
    /// Pair `i` uses its own ChaCha stream of `seed`, so the batch does not
    /// depend on how the work is partitioned across threads.
    pub fn sample(&self, n: usize, seed: u64) -> Result<SampleBatch> {
        if n == 0 {
            return Err(Error::domain("sample size must be at least 1"));
        }
        let pairs = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(i as u64);
                let u: f64 = rng.sample(Open01);
                let w: f64 = rng.gen();
                (u, self.quantile(u, w))
            })
            .collect();
        Ok(SampleBatch { pairs, seed })
    }
}

fn check_open_unit(u: f64) -> Result<()> {
    if u > 0.0 && u < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("conditioning value u = {u} must lie in (0, 1)")))
    }
}

/// Marshall–Olkin copula `min{u^{1−α}·v, u·v^{1−β}}` with `0^0 = 1`.
pub fn marshall_olkin(alpha: f64, beta: f64, u: f64, v: f64) -> Result<f64> {
    for (name, x) in [("alpha", alpha), ("beta", beta), ("u", u), ("v", v)] {
        check_unit(name, x)?;
    }
    let pow = |x: f64, e: f64| if e == 0.0 { 1.0 } else { x.powf(e) };
    Ok((pow(u, 1.0 - alpha) * v).min(u * pow(v, 1.0 - beta)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    pub pairs: Vec<(f64, f64)>,
    pub seed: u64,
}

impl SampleBatch {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn us(&self) -> Vec<f64> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn vs(&self) -> Vec<f64> {
        self.pairs.iter().map(|p| p.1).collect()
    }
}
