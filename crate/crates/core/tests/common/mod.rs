//! Closed-form oracle for power-piecewise diagonals.
//!
//! Coefficients are rebuilt here from knots and exponents, and every measure
//! integral is summed piece by piece from antiderivatives of `c·t^e`. Nothing
//! goes through the crate's quadrature.
#![allow(dead_code)]

use semilinear::MeasureVector;

#[derive(Debug, Clone)]
pub struct Pieces {
    pub knots: Vec<f64>,
    pub exponents: Vec<f64>,
}

impl Pieces {
    pub fn coefficients(&self) -> Vec<f64> {
        let m = self.exponents.len();
        let mut c = vec![1.0; m];
        for i in (0..m - 1).rev() {
            let t = self.knots[i + 1];
            // c_i t^{e_i} = c_{i+1} t^{e_{i+1}}
            c[i] = c[i + 1] * t.powf(self.exponents[i + 1] - self.exponents[i]);
        }
        c
    }

    /// Exact (τ, ρ, φ, ξ).
    pub fn measures(&self) -> MeasureVector {
        let c = self.coefficients();
        let (mut sq, mut moment, mut mass, mut defect) = (0.0, 0.0, 0.0, 0.0);
        for (i, (&ci, &e)) in c.iter().zip(&self.exponents).enumerate() {
            let (a, b) = (self.knots[i], self.knots[i + 1]);
            let span = |k: f64| (b.powf(k) - a.powf(k)) / k;
            let piece_sq = ci * ci * span(2.0 * e);
            sq += piece_sq;
            moment += ci * span(e + 2.0);
            mass += ci * span(e + 1.0);
            // (tδ′ − δ)(2δ − tδ′)/t = (e − 1)(2 − e)·δ²/t on a power piece
            defect += (e - 1.0) * (2.0 - e) * piece_sq;
        }
        let tau = 4.0 * sq - 1.0;
        MeasureVector {
            tau,
            rho: 12.0 * moment - 3.0,
            phi: 6.0 * mass - 2.0,
            xi: tau - 2.0 * defect,
        }
    }
}

pub fn grid(from: f64, to: f64, steps: usize) -> Vec<f64> {
    (0..=steps)
        .map(|i| from + (to - from) * i as f64 / steps as f64)
        .collect()
}
