//! Kendall's τ, Spearman's ρ, Spearman's footrule φ and Chatterjee's ξ of
//! lower semilinear copulas.
//!
//! All four depend on the diagonal alone:
//!
//! ```text
//! τ = 4∫δ²(t)/t dt − 1      ρ = 12∫t·δ(t) dt − 3      φ = 6∫δ(t) dt − 2
//! ξ = τ − 2∫(tδ′(t) − δ(t))(2δ(t) − tδ′(t))/t dt
//! ```

use serde::Serialize;

use crate::diagonal::Diagonal;
use crate::error::{check_unit, Error, Result};
use crate::quadrature::integrate;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureVector {
    pub tau: f64,
    pub rho: f64,
    pub phi: f64,
    pub xi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Concordance {
    pub tau: f64,
    pub rho: f64,
    pub phi: f64,
}

fn square_over_t(d: &Diagonal) -> impl Fn(f64) -> f64 + '_ {
    move |t| {
        if t == 0.0 {
            0.0
        } else {
            let v = d.value(t);
            v * v / t
        }
    }
}

/// τ, ρ and φ, each within `tol` of the exact value.
pub fn concordance(d: &Diagonal, tol: f64) -> Result<Concordance> {
    let knots = d.knots();
    let a = integrate(square_over_t(d), knots, tol / 4.0)?;
    let moment = integrate(|t| t * d.value(t), knots, tol / 12.0)?;
    let mass = integrate(|t| d.value(t), knots, tol / 6.0)?;
    Ok(Concordance {
        tau: 4.0 * a - 1.0,
        rho: 12.0 * moment - 3.0,
        phi: 6.0 * mass - 2.0,
    })
}

/// Non-negative defect `∫(tδ′ − δ)(2δ − tδ′)/t`; ξ falls short of τ by twice this.
pub fn xi_defect(d: &Diagonal, tol: f64) -> Result<f64> {
    integrate(
        |t| {
            if t == 0.0 {
                return 0.0;
            }
            let v = d.value(t);
            let ts = t * d.slope(t);
            (ts - v) * (2.0 * v - ts) / t
        },
        d.knots(),
        tol,
    )
}

/// ξ from the closed form in τ and the shape-constraint defect.
pub fn xi_closed(d: &Diagonal, tol: f64) -> Result<f64> {
    let a = integrate(square_over_t(d), d.knots(), tol / 8.0)?;
    let defect = xi_defect(d, tol / 8.0)?;
    Ok(4.0 * a - 1.0 - 2.0 * defect)
}

pub fn measure_vector(d: &Diagonal, tol: f64) -> Result<MeasureVector> {
    let c = concordance(d, tol)?;
    let xi = xi_closed(d, tol)?;
    Ok(MeasureVector {
        tau: c.tau,
        rho: c.rho,
        phi: c.phi,
        xi,
    })
}

/// Families with known closed-form measure values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AnalyticFamily {
    Ua { a: f64 },
    La { a: f64 },
    Power { p: f64 },
    Frechet { alpha: f64 },
    /// The Marshall–Olkin copula itself, which is not lower semilinear unless `α = β`.
    MarshallOlkin { alpha: f64, beta: f64 },
}

impl AnalyticFamily {
    /// The lower semilinear diagonal of this family, when it has one.
    pub fn diagonal(&self) -> Option<Result<Diagonal>> {
        match *self {
            AnalyticFamily::Ua { a } => Some(Diagonal::upper_extremal(a)),
            AnalyticFamily::La { a } => Some(Diagonal::lower_extremal(a)),
            AnalyticFamily::Power { p } => Some(Diagonal::power(p)),
            AnalyticFamily::Frechet { alpha } => Some(Diagonal::frechet(alpha)),
            AnalyticFamily::MarshallOlkin { .. } => None,
        }
    }
}

pub fn analytic_measures(family: AnalyticFamily) -> Result<MeasureVector> {
    let mv = |tau, rho, phi, xi| MeasureVector { tau, rho, phi, xi };
    Ok(match family {
        AnalyticFamily::Ua { a } => {
            check_unit("a", a)?;
            let a2 = a * a;
            mv(1.0 - a2, 1.0 - a2 * a, 1.0 - a2, 1.0 - a2)
        }
        AnalyticFamily::La { a } => {
            check_unit("a", a)?;
            let a3 = a * a * a;
            mv(a3 * a, a3 * a, a3, a3 * a)
        }
        AnalyticFamily::Power { p } => {
            if !(1.0..=2.0).contains(&p) {
                return Err(Error::domain(format!("p = {p} is outside [1, 2]")));
            }
            let q = 2.0 - p;
            mv(q / p, 3.0 * q / (p + 2.0), 2.0 * q / (p + 1.0), q * q / p)
        }
        AnalyticFamily::Frechet { alpha } => {
            check_unit("alpha", alpha)?;
            mv(alpha * (alpha + 2.0) / 3.0, alpha, alpha, alpha * alpha)
        }
        AnalyticFamily::MarshallOlkin { alpha, beta } => {
            check_unit("alpha", alpha)?;
            check_unit("beta", beta)?;
            if alpha == 0.0 && beta == 0.0 {
                return Ok(mv(0.0, 0.0, 0.0, 0.0));
            }
            let ab = alpha * beta;
            let m = alpha.min(beta);
            mv(
                ab / (alpha - ab + beta),
                3.0 * ab / (2.0 * alpha - ab + 2.0 * beta),
                2.0 * m / (3.0 - m),
                2.0 * alpha * ab / (3.0 * alpha + beta - 2.0 * ab),
            )
        }
    })
}
