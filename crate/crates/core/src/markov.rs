//! Diagonal of the Markov product `S_δ ∗ S_δ` and ξ as its footrule.
//!
//! ```text
//! δ*(t) = δ(t)²/t + t²·T(t),   T(t) = ∫_t^1 ((δ(s)/s)′)² ds
//! ξ(S_δ) = 6∫δ*(t) dt − 2
//! ```
//!
//! For power-piecewise diagonals `T` is a sum of closed-form power integrals.
//! Other diagonals integrate the tail numerically; either way `T` is cached
//! at the knots so each evaluation only covers the piece containing `t`.

use std::cell::RefCell;

use crate::diagonal::{Diagonal, DiagonalFunction, PowerPieces};
use crate::error::{Error, Result};
use crate::quadrature::integrate;

#[derive(Debug, Clone)]
enum Tail {
    Pieces(PowerPieces),
    Numeric { tol: f64 },
}

#[derive(Debug, Clone)]
pub struct MarkovDiagonal {
    base: Diagonal,
    tail: Tail,
    /// `T(t_k)` for every knot; entry 0 is unused and left at infinity when
    /// the tail integral diverges at the origin.
    tail_at_knots: Vec<f64>,
}

/// `((δ(s)/s)′)² = ((s·δ′(s) − δ(s))/s²)²`
fn squared_ratio_slope(d: &Diagonal, s: f64) -> f64 {
    let g = (s * d.slope(s) - d.value(s)) / (s * s);
    g * g
}

/// `∫_a^b (c·(e−1)·s^{e−2})² ds` for one power piece, `0 < a ≤ b`.
fn piece_tail(c: f64, e: f64, a: f64, b: f64) -> f64 {
    if e == 1.0 || a == b {
        return 0.0;
    }
    let scale = c * c * (e - 1.0) * (e - 1.0);
    let k = 2.0 * e - 3.0;
    let log_ratio = (b / a).ln();
    if k == 0.0 {
        return scale * log_ratio;
    }
    // (b^k − a^k)/k without cancellation when k is small
    scale * (k * a.ln()).exp() * (k * log_ratio).exp_m1() / k
}

impl MarkovDiagonal {
    /// Builds `δ*` for `d`; numeric tails are integrated to within `tol`.
    pub fn new(d: &Diagonal, tol: f64) -> Result<Self> {
        if !(tol > 0.0) {
            return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
        }
        let knots = d.knots();
        let m = knots.len() - 1;
        let mut tail_at_knots = vec![0.0; m + 1];
        tail_at_knots[0] = f64::INFINITY;

        let tail = match d.as_power_pieces() {
            Some(pieces) => {
                for k in (1..m).rev() {
                    let (c, e) = (pieces.coeffs()[k], pieces.exponents()[k]);
                    tail_at_knots[k] = tail_at_knots[k + 1] + piece_tail(c, e, knots[k], knots[k + 1]);
                }
                Tail::Pieces(pieces.clone())
            }
            None => {
                let knot_tol = tol / (4.0 * m as f64);
                for k in (1..m).rev() {
                    let piece = integrate(|s| squared_ratio_slope(d, s), &knots[k..=k + 1], knot_tol)?;
                    tail_at_knots[k] = tail_at_knots[k + 1] + piece;
                }
                Tail::Numeric { tol }
            }
        };

        Ok(MarkovDiagonal {
            base: d.clone(),
            tail,
            tail_at_knots,
        })
    }

    pub fn base(&self) -> &Diagonal {
        &self.base
    }

    /// Index `k` of the piece `(t_k, t_{k+1}]` containing `t > 0`.
    fn piece_of(&self, t: f64) -> usize {
        let knots = self.base.knots();
        knots[1..].partition_point(|&x| x < t).min(knots.len() - 2)
    }

    /// `T(t)` for `t ∈ (0, 1]`.
    fn tail_integral(&self, t: f64) -> Result<f64> {
        let k = self.piece_of(t);
        let knots = self.base.knots();
        let upper = knots[k + 1];
        let within = match &self.tail {
            Tail::Pieces(pieces) => piece_tail(pieces.coeffs()[k], pieces.exponents()[k], t, upper),
            Tail::Numeric { tol } => {
                if t >= upper {
                    0.0
                } else {
                    // T is multiplied by t², so loosen the tolerance accordingly.
                    let local_tol = (tol / (4.0 * t * t)).min(1.0);
                    integrate(|s| squared_ratio_slope(&self.base, s), &[t, upper], local_tol)?
                }
            }
        };
        Ok(self.tail_at_knots[k + 1] + within)
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        crate::error::check_unit("t", t)?;
        if t == 0.0 {
            return Ok(0.0);
        }
        let v = self.base.value(t);
        Ok(v * v / t + t * t * self.tail_integral(t)?)
    }

    /// Right derivative of `δ*`, from the base diagonal's derivative version.
    pub fn deriv(&self, t: f64) -> Result<f64> {
        crate::error::check_unit("t", t)?;
        if t == 0.0 {
            // δ*(t)/t → (δ′(0))² + lim t·T(t) and both terms vanish unless δ′(0) > 0.
            let s = self.base.slope(0.0);
            return Ok(s * s);
        }
        let v = self.base.value(t);
        let s = self.base.slope(t);
        let square_part = (2.0 * v * s * t - v * v) / (t * t);
        Ok(square_part + 2.0 * t * self.tail_integral(t)? - t * t * squared_ratio_slope(&self.base, t))
    }
}

impl DiagonalFunction for MarkovDiagonal {
    /// Falls back to the best quadrature estimate if the tail misses its tolerance.
    fn value(&self, t: f64) -> f64 {
        self.eval(t).unwrap_or_else(best_estimate)
    }

    fn slope(&self, t: f64) -> f64 {
        self.deriv(t).unwrap_or_else(best_estimate)
    }

    fn knots(&self) -> &[f64] {
        self.base.knots()
    }
}

fn best_estimate(e: Error) -> f64 {
    best_estimate_ref(&e)
}

/// Convenience for [`MarkovDiagonal::new`].
pub fn markov_diagonal(d: &Diagonal, tol: f64) -> Result<MarkovDiagonal> {
    MarkovDiagonal::new(d, tol)
}

/// ξ as Spearman's footrule of the Markov product, `6∫δ* − 2`.
///
/// Independent of [`crate::measures::xi_closed`]: it never touches the
/// closed-form defect integral.
pub fn xi_via_markov(d: &Diagonal, tol: f64) -> Result<f64> {
    let star = MarkovDiagonal::new(d, tol / 12.0)?;
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let integral = integrate(
        |t| match star.eval(t) {
            Ok(v) => v,
            Err(e) => {
                let estimate = best_estimate_ref(&e);
                failure.borrow_mut().get_or_insert(e);
                estimate
            }
        },
        d.knots(),
        tol / 12.0,
    )?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(6.0 * integral - 2.0)
}

fn best_estimate_ref(e: &Error) -> f64 {
    match e {
        Error::Accuracy { estimate, .. } => *estimate,
        _ => f64::NAN,
    }
}
