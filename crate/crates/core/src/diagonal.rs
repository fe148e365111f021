//! Copula diagonals of lower semilinear copulas.
//!
//! A diagonal `δ` belongs to the admissible class when it is non-decreasing,
//! 2-Lipschitz, `δ(0) = 0`, `δ(1) = 1`, `t ↦ δ(t)/t` is non-decreasing and
//! `t ↦ δ(t)/t²` is non-increasing. Equivalently `δ(t) ≤ t·δ′(t) ≤ 2·δ(t)`
//! almost everywhere, which forces `t² ≤ δ(t) ≤ t`.
//!
//! The canonical representation is piecewise `c·t^e` with `e ∈ [1, 2]`. The
//! extremal diagonals `u_a` and `l_a`, the power diagonals, the alternating
//! four-piece example and every randomly generated diagonal are of this form.
//! Fréchet diagonals, Marshall–Olkin Markov-product diagonals and convex
//! mixtures carry their own analytic evaluators.

use std::fmt;

use rand::distributions::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_unit, Error, Result};

/// Default grid size for [`Diagonal::validate`].
pub const DEFAULT_GRID: usize = 10_000;

/// Tolerance applied to the non-strict inequalities checked by [`Diagonal::validate`].
pub const VALIDATION_TOL: f64 = 1e-12;

/// Family description, also the JSON schema of a diagonal config file.
///
/// ```json
/// {"kind": "mixture", "params": {
///     "components": [{"kind": "ua", "params": {"a": 0.5}}, {"kind": "power", "params": {"p": 1.5}}],
///     "weights": [0.25, 0.75]}}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case", deny_unknown_fields)]
pub enum FamilySpec {
    /// `u_a(t) = t²/a` on `[0, a]`, `t` above.
    Ua { a: f64 },
    /// `l_a(t) = a·t` on `[0, a]`, `t²` above.
    La { a: f64 },
    /// `δ_p(t) = t^p`.
    Power { p: f64 },
    /// `α·t + (1 − α)·t²`.
    Frechet { alpha: f64 },
    /// Four pieces alternating between `t·δ′ = 2δ` and `t·δ′ = δ`.
    Example23,
    /// Diagonal of the Markov product `M_{α,β}ᵀ ∗ M_{α,β}` of a Marshall–Olkin copula.
    MoProduct { alpha: f64, beta: f64 },
    Piecewise { knots: Vec<f64>, exponents: Vec<f64> },
    Mixture { components: Vec<FamilySpec>, weights: Vec<f64> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    PowerPiecewise,
    Frechet,
    MoProduct,
    Mixture,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::PowerPiecewise => "power-piecewise",
            Kind::Frechet => "frechet",
            Kind::MoProduct => "mo-product",
            Kind::Mixture => "mixture",
        })
    }
}

/// `δ(t) = c_i·t^{e_i}` on `(t_{i-1}, t_i]`, continuous, anchored at `δ(1) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerPieces {
    knots: Vec<f64>,
    exponents: Vec<f64>,
    coeffs: Vec<f64>,
}

impl PowerPieces {
    fn new(knots: Vec<f64>, exponents: Vec<f64>) -> Self {
        let m = exponents.len();
        let mut coeffs = vec![1.0; m];
        // Backward continuity: c_i·t_i^{e_i} = c_{i+1}·t_i^{e_{i+1}}.
        for i in (0..m - 1).rev() {
            let t = knots[i + 1];
            coeffs[i] = coeffs[i + 1] * pow(t, exponents[i + 1]) / pow(t, exponents[i]);
        }
        PowerPieces { knots, exponents, coeffs }
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn exponents(&self) -> &[f64] {
        &self.exponents
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Piece `i` with `t ∈ (t_{i-1}, t_i]` (piece 0 also owns `t = 0`).
    pub(crate) fn piece_closed_right(&self, t: f64) -> usize {
        let idx = self.knots[1..].partition_point(|&k| k < t);
        idx.min(self.len() - 1)
    }

    /// Piece `i` with `t ∈ [t_{i-1}, t_i)` (the last piece also owns `t = 1`).
    pub(crate) fn piece_closed_left(&self, t: f64) -> usize {
        let idx = self.knots[1..].partition_point(|&k| k <= t);
        idx.min(self.len() - 1)
    }

    fn value(&self, t: f64) -> f64 {
        let i = self.piece_closed_right(t);
        self.coeffs[i] * pow(t, self.exponents[i])
    }

    fn slope(&self, t: f64) -> f64 {
        let i = self.piece_closed_left(t);
        let e = self.exponents[i];
        if e == 1.0 {
            self.coeffs[i]
        } else {
            self.coeffs[i] * e * pow(t, e - 1.0)
        }
    }
}

fn pow(t: f64, e: f64) -> f64 {
    if e == 1.0 {
        t
    } else if e == 2.0 {
        t * t
    } else {
        t.powf(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    Power(PowerPieces),
    Frechet { alpha: f64 },
    MoProduct { alpha: f64, beta: f64 },
    Mixture { parts: Vec<(f64, Diagonal)> },
}

/// A copula diagonal together with the breakpoints where it may fail to be smooth.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagonal {
    repr: Repr,
    knots: Vec<f64>,
}

impl Diagonal {
    /// `δ_M(t) = t`, the diagonal of the comonotone copula.
    pub fn comonotone() -> Self {
        Self::from_pieces(vec![0.0, 1.0], vec![1.0])
    }

    /// `δ_Π(t) = t²`, the diagonal of the independence copula.
    pub fn independence() -> Self {
        Self::from_pieces(vec![0.0, 1.0], vec![2.0])
    }

    pub fn upper_extremal(a: f64) -> Result<Self> {
        check_unit("a", a)?;
        Ok(if a == 0.0 {
            Self::comonotone()
        } else if a == 1.0 {
            Self::independence()
        } else {
            Self::from_pieces(vec![0.0, a, 1.0], vec![2.0, 1.0])
        })
    }

    pub fn lower_extremal(a: f64) -> Result<Self> {
        check_unit("a", a)?;
        Ok(if a == 0.0 {
            Self::independence()
        } else if a == 1.0 {
            Self::comonotone()
        } else {
            Self::from_pieces(vec![0.0, a, 1.0], vec![1.0, 2.0])
        })
    }

    pub fn power(p: f64) -> Result<Self> {
        check_exponent("p", p)?;
        Ok(Self::from_pieces(vec![0.0, 1.0], vec![p]))
    }

    pub fn frechet(alpha: f64) -> Result<Self> {
        check_unit("alpha", alpha)?;
        Ok(Diagonal {
            repr: Repr::Frechet { alpha },
            knots: vec![0.0, 1.0],
        })
    }

    /// `8t²/3`, `2t/3`, `4t²/3`, `t` on the quarters of `[0, 1]`.
    pub fn alternating_example() -> Self {
        Self::from_pieces(vec![0.0, 0.25, 0.5, 0.75, 1.0], vec![2.0, 1.0, 2.0, 1.0])
    }

    pub fn mo_product(alpha: f64, beta: f64) -> Result<Self> {
        check_unit("alpha", alpha)?;
        check_unit("beta", beta)?;
        Ok(Diagonal {
            repr: Repr::MoProduct { alpha, beta },
            knots: vec![0.0, 1.0],
        })
    }

    /// Power-piecewise diagonal with every exponent in `[1, 2]`.
    ///
    /// `knots` must start at 0, end at 1 and increase strictly; there is one
    /// exponent per piece. Coefficients follow from continuity and `δ(1) = 1`.
    pub fn piecewise(knots: Vec<f64>, exponents: Vec<f64>) -> Result<Self> {
        for (i, &e) in exponents.iter().enumerate() {
            check_exponent(&format!("exponents[{i}]"), e)?;
        }
        Self::piecewise_unchecked(knots, exponents)
    }

    /// Like [`Diagonal::piecewise`] but exponents may be any positive value.
    ///
    /// The result need not be an admissible diagonal; it exists so that
    /// [`Diagonal::validate`] can be pointed at invalid input.
    pub fn piecewise_unchecked(knots: Vec<f64>, exponents: Vec<f64>) -> Result<Self> {
        check_knots(&knots)?;
        if exponents.len() + 1 != knots.len() {
            return Err(Error::domain(format!(
                "{} knots need {} exponents, got {}",
                knots.len(),
                knots.len() - 1,
                exponents.len()
            )));
        }
        if let Some(e) = exponents.iter().find(|e| !(e.is_finite() && **e > 0.0)) {
            return Err(Error::domain(format!("exponent {e} must be positive and finite")));
        }
        Ok(Self::from_pieces(knots, exponents))
    }

    fn from_pieces(knots: Vec<f64>, exponents: Vec<f64>) -> Self {
        Diagonal {
            knots: knots.clone(),
            repr: Repr::Power(PowerPieces::new(knots, exponents)),
        }
    }

    /// Pointwise convex combination `Σ w_i·δ_i`.
    pub fn mix(parts: &[Diagonal], weights: &[f64]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::domain("mixture needs at least one component"));
        }
        if parts.len() != weights.len() {
            return Err(Error::domain(format!(
                "mixture has {} components but {} weights",
                parts.len(),
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w >= 0.0)) {
            return Err(Error::domain(format!("mixture weight {w} is negative or not finite")));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::domain(format!("mixture weights sum to {total}, not 1")));
        }

        let mut knots: Vec<f64> = parts.iter().flat_map(|d| d.knots.iter().copied()).collect();
        knots.sort_by(f64::total_cmp);
        knots.dedup();

        Ok(Diagonal {
            repr: Repr::Mixture {
                parts: weights.iter().copied().zip(parts.iter().cloned()).collect(),
            },
            knots,
        })
    }

    pub fn kind(&self) -> Kind {
        match self.repr {
            Repr::Power(_) => Kind::PowerPiecewise,
            Repr::Frechet { .. } => Kind::Frechet,
            Repr::MoProduct { .. } => Kind::MoProduct,
            Repr::Mixture { .. } => Kind::Mixture,
        }
    }

    /// Breakpoints `0 = t_0 < … < t_m = 1`; smooth between consecutive knots.
    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn as_power_pieces(&self) -> Option<&PowerPieces> {
        match &self.repr {
            Repr::Power(p) => Some(p),
            _ => None,
        }
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        check_unit("t", t)?;
        Ok(self.value(t))
    }

    /// Right derivative on `[0, 1)`, left derivative at `t = 1`.
    pub fn deriv(&self, t: f64) -> Result<f64> {
        check_unit("t", t)?;
        Ok(self.slope(t))
    }

    /// `δ(t)` without the domain check; `t` must lie in `[0, 1]`.
    pub fn value(&self, t: f64) -> f64 {
        match &self.repr {
            Repr::Power(p) => p.value(t),
            Repr::Frechet { alpha } => alpha * t + (1.0 - alpha) * t * t,
            Repr::MoProduct { alpha, beta } => mo_value(*alpha, *beta, t),
            Repr::Mixture { parts } => parts.iter().map(|(w, d)| w * d.value(t)).sum(),
        }
    }

    /// The fixed derivative version of [`Diagonal::deriv`] without the domain check.
    pub fn slope(&self, t: f64) -> f64 {
        match &self.repr {
            Repr::Power(p) => p.slope(t),
            Repr::Frechet { alpha } => alpha + 2.0 * (1.0 - alpha) * t,
            Repr::MoProduct { alpha, beta } => mo_slope(*alpha, *beta, t),
            Repr::Mixture { parts } => parts.iter().map(|(w, d)| w * d.slope(t)).sum(),
        }
    }

    /// Checks every defining constraint on a uniform grid of `grid_n` points
    /// plus all knots. Failures are collected, never returned as errors.
    pub fn validate(&self, grid_n: usize) -> ValidationReport {
        validate_function(self, grid_n)
    }

    /// Returns `a` when this diagonal coincides with `u_a` on a `10^4` grid.
    pub fn as_upper_extremal(&self) -> Option<f64> {
        // δ(t)/t is non-decreasing, so {t > 0 : δ(t) = t} is an interval [a, 1].
        let a = self.snap_to_knot(first_hit(|t| self.value(t) / t >= 1.0 - 1e-14));
        let ua = Diagonal::upper_extremal(a).ok()?;
        self.agrees_with(&ua).then_some(a)
    }

    /// Returns `a` when this diagonal coincides with `l_a` on a `10^4` grid.
    pub fn as_lower_extremal(&self) -> Option<f64> {
        let a = self.snap_to_knot(first_hit(|t| self.value(t) / (t * t) <= 1.0 + 1e-14));
        let la = Diagonal::lower_extremal(a).ok()?;
        self.agrees_with(&la).then_some(a)
    }

    fn snap_to_knot(&self, t: f64) -> f64 {
        self.knots
            .iter()
            .copied()
            .find(|k| (k - t).abs() <= 1e-10)
            .unwrap_or(t)
    }

    fn agrees_with(&self, other: &Diagonal) -> bool {
        (0..=DEFAULT_GRID).all(|i| {
            let t = i as f64 / DEFAULT_GRID as f64;
            (self.value(t) - other.value(t)).abs() <= 1e-12
        })
    }
}

/// Smallest `t ∈ (0, 1]` with `hit(t)`, assuming `hit` is monotone and `hit(1)` holds.
fn first_hit(hit: impl Fn(f64) -> bool) -> f64 {
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    if hit(f64::MIN_POSITIVE.sqrt()) {
        return 0.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if mid > 0.0 && hit(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

fn check_exponent(name: &str, e: f64) -> Result<()> {
    if (1.0..=2.0).contains(&e) {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} = {e} is outside [1, 2]")))
    }
}

fn check_knots(knots: &[f64]) -> Result<()> {
    if knots.len() < 2 {
        return Err(Error::domain("need at least the knots 0 and 1"));
    }
    if knots[0] != 0.0 || knots[knots.len() - 1] != 1.0 {
        return Err(Error::domain("knots must start at 0 and end at 1"));
    }
    if let Some(w) = knots.windows(2).find(|w| !(w[0] < w[1])) {
        return Err(Error::domain(format!(
            "knots must be strictly increasing (found {} followed by {})",
            w[0], w[1]
        )));
    }
    Ok(())
}

// Marshall–Olkin Markov-product diagonal. For α ∉ {0, 1/2}
//   δ(t) = t²·((1−α)² − α²·t^γ)/(1−2α),  γ = β(1−2α)/α,
// rewritten as t²·(1 − K·expm1(γ ln t)) with K = α²/(1−2α), which stays
// accurate as α → 1/2.
fn mo_value(alpha: f64, beta: f64, t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let t2 = t * t;
    if alpha == 0.0 {
        t2
    } else if alpha == 0.5 {
        t2 * (1.0 - 0.5 * beta * t.ln())
    } else {
        let gamma = beta * (1.0 - 2.0 * alpha) / alpha;
        let k = alpha * alpha / (1.0 - 2.0 * alpha);
        t2 - k * (t2 * (gamma * t.ln()).exp_m1())
    }
}

fn mo_slope(alpha: f64, beta: f64, t: f64) -> f64 {
    if t == 0.0 {
        // δ ~ t^{2-β} only when α = 1; the slope at 0 is 1 iff that exponent is 1.
        return if alpha == 1.0 && beta == 1.0 { 1.0 } else { 0.0 };
    }
    if alpha == 0.0 {
        2.0 * t
    } else if alpha == 0.5 {
        2.0 * t - beta * t * t.ln() - 0.5 * beta * t
    } else {
        let gamma = beta * (1.0 - 2.0 * alpha) / alpha;
        let k = alpha * alpha / (1.0 - 2.0 * alpha);
        let l = gamma * t.ln();
        2.0 * t - 2.0 * k * t * l.exp_m1() - alpha * beta * t * l.exp()
    }
}

/// Builds the diagonal described by `spec`.
pub fn make_family(spec: &FamilySpec) -> Result<Diagonal> {
    match spec {
        FamilySpec::Ua { a } => Diagonal::upper_extremal(*a),
        FamilySpec::La { a } => Diagonal::lower_extremal(*a),
        FamilySpec::Power { p } => Diagonal::power(*p),
        FamilySpec::Frechet { alpha } => Diagonal::frechet(*alpha),
        FamilySpec::Example23 => Ok(Diagonal::alternating_example()),
        FamilySpec::MoProduct { alpha, beta } => Diagonal::mo_product(*alpha, *beta),
        FamilySpec::Piecewise { knots, exponents } => {
            Diagonal::piecewise(knots.clone(), exponents.clone())
        }
        FamilySpec::Mixture { components, weights } => {
            let parts = components.iter().map(make_family).collect::<Result<Vec<_>>>()?;
            Diagonal::mix(&parts, weights)
        }
    }
}

/// Draws a random power-piecewise diagonal.
///
/// The number of pieces is uniform on `1..=max_pieces`, interior knots are
/// sorted uniforms and exponents are uniform on `[1, 2]`.
pub fn random_diagonal(seed: u64, max_pieces: usize) -> Result<Diagonal> {
    if max_pieces == 0 {
        return Err(Error::domain("max_pieces must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pieces = rng.gen_range(1..=max_pieces);

    let mut knots = Vec::with_capacity(pieces + 1);
    knots.push(0.0);
    let mut interior: Vec<f64> = (1..pieces).map(|_| rng.sample(Open01)).collect();
    interior.sort_by(f64::total_cmp);
    interior.dedup();
    knots.extend(interior);
    knots.push(1.0);

    let exponents = (1..knots.len()).map(|_| rng.gen_range(1.0..=2.0)).collect();
    Diagonal::piecewise(knots, exponents)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    StartsAtZero,
    EndsAtOne,
    Finite,
    AboveSquare,
    BelowIdentity,
    NonDecreasing,
    Lipschitz,
    RatioNonDecreasing,
    SquareRatioNonIncreasing,
    SlopeAtLeastValue,
    SlopeAtMostTwiceValue,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constraint::StartsAtZero => "δ(0) = 0 violated",
            Constraint::EndsAtOne => "δ(1) = 1 violated",
            Constraint::Finite => "δ(t) finite violated",
            Constraint::AboveSquare => "δ(t) ≥ t² violated",
            Constraint::BelowIdentity => "δ(t) ≤ t violated",
            Constraint::NonDecreasing => "δ non-decreasing violated",
            Constraint::Lipschitz => "δ 2-Lipschitz violated",
            Constraint::RatioNonDecreasing => "δ(t)/t non-decreasing violated",
            Constraint::SquareRatioNonIncreasing => "δ(t)/t² non-increasing violated",
            Constraint::SlopeAtLeastValue => "δ(t) ≤ t·δ′(t) violated",
            Constraint::SlopeAtMostTwiceValue => "t·δ′(t) ≤ 2·δ(t) violated",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub constraint: Constraint,
    /// Grid location of the failure.
    pub t: f64,
    /// `rhs − lhs` of the violated inequality; negative.
    pub slack: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at t={} (slack {:e})", self.constraint, self.t, self.slack)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub points_checked: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, constraint: Constraint) -> bool {
        self.violations.iter().any(|v| v.constraint == constraint)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass ({} points checked)", self.points_checked);
        }
        writeln!(
            f,
            "fail ({} violations over {} points)",
            self.violations.len(),
            self.points_checked
        )?;
        const SHOWN: usize = 20;
        for v in self.violations.iter().take(SHOWN) {
            writeln!(f, "  {v}")?;
        }
        if self.violations.len() > SHOWN {
            writeln!(f, "  … {} more", self.violations.len() - SHOWN)?;
        }
        Ok(())
    }
}

struct Checker {
    violations: Vec<Violation>,
}

impl Checker {
    /// Records a violation of `lhs ≤ rhs` beyond the relative tolerance.
    fn le(&mut self, constraint: Constraint, t: f64, lhs: f64, rhs: f64) {
        let scale = 1.0_f64.max(lhs.abs()).max(rhs.abs());
        if lhs - rhs > VALIDATION_TOL * scale {
            self.violations.push(Violation {
                constraint,
                t,
                slack: rhs - lhs,
            });
        }
    }
}

/// Anything evaluable like a diagonal: a value, a fixed derivative version
/// and the breakpoints between smooth pieces.
pub trait DiagonalFunction {
    fn value(&self, t: f64) -> f64;
    fn slope(&self, t: f64) -> f64;
    fn knots(&self) -> &[f64];
}

impl DiagonalFunction for Diagonal {
    fn value(&self, t: f64) -> f64 {
        Diagonal::value(self, t)
    }

    fn slope(&self, t: f64) -> f64 {
        Diagonal::slope(self, t)
    }

    fn knots(&self) -> &[f64] {
        Diagonal::knots(self)
    }
}

/// [`Diagonal::validate`] for any [`DiagonalFunction`].
pub fn validate_function<D: DiagonalFunction + ?Sized>(d: &D, grid_n: usize) -> ValidationReport {
    let grid_n = grid_n.max(2);
    let mut points: Vec<f64> = (0..grid_n).map(|i| i as f64 / (grid_n - 1) as f64).collect();
    points.extend_from_slice(d.knots());
    points.sort_by(f64::total_cmp);
    points.dedup();

    let values: Vec<f64> = points.iter().map(|&t| d.value(t)).collect();
    let mut check = Checker { violations: Vec::new() };

    for (&t, &v) in points.iter().zip(&values) {
        if !v.is_finite() {
            check.violations.push(Violation {
                constraint: Constraint::Finite,
                t,
                slack: f64::NEG_INFINITY,
            });
        }
    }
    if !check.violations.is_empty() {
        return ValidationReport {
            points_checked: points.len(),
            violations: check.violations,
        };
    }

    check.le(Constraint::StartsAtZero, 0.0, values[0].abs(), 0.0);
    check.le(Constraint::EndsAtOne, 1.0, (values[values.len() - 1] - 1.0).abs(), 0.0);

    for (&t, &v) in points.iter().zip(&values) {
        check.le(Constraint::AboveSquare, t, t * t, v);
        check.le(Constraint::BelowIdentity, t, v, t);
    }

    for i in 1..points.len() {
        let (s, t) = (points[i - 1], points[i]);
        let (ds, dt) = (values[i - 1], values[i]);
        check.le(Constraint::NonDecreasing, t, ds, dt);
        check.le(Constraint::Lipschitz, t, dt - ds, 2.0 * (t - s));

        // δ(t)/t at 0 is its limit, the right derivative there.
        let ratio_s = if s == 0.0 { d.slope(0.0) } else { ds / s };
        check.le(Constraint::RatioNonDecreasing, t, ratio_s, dt / t);
        if s > 0.0 {
            check.le(Constraint::SquareRatioNonIncreasing, t, dt / (t * t), ds / (s * s));
        }

        let m = 0.5 * (s + t);
        let (dm, slope) = (d.value(m), m * d.slope(m));
        check.le(Constraint::SlopeAtLeastValue, m, dm, slope);
        check.le(Constraint::SlopeAtMostTwiceValue, m, slope, 2.0 * dm);
    }

    ValidationReport {
        points_checked: points.len(),
        violations: check.violations,
    }
}
