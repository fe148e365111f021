//! The four exact regions of attainable measure pairs:
//!
//! | pair      | lower            | upper              |
//! |-----------|------------------|--------------------|
//! | `tau_rho` | `x`              | `1 − (1 − x)^1.5`  |
//! | `tau_phi` | `x`              | `x^0.75`           |
//! | `phi_rho` | `x^(4/3)`        | `1 − (1 − x)^1.5`  |
//! | `tau_xi`  | `2x²/(1 + x)`    | `x`                |

use std::fmt;
use std::str::FromStr;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::diagonal::{random_diagonal, Diagonal};
use crate::error::{check_unit, Error, Result};
use crate::measures::{measure_vector, MeasureVector};
use crate::quadrature::{integrate, DEFAULT_TOL};

/// Membership slack absorbing quadrature error.
pub const DEFAULT_SLACK: f64 = 1e-9;

/// Default number of x-grid points in boundary exports.
pub const DEFAULT_BOUNDARY_GRID: usize = 1001;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionPair {
    TauRho,
    TauPhi,
    PhiRho,
    TauXi,
}

impl RegionPair {
    pub const ALL: [RegionPair; 4] = [
        RegionPair::TauRho,
        RegionPair::TauPhi,
        RegionPair::PhiRho,
        RegionPair::TauXi,
    ];

    pub fn id(self) -> &'static str {
        match self {
            RegionPair::TauRho => "tau_rho",
            RegionPair::TauPhi => "tau_phi",
            RegionPair::PhiRho => "phi_rho",
            RegionPair::TauXi => "tau_xi",
        }
    }

    fn lower(self, x: f64) -> f64 {
        match self {
            RegionPair::TauRho | RegionPair::TauPhi => x,
            RegionPair::PhiRho => x.powf(4.0 / 3.0),
            RegionPair::TauXi => 2.0 * x * x / (1.0 + x),
        }
    }

    fn upper(self, x: f64) -> f64 {
        match self {
            RegionPair::TauRho | RegionPair::PhiRho => 1.0 - (1.0 - x).powf(1.5),
            RegionPair::TauPhi => x.powf(0.75),
            RegionPair::TauXi => x,
        }
    }

    pub fn bounds(self, x: f64) -> Result<(f64, f64)> {
        check_unit("x", x)?;
        Ok((self.lower(x), self.upper(x)))
    }

    /// `lower(x) − slack ≤ y ≤ upper(x) + slack`; `x` is clamped into `[0, 1]`.
    pub fn contains(self, x: f64, y: f64, slack: f64) -> bool {
        if !(x.is_finite() && y.is_finite()) {
            return false;
        }
        let x = x.clamp(0.0, 1.0);
        self.lower(x) - slack <= y && y <= self.upper(x) + slack
    }

    /// The `(x, y)` coordinates of a measure vector in this region's plane.
    pub fn project(self, m: &MeasureVector) -> (f64, f64) {
        match self {
            RegionPair::TauRho => (m.tau, m.rho),
            RegionPair::TauPhi => (m.tau, m.phi),
            RegionPair::PhiRho => (m.phi, m.rho),
            RegionPair::TauXi => (m.tau, m.xi),
        }
    }

    pub fn analytic_area(self) -> f64 {
        match self {
            RegionPair::TauRho => 0.1,
            RegionPair::TauPhi => 1.0 / 14.0,
            RegionPair::PhiRho => 6.0 / 35.0,
            RegionPair::TauXi => 1.5 - 2.0 * std::f64::consts::LN_2,
        }
    }

    /// Closed-form area next to the quadrature of `upper − lower`.
    pub fn area(self) -> Result<Area> {
        let numeric = integrate(|x| self.upper(x) - self.lower(x), &[0.0, 1.0], 1e-12)?;
        Ok(Area {
            analytic: self.analytic_area(),
            numeric,
        })
    }

    /// Rows `(x, lower, upper)` on a uniform grid of `grid_n ≥ 2` points.
    pub fn boundary(self, grid_n: usize) -> Result<Vec<(f64, f64, f64)>> {
        if grid_n < 2 {
            return Err(Error::domain("boundary grid needs at least 2 points"));
        }
        Ok((0..grid_n)
            .map(|i| {
                let x = i as f64 / (grid_n - 1) as f64;
                (x, self.lower(x), self.upper(x))
            })
            .collect())
    }
}

impl fmt::Display for RegionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for RegionPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RegionPair::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::domain(format!("unknown region pair {s:?} (expected tau_rho, tau_phi, phi_rho or tau_xi)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Area {
    pub analytic: f64,
    pub numeric: f64,
}

pub fn bounds(pair: RegionPair, x: f64) -> Result<(f64, f64)> {
    pair.bounds(x)
}

pub fn contains(pair: RegionPair, x: f64, y: f64, slack: f64) -> bool {
    pair.contains(x, y, slack)
}

pub fn area(pair: RegionPair) -> Result<Area> {
    pair.area()
}

/// Regions that `m` falls outside of.
pub fn violated_pairs(m: &MeasureVector, slack: f64) -> Vec<RegionPair> {
    RegionPair::ALL
        .into_iter()
        .filter(|pair| {
            let (x, y) = pair.project(m);
            !pair.contains(x, y, slack)
        })
        .collect()
}

/// Seed for point `index` of a cloud drawn with `seed`.
pub fn point_seed(seed: u64, index: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng.next_u64()
}

/// Measure vectors of `n` random diagonals with at most `max_pieces` pieces.
pub fn simulate_cloud(n: usize, seed: u64, max_pieces: usize) -> Result<Vec<MeasureVector>> {
    if max_pieces == 0 {
        return Err(Error::domain("max_pieces must be at least 1"));
    }
    simulate_cloud_with(n, seed, DEFAULT_TOL, |s| random_diagonal(s, max_pieces))
}

/// Like [`simulate_cloud`] with a custom generator called with each point's seed.
///
/// Points are computed in parallel and returned in index order.
pub fn simulate_cloud_with<G>(n: usize, seed: u64, tol: f64, generator: G) -> Result<Vec<MeasureVector>>
where
    G: Fn(u64) -> Result<Diagonal> + Sync,
{
    if n == 0 {
        return Err(Error::domain("cloud size must be at least 1"));
    }
    (0..n)
        .into_par_iter()
        .map(|i| measure_vector(&generator(point_seed(seed, i))?, tol))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_values() {
        assert_eq!(RegionPair::TauRho.bounds(0.75).unwrap(), (0.75, 0.875));
        let (lo, hi) = RegionPair::TauPhi.bounds(1.0 / 16.0).unwrap();
        assert_eq!(lo, 1.0 / 16.0);
        assert!((hi - 0.125).abs() < 1e-16);
        let (lo, hi) = RegionPair::TauXi.bounds(1.0 / 3.0).unwrap();
        assert!((lo - 1.0 / 6.0).abs() < 1e-16);
        assert_eq!(hi, 1.0 / 3.0);
        assert!(RegionPair::TauRho.bounds(1.5).is_err());
    }

    #[test]
    fn boundaries_pinch_at_the_corners() {
        for pair in RegionPair::ALL {
            assert_eq!(pair.bounds(0.0).unwrap(), (0.0, 0.0));
            assert_eq!(pair.bounds(1.0).unwrap(), (1.0, 1.0));
            for (x, lo, hi) in pair.boundary(DEFAULT_BOUNDARY_GRID).unwrap() {
                assert!(lo <= hi, "{pair} at {x}");
            }
        }
    }

    #[test]
    fn membership() {
        assert!(contains(RegionPair::TauRho, 0.75, 0.875, 0.0));
        assert!(!contains(RegionPair::TauPhi, 0.1, 2.0 / 29.0, 0.0));
        assert!(!contains(RegionPair::TauXi, 3.0 / 7.0, 0.25, 0.0));
        assert!(contains(RegionPair::TauXi, 3.0 / 7.0, 0.25, 0.01));
        assert!(!contains(RegionPair::TauXi, f64::NAN, 0.25, 0.01));
    }

    #[test]
    fn areas() {
        for pair in RegionPair::ALL {
            let a = pair.area().unwrap();
            assert!((a.analytic - a.numeric).abs() <= 1e-8, "{pair}: {a:?}");
        }
        assert!((RegionPair::TauXi.analytic_area() - 0.1137).abs() < 1e-4);
    }

    #[test]
    fn parse_ids() {
        for pair in RegionPair::ALL {
            assert_eq!(pair.id().parse::<RegionPair>().unwrap(), pair);
        }
        assert!("rho_tau".parse::<RegionPair>().is_err());
    }

    #[test]
    fn corner_clouds() {
        let m = simulate_cloud_with(1, 0, DEFAULT_TOL, |_| Ok(Diagonal::comonotone())).unwrap();
        for v in [m[0].tau, m[0].rho, m[0].phi, m[0].xi] {
            assert!((v - 1.0).abs() < 1e-10);
        }
        let p = simulate_cloud_with(1, 0, DEFAULT_TOL, |_| Ok(Diagonal::independence())).unwrap();
        for v in [p[0].tau, p[0].rho, p[0].phi, p[0].xi] {
            assert!(v.abs() < 1e-10);
        }
    }

    #[test]
    fn small_cloud_is_inside_and_reproducible() {
        let cloud = simulate_cloud(200, 7, 8).unwrap();
        assert!(cloud.iter().all(|m| violated_pairs(m, DEFAULT_SLACK).is_empty()));
        assert_eq!(cloud, simulate_cloud(200, 7, 8).unwrap());
        assert!(simulate_cloud(0, 7, 8).is_err());
    }
}
