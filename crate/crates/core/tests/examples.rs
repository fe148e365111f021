//! Worked examples through the public API.

mod common;

use semilinear::copula::{marshall_olkin, LowerSemilinearCopula};
use semilinear::diagonal::{random_diagonal, Constraint, Diagonal, DEFAULT_GRID};
use semilinear::estimators::{estimate_all, ranks};
use semilinear::markov::{markov_diagonal, xi_via_markov};
use semilinear::measures::{
    analytic_measures, concordance, measure_vector, xi_closed, AnalyticFamily, MeasureVector,
};
use semilinear::quadrature::{integrate, DEFAULT_TOL};
use semilinear::regions::{simulate_cloud, simulate_cloud_with, violated_pairs, RegionPair, DEFAULT_SLACK};

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

fn assert_measures(m: &MeasureVector, expected: [f64; 4], tol: f64) {
    let got = [m.tau, m.rho, m.phi, m.xi];
    for (g, e) in got.iter().zip(expected) {
        assert!(close(*g, e, tol), "{got:?} vs {expected:?}");
    }
}

#[test]
fn family_values() {
    let u = Diagonal::upper_extremal(0.5).unwrap();
    let l = Diagonal::lower_extremal(0.5).unwrap();
    assert!(close(u.eval(0.25).unwrap(), 0.125, 1e-15));
    assert!(close(l.eval(0.25).unwrap(), 0.125, 1e-15));
    assert!(close(Diagonal::frechet(0.5).unwrap().eval(0.5).unwrap(), 0.375, 1e-15));

    let p2 = Diagonal::power(2.0).unwrap();
    for t in common::grid(0.0, 1.0, 20) {
        assert!(close(p2.eval(t).unwrap(), t * t, 1e-15));
    }

    let beta: f64 = 0.8;
    let mo = Diagonal::mo_product(0.5, beta).unwrap();
    for t in common::grid(0.05, 1.0, 19) {
        assert!(close(mo.eval(t).unwrap(), t * t * (1.0 - 0.5 * beta * t.ln()), 1e-14));
    }

    for d in [u, l, p2, mo, Diagonal::alternating_example(), random_diagonal(1, 8).unwrap()] {
        assert_eq!(d.eval(1.0).unwrap(), 1.0);
    }
}

#[test]
fn derivative_values() {
    let pi = Diagonal::independence();
    assert!(close(pi.deriv(0.3).unwrap(), 0.6, 1e-15));
    assert!(close(pi.deriv(0.5).unwrap(), 1.0, 1e-15));
    // Right derivative at the kink of u_{1/2}.
    assert!(close(Diagonal::upper_extremal(0.5).unwrap().deriv(0.5).unwrap(), 1.0, 1e-15));
    assert!(close(Diagonal::power(1.5).unwrap().deriv(0.25).unwrap(), 0.75, 1e-15));
}

#[test]
fn mixtures() {
    let u = Diagonal::upper_extremal(0.5).unwrap();
    let l = Diagonal::lower_extremal(0.5).unwrap();
    let m = Diagonal::mix(&[u.clone(), l], &[0.5, 0.5]).unwrap();
    assert!(close(m.eval(0.25).unwrap(), 0.125, 1e-15));

    let alpha = 0.35;
    let f = Diagonal::mix(&[Diagonal::comonotone(), Diagonal::independence()], &[alpha, 1.0 - alpha]).unwrap();
    let frechet = Diagonal::frechet(alpha).unwrap();
    let same = Diagonal::mix(std::slice::from_ref(&u), &[1.0]).unwrap();
    for t in common::grid(0.0, 1.0, 40) {
        assert!(close(f.eval(t).unwrap(), frechet.eval(t).unwrap(), 1e-15));
        assert_eq!(same.eval(t).unwrap(), u.eval(t).unwrap());
    }
}

#[test]
fn validation_examples() {
    assert!(Diagonal::upper_extremal(0.3).unwrap().validate(DEFAULT_GRID).passed());
    assert!(Diagonal::mo_product(0.7, 0.4).unwrap().validate(DEFAULT_GRID).passed());

    let cube = Diagonal::piecewise_unchecked(vec![0.0, 1.0], vec![3.0]).unwrap();
    let report = cube.validate(DEFAULT_GRID);
    assert!(report.fails(Constraint::AboveSquare));
    assert!(report.to_string().contains("δ(t) ≥ t² violated"), "{report}");
}

#[test]
fn generator_special_cases() {
    let d = random_diagonal(42, 8).unwrap();
    assert!(d.validate(DEFAULT_GRID).passed());

    // A single piece with exponent e is δ_e; constant exponents 1 and 2 give δ_M and δ_Π.
    let single = Diagonal::piecewise(vec![0.0, 1.0], vec![1.7]).unwrap();
    let ones = Diagonal::piecewise(vec![0.0, 0.3, 0.8, 1.0], vec![1.0; 3]).unwrap();
    let twos = Diagonal::piecewise(vec![0.0, 0.3, 0.8, 1.0], vec![2.0; 3]).unwrap();
    for t in common::grid(0.0, 1.0, 50) {
        assert!(close(single.eval(t).unwrap(), t.powf(1.7), 1e-15));
        assert!(close(ones.eval(t).unwrap(), t, 1e-15));
        assert!(close(twos.eval(t).unwrap(), t * t, 1e-15));
    }

    let mut sizes = std::collections::BTreeSet::new();
    for seed in 0..200 {
        sizes.insert(random_diagonal(seed, 1).unwrap().knots().len());
    }
    assert_eq!(sizes.into_iter().collect::<Vec<_>>(), vec![2]);
}

#[test]
fn copula_values() {
    let pi = LowerSemilinearCopula::new(Diagonal::independence());
    let m = LowerSemilinearCopula::new(Diagonal::comonotone());
    let u = LowerSemilinearCopula::new(Diagonal::upper_extremal(0.5).unwrap());
    assert!(close(pi.eval(0.3, 0.6).unwrap(), 0.18, 1e-15));
    assert!(close(m.eval(0.3, 0.6).unwrap(), 0.3, 1e-15));
    assert!(close(u.eval(0.75, 0.5).unwrap(), 0.5, 1e-15));

    for a in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let s = LowerSemilinearCopula::new(Diagonal::power(2.0 - a).unwrap());
        for x in common::grid(0.0, 1.0, 20) {
            for y in common::grid(0.0, 1.0, 20) {
                let mo = marshall_olkin(a, a, x, y).unwrap();
                assert!(close(mo, s.eval(x, y).unwrap(), 1e-14), "a={a} ({x},{y})");
                if a == 0.0 {
                    assert!(close(mo, x * y, 1e-15));
                }
                if a == 1.0 {
                    assert!(close(mo, x.min(y), 1e-15));
                }
            }
        }
    }
}

#[test]
fn conditional_distributions() {
    let pi = LowerSemilinearCopula::new(Diagonal::independence());
    let m = LowerSemilinearCopula::new(Diagonal::comonotone());
    for u in [0.1, 0.4, 0.9] {
        assert_eq!(pi.atom_mass(u).unwrap(), 0.0);
        assert!(close(m.atom_mass(u).unwrap(), 1.0, 1e-15));
        for v in common::grid(0.0, 1.0, 20) {
            assert!(close(pi.conditional_cdf(u, v).unwrap(), v, 1e-15));
            let expected = if v < u { 0.0 } else { 1.0 };
            assert!(close(m.conditional_cdf(u, v).unwrap(), expected, 1e-15));
        }
    }
    let p = LowerSemilinearCopula::new(Diagonal::power(1.5).unwrap());
    assert!(close(p.atom_mass(0.25).unwrap(), 0.25, 1e-15));
}

#[test]
fn samples() {
    let m = LowerSemilinearCopula::new(Diagonal::comonotone()).sample(1000, 3).unwrap();
    assert!(m.pairs.iter().all(|(u, v)| u == v));

    let n = 100_000;
    let pi = LowerSemilinearCopula::new(Diagonal::independence()).sample(n, 11).unwrap();
    assert!(estimate_all(&pi, 11).unwrap().tau.abs() <= 0.02);

    let u = LowerSemilinearCopula::new(Diagonal::upper_extremal(0.5).unwrap()).sample(n, 12).unwrap();
    let est = estimate_all(&u, 12).unwrap();
    assert_measures(&est, [0.75, 0.875, 0.75, 0.75], 0.02);
}

#[test]
fn quadrature_examples() {
    assert!(close(integrate(|t| t, &[0.0, 1.0], 1e-12).unwrap(), 0.5, 1e-12));
    assert!(close(integrate(|t| t.powi(3), &[0.0, 1.0], 1e-12).unwrap(), 0.25, 1e-12));
    let u = Diagonal::upper_extremal(0.5).unwrap();
    let got = integrate(|t| u.value(t).powi(2) / t.max(f64::MIN_POSITIVE), &[0.0, 0.5, 1.0], 1e-12).unwrap();
    assert!(close(got, 7.0 / 16.0, 1e-12));
}

#[test]
fn measure_examples() {
    let c = concordance(&Diagonal::upper_extremal(0.5).unwrap(), DEFAULT_TOL).unwrap();
    assert!(close(c.tau, 0.75, 1e-9) && close(c.rho, 0.875, 1e-9) && close(c.phi, 0.75, 1e-9));
    let c = concordance(&Diagonal::lower_extremal(0.5).unwrap(), DEFAULT_TOL).unwrap();
    assert!(close(c.tau, 1.0 / 16.0, 1e-9) && close(c.rho, 1.0 / 16.0, 1e-9) && close(c.phi, 0.125, 1e-9));
    let c = concordance(&Diagonal::power(1.5).unwrap(), DEFAULT_TOL).unwrap();
    assert!(close(c.tau, 1.0 / 3.0, 1e-9) && close(c.rho, 3.0 / 7.0, 1e-9) && close(c.phi, 0.4, 1e-9));

    assert!(close(xi_closed(&Diagonal::power(1.5).unwrap(), DEFAULT_TOL).unwrap(), 1.0 / 6.0, 1e-9));
    assert!(close(xi_closed(&Diagonal::independence(), DEFAULT_TOL).unwrap(), 0.0, 1e-9));
    assert!(close(xi_closed(&Diagonal::frechet(0.5).unwrap(), DEFAULT_TOL).unwrap(), 0.25, 1e-9));

    let m = measure_vector(&Diagonal::upper_extremal(0.5).unwrap(), DEFAULT_TOL).unwrap();
    assert_measures(&m, [0.75, 0.875, 0.75, 0.75], 1e-9);

    let mo = analytic_measures(AnalyticFamily::MarshallOlkin { alpha: 0.1, beta: 1.0 }).unwrap();
    assert!(close(mo.phi, 2.0 / 29.0, 1e-15) && close(mo.tau, 0.1, 1e-15));
    let mo = analytic_measures(AnalyticFamily::MarshallOlkin { alpha: 0.5, beta: 0.75 }).unwrap();
    assert!(close(mo.tau, 3.0 / 7.0, 1e-15) && close(mo.xi, 0.25, 1e-15));
}

#[test]
fn markov_examples() {
    let m = markov_diagonal(&Diagonal::comonotone(), DEFAULT_TOL).unwrap();
    let pi = markov_diagonal(&Diagonal::independence(), DEFAULT_TOL).unwrap();
    for t in common::grid(0.0, 1.0, 50) {
        assert!(close(m.eval(t).unwrap(), t, 1e-12));
        assert!(close(pi.eval(t).unwrap(), t * t, 1e-12));
    }

    for p in [1.2_f64, 1.8] {
        let star = markov_diagonal(&Diagonal::power(p).unwrap(), DEFAULT_TOL).unwrap();
        for t in common::grid(0.02, 1.0, 49) {
            let expected =
                t.powf(2.0 * p - 1.0) + t * t * (p - 1.0).powi(2) * (1.0 - t.powf(2.0 * p - 3.0)) / (2.0 * p - 3.0);
            assert!(close(star.eval(t).unwrap(), expected, 1e-13));
        }
        let footrule = 6.0 * integrate(|t| star.eval(t).unwrap(), &[0.0, 1.0], 1e-12).unwrap() - 2.0;
        assert!(close(footrule, (2.0 - p).powi(2) / p, 1e-9));
    }

    assert!(close(xi_via_markov(&Diagonal::comonotone(), DEFAULT_TOL).unwrap(), 1.0, 1e-9));
    assert!(close(xi_via_markov(&Diagonal::independence(), DEFAULT_TOL).unwrap(), 0.0, 1e-9));
    let l = Diagonal::lower_extremal(0.5).unwrap();
    assert!(close(xi_via_markov(&l, DEFAULT_TOL).unwrap(), 1.0 / 16.0, 1e-9));
}

#[test]
fn region_examples() {
    assert_eq!(RegionPair::TauRho.bounds(0.75).unwrap(), (0.75, 0.875));
    let (lo, hi) = RegionPair::TauPhi.bounds(1.0 / 16.0).unwrap();
    assert!(close(lo, 1.0 / 16.0, 1e-16) && close(hi, 0.125, 1e-16));
    let (lo, hi) = RegionPair::TauXi.bounds(1.0 / 3.0).unwrap();
    assert!(close(lo, 1.0 / 6.0, 1e-16) && close(hi, 1.0 / 3.0, 1e-16));

    assert!(RegionPair::TauRho.contains(0.75, 0.875, 0.0));
    assert!(!RegionPair::TauPhi.contains(0.1, 2.0 / 29.0, 0.0));
    assert!(!RegionPair::TauXi.contains(3.0 / 7.0, 0.25, 0.0));

    let expected = [0.1, 1.0 / 14.0, 6.0 / 35.0, 1.5 - 2.0 * std::f64::consts::LN_2];
    for (pair, e) in RegionPair::ALL.into_iter().zip(expected) {
        let area = pair.area().unwrap();
        assert!(close(area.analytic, e, 1e-15) && close(area.numeric, e, 1e-8), "{pair}");
    }
}

#[test]
fn cloud_examples() {
    let m = simulate_cloud_with(1, 0, DEFAULT_TOL, |_| Ok(Diagonal::comonotone())).unwrap();
    assert_measures(&m[0], [1.0; 4], 1e-9);
    let p = simulate_cloud_with(1, 0, DEFAULT_TOL, |_| Ok(Diagonal::independence())).unwrap();
    assert_measures(&p[0], [0.0; 4], 1e-9);

    let cloud = simulate_cloud(10_000, 7, 8).unwrap();
    assert!(cloud.iter().all(|m| violated_pairs(m, DEFAULT_SLACK).is_empty()));
}

#[test]
fn rank_examples() {
    assert_eq!(ranks(&[0.2, 0.9, 0.5], 0).into_inner(), vec![1, 3, 2]);
    let sorted: Vec<f64> = (0..10).map(f64::from).collect();
    let reversed: Vec<f64> = sorted.iter().rev().copied().collect();
    assert_eq!(ranks(&sorted, 0).into_inner(), (1..=10).collect::<Vec<_>>());
    assert_eq!(ranks(&reversed, 0).into_inner(), (1..=10).rev().collect::<Vec<_>>());
}
