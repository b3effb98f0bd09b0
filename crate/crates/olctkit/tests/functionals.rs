mod common;

use common::{gaussian, rel};
use num_complex::Complex;
use olctkit::functionals::{
    axis_central_moment, energy_centroid, log_weighted_energy, lp_norm, radial_weighted_energy, shannon_entropy,
    tail_energy, DensityField2D, RectSet, WeightSide,
};
use olctkit::gaussian::{gaussian_field, GaussianSpec};
use olctkit::signal::{Shifted, Signal2D};
use olctkit::special::gamma;
use proptest::prelude::*;
use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[test]
fn gaussian_lp_norms() {
    let (a1, a2) = (0.7, 1.6);
    let f = gaussian(a1, a2, 256);
    for p in [1.0, 1.25, 2.0, 3.5] {
        let exact = (PI / (p * (a1 * a2).sqrt())).powf(1.0 / p);
        assert!(rel(lp_norm(&f, p).unwrap(), exact) < 1e-10, "p={p}");
    }
    assert!(lp_norm(&f, f64::INFINITY).unwrap() <= 1.0);
}

#[test]
fn gaussian_moments_and_centroid() {
    let g = GaussianSpec::new(0.9, 1.4).unwrap();
    let grid = g.auto_grid(256).unwrap();
    let f = Shifted { inner: g, alpha: (0.4, -0.3) }.sample(&grid);
    let e = PI / (2.0 * (0.9f64 * 1.4).sqrt());
    let c: (f64, f64) = energy_centroid(&f);
    assert!((c.0 - 0.4).abs() < 1e-10 && (c.1 + 0.3).abs() < 1e-10);
    // |f|² has variance 1/(4α) per axis.
    assert!(rel(axis_central_moment(&f, 1), e / (4.0 * 0.9)) < 1e-9);
    assert!(rel(axis_central_moment(&f, 2), e / (4.0 * 1.4)) < 1e-9);
}

#[test]
fn gaussian_entropy() {
    let (a1, a2) = (0.6, 2.0);
    let f = gaussian(a1, a2, 256);
    let rho = DensityField2D::from_field(&f).normalized().unwrap();
    let exact = 0.5 * (PI * std::f64::consts::E / (2.0 * a1)).ln() + 0.5 * (PI * std::f64::consts::E / (2.0 * a2)).ln();
    assert!((shannon_entropy(&rho).unwrap() - exact).abs() < 1e-9);
}

#[test]
fn radial_weights_on_isotropic_gaussian() {
    let alpha = 1.0;
    let beta = 2.0 * alpha;
    let f = gaussian(alpha, alpha, 512);
    // The |x|^{±λ} weights are not smooth at the origin, so the midpoint rule converges slowly.
    for (lambda, tol) in [(0.25, 1e-4), (0.5, 1e-5), (1.5, 1e-6)] {
        let signal = PI * gamma(1.0 + lambda / 2.0) * beta.powf(-(1.0 + lambda / 2.0));
        assert!(rel(radial_weighted_energy(&f, lambda, WeightSide::Signal).unwrap(), signal) < tol, "λ={lambda}");
    }
    for lambda in [0.25, 0.5] {
        let spectral = PI * gamma(1.0 - lambda / 2.0) * beta.powf(-(1.0 - lambda / 2.0));
        assert!(rel(radial_weighted_energy(&f, lambda, WeightSide::Spectral).unwrap(), spectral) < 2e-3, "λ={lambda}");
    }
    let e = PI / beta;
    assert_eq!(radial_weighted_energy(&f, 0.0, WeightSide::Spectral).unwrap(), DensityField2D::from_field(&f).integral());
    let log_exact = PI / 2.0 * (-EULER_GAMMA - beta.ln()) / beta;
    assert!((log_weighted_energy(&f) - log_exact).abs() < 1e-3 * e);
}

#[test]
fn tails() {
    let f = gaussian(1.0, 1.0, 512);
    let total = DensityField2D::from_field(&f).integral();
    assert_eq!(tail_energy(&f, &RectSet::empty()), total);
    let big = RectSet::centered_square(100.0);
    assert_eq!(tail_energy(&f, &big), 0.0);
    // Box edges on cell edges; outside lies 1 - erf(√2 h)² of the energy.
    let h = GaussianSpec::isotropic(1.0).auto_half_width() / 4.0;
    let inside = libm_erf(2f64.sqrt() * h).powi(2);
    // The tail is small, so the O(step²) midpoint error is large relative to it.
    assert!(rel(tail_energy(&f, &RectSet::centered_square(h)), total * (1.0 - inside)) < 2e-3);
    assert!(RectSet::new((0.0, 0.0), (-1.0, 1.0)).is_err());
}

fn libm_erf(x: f64) -> f64 {
    1.0 - olctkit::special::erfc(x)
}

fn field_strategy() -> impl Strategy<Value = (f64, f64, f64, f64)> {
    (0.5..2.0f64, 0.5..2.0f64, -0.5..0.5f64, -0.5..0.5f64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lp_norm_is_homogeneous((a1, a2, s1, s2) in field_strategy(), c in 0.1..10.0f64, p in 1.0..4.0f64) {
        let g = GaussianSpec::new(a1, a2).unwrap();
        let grid = g.auto_grid(64).unwrap();
        let f = Shifted { inner: g, alpha: (s1, s2) }.sample(&grid);
        let scaled = f.map(|v| v * Complex::new(0.0, c));
        prop_assert!(rel(lp_norm(&scaled, p).unwrap(), c * lp_norm(&f, p).unwrap()) < 1e-12);
    }

    #[test]
    fn tail_shrinks_as_set_grows((a1, a2, s1, s2) in field_strategy(), r in 0.0..3.0f64, dr in 0.0..2.0f64) {
        let g = GaussianSpec::new(a1, a2).unwrap();
        let f = Shifted { inner: g, alpha: (s1, s2) }.sample(&g.auto_grid(64).unwrap());
        let small = tail_energy(&f, &RectSet::centered_square(r));
        let large = tail_energy(&f, &RectSet::centered_square(r + dr));
        prop_assert!(large <= small);
        prop_assert!(large >= 0.0);
    }

    #[test]
    fn entropy_is_shift_invariant((a1, a2, s1, s2) in field_strategy()) {
        let g = GaussianSpec::new(a1, a2).unwrap();
        let grid = g.auto_grid(128).unwrap();
        let h = |f| shannon_entropy(&DensityField2D::from_field(&f).normalized().unwrap()).unwrap();
        let base = h(gaussian_field(&g, &grid).unwrap());
        let moved = h(Shifted { inner: g, alpha: (s1, s2) }.sample(&grid));
        prop_assert!((base - moved).abs() < 1e-9);
    }
}
