#![allow(dead_code)]

use num_complex::Complex;
use olctkit::gaussian::{gaussian_field, GaussianSpec};
use olctkit::{ComplexField2D, Grid2D, OLCTParams};
use proptest::prelude::*;

/// Symplectic parameters with `|b| ∈ [0.4, 2]`, moderate chirps and offsets.
pub fn params() -> impl Strategy<Value = OLCTParams<f64>> {
    (-1.5..1.5f64, 0.4..2.0f64, any::<bool>(), -1.5..1.5f64, -0.5..0.5f64, -0.5..0.5f64).prop_map(
        |(a, bm, neg, d, tau, eta)| {
            let b = if neg { -bm } else { bm };
            OLCTParams::new(a, b, (a * d - 1.0) / b, d, tau, eta).unwrap()
        },
    )
}

pub fn axis_params(a: f64, b: f64, d: f64, tau: f64, eta: f64) -> OLCTParams<f64> {
    OLCTParams::new(a, b, (a * d - 1.0) / b, d, tau, eta).unwrap()
}

/// Smooth, well-localized field: an off-center chirped Gaussian plus a small odd bump.
pub fn smooth_field(grid: Grid2D<f64>, c: (f64, f64), w: f64, chirp: f64) -> ComplexField2D<f64> {
    ComplexField2D::from_fn(grid, |a, b| {
        let r = (a - c.0).powi(2) + 0.8 * (b - c.1).powi(2);
        let g = Complex::from_polar((-w * r).exp(), chirp * (a - c.0) * (b - c.1));
        g + Complex::new(0.0, 0.2 * a * (-(a * a + b * b)).exp())
    })
}

pub fn gaussian(alpha1: f64, alpha2: f64, n: usize) -> ComplexField2D<f64> {
    let g = GaussianSpec::new(alpha1, alpha2).unwrap();
    gaussian_field(&g, &g.auto_grid(n).unwrap()).unwrap()
}

pub fn energy(f: &ComplexField2D<f64>) -> f64 {
    f.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * f.grid.weight()
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}
