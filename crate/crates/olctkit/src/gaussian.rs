//! Anisotropic Gaussians `exp(-α₁t₁² - α₂t₂²)` and their transform in closed form.

use num_complex::Complex;

use crate::error::{OlctError, Result};
use crate::grid::{Axis, ComplexField2D, Grid2D};
use crate::olct::{validate_params, OLCTParams};
use crate::scalar::Real;
use crate::signal::Signal2D;
use crate::special::erfc;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianSpec<T> {
    pub alpha1: T,
    pub alpha2: T,
}

impl<T: Real> GaussianSpec<T> {
    pub fn new(alpha1: T, alpha2: T) -> Result<Self> {
        if !(alpha1 > T::zero() && alpha2 > T::zero()) {
            return Err(OlctError::InvalidGrid(format!(
                "Gaussian widths must be positive, got ({alpha1}, {alpha2})"
            )));
        }
        Ok(Self { alpha1, alpha2 })
    }

    pub fn isotropic(alpha: T) -> Self {
        Self { alpha1: alpha, alpha2: alpha }
    }

    /// `‖f‖₂² = π / (2 √(α₁α₂))`.
    pub fn energy(&self) -> T {
        T::PI() / (T::lit(2.0) * (self.alpha1 * self.alpha2).sqrt())
    }

    /// Half-width with Gaussian tail below `1e-12` plus a 25% margin.
    pub fn auto_half_width(&self) -> T {
        let alpha = self.alpha1.min(self.alpha2);
        T::lit(1.25) * (T::lit(1e12).ln() / alpha).sqrt()
    }

    /// Square midpoint grid of `n` nodes per axis using [`GaussianSpec::auto_half_width`].
    pub fn auto_grid(&self, n: usize) -> Result<Grid2D<T>> {
        Grid2D::square(n, self.auto_half_width())
    }
}

impl<T: Real> Signal2D<T> for GaussianSpec<T> {
    fn eval(&self, t1: T, t2: T) -> Complex<T> {
        Complex::new((-(self.alpha1 * t1 * t1) - self.alpha2 * t2 * t2).exp(), T::zero())
    }
}

/// Fraction of `∫|f|²` on one axis falling outside the cells of `axis`.
fn axis_tail_fraction(alpha: f64, axis: &Axis<f64>) -> f64 {
    let (lo, hi) = axis.extent();
    let s = (2.0 * alpha).sqrt();
    0.5 * erfc(s * hi) + 0.5 * erfc(-s * lo)
}

/// Samples the Gaussian, refusing grids that cut off more than `1e-10` of its energy.
pub fn gaussian_field<T: Real>(g: &GaussianSpec<T>, grid: &Grid2D<T>) -> Result<ComplexField2D<T>> {
    let to64 = |a: &Axis<T>| Axis { n: a.n, min: a.min.as_f64(), step: a.step.as_f64() };
    let t1 = axis_tail_fraction(g.alpha1.as_f64(), &to64(&grid.axis1));
    let t2 = axis_tail_fraction(g.alpha2.as_f64(), &to64(&grid.axis2));
    let tail = 1.0 - (1.0 - t1) * (1.0 - t2);
    if tail > 1e-10 {
        return Err(OlctError::InsufficientSupport(tail));
    }
    Ok(g.sample(grid))
}

fn closed_axis<T: Real>(p: &OLCTParams<T>, alpha: T, u: T) -> Complex<T> {
    let two = T::lit(2.0);
    let (a, b, d, tau, eta) = (p.a, p.b, p.d, p.tau, p.eta);
    let chirp = (-(two * u) * (d * tau - b * eta) + d * u * u + d * tau * tau) / (two * b);
    let s = T::lit(4.0) * b * b * alpha * alpha + a * a;
    let r = (tau - u) * (tau - u);
    // exp{-(τ-u)²(2bα + i a) / (2b s)}
    let gauss = Complex::new(-(r * two * b * alpha), -(r * a)) / (two * b * s);
    let root = Complex::new(a, two * alpha * b).sqrt().inv();
    Complex::new(chirp.cos(), chirp.sin()) * gauss.exp() * root
}

/// Transform of the Gaussian at `u`, product over axes of
/// `exp{(i/2b)(d u² + dτ² - 2u(dτ - bη))} · exp{-(τ-u)²(2bα + i a)/(2b(4b²α² + a²))} · (a + 2iαb)^{-1/2}`.
///
/// The root is principal, which agrees with the kernel's branch because `arg(a + 2iαb)` lies in `(-π, π)`.
pub fn gaussian_olct_closed<T: Real>(
    g: &GaussianSpec<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
    u: (T, T),
) -> Result<Complex<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    Ok(closed_axis(&m1, g.alpha1, u.0) * closed_axis(&m2, g.alpha2, u.1))
}

/// [`gaussian_olct_closed`] at every node of `ugrid`.
pub fn gaussian_olct_field<T: Real>(
    g: &GaussianSpec<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
    ugrid: &Grid2D<T>,
) -> Result<ComplexField2D<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    let c1: Vec<Complex<T>> = ugrid.axis1.nodes().into_iter().map(|u| closed_axis(&m1, g.alpha1, u)).collect();
    let c2: Vec<Complex<T>> = ugrid.axis2.nodes().into_iter().map(|u| closed_axis(&m2, g.alpha2, u)).collect();
    let values = c1.iter().flat_map(|a| c2.iter().map(move |b| *a * *b)).collect();
    Ok(ComplexField2D { grid: *ugrid, values })
}

/// Per-axis `s = 4b²α² + a²`; the spectral density is a Gaussian with variance `s/(4α)` around `u = τ`.
pub fn spectral_spread<T: Real>(p: &OLCTParams<T>, alpha: T) -> T {
    T::lit(4.0) * p.b * p.b * alpha * alpha + p.a * p.a
}

/// Closed-form Shannon entropies `(ℰ(|f|²), ℰ(|Of|²))` of the normalized densities.
pub fn gaussian_entropies(g: &GaussianSpec<f64>, m1: &OLCTParams<f64>, m2: &OLCTParams<f64>) -> (f64, f64) {
    use std::f64::consts::PI;
    let e = std::f64::consts::E;
    let axis_t = |alpha: f64| 0.5 * (PI * e / (2.0 * alpha)).ln();
    let axis_u = |p: &OLCTParams<f64>, alpha: f64| 0.5 * (PI * e * spectral_spread(p, alpha) / (2.0 * alpha)).ln();
    (axis_t(g.alpha1) + axis_t(g.alpha2), axis_u(m1, g.alpha1) + axis_u(m2, g.alpha2))
}
