use num_complex::Complex;

use super::params::{validate_params, OLCTParams};
use crate::error::{OlctError, Result};
use crate::grid::ComplexField2D;
use crate::scalar::Real;

/// Covariance of the transform under a time shift `f(t - α)`:
/// `O[f(· - α)](u) = O[f](u - (a₁α₁, a₂α₂)) · phase(u)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftLaw<T> {
    pub spectral_shift: (T, T),
    m1: OLCTParams<T>,
    m2: OLCTParams<T>,
    alpha: (T, T),
}

impl<T: Real> ShiftLaw<T> {
    /// Per axis `exp{i α (c u - c τ + a η - a c α / 2)}`.
    pub fn phase(&self, u1: T, u2: T) -> Complex<T> {
        let axis = |p: &OLCTParams<T>, a: T, u: T| {
            a * (p.c * u - p.c * p.tau + p.a * p.eta - p.a * p.c * a * T::lit(0.5))
        };
        let phi = axis(&self.m1, self.alpha.0, u1) + axis(&self.m2, self.alpha.1, u2);
        Complex::new(phi.cos(), phi.sin())
    }

    pub fn alpha(&self) -> (T, T) {
        self.alpha
    }
}

pub fn shift_law<T: Real>(m1: &OLCTParams<T>, m2: &OLCTParams<T>, alpha: (T, T)) -> Result<ShiftLaw<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    Ok(ShiftLaw { spectral_shift: (m1.a * alpha.0, m2.a * alpha.1), m1, m2, alpha })
}

fn derivative_line<T: Real>(g: &[Complex<T>], h: T) -> Vec<Complex<T>> {
    let n = g.len();
    let c = |k: f64| T::lit(k);
    let inv = (c(12.0) * h).recip();
    if n < 5 {
        // Too short for the five-point stencils: second-order fallback.
        return (0..n)
            .map(|i| {
                let (lo, hi) = (i.saturating_sub(1), (i + 1).min(n - 1));
                (g[hi] - g[lo]) / (h * T::lit((hi - lo) as f64))
            })
            .collect();
    }
    (0..n)
        .map(|i| {
            let d = if i >= 2 && i + 2 < n {
                g[i - 2] - g[i - 1] * c(8.0) + g[i + 1] * c(8.0) - g[i + 2]
            } else if i == 0 {
                g[0] * c(-25.0) + g[1] * c(48.0) - g[2] * c(36.0) + g[3] * c(16.0) - g[4] * c(3.0)
            } else if i == 1 {
                g[0] * c(-3.0) - g[1] * c(10.0) + g[2] * c(18.0) - g[3] * c(6.0) + g[4]
            } else if i == n - 1 {
                g[n - 1] * c(25.0) - g[n - 2] * c(48.0) + g[n - 3] * c(36.0) - g[n - 4] * c(16.0)
                    + g[n - 5] * c(3.0)
            } else {
                g[n - 1] * c(3.0) + g[n - 2] * c(10.0) - g[n - 3] * c(18.0) + g[n - 4] * c(6.0) - g[n - 5]
            };
            d * inv
        })
        .collect()
}

/// One application of `-(∂_t + (i/b)(a t + τ))` along `axis`.
fn apply_delta<T: Real>(f: &ComplexField2D<T>, p: &OLCTParams<T>, axis: usize) -> ComplexField2D<T> {
    let g = f.grid;
    let (n1, n2) = (g.n1(), g.n2());
    let ax = *g.axis(axis);
    let mut out = f.clone();
    let lines = if axis == 1 { n2 } else { n1 };
    for l in 0..lines {
        let idx = |i: usize| if axis == 1 { i * n2 + l } else { l * n2 + i };
        let line: Vec<Complex<T>> = (0..ax.n).map(|i| f.values[idx(i)]).collect();
        let d = derivative_line(&line, ax.step);
        for i in 0..ax.n {
            let t = ax.node(i);
            let chirp = Complex::new(T::zero(), (p.a * t + p.tau) / p.b);
            out.values[idx(i)] = -(d[i] + chirp * line[i]);
        }
    }
    out
}

/// Applies the differential operator of order `m` along axis 1 and `n` along axis 2.
///
/// The transform of the result equals `(-i u₁/b₁)^m (-i u₂/b₂)^n` times the transform of `f`.
pub fn derivative_op<T: Real>(
    f: &ComplexField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
    m: usize,
    n: usize,
) -> Result<ComplexField2D<T>> {
    if m + n > 2 {
        return Err(OlctError::UnsupportedOrder(m + n));
    }
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    let mut out = f.clone();
    for _ in 0..m {
        out = apply_delta(&out, &m1, 1);
    }
    for _ in 0..n {
        out = apply_delta(&out, &m2, 2);
    }
    Ok(out)
}
