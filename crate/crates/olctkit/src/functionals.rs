//! Scalar functionals of sampled fields: norms, weighted energies, moments, entropy, tails.
//!
//! Every integral is the midpoint rule of the field's grid, summed pairwise.

use crate::error::{OlctError, Result};
use crate::grid::{ComplexField2D, Grid2D};
use crate::scalar::{pairwise_sum, Real};

/// Nonnegative samples, typically `|f|²`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityField2D<T> {
    pub grid: Grid2D<T>,
    pub values: Vec<T>,
}

impl<T: Real> DensityField2D<T> {
    pub fn from_field(f: &ComplexField2D<T>) -> Self {
        Self { grid: f.grid, values: f.energy_density() }
    }

    pub fn integral(&self) -> T {
        pairwise_sum(&self.values) * self.grid.weight()
    }

    /// Scaled copy with unit integral.
    pub fn normalized(&self) -> Result<Self> {
        let mass = self.integral();
        if !(mass > T::zero()) || !mass.is_finite() {
            return Err(OlctError::NotNormalized(mass.as_f64()));
        }
        Ok(Self { grid: self.grid, values: self.values.iter().map(|v| *v / mass).collect() })
    }
}

/// Axis-aligned rectangle given by center and half-widths; membership is strict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectSet<T> {
    pub center: (T, T),
    pub half: (T, T),
}

impl<T: Real> RectSet<T> {
    pub fn new(center: (T, T), half: (T, T)) -> Result<Self> {
        if half.0 < T::zero() || half.1 < T::zero() {
            return Err(OlctError::InvalidGrid("rectangle half-widths must be nonnegative".into()));
        }
        Ok(Self { center, half })
    }

    pub fn centered_square(half: T) -> Self {
        Self { center: (T::zero(), T::zero()), half: (half, half) }
    }

    pub fn empty() -> Self {
        Self::centered_square(T::zero())
    }

    pub fn measure(&self) -> T {
        T::lit(4.0) * self.half.0 * self.half.1
    }

    pub fn contains(&self, t1: T, t2: T) -> bool {
        (t1 - self.center.0).abs() < self.half.0 && (t2 - self.center.1).abs() < self.half.1
    }

    /// Image under `(x₁, x₂) ↦ (s₁x₁, s₂x₂)` with `s ≥ 0`.
    pub fn scaled(&self, s: (T, T)) -> Self {
        Self {
            center: (self.center.0 * s.0, self.center.1 * s.1),
            half: (self.half.0 * s.0.abs(), self.half.1 * s.1.abs()),
        }
    }
}

fn density_sum<T: Real>(grid: &Grid2D<T>, values: &[T], weight: impl Fn(T, T) -> T) -> T {
    let terms: Vec<T> = values
        .iter()
        .enumerate()
        .map(|(idx, &v)| {
            let (a, b) = grid.coords(idx);
            weight(a, b) * v
        })
        .collect();
    pairwise_sum(&terms) * grid.weight()
}

impl<T: Real> DensityField2D<T> {
    pub fn scaled(&self, s: T) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|v| *v * s).collect() }
    }

    /// `(∫ ρ^{p/2})^{1/p}`: the `Lᵖ` norm of any field whose squared modulus is `ρ`.
    pub fn lp_norm_of_root(&self, p: T) -> Result<T> {
        if p.is_nan() || p < T::one() {
            return Err(OlctError::BadExponent(p.as_f64()));
        }
        if p.is_infinite() {
            return Ok(self.values.iter().fold(T::zero(), |m, v| m.max(*v)).sqrt());
        }
        let half = p * T::lit(0.5);
        let terms: Vec<T> = self.values.iter().map(|v| v.powf(half)).collect();
        Ok((pairwise_sum(&terms) * self.grid.weight()).powf(p.recip()))
    }

    pub fn radial_weighted(&self, lambda: T, side: WeightSide) -> Result<T> {
        if !(lambda >= T::zero() && lambda < T::lit(2.0)) {
            return Err(OlctError::LambdaOutOfRange(lambda.as_f64()));
        }
        if lambda == T::zero() {
            return Ok(self.integral());
        }
        let exponent = match side {
            WeightSide::Spectral => -lambda,
            WeightSide::Signal => lambda,
        };
        Ok(density_sum(&self.grid, &self.values, |a, b| (a * a + b * b).sqrt().powf(exponent)))
    }

    pub fn log_weighted(&self) -> T {
        density_sum(&self.grid, &self.values, |a, b| (a * a + b * b).sqrt().ln())
    }

    pub fn centroid(&self) -> (T, T) {
        let e = self.integral();
        if e == T::zero() {
            return (T::zero(), T::zero());
        }
        (
            density_sum(&self.grid, &self.values, |a, _| a) / e,
            density_sum(&self.grid, &self.values, |_, b| b) / e,
        )
    }

    pub fn raw_moment(&self, axis: usize) -> T {
        density_sum(&self.grid, &self.values, |a, b| if axis == 1 { a * a } else { b * b })
    }

    pub fn central_moment(&self, axis: usize) -> T {
        let c = self.centroid();
        density_sum(&self.grid, &self.values, |a, b| {
            if axis == 1 {
                (a - c.0) * (a - c.0)
            } else {
                (b - c.1) * (b - c.1)
            }
        })
    }

    pub fn tail(&self, set: &RectSet<T>) -> T {
        density_sum(&self.grid, &self.values, |a, b| if set.contains(a, b) { T::zero() } else { T::one() })
    }

    /// Every other node per axis.
    pub fn decimated(&self) -> Option<Self> {
        let grid = self.grid.decimated()?;
        let n2 = self.grid.n2();
        let values = (0..grid.len())
            .map(|idx| self.values[2 * (idx / grid.n2()) * n2 + 2 * (idx % grid.n2())])
            .collect();
        Some(Self { grid, values })
    }
}

/// `(Σ w |f|^p)^{1/p}`, or the largest modulus when `p` is infinite.
pub fn lp_norm<T: Real>(f: &ComplexField2D<T>, p: T) -> Result<T> {
    DensityField2D::from_field(f).lp_norm_of_root(p)
}

/// Which side of the Pitt inequality a radial weight belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightSide {
    /// `|u|^{-λ}`
    Spectral,
    /// `|t|^{+λ}`
    Signal,
}

/// `Σ w |x|^{∓λ} |f|²` with `|x|` the Euclidean norm of the node.
pub fn radial_weighted_energy<T: Real>(f: &ComplexField2D<T>, lambda: T, side: WeightSide) -> Result<T> {
    DensityField2D::from_field(f).radial_weighted(lambda, side)
}

/// `Σ w ln|x| |f|²`.
pub fn log_weighted_energy<T: Real>(f: &ComplexField2D<T>) -> T {
    DensityField2D::from_field(f).log_weighted()
}

/// `Σ w t_axis² |f|²`, the second moment about the origin.
pub fn axis_second_moment<T: Real>(f: &ComplexField2D<T>, axis: usize) -> T {
    DensityField2D::from_field(f).raw_moment(axis)
}

/// Energy centroid `(∫t₁|f|², ∫t₂|f|²) / ∫|f|²`.
pub fn energy_centroid<T: Real>(f: &ComplexField2D<T>) -> (T, T) {
    DensityField2D::from_field(f).centroid()
}

/// `Σ w (t_axis - t̄_axis)² |f|²`, the second moment about the energy centroid.
pub fn axis_central_moment<T: Real>(f: &ComplexField2D<T>, axis: usize) -> T {
    DensityField2D::from_field(f).central_moment(axis)
}

/// `-Σ w ρ ln ρ` for a density integrating to one within `1e-6`.
pub fn shannon_entropy<T: Real>(rho: &DensityField2D<T>) -> Result<T> {
    let mass = rho.integral();
    if (mass - T::one()).abs() > T::lit(1e-6) {
        return Err(OlctError::NotNormalized(mass.as_f64()));
    }
    let floor = T::min_positive_value().max(T::lit(1e-300));
    let terms: Vec<T> = rho
        .values
        .iter()
        .map(|&r| if r <= floor { T::zero() } else { r * r.ln() })
        .collect();
    Ok(-pairwise_sum(&terms) * rho.grid.weight())
}

/// `Σ w |f|²` over the nodes outside `set`.
pub fn tail_energy<T: Real>(f: &ComplexField2D<T>, set: &RectSet<T>) -> T {
    DensityField2D::from_field(f).tail(set)
}
