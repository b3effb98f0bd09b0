use num_complex::Complex;

use crate::error::{OlctError, Result};
use crate::functionals::DensityField2D;
use crate::gaussian::GaussianSpec;
use crate::grid::{ComplexField2D, Grid2D};
use crate::quaternion::{minus_from_generator, ops_generators, ops_split, plus_from_generator, Quaternion};
use crate::scalar::Real;

/// Quaternion samples on a [`Grid2D`], row-major like [`ComplexField2D`].
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionField2D<T> {
    pub grid: Grid2D<T>,
    pub values: Vec<Quaternion<T>>,
}

/// A quaternion spectrum lives on the spectral grid but has the same layout.
pub type QSpectrum2D<T> = QuaternionField2D<T>;

impl<T: Real> QuaternionField2D<T> {
    pub fn new(grid: Grid2D<T>, values: Vec<Quaternion<T>>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(OlctError::GridMismatch(format!("{} values for {} nodes", values.len(), grid.len())));
        }
        if values.iter().any(|q| !q.is_finite()) {
            return Err(OlctError::NonFinite("quaternion field contains NaN or infinite samples".into()));
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: Grid2D<T>) -> Self {
        Self { grid, values: vec![Quaternion::zero(); grid.len()] }
    }

    pub fn from_fn(grid: Grid2D<T>, f: impl Fn(T, T) -> Quaternion<T>) -> Self {
        let values = (0..grid.len())
            .map(|idx| {
                let (a, b) = grid.coords(idx);
                f(a, b)
            })
            .collect();
        Self { grid, values }
    }

    /// `f = c₁ + c₂ j` with `c₁ = w + x i`, `c₂ = y + z i`.
    pub fn to_pairs(&self) -> (ComplexField2D<T>, ComplexField2D<T>) {
        let (c1, c2): (Vec<_>, Vec<_>) = self.values.iter().map(|q| q.to_pair()).unzip();
        (ComplexField2D { grid: self.grid, values: c1 }, ComplexField2D { grid: self.grid, values: c2 })
    }

    pub fn from_pairs(c1: &ComplexField2D<T>, c2: &ComplexField2D<T>) -> Result<Self> {
        c1.grid.ensure_matches(&c2.grid)?;
        let values = c1.values.iter().zip(&c2.values).map(|(a, b)| Quaternion::from_pair(*a, *b)).collect();
        Ok(Self { grid: c1.grid, values })
    }

    /// Complex generators of the split halves: `f₊ = c₊ + i c₊ j`, `f₋ = c₋ - i c₋ j`.
    pub fn ops_generators(&self) -> (ComplexField2D<T>, ComplexField2D<T>) {
        let (p, m): (Vec<_>, Vec<_>) = self.values.iter().map(|q| ops_generators(*q)).unzip();
        (ComplexField2D { grid: self.grid, values: p }, ComplexField2D { grid: self.grid, values: m })
    }

    pub fn from_generators(plus: &ComplexField2D<T>, minus: &ComplexField2D<T>) -> Result<Self> {
        plus.grid.ensure_matches(&minus.grid)?;
        let values = plus
            .values
            .iter()
            .zip(&minus.values)
            .map(|(p, m)| plus_from_generator(*p) + minus_from_generator(*m))
            .collect();
        Ok(Self { grid: plus.grid, values })
    }

    /// The halves `(f₊, f₋)` as quaternion fields.
    pub fn ops_halves(&self) -> (Self, Self) {
        let (p, m): (Vec<_>, Vec<_>) = self
            .values
            .iter()
            .map(|q| {
                let s = ops_split(*q);
                (s.q_plus, s.q_minus)
            })
            .unzip();
        (Self { grid: self.grid, values: p }, Self { grid: self.grid, values: m })
    }

    /// Embeds a complex field as `re + im i`.
    pub fn from_complex(f: &ComplexField2D<T>) -> Self {
        Self { grid: f.grid, values: f.values.iter().map(|c| Quaternion::from_complex_i(*c)).collect() }
    }

    pub fn density(&self) -> DensityField2D<T> {
        DensityField2D { grid: self.grid, values: self.values.iter().map(|q| q.norm_sq()).collect() }
    }

    pub fn energy(&self) -> T {
        self.density().integral()
    }

    pub fn scale(&self, s: T) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|q| q.scale(s)).collect() }
    }

    pub fn decimated(&self) -> Option<Self> {
        let grid = self.grid.decimated()?;
        let n2 = self.grid.n2();
        let values = (0..grid.len())
            .map(|idx| self.values[2 * (idx / grid.n2()) * n2 + 2 * (idx % grid.n2())])
            .collect();
        Some(Self { grid, values })
    }

    /// Copy moved by whole nodes, zero-filled: node `(i, j)` takes the value of `(i - s1, j - s2)`.
    pub fn shifted_by_nodes(&self, s1: isize, s2: isize) -> Self {
        let (n1, n2) = (self.grid.n1() as isize, self.grid.n2() as isize);
        let values = (0..self.grid.len())
            .map(|idx| {
                let (i, j) = ((idx as isize) / n2 - s1, (idx as isize) % n2 - s2);
                if (0..n1).contains(&i) && (0..n2).contains(&j) {
                    self.values[(i * n2 + j) as usize]
                } else {
                    Quaternion::zero()
                }
            })
            .collect();
        Self { grid: self.grid, values }
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|q| q.is_finite())
    }
}

/// `∫ Sc(f(t) conj(g(t))) dt`, the real scalar-part inner product.
pub fn q_inner<T: Real>(f: &QuaternionField2D<T>, g: &QuaternionField2D<T>) -> Result<T> {
    f.grid.ensure_matches(&g.grid)?;
    let terms: Vec<T> = f.values.iter().zip(&g.values).map(|(a, b)| (*a * b.conj()).scalar()).collect();
    Ok(crate::scalar::pairwise_sum(&terms) * f.grid.weight())
}

/// Largest nodewise quaternion distance relative to the largest modulus of `reference`.
pub fn q_rel_linf<T: Real>(x: &[Quaternion<T>], reference: &[Quaternion<T>]) -> T {
    let scale = reference.iter().fold(T::zero(), |m, q| m.max(q.norm()));
    let diff = x.iter().zip(reference).fold(T::zero(), |m, (a, b)| m.max((*a - *b).norm()));
    if scale > T::zero() {
        diff / scale
    } else {
        diff
    }
}

/// Four Gaussian components of distinct widths:
/// `(g, ½ g^{1.3}, ¼ g^{0.8}, ⅛ g^{1.1})` with `g = exp(-α₁t₁² - α₂t₂²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuaternionGaussian<T> {
    pub base: GaussianSpec<T>,
}

impl<T: Real> QuaternionGaussian<T> {
    const FACTORS: [(f64, f64); 4] = [(1.0, 1.0), (0.5, 1.3), (0.25, 0.8), (0.125, 1.1)];

    pub fn new(base: GaussianSpec<T>) -> Self {
        Self { base }
    }

    pub fn eval(&self, t1: T, t2: T) -> Quaternion<T> {
        let e = self.base.alpha1 * t1 * t1 + self.base.alpha2 * t2 * t2;
        let c = |k: usize| {
            let (amp, width) = Self::FACTORS[k];
            T::lit(amp) * (-(T::lit(width) * e)).exp()
        };
        Quaternion::new(c(0), c(1), c(2), c(3))
    }

    /// Half-width that keeps the widest component's tail below `1e-12`.
    pub fn auto_half_width(&self) -> T {
        GaussianSpec {
            alpha1: self.base.alpha1 * T::lit(0.8),
            alpha2: self.base.alpha2 * T::lit(0.8),
        }
        .auto_half_width()
    }

    pub fn auto_grid(&self, n: usize) -> Result<Grid2D<T>> {
        Grid2D::square(n, self.auto_half_width())
    }

    pub fn sample(&self, grid: &Grid2D<T>) -> QuaternionField2D<T> {
        QuaternionField2D::from_fn(*grid, |a, b| self.eval(a, b))
    }

    /// Sampled and scaled to unit energy.
    pub fn sample_normalized(&self, grid: &Grid2D<T>) -> QuaternionField2D<T> {
        let f = self.sample(grid);
        let e = f.energy();
        f.scale(e.sqrt().recip())
    }
}

impl<T: Real> From<&ComplexField2D<T>> for QuaternionField2D<T> {
    fn from(f: &ComplexField2D<T>) -> Self {
        Self::from_complex(f)
    }
}

/// Complex field of one quaternion component pair, used by the QFT path.
pub(crate) fn component<T: Real>(f: &QuaternionField2D<T>, k: usize) -> Vec<Complex<T>> {
    f.values
        .iter()
        .map(|q| {
            let v = match k {
                0 => q.w,
                1 => q.x,
                2 => q.y,
                _ => q.z,
            };
            Complex::new(v, T::zero())
        })
        .collect()
}
