use num_complex::Complex;

use crate::error::{OlctError, Result};
use crate::scalar::Real;

/// Uniform sampling of one axis: node `i` sits at `min + i * step`.
///
/// Every node carries the midpoint weight `step`, so the nodes are the centers
/// of `n` cells covering `[min - step/2, min + (n - 1/2) step]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis<T> {
    pub n: usize,
    pub min: T,
    pub step: T,
}

impl<T: Real> Axis<T> {
    pub fn new(n: usize, min: T, step: T) -> Result<Self> {
        if n < 2 {
            return Err(OlctError::InvalidGrid(format!("axis needs at least 2 nodes, got {n}")));
        }
        if !(step > T::zero()) || !step.is_finite() || !min.is_finite() {
            return Err(OlctError::InvalidGrid(format!("bad axis geometry min={min} step={step}")));
        }
        Ok(Self { n, min, step })
    }

    /// `n` midpoint nodes on `[-half_width, half_width]`.
    pub fn midpoint(n: usize, half_width: T) -> Result<Self> {
        if n < 2 {
            return Err(OlctError::InvalidGrid(format!("axis needs at least 2 nodes, got {n}")));
        }
        let step = (half_width + half_width) / T::lit(n as f64);
        Self::new(n, -half_width + step * T::lit(0.5), step)
    }

    #[inline]
    pub fn node(&self, i: usize) -> T {
        self.min + self.step * T::lit(i as f64)
    }

    pub fn nodes(&self) -> Vec<T> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    pub fn max(&self) -> T {
        self.node(self.n - 1)
    }

    /// Interval covered by the cells, `(lower, upper)`.
    pub fn extent(&self) -> (T, T) {
        let h = self.step * T::lit(0.5);
        (self.min - h, self.max() + h)
    }

    /// Nodes symmetric about zero, which is what the transforms' induced spectral axes look like.
    pub fn is_symmetric(&self) -> bool {
        let s = self.min + self.max();
        s.abs() <= T::lit(1e-9) * self.step
    }

    /// Every other node starting at the first one.
    pub fn decimated(&self) -> Option<Self> {
        if self.n < 4 || self.n % 2 != 0 {
            return None;
        }
        Some(Self { n: self.n / 2, min: self.min, step: self.step + self.step })
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        let tol = T::lit(1e-9) * self.step;
        self.n == other.n && (self.min - other.min).abs() <= tol && (self.step - other.step).abs() <= tol
    }
}

/// Tensor-product lattice. Row-major: node `(i1, i2)` is stored at `i1 * n2 + i2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D<T> {
    pub axis1: Axis<T>,
    pub axis2: Axis<T>,
}

impl<T: Real> Grid2D<T> {
    pub fn new(axis1: Axis<T>, axis2: Axis<T>) -> Self {
        Self { axis1, axis2 }
    }

    /// Square midpoint grid on `[-h, h]²`.
    pub fn square(n: usize, half_width: T) -> Result<Self> {
        let a = Axis::midpoint(n, half_width)?;
        Ok(Self::new(a, a))
    }

    pub fn n1(&self) -> usize {
        self.axis1.n
    }

    pub fn n2(&self) -> usize {
        self.axis2.n
    }

    pub fn len(&self) -> usize {
        self.axis1.n * self.axis2.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn axis(&self, k: usize) -> &Axis<T> {
        if k == 1 {
            &self.axis1
        } else {
            &self.axis2
        }
    }

    /// Midpoint weight shared by every node.
    pub fn weight(&self) -> T {
        self.axis1.step * self.axis2.step
    }

    pub fn area(&self) -> T {
        self.weight() * T::lit(self.len() as f64)
    }

    #[inline]
    pub fn coords(&self, idx: usize) -> (T, T) {
        let n2 = self.axis2.n;
        (self.axis1.node(idx / n2), self.axis2.node(idx % n2))
    }

    pub fn decimated(&self) -> Option<Self> {
        Some(Self::new(self.axis1.decimated()?, self.axis2.decimated()?))
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.axis1.approx_eq(&other.axis1) && self.axis2.approx_eq(&other.axis2)
    }

    pub fn ensure_matches(&self, other: &Self) -> Result<()> {
        if self.approx_eq(other) {
            Ok(())
        } else {
            Err(OlctError::GridMismatch(format!("{self:?} vs {other:?}")))
        }
    }
}

/// Complex samples on a [`Grid2D`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField2D<T> {
    pub grid: Grid2D<T>,
    pub values: Vec<Complex<T>>,
}

impl<T: Real> ComplexField2D<T> {
    pub fn new(grid: Grid2D<T>, values: Vec<Complex<T>>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(OlctError::GridMismatch(format!(
                "{} values for a {}x{} grid",
                values.len(),
                grid.n1(),
                grid.n2()
            )));
        }
        if values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(OlctError::NonFinite("field contains NaN or infinite samples".into()));
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: Grid2D<T>) -> Self {
        Self { grid, values: vec![Complex::new(T::zero(), T::zero()); grid.len()] }
    }

    pub fn from_fn(grid: Grid2D<T>, f: impl Fn(T, T) -> Complex<T>) -> Self {
        let values = (0..grid.len())
            .map(|idx| {
                let (t1, t2) = grid.coords(idx);
                f(t1, t2)
            })
            .collect();
        Self { grid, values }
    }

    #[inline]
    pub fn at(&self, i1: usize, i2: usize) -> Complex<T> {
        self.values[i1 * self.grid.n2() + i2]
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|v| v * s)
    }

    /// Squared modulus as a density on the same grid.
    pub fn energy_density(&self) -> Vec<T> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }

    /// Samples on the decimated grid (every other node per axis).
    pub fn decimated(&self) -> Option<Self> {
        let grid = self.grid.decimated()?;
        let n2 = self.grid.n2();
        let values = (0..grid.len())
            .map(|idx| {
                let (i1, i2) = (idx / grid.n2(), idx % grid.n2());
                self.values[(2 * i1) * n2 + 2 * i2]
            })
            .collect();
        Some(Self { grid, values })
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

/// Largest nodewise difference relative to the largest modulus of `reference`.
pub fn rel_linf<T: Real>(x: &[Complex<T>], reference: &[Complex<T>]) -> T {
    let scale = reference.iter().fold(T::zero(), |m, v| m.max(v.norm()));
    let diff = x.iter().zip(reference).fold(T::zero(), |m, (a, b)| m.max((*a - *b).norm()));
    if scale > T::zero() {
        diff / scale
    } else {
        diff
    }
}

/// Relative discrete L² distance.
pub fn rel_l2<T: Real>(x: &[Complex<T>], reference: &[Complex<T>]) -> T {
    let num: T = x.iter().zip(reference).map(|(a, b)| (*a - *b).norm_sqr()).sum();
    let den: T = reference.iter().map(|v| v.norm_sqr()).sum();
    if den > T::zero() {
        (num / den).sqrt()
    } else {
        num.sqrt()
    }
}
