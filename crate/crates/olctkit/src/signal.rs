//! Signals known analytically, so they can be resampled after a shift or dilation.

use num_complex::Complex;

use crate::grid::{ComplexField2D, Grid2D};
use crate::scalar::Real;

pub trait Signal2D<T: Real>: Sync {
    fn eval(&self, t1: T, t2: T) -> Complex<T>;

    fn sample(&self, grid: &Grid2D<T>) -> ComplexField2D<T> {
        ComplexField2D::from_fn(*grid, |a, b| self.eval(a, b))
    }
}

/// `f(t - α)`.
#[derive(Debug, Clone, Copy)]
pub struct Shifted<S, T> {
    pub inner: S,
    pub alpha: (T, T),
}

impl<T: Real, S: Signal2D<T>> Signal2D<T> for Shifted<S, T> {
    fn eval(&self, t1: T, t2: T) -> Complex<T> {
        self.inner.eval(t1 - self.alpha.0, t2 - self.alpha.1)
    }
}

/// `f(α₁ t₁, α₂ t₂)`.
#[derive(Debug, Clone, Copy)]
pub struct Dilated<S, T> {
    pub inner: S,
    pub alpha: (T, T),
}

impl<T: Real, S: Signal2D<T>> Signal2D<T> for Dilated<S, T> {
    fn eval(&self, t1: T, t2: T) -> Complex<T> {
        self.inner.eval(self.alpha.0 * t1, self.alpha.1 * t2)
    }
}

/// Adapts a closure.
#[derive(Debug, Clone, Copy)]
pub struct FnSignal<F>(pub F);

impl<T: Real, F: Fn(T, T) -> Complex<T> + Sync> Signal2D<T> for FnSignal<F> {
    fn eval(&self, t1: T, t2: T) -> Complex<T> {
        (self.0)(t1, t2)
    }
}

impl<T: Real, S: Signal2D<T> + ?Sized> Signal2D<T> for &S {
    fn eval(&self, t1: T, t2: T) -> Complex<T> {
        (**self).eval(t1, t2)
    }
}
