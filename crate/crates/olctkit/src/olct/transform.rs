use num_complex::Complex;

use super::kernel::{kernel_prefactor, kernel_unchecked, post_chirp, pre_chirp};
use super::params::{validate_params, OLCTParams};
use crate::dft::{frequency_axis, map_lines, CenteredDft};
use crate::error::{OlctError, Result};
use crate::grid::{Axis, ComplexField2D, Grid2D};
use crate::scalar::Real;

/// Quadrature of one axis against an explicit kernel matrix.
pub(crate) struct AxisDirect<T> {
    n: usize,
    mat: Vec<Complex<T>>,
}

impl<T: Real> AxisDirect<T> {
    /// `mat[k, i] = step · kernel(t_i, u_k)`.
    pub(crate) fn new(t: &Axis<T>, u: &Axis<T>, kernel: impl Fn(T, T) -> Complex<T>) -> Self {
        let mut mat = Vec::with_capacity(u.n * t.n);
        for k in 0..u.n {
            let uk = u.node(k);
            for i in 0..t.n {
                mat.push(kernel(t.node(i), uk) * t.step);
            }
        }
        Self { n: t.n, mat }
    }

    pub(crate) fn apply(&self, input: &[Complex<T>], out: &mut [Complex<T>]) {
        for (o, row) in out.iter_mut().zip(self.mat.chunks(self.n)) {
            let mut acc = Complex::new(T::zero(), T::zero());
            for (k, x) in row.iter().zip(input) {
                acc = acc + *k * *x;
            }
            *o = acc;
        }
    }
}

/// Chirp, DFT, chirp along one axis. The output axis is `u_k = |b| ξ_k`.
pub(crate) struct AxisFft<T: Real> {
    dft: CenteredDft<T>,
    pre: Vec<Complex<T>>,
    post: Vec<Complex<T>>,
    reverse: bool,
    out: Axis<T>,
}

impl<T: Real> AxisFft<T> {
    pub(crate) fn new(p: &OLCTParams<T>, t: &Axis<T>) -> Result<Self> {
        let dft = CenteredDft::new(t)?;
        let out = induced_axis(t, p.b);
        let pre = t.nodes().into_iter().map(|tn| pre_chirp(p, tn)).collect();
        let scale = kernel_prefactor(p.b) * t.step;
        let post = out.nodes().into_iter().map(|uk| scale * post_chirp(p, uk)).collect();
        Ok(Self { dft, pre, post, reverse: p.b < T::zero(), out })
    }

    pub(crate) fn output_axis(&self) -> Axis<T> {
        self.out
    }

    pub(crate) fn apply(&self, input: &[Complex<T>], out: &mut [Complex<T>]) {
        let n = input.len();
        let buf: Vec<Complex<T>> = input.iter().zip(&self.pre).map(|(x, c)| *x * *c).collect();
        let mut spec = vec![Complex::new(T::zero(), T::zero()); n];
        self.dft.apply(&buf, &mut spec);
        for k in 0..n {
            // u_k = b ξ_k' with k' reversed when b < 0, so the u axis stays increasing.
            let src = if self.reverse { n - 1 - k } else { k };
            out[k] = spec[src] * self.post[k];
        }
    }
}

/// Spectral axis induced by the DFT of `t` under a transform with parameter `b`.
pub fn induced_axis<T: Real>(t: &Axis<T>, b: T) -> Axis<T> {
    let xi = frequency_axis(t);
    Axis { n: xi.n, min: xi.min * b.abs(), step: xi.step * b.abs() }
}

/// The `u` grid on which [`olct_2d_fft`] returns its samples.
pub fn induced_grid<T: Real>(t: &Grid2D<T>, m1: &OLCTParams<T>, m2: &OLCTParams<T>) -> Grid2D<T> {
    Grid2D::new(induced_axis(&t.axis1, m1.b), induced_axis(&t.axis2, m2.b))
}

fn ensure_finite<T: Real>(f: &ComplexField2D<T>) -> Result<()> {
    if f.is_finite() {
        Ok(())
    } else {
        Err(OlctError::NonFinite("input field contains NaN or infinite samples".into()))
    }
}

fn check_shape<T: Real>(f: &ComplexField2D<T>) -> Result<()> {
    if f.values.len() == f.grid.len() {
        Ok(())
    } else {
        Err(OlctError::GridMismatch(format!("{} values for {} nodes", f.values.len(), f.grid.len())))
    }
}

/// Separable evaluation with arbitrary per-axis kernels: axis 2 first, then axis 1.
pub(crate) fn separable_direct<T: Real>(
    f: &ComplexField2D<T>,
    out_grid: Grid2D<T>,
    k1: impl Fn(T, T) -> Complex<T>,
    k2: impl Fn(T, T) -> Complex<T>,
) -> ComplexField2D<T> {
    let g = f.grid;
    let op2 = AxisDirect::new(&g.axis2, &out_grid.axis2, k2);
    let op1 = AxisDirect::new(&g.axis1, &out_grid.axis1, k1);
    let stage = map_lines(&f.values, g.n1(), g.n2(), 2, out_grid.n2(), |l, o| op2.apply(l, o));
    let values = map_lines(&stage, g.n1(), out_grid.n2(), 1, out_grid.n1(), |l, o| op1.apply(l, o));
    ComplexField2D { grid: out_grid, values }
}

/// Quadrature of the tensor-kernel integral at every node of `ugrid`.
pub fn olct_2d_direct<T: Real>(
    f: &ComplexField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
    ugrid: &Grid2D<T>,
) -> Result<ComplexField2D<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    check_shape(f)?;
    ensure_finite(f)?;
    Ok(separable_direct(
        f,
        *ugrid,
        |t, u| kernel_unchecked(&m1, t, u),
        |t, u| kernel_unchecked(&m2, t, u),
    ))
}

/// Chirp-FFT evaluation on the induced spectral grid.
pub fn olct_2d_fft<T: Real>(
    f: &ComplexField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<ComplexField2D<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    check_shape(f)?;
    ensure_finite(f)?;
    let g = f.grid;
    let op2 = AxisFft::new(&m2, &g.axis2)?;
    let op1 = AxisFft::new(&m1, &g.axis1)?;
    let stage = map_lines(&f.values, g.n1(), g.n2(), 2, g.n2(), |l, o| op2.apply(l, o));
    let values = map_lines(&stage, g.n1(), g.n2(), 1, g.n1(), |l, o| op1.apply(l, o));
    Ok(ComplexField2D { grid: Grid2D::new(op1.output_axis(), op2.output_axis()), values })
}

/// FFT path when both axis lengths are powers of two, otherwise the direct path on the same induced grid.
pub fn olct_2d<T: Real>(
    f: &ComplexField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<ComplexField2D<T>> {
    if f.grid.n1().is_power_of_two() && f.grid.n2().is_power_of_two() {
        olct_2d_fft(f, m1, m2)
    } else {
        olct_2d_direct(f, m1, m2, &induced_grid(&f.grid, m1, m2))
    }
}

/// Constant `exp{(i/2)(c d τ² - 2 a d τ η + a b η²)}` that turns the inverse-parameter transform into the true inverse.
pub fn inverse_constant<T: Real>(p: &OLCTParams<T>) -> Complex<T> {
    let phi = (p.c * p.d * p.tau * p.tau - T::lit(2.0) * p.a * p.d * p.tau * p.eta
        + p.a * p.b * p.eta * p.eta)
        * T::lit(0.5);
    Complex::new(phi.cos(), phi.sin())
}

/// Inverse transform onto `tgrid` by quadrature with the per-axis inverse parameters.
pub fn inverse_olct_2d<T: Real>(
    spec: &ComplexField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
    tgrid: &Grid2D<T>,
) -> Result<ComplexField2D<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    let c = inverse_constant(&m1) * inverse_constant(&m2);
    let out = olct_2d_direct(spec, &m1.inverse(), &m2.inverse(), tgrid)?;
    Ok(out.map(|v| v * c))
}

/// Inverse transform by the FFT path; the output lands on the grid dual to `spec.grid`.
pub fn inverse_olct_2d_fft<T: Real>(
    spec: &ComplexField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<ComplexField2D<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    let c = inverse_constant(&m1) * inverse_constant(&m2);
    let out = olct_2d_fft(spec, &m1.inverse(), &m2.inverse())?;
    Ok(out.map(|v| v * c))
}

/// Adjoint of the forward quadrature: conjugate kernels summed over the spectral grid.
pub fn adjoint_olct_2d<T: Real>(
    spec: &ComplexField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
    tgrid: &Grid2D<T>,
) -> Result<ComplexField2D<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    check_shape(spec)?;
    Ok(separable_direct(
        spec,
        *tgrid,
        |u, t| kernel_unchecked(&m1, t, u).conj(),
        |u, t| kernel_unchecked(&m2, t, u).conj(),
    ))
}
