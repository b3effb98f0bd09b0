//! Line-wise helpers and a DFT evaluated on arbitrary uniform sample positions.
//!
//! For nodes `t_n = t0 + n Δ` and the symmetric midpoint frequencies
//! `ξ_k = (k - c) δ`, `c = N/2 - 1/2`, `δ = 2π / (N Δ)`, the sum
//! `Σ_n g_n exp(-i t_n ξ_k)` equals `exp(-i t0 ξ_k) · FFT[g_n exp(i 2π n c / N)]_k`.

use std::sync::Arc;

use num_complex::Complex;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};

use crate::error::{OlctError, Result};
use crate::grid::Axis;
use crate::scalar::Real;

/// Applies `op` to every line of a row-major `n1 x n2` array along `axis` (1 or 2).
/// Output lines have length `m`, so the result is `m x n2` or `n1 x m`.
pub(crate) fn map_lines<T, F>(
    data: &[Complex<T>],
    n1: usize,
    n2: usize,
    axis: usize,
    m: usize,
    op: F,
) -> Vec<Complex<T>>
where
    T: Real,
    F: Fn(&[Complex<T>], &mut [Complex<T>]) + Sync,
{
    let zero = Complex::new(T::zero(), T::zero());
    if axis == 2 {
        let mut out = vec![zero; n1 * m];
        out.par_chunks_mut(m).zip(data.par_chunks(n2)).for_each(|(o, row)| op(row, o));
        out
    } else {
        let cols: Vec<Vec<Complex<T>>> = (0..n2)
            .into_par_iter()
            .map(|j| {
                let col: Vec<Complex<T>> = (0..n1).map(|i| data[i * n2 + j]).collect();
                let mut o = vec![zero; m];
                op(&col, &mut o);
                o
            })
            .collect();
        let mut out = vec![zero; m * n2];
        for (j, col) in cols.iter().enumerate() {
            for (k, v) in col.iter().enumerate() {
                out[k * n2 + j] = *v;
            }
        }
        out
    }
}

/// `exp(i θ)` with `θ = 2π num / den`, reducing the integer ratio first.
fn unit_root<T: Real>(num: i64, den: i64) -> Complex<T> {
    let r = num.rem_euclid(den);
    let theta = T::TAU() * T::lit(r as f64) / T::lit(den as f64);
    Complex::new(theta.cos(), theta.sin())
}

/// Centered DFT for one axis of sample positions.
pub struct CenteredDft<T: Real> {
    n: usize,
    fft: Arc<dyn Fft<T>>,
    pre: Vec<Complex<T>>,
    post: Vec<Complex<T>>,
    freq: Axis<T>,
}

impl<T: Real> CenteredDft<T> {
    pub fn new(t: &Axis<T>) -> Result<Self> {
        let n = t.n;
        if !n.is_power_of_two() {
            return Err(OlctError::NonPowerOfTwo(n));
        }
        let fft = FftPlanner::new().plan_fft_forward(n);
        let freq = frequency_axis(t);
        // 2π n c / N with c = (N - 1) / 2, i.e. the ratio n (N - 1) / (2N).
        let nn = n as i64;
        let pre = (0..nn).map(|i| unit_root(i * (nn - 1), 2 * nn)).collect();
        let post = (0..n)
            .map(|k| {
                let phase = -(t.min * freq.node(k));
                Complex::new(phase.cos(), phase.sin())
            })
            .collect();
        Ok(Self { n, fft, pre, post, freq })
    }

    /// Angular frequencies `ξ_k` of the output.
    pub fn frequencies(&self) -> &Axis<T> {
        &self.freq
    }

    /// `out[k] = Σ_n input[n] exp(-i t_n ξ_k)`.
    pub fn apply(&self, input: &[Complex<T>], out: &mut [Complex<T>]) {
        debug_assert_eq!(input.len(), self.n);
        for ((o, x), p) in out.iter_mut().zip(input).zip(&self.pre) {
            *o = *x * *p;
        }
        let mut scratch = vec![Complex::new(T::zero(), T::zero()); self.fft.get_inplace_scratch_len()];
        self.fft.process_with_scratch(out, &mut scratch);
        for (o, p) in out.iter_mut().zip(&self.post) {
            *o = *o * *p;
        }
    }
}

/// Symmetric midpoint angular frequencies dual to `t`: step `2π / (N Δ)`.
pub fn frequency_axis<T: Real>(t: &Axis<T>) -> Axis<T> {
    let n = T::lit(t.n as f64);
    let delta = T::TAU() / (n * t.step);
    let c = (n - T::one()) * T::lit(0.5);
    Axis { n: t.n, min: -c * delta, step: delta }
}
