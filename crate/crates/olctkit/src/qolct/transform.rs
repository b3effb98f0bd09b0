use num_complex::Complex;
use rayon::prelude::*;

use super::field::{component, QSpectrum2D, QuaternionField2D};
use crate::dft::{map_lines, CenteredDft};
use crate::error::{OlctError, Result};
use crate::grid::{Axis, Grid2D};
use crate::olct::{
    induced_grid, inverse_olct_2d_fft, kernel_prefactor, kernel_unchecked, olct_2d, post_chirp, pre_chirp,
    validate_params, OLCTParams,
};
use crate::quaternion::Quaternion;
use crate::scalar::Real;

fn weighted_kernel<T: Real>(
    from: &Axis<T>,
    to: &Axis<T>,
    kernel: impl Fn(T, T) -> Complex<T>,
) -> Vec<Complex<T>> {
    let mut mat = Vec::with_capacity(from.n * to.n);
    for k in 0..to.n {
        for i in 0..from.n {
            mat.push(kernel(from.node(i), to.node(k)) * from.step);
        }
    }
    mat
}

/// `Σ_s L(s₁, o₁) f(s) R(s₂, o₂)` with `L` in the `(1, i)` plane on the left and
/// `R` in the `(1, j)` plane on the right. Axis 2 is summed first.
fn sandwich<T: Real>(
    f: &QuaternionField2D<T>,
    out: Grid2D<T>,
    left: impl Fn(T, T) -> Complex<T>,
    right: impl Fn(T, T) -> Complex<T>,
) -> QuaternionField2D<T> {
    let g = f.grid;
    let (n1, n2, m1, m2) = (g.n1(), g.n2(), out.n1(), out.n2());
    let kr: Vec<Quaternion<T>> =
        weighted_kernel(&g.axis2, &out.axis2, right).into_iter().map(Quaternion::from_complex_j).collect();
    let kl: Vec<Quaternion<T>> =
        weighted_kernel(&g.axis1, &out.axis1, left).into_iter().map(Quaternion::from_complex_i).collect();

    let mut stage = vec![Quaternion::zero(); n1 * m2];
    stage.par_chunks_mut(m2).zip(f.values.par_chunks(n2)).for_each(|(o, row)| {
        for (k, slot) in o.iter_mut().enumerate() {
            let krow = &kr[k * n2..(k + 1) * n2];
            *slot = row.iter().zip(krow).fold(Quaternion::zero(), |acc, (x, kk)| acc + *x * *kk);
        }
    });

    let mut values = vec![Quaternion::zero(); m1 * m2];
    values.par_chunks_mut(m2).enumerate().for_each(|(k, o)| {
        for (i, kk) in kl[k * n1..(k + 1) * n1].iter().enumerate() {
            for (slot, x) in o.iter_mut().zip(&stage[i * m2..(i + 1) * m2]) {
                *slot = *slot + *kk * *x;
            }
        }
    });
    QuaternionField2D { grid: out, values }
}

fn ensure_valid<T: Real>(f: &QuaternionField2D<T>) -> Result<()> {
    if f.values.len() != f.grid.len() {
        return Err(OlctError::GridMismatch(format!("{} values for {} nodes", f.values.len(), f.grid.len())));
    }
    if !f.is_finite() {
        return Err(OlctError::NonFinite("input field contains NaN or infinite samples".into()));
    }
    Ok(())
}

/// Two-sided transform by quadrature: `Σ w K_{M1}(t₁,u₁) f(t) K_{M2}(t₂,u₂)` with the
/// first kernel in the `i` plane on the left and the second in the `j` plane on the right.
pub fn qolct_direct<T: Real>(
    f: &QuaternionField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
    ugrid: &Grid2D<T>,
) -> Result<QSpectrum2D<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    ensure_valid(f)?;
    Ok(sandwich(f, *ugrid, |t, u| kernel_unchecked(&m1, t, u), |t, u| kernel_unchecked(&m2, t, u)))
}

/// Transform through the orthogonal plane split.
///
/// Each half reduces to a complex transform of its generator: the plus half sees the
/// right kernel conjugated, the minus half sees it unchanged.
pub fn qolct_via_ops<T: Real>(
    f: &QuaternionField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<QSpectrum2D<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    ensure_valid(f)?;
    let (plus, minus) = f.ops_generators();
    let (wp, wm) = rayon::join(|| olct_2d(&plus, &m1, &m2.conjugate()), || olct_2d(&minus, &m1, &m2));
    QuaternionField2D::from_generators(&wp?, &wm?)
}

/// Default evaluation path, on the grid induced by the sampling.
pub fn qolct<T: Real>(f: &QuaternionField2D<T>, m1: &OLCTParams<T>, m2: &OLCTParams<T>) -> Result<QSpectrum2D<T>> {
    qolct_via_ops(f, m1, m2)
}

/// Complex 2D sum `Σ h(t) exp(-i(t₁ξ₁ + t₂ξ₂)) Δt₁Δt₂` on the symmetric frequency grid.
fn complex_dft_2d<T: Real>(
    h: &[Complex<T>],
    grid: &Grid2D<T>,
    d1: &CenteredDft<T>,
    d2: &CenteredDft<T>,
) -> Vec<Complex<T>> {
    let (n1, n2) = (grid.n1(), grid.n2());
    let stage = map_lines(h, n1, n2, 2, n2, |l, o| d2.apply(l, o));
    let w = grid.weight();
    map_lines(&stage, n1, n2, 1, n1, |l, o| d1.apply(l, o)).into_iter().map(|v| v * w).collect()
}

/// Two-sided quaternion Fourier sum of a real field, from its complex spectrum `H`.
///
/// `∫ h e^{-iA} e^{-jB}` with `A = t₁ξ₁`, `B = t₂ξ₂` has the four real parts
/// `cc, -sc, -cs, ss`, each a half-sum of `H(ξ₁, ±ξ₂)`.
fn real_qft<T: Real>(hs: &[Complex<T>], n1: usize, n2: usize) -> Vec<Quaternion<T>> {
    let half = T::lit(0.5);
    (0..n1 * n2)
        .map(|idx| {
            let (k1, k2) = (idx / n2, idx % n2);
            let h = hs[idx];
            let hm = hs[k1 * n2 + (n2 - 1 - k2)];
            let cc = half * (h.re + hm.re);
            let ss = half * (hm.re - h.re);
            let sc = -half * (h.im + hm.im);
            let cs = -half * (h.im - hm.im);
            Quaternion::new(cc, -sc, -cs, ss)
        })
        .collect()
}

/// Transform through a two-sided quaternion Fourier transform of the pre-chirped signal.
///
/// Each real component is transformed with a complex FFT and recombined. The `j` and `k`
/// components pick up a reflected first frequency when the left exponential is moved past them.
/// Requires power-of-two axis lengths.
pub fn qolct_via_qft<T: Real>(
    f: &QuaternionField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<QSpectrum2D<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    ensure_valid(f)?;
    let g = f.grid;
    let (n1, n2) = (g.n1(), g.n2());
    let d1 = CenteredDft::new(&g.axis1)?;
    let d2 = CenteredDft::new(&g.axis2)?;

    let pre1: Vec<Quaternion<T>> =
        g.axis1.nodes().into_iter().map(|t| Quaternion::from_complex_i(pre_chirp(&m1, t))).collect();
    let pre2: Vec<Quaternion<T>> =
        g.axis2.nodes().into_iter().map(|t| Quaternion::from_complex_j(pre_chirp(&m2, t))).collect();
    let chirped = QuaternionField2D {
        grid: g,
        values: f.values.iter().enumerate().map(|(idx, q)| pre1[idx / n2] * *q * pre2[idx % n2]).collect(),
    };

    let parts: Vec<Vec<Quaternion<T>>> = (0..4)
        .into_par_iter()
        .map(|m| real_qft(&complex_dft_2d(&component(&chirped, m), &g, &d1, &d2), n1, n2))
        .collect();

    let ugrid = induced_grid(&g, &m1, &m2);
    let p1: Vec<Quaternion<T>> = ugrid
        .axis1
        .nodes()
        .into_iter()
        .map(|u| Quaternion::from_complex_i(kernel_prefactor(m1.b) * post_chirp(&m1, u)))
        .collect();
    let p2: Vec<Quaternion<T>> = ugrid
        .axis2
        .nodes()
        .into_iter()
        .map(|u| Quaternion::from_complex_j(kernel_prefactor(m2.b) * post_chirp(&m2, u)))
        .collect();
    let units = [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()];

    let values = (0..n1 * n2)
        .into_par_iter()
        .map(|idx| {
            let (k1, k2) = (idx / n2, idx % n2);
            // ξ = u / b: the frequency index runs backwards on an axis with b < 0.
            let j1 = if m1.b < T::zero() { n1 - 1 - k1 } else { k1 };
            let j2 = if m2.b < T::zero() { n2 - 1 - k2 } else { k2 };
            let direct = j1 * n2 + j2;
            let reflected = (n1 - 1 - j1) * n2 + j2;
            let q = units[0] * parts[0][direct]
                + units[1] * parts[1][direct]
                + units[2] * parts[2][reflected]
                + units[3] * parts[3][reflected];
            p1[k1] * q * p2[k2]
        })
        .collect();
    Ok(QuaternionField2D { grid: ugrid, values })
}

/// Inverse by quadrature with conjugated kernels, onto `tgrid`.
pub fn inverse_qolct<T: Real>(
    spec: &QSpectrum2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
    tgrid: &Grid2D<T>,
) -> Result<QuaternionField2D<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    ensure_valid(spec)?;
    Ok(sandwich(
        spec,
        *tgrid,
        |u, t| kernel_unchecked(&m1, t, u).conj(),
        |u, t| kernel_unchecked(&m2, t, u).conj(),
    ))
}

/// Inverse through the plane split and the FFT path; the output lands on the grid dual to `spec.grid`.
pub fn inverse_qolct_fft<T: Real>(
    spec: &QSpectrum2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<QuaternionField2D<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    ensure_valid(spec)?;
    let (plus, minus) = spec.ops_generators();
    let (wp, wm) = rayon::join(
        || inverse_olct_2d_fft(&plus, &m1, &m2.conjugate()),
        || inverse_olct_2d_fft(&minus, &m1, &m2),
    );
    QuaternionField2D::from_generators(&wp?, &wm?)
}
