use super::field::{q_inner, QuaternionField2D};
use super::transform::{qolct, qolct_via_qft};
use crate::error::Result;
use crate::inequality::checks::finish;
use crate::inequality::{evaluate_densities, CheckSpec, Densities, Domain, InequalityReport};
use crate::olct::{validate_params, OLCTParams};
use crate::scalar::Real;

/// Residual of one identity, relative to the natural scale of its sides.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport<T> {
    pub name: &'static str,
    pub lhs: T,
    pub rhs: T,
    pub residual: T,
    pub tolerance: T,
    pub passed: bool,
}

impl<T: Real> IdentityReport<T> {
    fn new(name: &'static str, lhs: T, rhs: T, residual: T, tolerance: T) -> Self {
        Self { name, lhs, rhs, residual, tolerance, passed: residual <= tolerance }
    }

    pub fn summary(&self) -> String {
        format!(
            "{} lhs={:.12} rhs={:.12} residual={:.3e} tolerance={:.1e} passed={}",
            self.name,
            self.lhs.as_f64(),
            self.rhs.as_f64(),
            self.residual.as_f64(),
            self.tolerance.as_f64(),
            self.passed
        )
    }
}

fn q_densities<T: Real>(f: &QuaternionField2D<T>, m1: &OLCTParams<T>, m2: &OLCTParams<T>) -> Result<Densities<T>> {
    Ok(Densities { signal: f.density(), spectral: qolct(f, m1, m2)?.density() })
}

/// Modulus identity and Parseval identity.
///
/// The modulus identity compares `|𝒪f|²` from the Fourier path against the sum of the
/// squared moduli of the transformed halves, largest nodewise gap over the peak of `|𝒪f|²`.
/// Parseval compares the scalar-part inner products before and after the transform, relative
/// to `‖f‖‖g‖`; `g` defaults to a copy of `f` moved by a few nodes.
pub fn check_q_identities<T: Real>(
    f: &QuaternionField2D<T>,
    g: Option<&QuaternionField2D<T>>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<(IdentityReport<T>, IdentityReport<T>)> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    let tol = T::lit(1e-10).max(T::epsilon() * T::lit(1e3));

    let whole = qolct_via_qft(f, &m1, &m2)?;
    let (plus, minus) = f.ops_halves();
    let (tp, tm) = (qolct(&plus, &m1, &m2)?, qolct(&minus, &m1, &m2)?);
    let mut peak = T::zero();
    let mut gap = T::zero();
    for ((w, p), m) in whole.values.iter().zip(&tp.values).zip(&tm.values) {
        let lhs = w.norm_sq();
        peak = peak.max(lhs);
        gap = gap.max((lhs - p.norm_sq() - m.norm_sq()).abs());
    }
    let split_energy: T = tp.density().integral() + tm.density().integral();
    let modulus = IdentityReport::new(
        "modulus",
        whole.density().integral(),
        split_energy,
        if peak > T::zero() { gap / peak } else { gap },
        tol,
    );

    let moved;
    let g = match g {
        Some(g) => g,
        None => {
            moved = f.shifted_by_nodes(3, -2);
            &moved
        }
    };
    let before = q_inner(f, g)?;
    let after = q_inner(&qolct(f, &m1, &m2)?, &qolct(g, &m1, &m2)?)?;
    let scale = (f.energy() * g.energy()).sqrt();
    let residual = (after - before).abs() / if scale > T::zero() { scale } else { T::one() };
    let parseval = IdentityReport::new("parseval", after, before, residual, tol);
    Ok((modulus, parseval))
}

/// Runs `spec` on a quaternion field with `|f|²` and `|𝒪f|²` as the densities.
pub fn check_q_inequality<T: Real>(
    f: &QuaternionField2D<T>,
    spec: &CheckSpec<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<InequalityReport<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    let full = evaluate_densities(spec, &q_densities(f, &m1, &m2)?, &m1, &m2, Domain::Qolct)?;
    let half = f
        .decimated()
        .and_then(|h| q_densities(&h, &m1, &m2).ok())
        .and_then(|d| evaluate_densities(spec, &d, &m1, &m2, Domain::Qolct).ok());
    Ok(finish(spec.theorem(), Domain::Qolct, full, half, &m1, &m2))
}
