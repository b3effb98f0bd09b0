use super::checks::check;
use super::report::{CheckSpec, InequalityReport, TheoremId};
use crate::error::{OlctError, Result};
use crate::functionals::{DensityField2D, WeightSide};
use crate::grid::{Axis, Grid2D};
use crate::olct::{olct_2d, olct_2d_direct, scale_map, OLCTParams};
use crate::scalar::Real;
use crate::signal::{Dilated, Shifted, Signal2D};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Probe {
    /// `f(t - α)`
    Shift,
    /// `f(α₁t₁, α₂t₂)`, compared against `f` under the remapped parameters.
    Scale,
}

impl Probe {
    pub fn as_str(&self) -> &'static str {
        match self {
            Probe::Shift => "shift",
            Probe::Scale => "scale",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EffectReport<T> {
    pub theorem: TheoremId,
    pub probe: Probe,
    pub alpha: (T, T),
    pub baseline: InequalityReport<T>,
    pub probed: InequalityReport<T>,
    pub predicted_delta: T,
    pub measured_delta: T,
    pub tolerance: T,
    /// What the deltas measure.
    pub delta_kind: &'static str,
}

impl<T: Real> EffectReport<T> {
    pub fn within_tolerance(&self) -> bool {
        (self.measured_delta - self.predicted_delta).abs() <= self.tolerance
    }
}

fn log_slack<T: Real>(r: &InequalityReport<T>) -> T {
    (r.lhs / r.rhs).ln()
}

fn pitt_lambda<T: Real>(spec: &CheckSpec<T>) -> T {
    match spec {
        CheckSpec::Pitt { lambda } => *lambda,
        _ => unreachable!(),
    }
}

/// `Σ w |u|^{-λ} |Of(u - aα)|²` over the spectral grid of `baseline_grid`, with `Of` by direct quadrature.
fn pitt_shift_prediction<T: Real, S: Signal2D<T>>(
    signal: &S,
    grid: &Grid2D<T>,
    lambda: T,
    alpha: (T, T),
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<T> {
    let f = signal.sample(grid);
    let ugrid = olct_2d(&f, m1, m2)?.grid;
    let shifted = Grid2D::new(
        Axis { min: ugrid.axis1.min - m1.a * alpha.0, ..ugrid.axis1 },
        Axis { min: ugrid.axis2.min - m2.a * alpha.1, ..ugrid.axis2 },
    );
    let moved = olct_2d_direct(&f, m1, m2, &shifted)?;
    let density = DensityField2D { grid: ugrid, values: moved.energy_density() };
    density.radial_weighted(lambda, WeightSide::Spectral)
}

/// `Σ w |u|^{-λ} |Of_α(u)|²` with `Of_α(u) = O'f(u/α) / (α₁α₂)` and `O'f` by direct quadrature.
fn pitt_scale_prediction<T: Real, S: Signal2D<T>>(
    signal: &S,
    grid: &Grid2D<T>,
    lambda: T,
    alpha: (T, T),
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<T> {
    let f = signal.sample(grid);
    let ugrid = olct_2d(&f, m1, m2)?.grid;
    let shrunk = Grid2D::new(
        Axis { min: ugrid.axis1.min / alpha.0, step: ugrid.axis1.step / alpha.0, ..ugrid.axis1 },
        Axis { min: ugrid.axis2.min / alpha.1, step: ugrid.axis2.step / alpha.1, ..ugrid.axis2 },
    );
    let remapped = olct_2d_direct(&f, &scale_map(*m1, alpha.0)?, &scale_map(*m2, alpha.1)?, &shrunk)?;
    let jac = (alpha.0 * alpha.1).powi(2).recip();
    let values = remapped.energy_density().into_iter().map(|v| v * jac).collect();
    DensityField2D { grid: ugrid, values }.radial_weighted(lambda, WeightSide::Spectral)
}

/// Runs a check on `signal` and on its shifted or dilated copy and compares the change with the predicted one.
pub fn effect_probe<T: Real, S: Signal2D<T>>(
    spec: &CheckSpec<T>,
    signal: &S,
    grid: &Grid2D<T>,
    probe: Probe,
    alpha: (T, T),
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<EffectReport<T>> {
    let theorem = spec.theorem();
    if matches!(theorem, TheoremId::LogUp | TheoremId::Nazarov) {
        return Err(OlctError::UnsupportedProbe(format!("no {} law for {theorem}", probe.as_str())));
    }
    let tight = T::lit(1e-6);
    let (baseline, probed) = match probe {
        Probe::Shift => {
            let moved = Shifted { inner: signal, alpha };
            (check(&signal.sample(grid), spec, m1, m2)?, check(&moved.sample(grid), spec, m1, m2)?)
        }
        Probe::Scale => {
            if theorem == TheoremId::Pitt && alpha.0 != alpha.1 {
                return Err(OlctError::UnsupportedProbe(
                    "the radial Pitt weight only absorbs isotropic dilations".into(),
                ));
            }
            let m1s = scale_map(*m1, alpha.0)?;
            let m2s = scale_map(*m2, alpha.1)?;
            let dilated = Dilated { inner: signal, alpha };
            (check(&signal.sample(grid), spec, &m1s, &m2s)?, check(&dilated.sample(grid), spec, m1, m2)?)
        }
    };
    let bb = (m1.b * m2.b).abs();
    let (predicted, measured, tolerance, kind) = match (theorem, probe) {
        (TheoremId::Young, Probe::Shift) => (T::zero(), probed.lhs - baseline.lhs, tight, "lhs"),
        (TheoremId::Young, Probe::Scale) => {
            (T::zero(), log_slack(&probed) - log_slack(&baseline), tight, "ln(lhs/rhs)")
        }
        (TheoremId::Pitt, Probe::Scale) => {
            let predicted_lhs = pitt_scale_prediction(signal, grid, pitt_lambda(spec), alpha, m1, m2)?;
            let scale = probed.lhs.abs().max(T::one());
            (predicted_lhs - baseline.lhs, probed.lhs - baseline.lhs, tight * scale, "lhs")
        }
        (TheoremId::Pitt, Probe::Shift) => {
            let predicted_lhs = pitt_shift_prediction(signal, grid, pitt_lambda(spec), alpha, m1, m2)?;
            let scale = baseline.lhs.abs().max(T::one());
            (predicted_lhs - baseline.lhs, probed.lhs - baseline.lhs, tight * scale, "lhs")
        }
        (TheoremId::Entropy, _) => {
            let predicted = match probe {
                Probe::Shift => T::zero(),
                Probe::Scale => (bb - T::one()) * (alpha.0 * alpha.1).abs().ln(),
            };
            let tol = if probe == Probe::Scale { T::lit(1e-4) } else { tight };
            (predicted, probed.margin - baseline.margin, tol, "lhs - rhs")
        }
        (TheoremId::Heisenberg, _) => {
            (T::zero(), (probed.lhs - baseline.lhs) / baseline.lhs, tight, "relative lhs")
        }
        _ => unreachable!(),
    };
    Ok(EffectReport {
        theorem,
        probe,
        alpha,
        baseline,
        probed,
        predicted_delta: predicted,
        measured_delta: measured,
        tolerance,
        delta_kind: kind,
    })
}
