use super::report::{CheckSpec, Domain, InequalityReport, Orientation, ReportParams, TheoremId};
use crate::error::{OlctError, Result};
use crate::functionals::{shannon_entropy, DensityField2D, RectSet, WeightSide};
use crate::grid::ComplexField2D;
use crate::olct::{olct_2d, validate_params, OLCTParams};
use crate::scalar::Real;
use crate::special::{logup_constant, pitt_constant};

/// `|f|²` on the signal grid and `|Of|²` on the spectral grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Densities<T> {
    pub signal: DensityField2D<T>,
    pub spectral: DensityField2D<T>,
}

/// Both sides of one theorem before the quadrature-error estimate is attached.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation<T> {
    pub lhs: T,
    pub rhs: T,
    pub orientation: Orientation,
    pub values: Vec<(&'static str, T)>,
    pub notes: Vec<String>,
    /// Set by checks whose margin is not `rhs - lhs`.
    pub margin_override: Option<T>,
}

/// `𝒦 = |b₁b₂|^{1/q - 1/2} · (p^{1/p} / q^{1/q}) · (2π)^{1/q - 1/p}` with `q = p/(p-1)`.
pub fn young_constant(p: f64, b1b2: f64) -> Result<f64> {
    if !(1.0..=2.0).contains(&p) {
        return Err(OlctError::BadExponent(p));
    }
    let inv_p = 1.0 / p;
    let inv_q = 1.0 - inv_p;
    let q_term = if inv_q == 0.0 { 1.0 } else { (1.0 / inv_q).powf(inv_q) };
    Ok(b1b2.abs().powf(inv_q - 0.5) * p.powf(inv_p) / q_term * std::f64::consts::TAU.powf(inv_q - inv_p))
}

/// Smallest `C > 0` with `C · exp(C · measure) · tails = energy`, by bisection on `(0, 1e6]`.
pub fn nazarov_constant(energy: f64, tails: f64, measure: f64) -> Option<f64> {
    if !(tails > 0.0) || !(energy > 0.0) {
        return None;
    }
    let g = |c: f64| c * (c * measure).exp() * tails - energy;
    let (mut lo, mut hi) = (0.0f64, 1e6f64);
    if g(hi) < 0.0 {
        return Some(hi);
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

fn lit<T: Real>(x: f64) -> T {
    T::lit(x)
}

/// Evaluates `spec` from precomputed densities.
pub fn evaluate_densities<T: Real>(
    spec: &CheckSpec<T>,
    d: &Densities<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
    domain: Domain,
) -> Result<Evaluation<T>> {
    let bb = (m1.b * m2.b).abs();
    let bb64 = bb.as_f64();
    let energy = d.signal.integral();
    let mut ev = Evaluation {
        lhs: T::zero(),
        rhs: T::zero(),
        orientation: Orientation::Upper,
        values: Vec::new(),
        notes: Vec::new(),
        margin_override: None,
    };
    match *spec {
        CheckSpec::Young { p } => {
            let k = lit::<T>(young_constant(p.as_f64(), bb64)?);
            let q = if p == T::one() { T::infinity() } else { p / (p - T::one()) };
            ev.lhs = d.spectral.lp_norm_of_root(q)?;
            ev.rhs = k * d.signal.lp_norm_of_root(p)?;
            ev.values = vec![("p", p), ("q", q), ("K", k)];
        }
        CheckSpec::Pitt { lambda } => {
            let c = lit::<T>(pitt_constant(lambda.as_f64())?);
            let weighted_t = d.signal.radial_weighted(lambda, WeightSide::Signal)?;
            ev.lhs = d.spectral.radial_weighted(lambda, WeightSide::Spectral)?;
            ev.rhs = c * bb.powf(-lambda) * weighted_t;
            ev.values = vec![
                ("lambda", lambda),
                ("C_lambda", c),
                ("rhs_positive_exponent", c * bb.powf(lambda) * weighted_t),
            ];
            if domain == Domain::Qolct {
                ev.values.push(("rhs_quaternion_statement", c / (bb * bb) * weighted_t));
                ev.notes.push(
                    "quaternion statement divides by |b1 b2|^2; satisfied flag uses |b1 b2|^-lambda".into(),
                );
            }
            if c < T::zero() {
                ev.notes.push("C_lambda is negative for 1 < lambda < 2; the bound cannot hold".into());
            }
        }
        CheckSpec::LogUp => {
            let s = unit_scale(energy)?;
            let k0 = lit::<T>(logup_constant(bb64));
            ev.orientation = Orientation::Lower;
            ev.lhs = s * (d.spectral.log_weighted() + d.signal.log_weighted());
            ev.rhs = -k0;
            ev.values = vec![("K0_prime", k0), ("rhs_stated_sign", k0)];
        }
        CheckSpec::Entropy => {
            let s = unit_scale(energy)?;
            let e_t = shannon_entropy(&d.signal.scaled(s))?;
            let e_u = shannon_entropy(&d.spectral.scaled(s))?;
            ev.orientation = Orientation::Lower;
            ev.lhs = e_t + bb * e_u;
            ev.rhs = (T::PI() * T::E() * bb.powf(bb)).ln();
            ev.values = vec![("entropy_signal", e_t), ("entropy_spectral", e_u), ("b1b2", bb)];
        }
        CheckSpec::Nazarov { t1, t2 } => {
            let spectral_set = t2.scaled((m1.b.abs(), m2.b.abs()));
            let tails = d.signal.tail(&t1) + d.spectral.tail(&spectral_set);
            let measure = t1.measure() * t2.measure();
            let c = nazarov_constant(energy.as_f64(), tails.as_f64(), measure.as_f64())
                .ok_or(OlctError::ZeroTails)?;
            let c = lit::<T>(c);
            ev.lhs = energy;
            ev.rhs = c * (c * measure).exp() * tails;
            ev.values = vec![("C_star", c), ("tails", tails), ("measure", measure)];
            ev.margin_override = Some(c);
        }
        CheckSpec::Heisenberg { k, norm_sq } => {
            let s = norm_sq / energy;
            if !s.is_finite() {
                return Err(OlctError::NotNormalized(energy.as_f64()));
            }
            ev.orientation = Orientation::Lower;
            let axes: Vec<usize> = match k {
                Some(k) if k == 1 || k == 2 => vec![k],
                Some(k) => return Err(OlctError::InvalidGrid(format!("axis must be 1 or 2, got {k}"))),
                None => vec![1, 2],
            };
            let (mut lhs, mut raw, mut bound) = (T::one(), T::one(), T::one());
            for &ax in &axes {
                let mt = s * d.signal.central_moment(ax);
                let mu = s * d.spectral.central_moment(ax);
                lhs = lhs * mt * mu;
                raw = raw * s * s * d.signal.raw_moment(ax) * d.spectral.raw_moment(ax);
                let b = if ax == 1 { m1.b } else { m2.b };
                bound = bound * b * b * lit(0.25);
                if axes.len() == 1 {
                    ev.values.push(("moment_signal", mt));
                    ev.values.push(("moment_spectral", mu));
                }
            }
            ev.lhs = lhs;
            let square_form = bound * norm_sq;
            let fourth_form = bound * norm_sq * norm_sq;
            ev.rhs = if axes.len() == 1 { square_form } else { fourth_form };
            ev.values.extend([
                ("norm_sq", norm_sq),
                ("rhs_norm_squared", square_form),
                ("rhs_norm_fourth", fourth_form),
                ("lhs_origin_moments", raw),
            ]);
        }
    }
    Ok(ev)
}

fn unit_scale<T: Real>(energy: T) -> Result<T> {
    if energy > T::zero() && energy.is_finite() {
        Ok(energy.recip())
    } else {
        Err(OlctError::NotNormalized(energy.as_f64()))
    }
}

/// Attaches the error estimate and builds the report.
pub(crate) fn finish<T: Real>(
    theorem: TheoremId,
    domain: Domain,
    full: Evaluation<T>,
    half: Option<Evaluation<T>>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> InequalityReport<T> {
    let scale = full.lhs.abs().max(full.rhs.abs()).max(T::one());
    let floor = T::lit(1e-12).max(T::epsilon() * T::lit(64.0)) * scale;
    let quad_error = match &half {
        Some(h) => (full.lhs - h.lhs).abs().max((full.rhs - h.rhs).abs()) + floor,
        None => floor,
    };
    let params = ReportParams { m1: *m1, m2: *m2, values: full.values };
    let mut report =
        InequalityReport::new(theorem, domain, full.orientation, full.lhs, full.rhs, quad_error, params);
    if let Some(m) = full.margin_override {
        report.margin = m;
        report.satisfied = m.is_finite() && m > T::zero();
    }
    report.notes = full.notes;
    if half.is_none() {
        report.notes.push("grid cannot be decimated; quad_error is the rounding floor only".into());
    }
    report
}

pub(crate) fn complex_densities<T: Real>(
    f: &ComplexField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<Densities<T>> {
    let spec = olct_2d(f, m1, m2)?;
    Ok(Densities { signal: DensityField2D::from_field(f), spectral: DensityField2D::from_field(&spec) })
}

/// Runs `spec` on a complex field.
pub fn check<T: Real>(
    f: &ComplexField2D<T>,
    spec: &CheckSpec<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<InequalityReport<T>> {
    let (m1, m2) = (validate_params(*m1)?, validate_params(*m2)?);
    let full = evaluate_densities(spec, &complex_densities(f, &m1, &m2)?, &m1, &m2, Domain::Olct)?;
    let half = f
        .decimated()
        .and_then(|h| complex_densities(&h, &m1, &m2).ok())
        .and_then(|d| evaluate_densities(spec, &d, &m1, &m2, Domain::Olct).ok());
    Ok(finish(spec.theorem(), Domain::Olct, full, half, &m1, &m2))
}

/// `‖Of‖_q ≤ 𝒦 ‖f‖_p`.
pub fn check_young<T: Real>(
    f: &ComplexField2D<T>,
    p: T,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<InequalityReport<T>> {
    check(f, &CheckSpec::Young { p }, m1, m2)
}

/// `∫|u|^{-λ}|Of|² ≤ C_λ |b₁b₂|^{-λ} ∫|t|^λ|f|²`.
pub fn check_pitt<T: Real>(
    f: &ComplexField2D<T>,
    lambda: T,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<InequalityReport<T>> {
    check(f, &CheckSpec::Pitt { lambda }, m1, m2)
}

/// `∫ln|u||Of|² + ∫ln|t||f|² ≥ -K'₀` for unit-energy `f`.
pub fn check_logup<T: Real>(
    f: &ComplexField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<InequalityReport<T>> {
    check(f, &CheckSpec::LogUp, m1, m2)
}

/// `ℰ(|f|²) + |b₁b₂| ℰ(|Of|²) ≥ ln(π e |b₁b₂|^{|b₁b₂|})` for unit-energy `f`.
pub fn check_entropy<T: Real>(
    f: &ComplexField2D<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<InequalityReport<T>> {
    check(f, &CheckSpec::Entropy, m1, m2)
}

/// Smallest constant of the Nazarov-type bound for the given sets.
pub fn check_nazarov<T: Real>(
    f: &ComplexField2D<T>,
    t1: &RectSet<T>,
    t2: &RectSet<T>,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<InequalityReport<T>> {
    check(f, &CheckSpec::Nazarov { t1: *t1, t2: *t2 }, m1, m2)
}

/// Product of central second moments along axis `k` for unit-energy `f`.
pub fn check_heisenberg<T: Real>(
    f: &ComplexField2D<T>,
    k: usize,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
) -> Result<InequalityReport<T>> {
    check_heisenberg_with_norm(f, k, m1, m2, T::one())
}

/// As [`check_heisenberg`] with `f` scaled to energy `norm_sq` first.
pub fn check_heisenberg_with_norm<T: Real>(
    f: &ComplexField2D<T>,
    k: usize,
    m1: &OLCTParams<T>,
    m2: &OLCTParams<T>,
    norm_sq: T,
) -> Result<InequalityReport<T>> {
    check(f, &CheckSpec::Heisenberg { k: Some(k), norm_sq }, m1, m2)
}
