use serde::{Deserialize, Serialize};

use crate::error::{OlctError, Result};
use crate::scalar::Real;

/// Parameters `(a, b, c, d, τ, η)` of a one-axis offset linear canonical transform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OLCTParams<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
    pub tau: T,
    pub eta: T,
}

impl<T: Real> OLCTParams<T> {
    /// Builds and validates.
    pub fn new(a: T, b: T, c: T, d: T, tau: T, eta: T) -> Result<Self> {
        validate_params(Self { a, b, c, d, tau, eta })
    }

    /// `(0, 1, -1, 0, 0, 0)`: the unitary Fourier transform up to a constant phase.
    pub fn fourier() -> Self {
        Self { a: T::zero(), b: T::one(), c: -T::one(), d: T::zero(), tau: T::zero(), eta: T::zero() }
    }

    /// `(1, b, 0, 1, τ, η)`, a Fresnel-type transform; symplectic for every `b`.
    pub fn fresnel(b: T, tau: T, eta: T) -> Self {
        Self { a: T::one(), b, c: T::zero(), d: T::one(), tau, eta }
    }

    pub fn det(&self) -> T {
        self.a * self.d - self.b * self.c
    }

    /// Parameters of the inverse transform, `(d, -b, -c, a, bη - dτ, cτ - aη)`.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
            tau: self.b * self.eta - self.d * self.tau,
            eta: self.c * self.tau - self.a * self.eta,
        }
    }

    /// `(a, -b, -c, d, τ, -η)`: its kernel is the complex conjugate of this one's.
    pub fn conjugate(&self) -> Self {
        Self { a: self.a, b: -self.b, c: -self.c, d: self.d, tau: self.tau, eta: -self.eta }
    }

    pub fn to_f64(&self) -> OLCTParams<f64> {
        OLCTParams {
            a: self.a.as_f64(),
            b: self.b.as_f64(),
            c: self.c.as_f64(),
            d: self.d.as_f64(),
            tau: self.tau.as_f64(),
            eta: self.eta.as_f64(),
        }
    }
}

/// Returns `p` unchanged when `ad - bc = 1` and `b ≠ 0`.
pub fn validate_params<T: Real>(p: OLCTParams<T>) -> Result<OLCTParams<T>> {
    let vals = [p.a, p.b, p.c, p.d, p.tau, p.eta];
    if vals.iter().any(|v| !v.is_finite()) {
        return Err(OlctError::NonFinite(format!("parameters {:?}", p.to_f64())));
    }
    let tol = T::lit(1e-12).max(T::epsilon() * T::lit(8.0));
    let det = p.det();
    if (det - T::one()).abs() > tol {
        return Err(OlctError::SymplecticViolation(det.as_f64()));
    }
    if p.b == T::zero() {
        return Err(OlctError::DegenerateB);
    }
    Ok(p)
}

/// `M' = (a/α², b, c, dα², τ/α, αη)`, the parameters that absorb a dilation `f(α t)`.
pub fn scale_map<T: Real>(p: OLCTParams<T>, alpha: T) -> Result<OLCTParams<T>> {
    if alpha == T::zero() || !alpha.is_finite() {
        return Err(OlctError::ZeroScale);
    }
    let a2 = alpha * alpha;
    Ok(OLCTParams {
        a: p.a / a2,
        b: p.b,
        c: p.c,
        d: p.d * a2,
        tau: p.tau / alpha,
        eta: alpha * p.eta,
    })
}
