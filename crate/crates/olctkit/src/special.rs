//! Constants of the Pitt and logarithmic inequalities, plus the error function.
//!
//! Gamma and digamma come from `statrs`, erfc from `libm`; all evaluated in `f64`.

use statrs::function::gamma;

use crate::error::{OlctError, Result};

pub fn gamma(x: f64) -> f64 {
    gamma::gamma(x)
}

pub fn digamma(x: f64) -> f64 {
    gamma::digamma(x)
}

pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// `C_λ = Γ((1-λ)/4) / Γ((1+λ)/4)` for `0 ≤ λ < 2`, `λ ≠ 1` (pole).
///
/// For `1 < λ < 2` the numerator argument is negative and the value is negative.
pub fn pitt_constant(lambda: f64) -> Result<f64> {
    if !(0.0..2.0).contains(&lambda) || lambda == 1.0 {
        return Err(OlctError::LambdaOutOfRange(lambda));
    }
    Ok(gamma_ratio(lambda))
}

/// `Γ((1-λ)/4) / Γ((1+λ)/4)` without range checks, e.g. for differencing around `λ = 0`.
pub fn gamma_ratio(lambda: f64) -> f64 {
    gamma((1.0 - lambda) / 4.0) / gamma((1.0 + lambda) / 4.0)
}

/// `K_λ = C_λ |b₁b₂|^{-λ}`.
pub fn pitt_factor(lambda: f64, b1b2: f64) -> Result<f64> {
    Ok(pitt_constant(lambda)? * b1b2.abs().powf(-lambda))
}

/// `K'₀ = d/dλ K_λ at λ = 0 = -ψ(1/4)/2 - ln|b₁b₂|`.
pub fn logup_constant(b1b2: f64) -> f64 {
    -digamma(0.25) / 2.0 - b1b2.abs().ln()
}
