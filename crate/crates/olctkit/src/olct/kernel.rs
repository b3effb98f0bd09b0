use num_complex::Complex;

use super::params::{validate_params, OLCTParams};
use crate::error::Result;
use crate::scalar::Real;

/// `√(1/(2π i b))` on the principal branch: `(2π|b|)^{-1/2} exp(-i sgn(b) π/4)`.
pub fn kernel_prefactor<T: Real>(b: T) -> Complex<T> {
    let modulus = (T::TAU() * b.abs()).sqrt().recip();
    Complex::from_polar(modulus, -b.signum() * T::FRAC_PI_4())
}

/// Phase of the kernel without its constant factor.
#[inline]
pub(crate) fn kernel_phase<T: Real>(p: &OLCTParams<T>, t: T, u: T) -> T {
    let two = T::lit(2.0);
    (p.a * t * t + two * t * (p.tau - u) - two * u * (p.d * p.tau - p.b * p.eta)
        + p.d * u * u
        + p.d * p.tau * p.tau)
        / (two * p.b)
}

/// One-axis kernel `K_M(t, u)`.
pub fn kernel_1d<T: Real>(p: &OLCTParams<T>, t: T, u: T) -> Result<Complex<T>> {
    validate_params(*p)?;
    Ok(kernel_unchecked(p, t, u))
}

#[inline]
pub(crate) fn kernel_unchecked<T: Real>(p: &OLCTParams<T>, t: T, u: T) -> Complex<T> {
    let phi = kernel_phase(p, t, u);
    kernel_prefactor(p.b) * Complex::new(phi.cos(), phi.sin())
}

/// Input-side chirp `exp{(i/2b)(a t² + 2tτ)}`.
#[inline]
pub(crate) fn pre_chirp<T: Real>(p: &OLCTParams<T>, t: T) -> Complex<T> {
    let phi = (p.a * t * t + T::lit(2.0) * t * p.tau) / (T::lit(2.0) * p.b);
    Complex::new(phi.cos(), phi.sin())
}

/// Output-side chirp `exp{(i/2b)(d u² + dτ² - 2u(dτ - bη))}`.
#[inline]
pub(crate) fn post_chirp<T: Real>(p: &OLCTParams<T>, u: T) -> Complex<T> {
    let two = T::lit(2.0);
    let phi = (p.d * u * u + p.d * p.tau * p.tau - two * u * (p.d * p.tau - p.b * p.eta)) / (two * p.b);
    Complex::new(phi.cos(), phi.sin())
}
