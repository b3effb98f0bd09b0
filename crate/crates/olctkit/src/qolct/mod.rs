//! Two-sided quaternion transform of `ℍ`-valued fields.
//!
//! The first-axis kernel multiplies from the left in the `(1, i)` plane and the
//! second-axis kernel from the right in the `(1, j)` plane. Three evaluation
//! paths are provided: direct quadrature, reduction to two complex transforms
//! through the orthogonal plane split, and a quaternion Fourier transform built
//! from four real-component FFTs. They agree to rounding on the induced grid.

mod checks;
mod field;
mod transform;

pub use checks::{check_q_identities, check_q_inequality, IdentityReport};
pub use field::{q_inner, q_rel_linf, QSpectrum2D, QuaternionField2D, QuaternionGaussian};
pub use transform::{inverse_qolct, inverse_qolct_fft, qolct, qolct_direct, qolct_via_ops, qolct_via_qft};
