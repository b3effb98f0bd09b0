//! Offset linear canonical transform of sampled 2D complex fields.
//!
//! Two evaluation paths share one convention. [`olct_2d_direct`] sums the
//! kernel against the samples on any requested spectral grid and serves as the
//! accuracy reference. [`olct_2d_fft`] factors the kernel into chirps around a
//! centered DFT and returns the spectrum on the grid `u = b ξ` induced by the
//! sampling. On that grid the two paths compute the same finite sum.

mod kernel;
mod laws;
mod params;
mod transform;

pub use kernel::{kernel_1d, kernel_prefactor};
pub use laws::{derivative_op, shift_law, ShiftLaw};
pub use params::{scale_map, validate_params, OLCTParams};
pub use transform::{
    adjoint_olct_2d, induced_axis, induced_grid, inverse_constant, inverse_olct_2d, inverse_olct_2d_fft,
    olct_2d, olct_2d_direct, olct_2d_fft,
};

pub(crate) use kernel::{kernel_unchecked, post_chirp, pre_chirp};
