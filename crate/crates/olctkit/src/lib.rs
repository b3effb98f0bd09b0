//! Offset linear canonical transforms (OLCT) in two dimensions, their
//! quaternion extension, and numerical checks of the associated
//! inequalities and uncertainty principles.
//!
//! Everything is generic over the scalar type through [`Real`] (`f32` or
//! `f64`); the `*64` aliases below fix the common double-precision case.

pub mod dft;
pub mod error;
pub mod functionals;
pub mod gaussian;
pub mod grid;
pub mod inequality;
pub mod olct;
pub mod qolct;
pub mod quaternion;
pub mod scalar;
pub mod signal;
pub mod special;

pub use error::{ErrorClass, OlctError, Result};
pub use grid::{Axis, ComplexField2D, Grid2D};
pub use olct::OLCTParams;
pub use quaternion::{OpsPair, Quaternion};
pub use scalar::Real;

pub type Quaternion64 = Quaternion<f64>;
pub type Quaternion32 = Quaternion<f32>;
pub type OLCTParams64 = OLCTParams<f64>;
pub type OLCTParams32 = OLCTParams<f32>;
pub type Grid2D64 = Grid2D<f64>;
pub type Grid2D32 = Grid2D<f32>;
pub type ComplexField2D64 = ComplexField2D<f64>;
pub type ComplexField2D32 = ComplexField2D<f32>;
pub type QuaternionField2D64 = qolct::QuaternionField2D<f64>;
pub type QuaternionField2D32 = qolct::QuaternionField2D<f32>;
pub type InequalityReport64 = inequality::InequalityReport<f64>;
