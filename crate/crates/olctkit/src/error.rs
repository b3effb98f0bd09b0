use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OlctError {
    #[error("SymplecticViolation: ad - bc = {0}, expected 1")]
    SymplecticViolation(f64),
    #[error("DegenerateB: b = 0 is not supported")]
    DegenerateB,
    #[error("GridMismatch: {0}")]
    GridMismatch(String),
    #[error("NonPowerOfTwo: axis length {0} is not a power of two")]
    NonPowerOfTwo(usize),
    #[error("ZeroScale: scale factor must be nonzero")]
    ZeroScale,
    #[error("UnsupportedOrder: derivative order m + n = {0} exceeds 2")]
    UnsupportedOrder(usize),
    #[error("BadExponent: {0}")]
    BadExponent(f64),
    #[error("LambdaOutOfRange: lambda = {0}, expected 0 <= lambda < 2 and lambda != 1")]
    LambdaOutOfRange(f64),
    #[error("NotNormalized: density integrates to {0}")]
    NotNormalized(f64),
    #[error("InsufficientSupport: tail mass {0:e} outside the grid exceeds 1e-10")]
    InsufficientSupport(f64),
    #[error("ZeroTails: both tail energies vanish")]
    ZeroTails,
    #[error("UnsupportedProbe: {0}")]
    UnsupportedProbe(String),
    #[error("InvalidGrid: {0}")]
    InvalidGrid(String),
    #[error("NonFinite: {0}")]
    NonFinite(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Validation,
    Numerical,
}

impl OlctError {
    pub fn class(&self) -> ErrorClass {
        match self {
            OlctError::NonFinite(_) | OlctError::ZeroTails | OlctError::NotNormalized(_) => {
                ErrorClass::Numerical
            }
            _ => ErrorClass::Validation,
        }
    }

    /// Stable identifier, the text before the colon of the display form.
    pub fn code(&self) -> &'static str {
        match self {
            OlctError::SymplecticViolation(_) => "SymplecticViolation",
            OlctError::DegenerateB => "DegenerateB",
            OlctError::GridMismatch(_) => "GridMismatch",
            OlctError::NonPowerOfTwo(_) => "NonPowerOfTwo",
            OlctError::ZeroScale => "ZeroScale",
            OlctError::UnsupportedOrder(_) => "UnsupportedOrder",
            OlctError::BadExponent(_) => "BadExponent",
            OlctError::LambdaOutOfRange(_) => "LambdaOutOfRange",
            OlctError::NotNormalized(_) => "NotNormalized",
            OlctError::InsufficientSupport(_) => "InsufficientSupport",
            OlctError::ZeroTails => "ZeroTails",
            OlctError::UnsupportedProbe(_) => "UnsupportedProbe",
            OlctError::InvalidGrid(_) => "InvalidGrid",
            OlctError::NonFinite(_) => "NonFinite",
        }
    }
}

pub type Result<T> = std::result::Result<T, OlctError>;
