use std::fmt;
use std::str::FromStr;

use crate::error::OlctError;
use crate::functionals::RectSet;
use crate::olct::OLCTParams;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Young,
    Pitt,
    LogUp,
    Entropy,
    Nazarov,
    Heisenberg,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::Young,
        TheoremId::Pitt,
        TheoremId::LogUp,
        TheoremId::Entropy,
        TheoremId::Nazarov,
        TheoremId::Heisenberg,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Young => "young",
            TheoremId::Pitt => "pitt",
            TheoremId::LogUp => "logup",
            TheoremId::Entropy => "entropy",
            TheoremId::Nazarov => "nazarov",
            TheoremId::Heisenberg => "heisenberg",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = OlctError;

    /// Accepts the bare names and the `_q` suffixed quaternion names.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        let key = key.strip_suffix("_q").unwrap_or(&key);
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == key)
            .ok_or_else(|| OlctError::UnsupportedProbe(format!("unknown theorem '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Olct,
    Qolct,
}

impl Domain {
    pub fn as_str(&self) -> &'static str {
        match self {
            Domain::Olct => "olct",
            Domain::Qolct => "qolct",
        }
    }
}

/// `Upper`: the theorem asserts `lhs ≤ rhs`. `Lower`: `lhs ≥ rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Upper,
    Lower,
}

/// A theorem together with its free parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CheckSpec<T> {
    /// Signal-side exponent `1 ≤ p ≤ 2`; the spectral exponent is its conjugate.
    Young { p: T },
    Pitt { lambda: T },
    LogUp,
    Entropy,
    Nazarov { t1: RectSet<T>, t2: RectSet<T> },
    /// `k = None` is the product over both axes; `norm_sq` is the energy `f` is scaled to.
    Heisenberg { k: Option<usize>, norm_sq: T },
}

impl<T: Real> CheckSpec<T> {
    pub fn theorem(&self) -> TheoremId {
        match self {
            CheckSpec::Young { .. } => TheoremId::Young,
            CheckSpec::Pitt { .. } => TheoremId::Pitt,
            CheckSpec::LogUp => TheoremId::LogUp,
            CheckSpec::Entropy => TheoremId::Entropy,
            CheckSpec::Nazarov { .. } => TheoremId::Nazarov,
            CheckSpec::Heisenberg { .. } => TheoremId::Heisenberg,
        }
    }
}

/// Parameter snapshot: the two axis parameter sets and named scalars
/// (exponents, constants, alternative right-hand sides).
#[derive(Debug, Clone, PartialEq)]
pub struct ReportParams<T> {
    pub m1: OLCTParams<T>,
    pub m2: OLCTParams<T>,
    pub values: Vec<(&'static str, T)>,
}

impl<T: Real> ReportParams<T> {
    pub fn get(&self, name: &str) -> Option<T> {
        self.values.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport<T> {
    pub theorem: TheoremId,
    pub domain: Domain,
    pub orientation: Orientation,
    pub lhs: T,
    pub rhs: T,
    /// Nonnegative when the asserted direction holds.
    pub margin: T,
    pub satisfied: bool,
    pub params: ReportParams<T>,
    pub quad_error: T,
    pub notes: Vec<String>,
}

impl<T: Real> InequalityReport<T> {
    pub fn new(
        theorem: TheoremId,
        domain: Domain,
        orientation: Orientation,
        lhs: T,
        rhs: T,
        quad_error: T,
        params: ReportParams<T>,
    ) -> Self {
        let margin = match orientation {
            Orientation::Upper => rhs - lhs,
            Orientation::Lower => lhs - rhs,
        };
        let satisfied = margin.is_finite() && margin >= -quad_error;
        Self { theorem, domain, orientation, lhs, rhs, margin, satisfied, params, quad_error, notes: Vec::new() }
    }

    /// `|lhs - rhs|`, the table's Difference column.
    pub fn difference(&self) -> T {
        (self.lhs - self.rhs).abs()
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let dir = match self.orientation {
            Orientation::Upper => "<=",
            Orientation::Lower => ">=",
        };
        format!(
            "{}[{}] lhs={:.9} {} rhs={:.9} margin={:.3e} quad_error={:.1e} satisfied={}",
            self.theorem,
            self.domain.as_str(),
            self.lhs.as_f64(),
            dir,
            self.rhs.as_f64(),
            self.margin.as_f64(),
            self.quad_error.as_f64(),
            self.satisfied
        )
    }
}
