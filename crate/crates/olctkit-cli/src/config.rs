//! JSON run configuration.

use std::fs;
use std::path::{Path, PathBuf};

use olctkit::functionals::RectSet;
use olctkit::inequality::{CheckSpec, Domain, Probe, TableDefaults, TheoremId};
use olctkit::olct::validate_params;
use olctkit::OLCTParams;
use serde::Deserialize;

use crate::error::CliError;

/// `[a, b, c, d, tau, eta]` or the same fields as an object.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
pub enum ParamsInput {
    Array([f64; 6]),
    Object { a: f64, b: f64, c: f64, d: f64, #[serde(default)] tau: f64, #[serde(default)] eta: f64 },
}

impl ParamsInput {
    pub fn params(self) -> OLCTParams<f64> {
        match self {
            ParamsInput::Array([a, b, c, d, tau, eta]) => OLCTParams { a, b, c, d, tau, eta },
            ParamsInput::Object { a, b, c, d, tau, eta } => OLCTParams { a, b, c, d, tau, eta },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum HalfWidth {
    Auto(AutoTag),
    Value(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutoTag {
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default = "default_n")]
    pub n: usize,
    #[serde(default = "auto")]
    pub half_width: HalfWidth,
}

fn default_n() -> usize {
    256
}

fn auto() -> HalfWidth {
    HalfWidth::Auto(AutoTag::Auto)
}

impl Default for GridConfig {
    fn default() -> Self {
        Self { n: default_n(), half_width: auto() }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SignalConfig {
    Gaussian {
        #[serde(alias = "alpha")]
        alpha1: f64,
        alpha2: Option<f64>,
        #[serde(default)]
        shift: (f64, f64),
    },
    QuaternionGaussian {
        #[serde(alias = "alpha")]
        alpha1: f64,
        alpha2: Option<f64>,
        #[serde(default)]
        normalize: bool,
    },
    Csv {
        path: PathBuf,
    },
}

impl SignalConfig {
    pub fn alphas(&self) -> Option<(f64, f64)> {
        match *self {
            SignalConfig::Gaussian { alpha1, alpha2, .. } | SignalConfig::QuaternionGaussian { alpha1, alpha2, .. } => {
                Some((alpha1, alpha2.unwrap_or(alpha1)))
            }
            SignalConfig::Csv { .. } => None,
        }
    }
}

/// Rectangle as `[center1, center2, half1, half2]`.
pub type RectInput = [f64; 4];

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeConfig {
    pub kind: ProbeKind,
    pub alpha: (f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProbeKind {
    Shift,
    Scale,
}

impl From<ProbeKind> for Probe {
    fn from(k: ProbeKind) -> Self {
        match k {
            ProbeKind::Shift => Probe::Shift,
            ProbeKind::Scale => Probe::Scale,
        }
    }
}

/// Extras for `verify`. Unset values fall back to the defaults listed on each field.
#[derive(Debug, Clone, PartialEq, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckConfig {
    pub theorem: Option<String>,
    /// Young signal exponent, default 1.5.
    pub p: Option<f64>,
    /// Pitt exponent, default 0.5.
    pub lambda: Option<f64>,
    /// Nazarov sets, default the centered unit square.
    pub t1: Option<RectInput>,
    pub t2: Option<RectInput>,
    /// Heisenberg axis (1 or 2); omitted means the product over both axes.
    pub k: Option<usize>,
    /// Energy the Heisenberg signal is scaled to, default 1.
    pub norm_sq: Option<f64>,
    pub probe: Option<ProbeConfig>,
}

#[derive(Debug, Clone, PartialEq, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableConfig {
    pub alphas: Option<Vec<f64>>,
    /// `b₁` values (Heisenberg) or signal exponents `p` (Young).
    pub xs: Option<Vec<f64>>,
    pub a: Option<f64>,
    pub d: Option<f64>,
    pub tau: Option<f64>,
    pub eta: Option<f64>,
    pub b1: Option<f64>,
    pub b2: Option<f64>,
    pub alpha2: Option<f64>,
    pub norm_sq: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default = "default_out")]
    pub dir: PathBuf,
    #[serde(default = "yes")]
    pub svg: bool,
}

fn default_out() -> PathBuf {
    PathBuf::from("out")
}

fn yes() -> bool {
    true
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self { dir: default_out(), svg: true }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(alias = "M1")]
    m1: ParamsInput,
    #[serde(alias = "M2")]
    m2: ParamsInput,
    #[serde(default)]
    grid: GridConfig,
    signal: SignalConfig,
    #[serde(default)]
    check: CheckConfig,
    #[serde(default)]
    table: TableConfig,
    #[serde(default)]
    output: OutputConfig,
}

/// Parsed and validated configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub m1: OLCTParams<f64>,
    pub m2: OLCTParams<f64>,
    pub grid: GridConfig,
    pub signal: SignalConfig,
    pub check: CheckConfig,
    pub table: TableConfig,
    pub output: OutputConfig,
}

impl RunConfig {
    /// Engine implied by the signal kind; CSV inputs decide by their header.
    pub fn signal_domain(&self) -> Result<Domain, CliError> {
        match &self.signal {
            SignalConfig::Gaussian { .. } => Ok(Domain::Olct),
            SignalConfig::QuaternionGaussian { .. } => Ok(Domain::Qolct),
            SignalConfig::Csv { path } => crate::fields::csv_domain(path),
        }
    }

    pub fn theorem(&self, cli: Option<&str>) -> Result<TheoremId, CliError> {
        let name = cli.or(self.check.theorem.as_deref()).ok_or_else(|| {
            CliError::validation("MissingTheorem", "pass --theorem or set check.theorem".into())
        })?;
        name.parse::<TheoremId>().map_err(CliError::from)
    }

    pub fn check_spec(&self, theorem: TheoremId) -> Result<CheckSpec<f64>, CliError> {
        let c = &self.check;
        let rect = |r: Option<RectInput>| -> Result<RectSet<f64>, CliError> {
            match r {
                None => Ok(RectSet::centered_square(1.0)),
                Some([c1, c2, h1, h2]) => RectSet::new((c1, c2), (h1, h2)).map_err(CliError::from),
            }
        };
        Ok(match theorem {
            TheoremId::Young => CheckSpec::Young { p: c.p.unwrap_or(1.5) },
            TheoremId::Pitt => CheckSpec::Pitt { lambda: c.lambda.unwrap_or(0.5) },
            TheoremId::LogUp => CheckSpec::LogUp,
            TheoremId::Entropy => CheckSpec::Entropy,
            TheoremId::Nazarov => CheckSpec::Nazarov { t1: rect(c.t1)?, t2: rect(c.t2)? },
            TheoremId::Heisenberg => CheckSpec::Heisenberg { k: c.k, norm_sq: c.norm_sq.unwrap_or(1.0) },
        })
    }

    pub fn table_defaults(&self) -> TableDefaults {
        let t = &self.table;
        let base = TableDefaults::default();
        TableDefaults {
            a: t.a.unwrap_or(base.a),
            d: t.d.unwrap_or(base.d),
            tau: t.tau.unwrap_or(base.tau),
            eta: t.eta.unwrap_or(base.eta),
            b1: t.b1.unwrap_or(base.b1),
            b2: t.b2.unwrap_or(base.b2),
            alpha2: t.alpha2.or(base.alpha2),
            norm_sq: t.norm_sq.unwrap_or(base.norm_sq),
            n: self.grid.n,
        }
    }
}

/// Parses `text`; `base` resolves relative CSV paths.
pub fn parse_config(text: &str, base: &Path) -> Result<RunConfig, CliError> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let m1 = validate_params(raw.m1.params())?;
    let m2 = validate_params(raw.m2.params())?;
    if raw.grid.n < 2 {
        return Err(CliError::validation("InvalidGrid", format!("grid.n must be at least 2, got {}", raw.grid.n)));
    }
    if let HalfWidth::Value(h) = raw.grid.half_width {
        if !(h > 0.0 && h.is_finite()) {
            return Err(CliError::validation("InvalidGrid", format!("grid.half_width must be positive, got {h}")));
        }
    }
    let signal = match raw.signal {
        SignalConfig::Csv { path } => {
            let path = if path.is_relative() { base.join(path) } else { path };
            if !path.is_file() {
                return Err(CliError::validation("MissingFile", format!("signal file {} does not exist", path.display())));
            }
            SignalConfig::Csv { path }
        }
        other => {
            let (a1, a2) = other.alphas().expect("analytic signal");
            if !(a1 > 0.0 && a2 > 0.0) {
                return Err(CliError::validation("InvalidSignal", format!("Gaussian widths must be positive, got ({a1}, {a2})")));
            }
            other
        }
    };
    Ok(RunConfig { m1, m2, grid: raw.grid, signal, check: raw.check, table: raw.table, output: raw.output })
}

pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_config(&text, path.parent().unwrap_or(Path::new(".")))
}
