use std::fs;
use std::path::{Path, PathBuf};

use olctkit::gaussian::{gaussian_field, GaussianSpec};
use olctkit::grid::rel_linf;
use olctkit::inequality::{
    check, effect_probe, fmt_sig, make_table, table_csv, CheckSpec, Domain, EffectReport, InequalityReport,
    Orientation, TableDefaults, TableKind,
};
use olctkit::olct::{induced_grid, inverse_olct_2d, inverse_olct_2d_fft, olct_2d};
use olctkit::qolct::{
    check_q_identities, check_q_inequality, inverse_qolct, inverse_qolct_fft, q_rel_linf, qolct, QuaternionField2D,
    QuaternionGaussian,
};
use olctkit::signal::Shifted;
use olctkit::{Axis, ComplexField2D, Grid2D, OLCTParams};

use crate::config::{load_config, HalfWidth, RunConfig, SignalConfig};
use crate::error::CliError;
use crate::fields::{read_field, write_complex, write_quaternion, Coords, FieldData};
use crate::plot::emit_plot_data;
use crate::{DomainArg, Which};

/// Command-line overrides shared by every command.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub config: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub grid_n: Option<usize>,
}

impl Options {
    fn load(&self) -> Result<RunConfig, CliError> {
        let path = self
            .config
            .as_deref()
            .ok_or_else(|| CliError::validation("MissingConfig", "this command needs --config <path>".into()))?;
        let mut cfg = load_config(path)?;
        if let Some(n) = self.grid_n {
            if n < 2 {
                return Err(CliError::validation("InvalidGrid", format!("--grid-n must be at least 2, got {n}")));
            }
            cfg.grid.n = n;
        }
        Ok(cfg)
    }

    fn out_dir(&self, cfg: Option<&RunConfig>) -> Result<PathBuf, CliError> {
        let dir = match (&self.out, cfg) {
            (Some(d), _) => d.clone(),
            (None, Some(c)) => c.output.dir.clone(),
            (None, None) => PathBuf::from("out"),
        };
        fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
        Ok(dir)
    }
}

type ShiftedGaussian = Shifted<GaussianSpec<f64>, f64>;

/// A sampled input, with the analytic form kept when there is one.
enum Input {
    Complex { field: ComplexField2D<f64>, analytic: Option<ShiftedGaussian>, coords: Coords },
    Quaternion { field: QuaternionField2D<f64>, coords: Coords },
}

impl Input {
    fn domain(&self) -> Domain {
        match self {
            Input::Complex { .. } => Domain::Olct,
            Input::Quaternion { .. } => Domain::Qolct,
        }
    }

    fn coords(&self) -> Coords {
        match self {
            Input::Complex { coords, .. } | Input::Quaternion { coords, .. } => *coords,
        }
    }
}

fn half_width(cfg: &RunConfig, auto: f64) -> f64 {
    match cfg.grid.half_width {
        HalfWidth::Auto(_) => auto,
        HalfWidth::Value(h) => h,
    }
}

fn load_input(cfg: &RunConfig) -> Result<Input, CliError> {
    match &cfg.signal {
        SignalConfig::Gaussian { alpha1, alpha2, shift } => {
            let g = GaussianSpec::new(*alpha1, alpha2.unwrap_or(*alpha1))?;
            let reach = shift.0.abs().max(shift.1.abs());
            let grid = Grid2D::square(cfg.grid.n, half_width(cfg, g.auto_half_width() + reach))?;
            // Support check on the grid seen from the Gaussian's own center.
            let centered = Grid2D::new(
                Axis { min: grid.axis1.min - shift.0, ..grid.axis1 },
                Axis { min: grid.axis2.min - shift.1, ..grid.axis2 },
            );
            gaussian_field(&g, &centered)?;
            let analytic = Shifted { inner: g, alpha: *shift };
            let field = olctkit::signal::Signal2D::sample(&analytic, &grid);
            Ok(Input::Complex { field, analytic: Some(analytic), coords: Coords::Signal })
        }
        SignalConfig::QuaternionGaussian { alpha1, alpha2, normalize } => {
            let q = QuaternionGaussian::new(GaussianSpec::new(*alpha1, alpha2.unwrap_or(*alpha1))?);
            let grid = Grid2D::square(cfg.grid.n, half_width(cfg, q.auto_half_width()))?;
            let field = if *normalize { q.sample_normalized(&grid) } else { q.sample(&grid) };
            Ok(Input::Quaternion { field, coords: Coords::Signal })
        }
        SignalConfig::Csv { path } => Ok(match read_field(path)? {
            (FieldData::Complex(field), coords) => Input::Complex { field, analytic: None, coords },
            (FieldData::Quaternion(field), coords) => Input::Quaternion { field, coords },
        }),
    }
}

fn ensure_finite(ok: bool, what: &str) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::numerical("NonFinite", format!("{what} contains NaN or infinite values")))
    }
}

fn require_coords(input: &Input, want: Coords, command: &str) -> Result<(), CliError> {
    if input.coords() == want {
        return Ok(());
    }
    let cols = match want {
        Coords::Signal => "t1,t2",
        Coords::Spectral => "u1,u2",
    };
    Err(CliError::validation("CsvFormat", format!("{command} expects a field with {cols} coordinate columns")))
}

fn uses_fft(grid: &Grid2D<f64>) -> bool {
    grid.n1().is_power_of_two() && grid.n2().is_power_of_two()
}

pub fn transform(opts: &Options) -> Result<(), CliError> {
    let cfg = opts.load()?;
    let input = load_input(&cfg)?;
    require_coords(&input, Coords::Signal, "transform")?;
    let dir = opts.out_dir(Some(&cfg))?;
    let path = dir.join("spectrum.csv");
    let grid = match &input {
        Input::Complex { field, .. } => {
            let spec = olct_2d(field, &cfg.m1, &cfg.m2)?;
            ensure_finite(spec.is_finite(), "spectrum")?;
            write_complex(&path, &spec, Coords::Spectral)?;
            spec.grid
        }
        Input::Quaternion { field, .. } => {
            let spec = qolct(field, &cfg.m1, &cfg.m2)?;
            ensure_finite(spec.is_finite(), "spectrum")?;
            write_quaternion(&path, &spec, Coords::Spectral)?;
            spec.grid
        }
    };
    println!(
        "transform[{}] n={}x{} u1=[{}, {}] u2=[{}, {}] -> {}",
        input.domain().as_str(),
        grid.n1(),
        grid.n2(),
        fmt_sig(grid.axis1.min),
        fmt_sig(grid.axis1.max()),
        fmt_sig(grid.axis2.min),
        fmt_sig(grid.axis2.max()),
        path.display()
    );
    Ok(())
}

/// FFT path when it lands on `tgrid` (or no grid is asked for), quadrature otherwise.
fn inverse_complex(
    spec: &ComplexField2D<f64>,
    m1: &OLCTParams<f64>,
    m2: &OLCTParams<f64>,
    tgrid: Option<&Grid2D<f64>>,
) -> Result<ComplexField2D<f64>, CliError> {
    let target = tgrid.copied().unwrap_or_else(|| induced_grid(&spec.grid, &m1.inverse(), &m2.inverse()));
    let fast = if uses_fft(&spec.grid) { Some(inverse_olct_2d_fft(spec, m1, m2)?) } else { None };
    let out = match fast {
        Some(f) if tgrid.is_none() || f.grid.approx_eq(&target) => f,
        _ => inverse_olct_2d(spec, m1, m2, &target)?,
    };
    ensure_finite(out.is_finite(), "reconstruction")?;
    Ok(out)
}

/// FFT path when it lands on `tgrid` (or no grid is asked for), quadrature otherwise.
fn inverse_quaternion(
    spec: &QuaternionField2D<f64>,
    m1: &OLCTParams<f64>,
    m2: &OLCTParams<f64>,
    tgrid: Option<&Grid2D<f64>>,
) -> Result<QuaternionField2D<f64>, CliError> {
    let target = tgrid.copied().unwrap_or_else(|| induced_grid(&spec.grid, &m1.inverse(), &m2.inverse()));
    let fast = if uses_fft(&spec.grid) { Some(inverse_qolct_fft(spec, m1, m2)?) } else { None };
    let out = match fast {
        Some(f) if tgrid.is_none() || f.grid.approx_eq(&target) => f,
        _ => inverse_qolct(spec, m1, m2, &target)?,
    };
    ensure_finite(out.is_finite(), "reconstruction")?;
    Ok(out)
}

/// A spectrum CSV is inverted; any other signal is transformed and inverted again.
pub fn inverse(opts: &Options) -> Result<(), CliError> {
    let cfg = opts.load()?;
    let input = load_input(&cfg)?;
    let dir = opts.out_dir(Some(&cfg))?;
    let path = dir.join("reconstructed.csv");
    let (m1, m2) = (&cfg.m1, &cfg.m2);
    let round_trip = match (&input, input.coords()) {
        (Input::Complex { field, .. }, Coords::Spectral) => {
            write_complex(&path, &inverse_complex(field, m1, m2, None)?, Coords::Signal)?;
            None
        }
        (Input::Quaternion { field, .. }, Coords::Spectral) => {
            write_quaternion(&path, &inverse_quaternion(field, m1, m2, None)?, Coords::Signal)?;
            None
        }
        (Input::Complex { field, .. }, Coords::Signal) => {
            let spec = olct_2d(field, m1, m2)?;
            ensure_finite(spec.is_finite(), "spectrum")?;
            write_complex(&dir.join("spectrum.csv"), &spec, Coords::Spectral)?;
            let back = inverse_complex(&spec, m1, m2, Some(&field.grid))?;
            write_complex(&path, &back, Coords::Signal)?;
            Some(rel_linf(&back.values, &field.values))
        }
        (Input::Quaternion { field, .. }, Coords::Signal) => {
            let spec = qolct(field, m1, m2)?;
            ensure_finite(spec.is_finite(), "spectrum")?;
            write_quaternion(&dir.join("spectrum.csv"), &spec, Coords::Spectral)?;
            let back = inverse_quaternion(&spec, m1, m2, Some(&field.grid))?;
            write_quaternion(&path, &back, Coords::Signal)?;
            Some(q_rel_linf(&back.values, &field.values))
        }
    };
    match round_trip {
        Some(e) => println!("inverse[{}] round_trip_rel_linf={e:.3e} -> {}", input.domain().as_str(), path.display()),
        None => println!("inverse[{}] -> {}", input.domain().as_str(), path.display()),
    }
    Ok(())
}

fn params_cell(p: &OLCTParams<f64>) -> String {
    [p.a, p.b, p.c, p.d, p.tau, p.eta].iter().map(|v| fmt_sig(*v)).collect::<Vec<_>>().join(";")
}

fn write_report(path: &Path, r: &InequalityReport<f64>) -> Result<(), CliError> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record([
        "theorem", "domain", "orientation", "lhs", "rhs", "difference", "margin", "quad_error", "satisfied", "m1", "m2",
        "values", "notes",
    ])?;
    let orientation = match r.orientation {
        Orientation::Upper => "lhs<=rhs",
        Orientation::Lower => "lhs>=rhs",
    };
    let values: Vec<String> = r.params.values.iter().map(|(k, v)| format!("{k}={}", fmt_sig(*v))).collect();
    w.write_record([
        r.theorem.as_str().to_string(),
        r.domain.as_str().to_string(),
        orientation.to_string(),
        fmt_sig(r.lhs),
        fmt_sig(r.rhs),
        fmt_sig(r.difference()),
        fmt_sig(r.margin),
        fmt_sig(r.quad_error),
        r.satisfied.to_string(),
        params_cell(&r.params.m1),
        params_cell(&r.params.m2),
        values.join(";"),
        r.notes.join("; "),
    ])?;
    w.flush().map_err(|e| CliError::io(path, e))
}

fn write_effect(path: &Path, e: &EffectReport<f64>) -> Result<(), CliError> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record([
        "theorem", "probe", "alpha1", "alpha2", "delta_kind", "predicted_delta", "measured_delta", "tolerance",
        "within_tolerance",
    ])?;
    w.write_record([
        e.theorem.as_str().to_string(),
        e.probe.as_str().to_string(),
        fmt_sig(e.alpha.0),
        fmt_sig(e.alpha.1),
        e.delta_kind.to_string(),
        fmt_sig(e.predicted_delta),
        fmt_sig(e.measured_delta),
        fmt_sig(e.tolerance),
        e.within_tolerance().to_string(),
    ])?;
    w.flush().map_err(|e| CliError::io(path, e))
}

pub fn verify(opts: &Options, theorem: Option<&str>, domain: Option<DomainArg>) -> Result<(), CliError> {
    let cfg = opts.load()?;
    let theorem = cfg.theorem(theorem)?;
    let spec: CheckSpec<f64> = cfg.check_spec(theorem)?;
    let signal_domain = cfg.signal_domain()?;
    let wanted = match domain {
        Some(DomainArg::Olct) => Domain::Olct,
        Some(DomainArg::Qolct) => Domain::Qolct,
        None => signal_domain,
    };
    if wanted != signal_domain {
        return Err(CliError::validation(
            "DomainMismatch",
            format!("--domain {} does not match a {} signal", wanted.as_str(), signal_domain.as_str()),
        ));
    }
    let input = load_input(&cfg)?;
    require_coords(&input, Coords::Signal, "verify")?;
    let dir = opts.out_dir(Some(&cfg))?;
    let report = match &input {
        Input::Complex { field, .. } => check(field, &spec, &cfg.m1, &cfg.m2)?,
        Input::Quaternion { field, .. } => check_q_inequality(field, &spec, &cfg.m1, &cfg.m2)?,
    };
    ensure_finite(report.lhs.is_finite() && report.rhs.is_finite(), "report")?;
    let path = dir.join("report.csv");
    write_report(&path, &report)?;
    println!("{}", report.summary());
    println!("lhs={} rhs={} difference={}", fmt_sig(report.lhs), fmt_sig(report.rhs), fmt_sig(report.difference()));
    for note in &report.notes {
        println!("note: {note}");
    }
    if let Input::Quaternion { field, .. } = &input {
        let (modulus, parseval) = check_q_identities(field, None, &cfg.m1, &cfg.m2)?;
        println!("identity {}", modulus.summary());
        println!("identity {}", parseval.summary());
    }
    if let Some(probe) = cfg.check.probe {
        let analytic = match &input {
            Input::Complex { analytic: Some(a), field, .. } => Some((a, field.grid)),
            _ => None,
        };
        let (signal, grid) = analytic.ok_or_else(|| {
            CliError::validation("UnsupportedProbe", "effect probes need an analytic complex signal".into())
        })?;
        let effect = effect_probe(&spec, signal, &grid, probe.kind.into(), probe.alpha, &cfg.m1, &cfg.m2)?;
        ensure_finite(effect.measured_delta.is_finite() && effect.predicted_delta.is_finite(), "effect probe")?;
        write_effect(&dir.join("effect.csv"), &effect)?;
        println!(
            "effect {} {} predicted={:.6e} measured={:.6e} tolerance={:.1e} within_tolerance={}",
            effect.probe.as_str(),
            effect.delta_kind,
            effect.predicted_delta,
            effect.measured_delta,
            effect.tolerance,
            effect.within_tolerance()
        );
    }
    println!("-> {}", path.display());
    Ok(())
}

pub const TABLE_ALPHAS: [f64; 3] = [1.5, 2.0, 2.5];
pub const TABLE_XS: [f64; 5] = [1.1, 1.3, 1.5, 1.7, 1.9];

pub fn table(opts: &Options, which: Which) -> Result<(), CliError> {
    let cfg = opts.config.as_ref().map(|_| opts.load()).transpose()?;
    let defaults = match &cfg {
        Some(c) => c.table_defaults(),
        None => TableDefaults { n: opts.grid_n.unwrap_or(TableDefaults::default().n), ..TableDefaults::default() },
    };
    if defaults.n < 2 {
        return Err(CliError::validation("InvalidGrid", format!("grid size must be at least 2, got {}", defaults.n)));
    }
    let table_cfg = cfg.as_ref().map(|c| c.table.clone()).unwrap_or_default();
    let alphas = table_cfg.alphas.unwrap_or_else(|| TABLE_ALPHAS.to_vec());
    let xs = table_cfg.xs.unwrap_or_else(|| TABLE_XS.to_vec());
    if let Some(bad) = alphas.iter().find(|a| !(**a > 0.0)) {
        return Err(CliError::validation("InvalidSignal", format!("table alphas must be positive, got {bad}")));
    }
    let kind = match which {
        Which::Heisenberg => TableKind::Heisenberg,
        Which::Young => TableKind::Young,
    };
    let dir = opts.out_dir(cfg.as_ref())?;
    let rows = make_table(kind, &alphas, &xs, &defaults)?;
    ensure_finite(rows.iter().all(|r| r.lhs.is_finite() && r.rhs.is_finite()), "table")?;
    let text = table_csv(kind, &rows);
    let path = dir.join("table.csv");
    fs::write(&path, &text).map_err(|e| CliError::io(&path, e))?;
    let svg = cfg.as_ref().map_or(true, |c| c.output.svg);
    emit_plot_data(kind, &rows, &dir, svg)?;
    print!("{text}");
    println!("-> {}", path.display());
    Ok(())
}
