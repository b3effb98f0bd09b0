//! Both sides of every inequality and uncertainty principle, evaluated by quadrature.
//!
//! A check turns a signal into two densities, `|f|²` on the signal grid and
//! `|Of|²` on the spectral grid, and evaluates the theorem's two sides from
//! them. The same engine serves the complex transform and the quaternion one.
//! Each report carries a quadrature-error estimate obtained by repeating the
//! evaluation on the signal decimated to half resolution.

pub(crate) mod checks;
mod effect;
mod report;
mod tables;

pub use checks::{
    check, check_entropy, check_heisenberg, check_heisenberg_with_norm, check_logup, check_nazarov, check_pitt,
    check_young, evaluate_densities, nazarov_constant, young_constant, Densities, Evaluation,
};
pub use effect::{effect_probe, EffectReport, Probe};
pub use report::{CheckSpec, Domain, InequalityReport, Orientation, ReportParams, TheoremId};
pub use tables::{fmt_sig, make_table, shortest, table_csv, TableDefaults, TableKind, TableRow};
