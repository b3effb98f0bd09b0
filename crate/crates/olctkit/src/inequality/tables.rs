use rayon::prelude::*;

use super::checks::check;
use super::report::CheckSpec;
use crate::error::Result;
use crate::gaussian::{gaussian_field, GaussianSpec};
use crate::olct::{validate_params, OLCTParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// Rows `(α₁, b₁)`, Heisenberg product along axis 1.
    Heisenberg,
    /// Rows `(α, p)`, sharp Hausdorff-Young; the CSV shows the conjugate `q`.
    Young,
}

impl TableKind {
    pub fn header(&self) -> &'static str {
        match self {
            TableKind::Heisenberg => "alpha1,b1,lhs,rhs,difference",
            TableKind::Young => "alpha,q,rhs,lhs,difference",
        }
    }
}

/// Parameters the tables hold fixed. `c` is derived as `(ad - 1)/b` to keep each axis symplectic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableDefaults {
    pub a: f64,
    pub d: f64,
    pub tau: f64,
    pub eta: f64,
    /// `b₁` for the Young table.
    pub b1: f64,
    pub b2: f64,
    /// `None` ties `α₂` to `α₁`.
    pub alpha2: Option<f64>,
    /// Energy the Heisenberg signal is scaled to.
    pub norm_sq: f64,
    pub n: usize,
}

impl Default for TableDefaults {
    fn default() -> Self {
        Self { a: 1.0, d: 1.0, tau: 0.0, eta: 0.0, b1: 1.0, b2: 1.0, alpha2: None, norm_sq: 4.0, n: 256 }
    }
}

impl TableDefaults {
    pub fn axis(&self, b: f64) -> Result<OLCTParams<f64>> {
        validate_params(OLCTParams {
            a: self.a,
            b,
            c: (self.a * self.d - 1.0) / b,
            d: self.d,
            tau: self.tau,
            eta: self.eta,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub alpha: f64,
    /// `b₁` (Heisenberg) or the spectral exponent `q` (Young).
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// Oriented so that a positive value means the inequality holds.
    pub difference: f64,
    pub satisfied: bool,
}

fn cell(kind: TableKind, alpha: f64, x: f64, defaults: &TableDefaults) -> Result<TableRow> {
    let g = GaussianSpec::new(alpha, defaults.alpha2.unwrap_or(alpha))?;
    let f = gaussian_field(&g, &g.auto_grid(defaults.n)?)?;
    let m2 = defaults.axis(defaults.b2)?;
    let (report, column) = match kind {
        TableKind::Heisenberg => {
            let m1 = defaults.axis(x)?;
            (check(&f, &CheckSpec::Heisenberg { k: Some(1), norm_sq: defaults.norm_sq }, &m1, &m2)?, x)
        }
        TableKind::Young => {
            let m1 = defaults.axis(defaults.b1)?;
            let r = check(&f, &CheckSpec::Young { p: x }, &m1, &m2)?;
            let q = r.params.get("q").unwrap_or(f64::NAN);
            (r, q)
        }
    };
    Ok(TableRow {
        alpha,
        x: column,
        lhs: report.lhs,
        rhs: report.rhs,
        difference: report.margin,
        satisfied: report.satisfied,
    })
}

/// Evaluates every `(α, x)` cell, ordered by `α` then `x`.
///
/// For the Young table `x` is the signal-side exponent `p ∈ [1, 2]`.
pub fn make_table(kind: TableKind, alphas: &[f64], xs: &[f64], defaults: &TableDefaults) -> Result<Vec<TableRow>> {
    let cells: Vec<(f64, f64)> = alphas.iter().flat_map(|&a| xs.iter().map(move |&x| (a, x))).collect();
    cells.par_iter().map(|&(a, x)| cell(kind, a, x, defaults)).collect()
}

/// Shortest representation of `x` after rounding to 9 significant digits.
pub fn fmt_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.8e}").parse().unwrap_or(x);
    shortest(rounded)
}

/// Shortest round-trip form, switching to an exponent outside `[1e-4, 1e15)`.
pub fn shortest(x: f64) -> String {
    let m = x.abs();
    if m == 0.0 || !x.is_finite() || (1e-4..1e15).contains(&m) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn table_csv(kind: TableKind, rows: &[TableRow]) -> String {
    let mut out = String::from(kind.header());
    out.push('\n');
    for r in rows {
        let cols = match kind {
            TableKind::Heisenberg => [r.alpha, r.x, r.lhs, r.rhs, r.difference],
            TableKind::Young => [r.alpha, r.x, r.rhs, r.lhs, r.difference],
        };
        let line: Vec<String> = cols.iter().map(|v| fmt_sig(*v)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}
