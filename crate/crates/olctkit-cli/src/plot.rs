//! Sweep results as per-quantity CSV files and a small SVG line chart.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use olctkit::inequality::{fmt_sig, TableKind, TableRow};

use crate::error::CliError;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
const PANEL: f64 = 300.0;
const MARGIN: f64 = 45.0;

fn x_label(kind: TableKind) -> (&'static str, &'static str) {
    match kind {
        TableKind::Heisenberg => ("alpha1", "b1"),
        TableKind::Young => ("alpha", "q"),
    }
}

fn quantities() -> [(&'static str, fn(&TableRow) -> f64); 3] {
    [("lhs", |r| r.lhs), ("rhs", |r| r.rhs), ("difference", |r| r.difference)]
}

/// Writes `lhs.csv`, `rhs.csv`, `difference.csv` and, if asked, `sweep.svg`; returns the paths written.
pub fn emit_plot_data(kind: TableKind, rows: &[TableRow], dir: &Path, svg: bool) -> Result<Vec<PathBuf>, CliError> {
    let (a, x) = x_label(kind);
    let mut written = Vec::new();
    for (name, get) in quantities() {
        let mut text = format!("{a},{x},{name}\n");
        for r in rows {
            let _ = writeln!(text, "{},{},{}", fmt_sig(r.alpha), fmt_sig(r.x), fmt_sig(get(r)));
        }
        let path = dir.join(format!("{name}.csv"));
        fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
        written.push(path);
    }
    if svg {
        let path = dir.join("sweep.svg");
        fs::write(&path, render_svg(kind, rows)).map_err(|e| CliError::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

fn range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() {
        (0.0, 1.0)
    } else if hi - lo < 1e-12 {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

/// Three panels (lhs, rhs, difference), one polyline per alpha.
pub fn render_svg(kind: TableKind, rows: &[TableRow]) -> String {
    let (a_name, x_name) = x_label(kind);
    let width = 3.0 * PANEL;
    let height = PANEL + 30.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="sans-serif" font-size="11">"#
    );
    let mut alphas: Vec<f64> = rows.iter().map(|r| r.alpha).collect();
    alphas.sort_by(f64::total_cmp);
    alphas.dedup();
    let (x_lo, x_hi) = range(rows.iter().map(|r| r.x));
    for (p, (name, get)) in quantities().into_iter().enumerate() {
        let ox = p as f64 * PANEL;
        let (y_lo, y_hi) = range(rows.iter().map(get));
        let sx = |x: f64| ox + MARGIN + (x - x_lo) / (x_hi - x_lo) * (PANEL - 1.5 * MARGIN);
        let sy = |y: f64| PANEL - MARGIN + 10.0 - (y - y_lo) / (y_hi - y_lo) * (PANEL - 1.5 * MARGIN);
        let _ = writeln!(
            out,
            r##"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#999"/>"##,
            ox + MARGIN,
            MARGIN / 2.0 + 10.0,
            PANEL - 1.5 * MARGIN,
            PANEL - 1.5 * MARGIN
        );
        let _ = writeln!(out, r#"<text x="{}" y="15" text-anchor="middle">{name}</text>"#, ox + PANEL / 2.0);
        let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle">{x_name}</text>"#, ox + PANEL / 2.0, PANEL + 20.0);
        let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#, ox + MARGIN - 3.0, sy(y_lo), fmt_sig(y_lo));
        let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#, ox + MARGIN - 3.0, sy(y_hi), fmt_sig(y_hi));
        for (k, alpha) in alphas.iter().enumerate() {
            let pts: Vec<String> = rows
                .iter()
                .filter(|r| r.alpha == *alpha)
                .map(|r| format!("{:.2},{:.2}", sx(r.x), sy(get(r))))
                .collect();
            let color = PALETTE[k % PALETTE.len()];
            let _ = writeln!(out, r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#, pts.join(" "));
            if p == 0 {
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}" fill="{color}">{a_name}={}</text>"#,
                    ox + MARGIN + 5.0,
                    MARGIN / 2.0 + 25.0 + 13.0 * k as f64,
                    fmt_sig(*alpha)
                );
            }
        }
    }
    if rows.is_empty() {
        let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle">empty sweep</text>"#, width / 2.0, height / 2.0);
    }
    out.push_str("</svg>\n");
    out
}
