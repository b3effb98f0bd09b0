//! CSV dumps of sampled fields: `t1,t2,re,im` (complex) and `t1,t2,w,x,y,z` (quaternion).
//!
//! Rows run over axis 2 fastest. Numbers are written in shortest round-trip form.

use std::fs::File;
use std::path::Path;

use num_complex::Complex;
use olctkit::inequality::{shortest, Domain};
use olctkit::qolct::QuaternionField2D;
use olctkit::{Axis, ComplexField2D, Grid2D, Quaternion};

use crate::error::CliError;

/// Which coordinate the first two columns hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coords {
    Signal,
    Spectral,
}

impl Coords {
    fn labels(self) -> [&'static str; 2] {
        match self {
            Coords::Signal => ["t1", "t2"],
            Coords::Spectral => ["u1", "u2"],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FieldData {
    Complex(ComplexField2D<f64>),
    Quaternion(QuaternionField2D<f64>),
}

fn writer(path: &Path) -> Result<csv::Writer<File>, CliError> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    Ok(csv::Writer::from_writer(file))
}

fn write_rows(path: &Path, header: &[&str], rows: impl Iterator<Item = Vec<f64>>) -> Result<(), CliError> {
    let mut w = writer(path)?;
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.iter().map(|v| shortest(*v)))?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

pub fn write_complex(path: &Path, f: &ComplexField2D<f64>, coords: Coords) -> Result<(), CliError> {
    let [a, b] = coords.labels();
    write_rows(
        path,
        &[a, b, "re", "im"],
        f.values.iter().enumerate().map(|(i, v)| {
            let (t1, t2) = f.grid.coords(i);
            vec![t1, t2, v.re, v.im]
        }),
    )
}

pub fn write_quaternion(path: &Path, f: &QuaternionField2D<f64>, coords: Coords) -> Result<(), CliError> {
    let [a, b] = coords.labels();
    write_rows(
        path,
        &[a, b, "w", "x", "y", "z"],
        f.values.iter().enumerate().map(|(i, q)| {
            let (t1, t2) = f.grid.coords(i);
            vec![t1, t2, q.w, q.x, q.y, q.z]
        }),
    )
}

fn reader(path: &Path) -> Result<csv::Reader<File>, CliError> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    Ok(csv::Reader::from_reader(file))
}

fn header_domain(headers: &csv::StringRecord) -> Result<(Domain, Coords), CliError> {
    let cols: Vec<&str> = headers.iter().map(str::trim).collect();
    let coords = match cols.get(..2) {
        Some(["t1", "t2"]) => Coords::Signal,
        Some(["u1", "u2"]) => Coords::Spectral,
        _ => return Err(CliError::validation("CsvFormat", format!("unexpected coordinate columns {cols:?}"))),
    };
    match &cols[2..] {
        ["re", "im"] => Ok((Domain::Olct, coords)),
        ["w", "x", "y", "z"] => Ok((Domain::Qolct, coords)),
        other => Err(CliError::validation("CsvFormat", format!("unexpected value columns {other:?}"))),
    }
}

pub fn csv_domain(path: &Path) -> Result<Domain, CliError> {
    let mut r = reader(path)?;
    Ok(header_domain(r.headers()?)?.0)
}

/// Uniform axis through the sorted distinct values, rejecting irregular spacing.
fn axis_from(values: &[f64], name: &str) -> Result<Axis<f64>, CliError> {
    let n = values.len();
    if n < 2 {
        return Err(CliError::validation("InvalidGrid", format!("axis {name} needs at least 2 nodes")));
    }
    let step = (values[n - 1] - values[0]) / (n - 1) as f64;
    let irregular = values.iter().enumerate().any(|(i, v)| (v - (values[0] + step * i as f64)).abs() > 1e-9 * step.max(1.0));
    if irregular {
        return Err(CliError::validation("InvalidGrid", format!("axis {name} is not uniformly spaced")));
    }
    Axis::new(n, values[0], step).map_err(CliError::from)
}

/// Reads a field dump written by this tool or any file with the same layout.
pub fn read_field(path: &Path) -> Result<(FieldData, Coords), CliError> {
    let mut r = reader(path)?;
    let (domain, coords) = header_domain(r.headers()?)?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (k, rec) in r.records().enumerate() {
        let rec = rec?;
        let row = rec
            .iter()
            .map(|s| s.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::validation("CsvFormat", format!("row {}: {e}", k + 2)))?;
        rows.push(row);
    }
    let distinct = |col: usize| {
        let mut v: Vec<f64> = rows.iter().map(|r| r[col]).collect();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    };
    let grid = Grid2D::new(axis_from(&distinct(0), "1")?, axis_from(&distinct(1), "2")?);
    if rows.len() != grid.len() {
        return Err(CliError::validation("GridMismatch", format!("{} rows for a {}x{} grid", rows.len(), grid.n1(), grid.n2())));
    }
    for (i, row) in rows.iter().enumerate() {
        let (t1, t2) = grid.coords(i);
        let tol = 1e-9 * grid.axis1.step.min(grid.axis2.step);
        if (row[0] - t1).abs() > tol || (row[1] - t2).abs() > tol {
            return Err(CliError::validation("GridMismatch", format!("row {} is out of order", i + 2)));
        }
    }
    let data = match domain {
        Domain::Olct => FieldData::Complex(ComplexField2D::new(grid, rows.iter().map(|r| Complex::new(r[2], r[3])).collect())?),
        Domain::Qolct => FieldData::Quaternion(QuaternionField2D::new(
            grid,
            rows.iter().map(|r| Quaternion::new(r[2], r[3], r[4], r[5])).collect(),
        )?),
    };
    Ok((data, coords))
}
