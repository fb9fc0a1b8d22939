//! Output rows. Field names are the CSV headers and the JSON keys.

use std::io::Write;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Serialize)]
pub struct ResonanceRow {
    pub p: u32,
    pub h: f64,
    pub phi: f64,
    pub omega_star: f64,
    pub residual: f64,
    /// Deep-water asymptote of `phi`, where one is known.
    pub asymptote: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct ScanRow {
    pub p: u32,
    pub h: f64,
    pub beta1: f64,
    pub leading: f64,
    pub ratio: f64,
    pub floor: f64,
    pub floor_flag: bool,
}

#[derive(Debug, Serialize)]
pub struct TermRow {
    pub p: u32,
    pub h: f64,
    pub term: String,
    pub group: String,
    pub sign: i32,
    pub value: f64,
    pub contribution: f64,
}

#[derive(Debug, Serialize)]
pub struct GroupRow {
    pub p: u32,
    pub h: f64,
    pub group: String,
    pub sum: f64,
    pub leading: f64,
    /// `sum / leading`; empty where the leading coefficient is zero.
    pub ratio: Option<f64>,
    pub floor: f64,
}

#[derive(Debug, Serialize)]
pub struct ZeroRow {
    pub p: u32,
    pub h_star: f64,
    pub residual: f64,
}

#[derive(Debug, Serialize)]
pub struct CurveRow {
    pub k: usize,
    pub x: f64,
    pub y: f64,
    pub dy: f64,
}

#[derive(Debug, Serialize)]
pub struct BandRow {
    pub p: u32,
    pub h: f64,
    pub eps: f64,
    pub beta1: f64,
    pub t1: f64,
    pub e: f64,
    pub omega_star: f64,
    pub y0: f64,
    pub mu0: f64,
    pub mu_low: f64,
    pub mu_high: f64,
    pub half_width: f64,
    pub max_growth: f64,
    pub open: bool,
}

#[derive(Debug, Serialize)]
pub struct EigenRow {
    pub mu: f64,
    pub discriminant: f64,
    pub re_plus: f64,
    pub im_plus: f64,
    pub re_minus: f64,
    pub im_minus: f64,
}

#[derive(Debug, Serialize)]
pub struct VerifyRow {
    pub p: u32,
    pub h: f64,
    pub reference: String,
    pub computed: f64,
    pub error: f64,
    pub floor: f64,
    pub pass: bool,
}

pub const ZERO_COLUMNS: &[&str] = &["p", "h_star", "residual"];

/// Writes `rows` as CSV with a header, or as a JSON array of objects.
/// `columns` supplies the CSV header when there are no rows.
pub fn emit<T: Serialize>(rows: &[T], columns: &[&str], format: Format, out: impl Write) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if rows.is_empty() && !columns.is_empty() {
                w.write_record(columns).map_err(std::io::Error::other)?;
            }
            for row in rows {
                w.serialize(row).map_err(std::io::Error::other)?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows).map_err(std::io::Error::other)?;
            writeln!(out)
        }
    }
}
