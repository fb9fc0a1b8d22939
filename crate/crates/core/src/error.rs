use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside the domain: {reason}")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("closed-form beta_1 is available only for p = 2, 3, 4 (got p = {0})")]
    UnsupportedIndex(u32),

    #[error("resonance residual has no sign change for p = {p}, h = {h}; last bracket [{lo}, {hi}]")]
    Bracket { p: u32, h: f64, lo: f64, hi: f64 },

    #[error("root iteration stopped after {iterations} steps; last bracket [{lo}, {hi}]")]
    NoConvergence { iterations: usize, lo: f64, hi: f64 },

    #[error("denominator {name} = {value:e} is numerically singular at h = {h}")]
    Singular { name: String, value: f64, h: f64 },

    #[error("fixture line {line}: {message}")]
    Fixture { line: usize, message: String },

    #[error("remainder vanishes exactly at h = {h}, rate fit is degenerate")]
    DegenerateFit { h: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
