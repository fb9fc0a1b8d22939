//! Linear dispersion relation of gravity water waves at finite depth and the
//! purely imaginary spectrum of the flat-water operator.
//!
//! All quantities are nondimensional. The functions here are pure and accurate
//! to a few ulps in double precision; downstream modules budget against that.

use std::fmt;

use crate::{Error, Result};

/// Below this value of `h·φ` the ratio `φ / tanh(hφ)` is evaluated by its
/// Taylor series; the two branches agree to better than 1e-16 at the switch.
const SERIES_SWITCH: f64 = 1e-4;

/// Nondimensional water depth, strictly positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Depth(f64);

impl Depth {
    pub fn new(h: f64) -> Result<Self> {
        if h.is_finite() && h > 0.0 {
            Ok(Depth(h))
        } else {
            Err(Error::Domain {
                name: "h",
                value: h,
                reason: "depth must be finite and positive",
            })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Depth {
    type Error = Error;

    fn try_from(h: f64) -> Result<Self> {
        Depth::new(h)
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain {
            name,
            value,
            reason: "must be finite",
        })
    }
}

/// Phase speed `c_h = √tanh(h)` of the linear wave of unit wavenumber.
///
/// Strictly increasing in `h`, with values in `(0, 1)`; `c_h = 1 − e^{−2h} + O(e^{−4h})`
/// in deep water.
pub fn phase_speed(h: Depth) -> f64 {
    h.0.tanh().sqrt()
}

/// Dispersion relation `Ω(φ,h) = √(φ tanh(hφ))`, even in `φ`.
pub fn omega_disp(phi: f64, h: Depth) -> Result<f64> {
    let phi = finite("phi", phi)?.abs();
    Ok((phi * (h.0 * phi).tanh()).sqrt())
}

/// The ratio `t(φ,h) = √(φ / tanh(hφ))`, so that `t·Ω = φ`.
///
/// At `φ = 0` the limit `1/√h` is returned.
pub fn t_ratio(phi: f64, h: Depth) -> Result<f64> {
    let phi = finite("phi", phi)?;
    if phi < 0.0 {
        return Err(Error::Domain {
            name: "phi",
            value: phi,
            reason: "t(phi, h) is only defined for phi >= 0",
        });
    }
    let x = h.0 * phi;
    let ratio = if x < SERIES_SWITCH {
        // φ/tanh(hφ) = (1/h)(1 + x²/3 − x⁴/45 + ...)
        (1.0 + x * x / 3.0) / h.0
    } else {
        phi / x.tanh()
    };
    Ok(ratio.sqrt())
}

/// Krein signature `σ` of an unperturbed eigenvalue branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Krein {
    Plus,
    Minus,
}

impl Krein {
    #[inline]
    pub fn sign(self) -> f64 {
        match self {
            Krein::Plus => 1.0,
            Krein::Minus => -1.0,
        }
    }
}

/// Mode index `j` and signature `σ` of the branch `λ_j^σ(μ,h)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BranchLabel {
    pub j: i64,
    pub sigma: Krein,
}

impl BranchLabel {
    pub fn new(j: i64, sigma: Krein) -> Self {
        BranchLabel { j, sigma }
    }
}

/// `ω^σ(φ,h) = c_h φ − σ Ω(φ,h)`.
pub fn dispersion_branch(phi: f64, sigma: Krein, h: Depth) -> Result<f64> {
    Ok(phase_speed(h) * phi - sigma.sign() * omega_disp(phi, h)?)
}

/// Imaginary part of `λ_j^σ(μ,h) = i ω^σ(j+μ, h)`.
pub fn eigenvalue_branch(label: BranchLabel, mu: f64, h: Depth) -> Result<f64> {
    let phi = label.j as f64 + finite("mu", mu)?;
    dispersion_branch(phi, label.sigma, h)
}
