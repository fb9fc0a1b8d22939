//! High-frequency instability isolas of Stokes waves.
//!
//! The `p`-th isola of unstable spectrum bifurcates from a double eigenvalue
//! `±i ω*` of the flat-water linearised operator. Its size is governed by an
//! explicit analytic coefficient `β₁^(p)(h)`, built here term by term for
//! `p = 2, 3, 4` from the resonance data (critical Floquet wavenumber,
//! dispersion values) and the Taylor coefficients of the Stokes wave.
//!
//! Module map:
//!
//! - [`dispersion`]: `c_h`, `Ω(φ,h)`, `t(φ,h)` and the unperturbed branches.
//! - [`resonance`]: the collision wavenumber `φ(p,h)` and [`ResonanceData`].
//! - [`stokes`]: the coefficients `a_ℓ^[ℓ]`, `p_ℓ^[ℓ]`, `ℓ = 1..4`.
//! - [`beta`]: the signed term sums for `β₁^(p)`, zero finding and scans.
//! - [`asymptotics`]: deep-water expansions and the remainder rate fitter.
//! - [`isola`]: the leading-order isola model (band, discriminant, ellipse).
//! - [`fixtures`]: the reference-value fixture file format.

pub mod asymptotics;
pub mod beta;
mod extended;
pub mod dispersion;
mod error;
pub mod fixtures;
pub mod isola;
pub mod resonance;
pub mod roots;
pub mod stokes;
pub mod summation;

pub use beta::{beta1, beta1_breakdown, BetaBreakdown, BetaTermId, GroupId, Label, TermKind};
pub use dispersion::{omega_disp, phase_speed, t_ratio, Depth};
pub use error::{Error, Result};
pub use resonance::{build_resonance_data, solve_wavenumber, IsolaIndex, ResonanceData};
pub use stokes::{stokes_coefficients, StokesCoefficients};

/// Distance from `x` to the next representable double away from zero.
pub fn ulp(x: f64) -> f64 {
    let x = x.abs();
    if !x.is_finite() {
        return f64::NAN;
    }
    let next = f64::from_bits(x.to_bits() + 1);
    next - x
}
