//! Taylor coefficients `a_ℓ^[ℓ]`, `p_ℓ^[ℓ]` (`ℓ = 1..4`) of the functions
//! `a_ε(x)`, `p_ε(x)` of the linearisation at the Stokes wave.
//!
//! Each coefficient is a rational function of `c_h = √tanh(h)`; apart from an
//! odd power of `c_h` in the denominator they are polynomials in `c_h⁴` and are
//! evaluated in Horner form in `c_h⁴`. All tend to finite negative limits in deep
//! water and diverge like inverse powers of `c_h` as `h → 0⁺`.

use crate::dispersion::{phase_speed, Depth};

/// The eight coefficients at one depth, plus the phase speed they were built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StokesCoefficients {
    pub c: f64,
    a: [f64; 4],
    p: [f64; 4],
}

impl StokesCoefficients {
    /// `a_ℓ^[ℓ]` for `ℓ = 1..=4`.
    pub fn a(&self, order: usize) -> f64 {
        self.a[order - 1]
    }

    /// `p_ℓ^[ℓ]` for `ℓ = 1..=4`.
    pub fn p(&self, order: usize) -> f64 {
        self.p[order - 1]
    }

    /// The hop factor `a_ℓ + p_ℓ · x` that enters every `β` summand.
    #[inline]
    pub fn hop(&self, order: usize, x: f64) -> f64 {
        self.a(order) + self.p(order) * x
    }
}

#[inline]
fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &k| acc * x + k)
}

/// Coefficients at depth `h`.
pub fn stokes_coefficients(h: Depth) -> StokesCoefficients {
    from_phase_speed(phase_speed(h))
}

pub(crate) fn from_phase_speed(c: f64) -> StokesCoefficients {
    let c2 = c * c;
    let c4 = c2 * c2;
    let c8 = c4 * c4;
    let c7 = c4 * c2 * c;
    let c13 = c8 * c4 * c;
    let c14 = c13 * c;
    let c19 = c14 * c4 * c;
    let c20 = c19 * c;

    let p1 = -2.0 / c;
    let a1 = -(c2 + 1.0 / c2);

    let p2 = -(c4 + 3.0) / (2.0 * c7);
    let a2 = horner(&[9.0, -14.0, -3.0], c4) / (4.0 * c8);

    let p3 = -horner(&[1.0, 17.0, 51.0, 27.0], c4) / (32.0 * c13);
    let a3 = horner(&[-1.0, -98.0, 252.0, -318.0, -27.0], c4) / (64.0 * c14);

    let p4 = horner(&[-1.0, -39.0, -366.0, -850.0, -657.0, -135.0], c4) / (64.0 * c19 * (c4 + 5.0));
    let a4 = horner(&[9.0, 238.0, -233.0, -1676.0, 743.0, -3042.0, -135.0], c4)
        / (128.0 * c20 * (c4 + 5.0));

    StokesCoefficients {
        c,
        a: [a1, a2, a3, a4],
        p: [p1, p2, p3, p4],
    }
}
