//! Double-double evaluation of the resonance data and Stokes coefficients.
//!
//! In shallow water `β₁` is badly conditioned with respect to `c_h`, `φ*`,
//! `Ω_j` and `t_j`: correctly rounded double inputs already move the sum by
//! tens of floors at `h = 0.05`. The `β` summands are therefore built from
//! inputs carried to about 32 digits and only the results are rounded.

use qd::Quad;

use crate::resonance::{solve_full_precision, IsolaIndex};
use crate::{Depth, Result};

#[inline]
pub(crate) fn q(x: f64) -> Quad {
    Quad::from_f64(x)
}

#[inline]
pub(crate) fn add(a: Quad, b: Quad) -> Quad {
    a.add_accurate(b)
}

#[inline]
pub(crate) fn sub(a: Quad, b: Quad) -> Quad {
    a.sub_accurate(b)
}

/// Rounded to the nearest double.
#[inline]
pub(crate) fn to_f64(x: Quad) -> f64 {
    x.0 + x.1
}

/// `e^y − 1`, by its Taylor series for `|y| ≤ 0.7`.
fn expm1(y: Quad) -> Quad {
    if y.0.abs() > 0.7 {
        return sub(y.exp(), Quad::ONE);
    }
    let mut term = y;
    let mut sum = y;
    for n in 2..60 {
        term = term * y / q(n as f64);
        sum = add(sum, term);
        if term.0.abs() <= 1e-34 * sum.0.abs() {
            break;
        }
    }
    sum
}

pub(crate) fn tanh(x: Quad) -> Quad {
    if x.0 < 0.0 {
        return -tanh(-x);
    }
    if x.0 < 0.35 {
        let e = expm1(x * q(2.0));
        e / add(e, q(2.0))
    } else {
        let e = (-(x * q(2.0))).exp();
        sub(Quad::ONE, e) / add(Quad::ONE, e)
    }
}

/// `Ω(φ,h)` and `t(φ,h)` for `φ > 0`.
pub(crate) fn omega_and_t(phi: Quad, h: Quad) -> (Quad, Quad) {
    let th = tanh(h * phi);
    ((phi * th).sqrt(), (phi / th).sqrt())
}

/// `Ω(φ,h) + Ω(φ+p,h) − p c_h` and its derivative in `φ` (the latter in double).
fn residual(phi: Quad, p: Quad, h: Quad, c: Quad) -> (Quad, f64) {
    let th0 = tanh(h * phi);
    let th1 = tanh(h * add(phi, p));
    let o0 = (phi * th0).sqrt();
    let o1 = (add(phi, p) * th1).sqrt();
    let r = sub(add(o0, o1), p * c);

    let hd = to_f64(h);
    let deriv = |x: f64, th: f64, om: f64| (th + hd * x * (1.0 - th * th)) / (2.0 * om);
    let d = deriv(to_f64(phi), to_f64(th0), to_f64(o0))
        + deriv(to_f64(add(phi, p)), to_f64(th1), to_f64(o1));
    (r, d)
}

/// Resonance data in double-double.
#[derive(Debug, Clone)]
pub(crate) struct ResonanceQ {
    pub c: Quad,
    pub phi: Quad,
    pub omega: Vec<Quad>,
    pub t: Vec<Quad>,
}

pub(crate) fn phase_speed(h: Quad) -> Quad {
    tanh(h).sqrt()
}

/// Refines the double-precision root by Newton steps in double-double.
pub(crate) fn resonance(p: IsolaIndex, h: Depth) -> Result<ResonanceQ> {
    resonance_from(p, h, solve_full_precision(p, h)?.phi)
}

pub(crate) fn resonance_from(p: IsolaIndex, h: Depth, phi0: f64) -> Result<ResonanceQ> {
    let hq = q(h.get());
    let pq = q(p.get() as f64);
    let c = phase_speed(hq);

    let mut phi = q(phi0);
    for _ in 0..3 {
        let (r, d) = residual(phi, pq, hq, c);
        let step = r / q(d);
        phi = sub(phi, step);
        if step.0.abs() <= 1e-33 * phi.0.abs() {
            break;
        }
    }

    let (omega, t) = (0..=p.get())
        .map(|j| omega_and_t(add(phi, q(j as f64)), hq))
        .unzip();
    Ok(ResonanceQ { c, phi, omega, t })
}

/// `(a_ℓ^[ℓ], p_ℓ^[ℓ])`, `ℓ = 1..=4`, from `c_h`.
pub(crate) fn stokes(c: Quad) -> ([Quad; 4], [Quad; 4]) {
    let horner = |coeffs: &[f64], x: Quad| coeffs.iter().fold(Quad::ZERO, |acc, &k| add(acc * x, q(k)));
    let c2 = c * c;
    let c4 = c2 * c2;
    let c8 = c4 * c4;
    let c7 = c4 * c2 * c;
    let c13 = c8 * c4 * c;
    let c14 = c13 * c;
    let c19 = c14 * c4 * c;
    let c20 = c19 * c;
    let c4p5 = add(c4, q(5.0));

    let p1 = -(q(2.0) / c);
    let a1 = -add(c2, Quad::ONE / c2);
    let p2 = -(add(c4, q(3.0)) / (q(2.0) * c7));
    let a2 = horner(&[9.0, -14.0, -3.0], c4) / (q(4.0) * c8);
    let p3 = -(horner(&[1.0, 17.0, 51.0, 27.0], c4) / (q(32.0) * c13));
    let a3 = horner(&[-1.0, -98.0, 252.0, -318.0, -27.0], c4) / (q(64.0) * c14);
    let p4 = horner(&[-1.0, -39.0, -366.0, -850.0, -657.0, -135.0], c4) / (q(64.0) * c19 * c4p5);
    let a4 = horner(&[9.0, 238.0, -233.0, -1676.0, 743.0, -3042.0, -135.0], c4) / (q(128.0) * c20 * c4p5);
    ([a1, a2, a3, a4], [p1, p2, p3, p4])
}
