//! Bracketed scalar root finding (Brent's method).

use crate::{Error, Result};

/// Stopping rule for [`brent`].
#[derive(Debug, Clone, Copy)]
pub struct Termination {
    /// Absolute tolerance on the bracket width; 0 means "to machine resolution".
    pub xtol: f64,
    /// Stop early once `|f(x)| <= ftol`.
    pub ftol: f64,
    pub max_iter: usize,
}

impl Default for Termination {
    fn default() -> Self {
        Termination {
            xtol: 0.0,
            ftol: 0.0,
            max_iter: 200,
        }
    }
}

/// Result of a bracketed root search. `lo..=hi` still brackets a sign change.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub fx: f64,
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

/// Brent's method on a bracket `[a, b]` with `f(a)` and `f(b)` of opposite sign
/// (or one of them zero). Combines bisection with secant and inverse
/// quadratic interpolation; never leaves the bracket.
pub fn brent<F>(mut f: F, a: f64, b: f64, fa: f64, fb: f64, stop: Termination) -> Result<Root>
where
    F: FnMut(f64) -> f64,
{
    if fa == 0.0 {
        return Ok(Root { x: a, fx: fa, lo: a, hi: a, iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(Root { x: b, fx: fb, lo: b, hi: b, iterations: 0 });
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoConvergence { iterations: 0, lo: a, hi: b });
    }

    // b is the best estimate, a the previous one, c the contrapoint.
    let (mut a, mut b, mut fa, mut fb) = (a, b, fa, fb);
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for iter in 1..=stop.max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }

        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * stop.xtol;
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 || fb.abs() <= stop.ftol {
            let (lo, hi) = if b < c { (b, c) } else { (c, b) };
            return Ok(Root { x: b, fx: fb, lo, hi, iterations: iter });
        }

        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }

        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b);
    }

    let (lo, hi) = if b < c { (b, c) } else { (c, b) };
    Err(Error::NoConvergence { iterations: stop.max_iter, lo, hi })
}
