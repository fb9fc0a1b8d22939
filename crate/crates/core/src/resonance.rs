//! Collision of the unperturbed branches and the resulting resonance data.
//!
//! The `p`-th double eigenvalue `i ω*^(p)(h)` of the flat-water operator is the
//! collision `λ_0^−(φ) = λ_p^+(φ)`, i.e.
//!
//! ```text
//!     c_h φ + Ω(φ,h) = c_h (φ + p) − Ω(φ + p, h)
//! ⇔   f(φ) := Ω(φ,h) + Ω(φ + p,h) − p c_h = 0.
//! ```
//!
//! `f` is strictly increasing on `(0, ∞)`, negative at `0⁺` and unbounded above,
//! so it has exactly one positive root `φ(p,h)`. In deep water the root tends
//! to `(p−1)²/4`. This pairing of branches is the one that reproduces the known
//! deep-water expansions of `φ(p,h)` for `p = 2, 3, 4`.

use std::fmt;

use crate::dispersion::{omega_disp, phase_speed, Depth};
use crate::roots::{brent, Termination};
use crate::{Error, Result};

/// Default absolute tolerance on the resonance residual.
pub const DEFAULT_TOL: f64 = 1e-13;
/// Smallest tolerance accepted by [`solve_wavenumber`].
pub const MIN_TOL: f64 = 1e-15;

const MAX_EXPANSIONS: usize = 64;

/// Index `p ≥ 2` of an isola.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsolaIndex(u32);

impl IsolaIndex {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 2 {
            Ok(IsolaIndex(p))
        } else {
            Err(Error::Domain {
                name: "p",
                value: p as f64,
                reason: "isola index must be at least 2",
            })
        }
    }

    /// Accepts only the indices with a closed-form `β₁^(p)`.
    pub fn closed_form(p: u32) -> Result<Self> {
        match p {
            2..=4 => Ok(IsolaIndex(p)),
            _ => Err(Error::UnsupportedIndex(p)),
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub(crate) fn as_f64(self) -> f64 {
        self.0 as f64
    }
}

impl fmt::Display for IsolaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `f(φ) = Ω(φ,h) + Ω(φ+p,h) − p c_h`.
pub fn resonance_residual(phi: f64, p: IsolaIndex, h: Depth) -> Result<f64> {
    if !(phi > 0.0) || !phi.is_finite() {
        return Err(Error::Domain {
            name: "phi",
            value: phi,
            reason: "resonance residual needs a finite positive wavenumber",
        });
    }
    Ok(residual(phi, p, h, phase_speed(h)))
}

fn residual(phi: f64, p: IsolaIndex, h: Depth, c: f64) -> f64 {
    let n = p.as_f64();
    // omega_disp only fails on non-finite input, which the callers exclude.
    let lo = omega_disp(phi, h).unwrap_or(f64::NAN);
    let hi = omega_disp(phi + n, h).unwrap_or(f64::NAN);
    lo + hi - n * c
}

/// Root of the resonance residual together with the achieved residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavenumberRoot {
    pub phi: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Solve `f(φ) = 0` for the unique positive root `φ(p,h)`.
///
/// Iteration stops once `|f| <= tol` or the bracket has collapsed to adjacent
/// doubles; in the latter case the reported residual is the evaluation noise
/// of `f` (a few ulps of `p c_h`).
pub fn solve_wavenumber(p: IsolaIndex, h: Depth, tol: f64) -> Result<WavenumberRoot> {
    if !(tol >= MIN_TOL) {
        return Err(Error::Domain {
            name: "tol",
            value: tol,
            reason: "residual tolerance must be at least 1e-15",
        });
    }
    solve(p, h, tol)
}

/// Solve to the resolution of double precision (used for all `β` evaluations).
pub(crate) fn solve_full_precision(p: IsolaIndex, h: Depth) -> Result<WavenumberRoot> {
    solve(p, h, 0.0)
}

fn solve(p: IsolaIndex, h: Depth, ftol: f64) -> Result<WavenumberRoot> {
    let c = phase_speed(h);
    let f = |phi: f64| residual(phi, p, h, c);

    let center = (p.as_f64() - 1.0).powi(2) / 4.0;
    let mut lo = if center > 0.5 { center - 0.5 } else { 0.5 * center };
    let mut hi = center + 0.5;
    let mut f_lo = f(lo);
    let mut f_hi = f(hi);

    let mut expansions = 0;
    while f_lo > 0.0 {
        expansions += 1;
        if expansions > MAX_EXPANSIONS {
            return Err(Error::Bracket { p: p.get(), h: h.get(), lo, hi });
        }
        hi = lo;
        f_hi = f_lo;
        lo *= 0.25;
        f_lo = f(lo);
    }
    while f_hi < 0.0 {
        expansions += 1;
        if expansions > MAX_EXPANSIONS {
            return Err(Error::Bracket { p: p.get(), h: h.get(), lo, hi });
        }
        lo = hi;
        f_lo = f_hi;
        hi = center + 2.0 * (hi - center);
        f_hi = f(hi);
    }
    if f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::Bracket { p: p.get(), h: h.get(), lo, hi });
    }

    let stop = Termination { xtol: 0.0, ftol, max_iter: 200 };
    let root = brent(f, lo, hi, f_lo, f_hi, stop)?;
    Ok(WavenumberRoot {
        phi: root.x,
        residual: root.fx,
        iterations: root.iterations,
    })
}

/// Everything the `β` formulas need from the resonance: `φ* = φ(p,h)`,
/// `ω*^(p)(h)`, and `Ω_j = Ω(j+φ*,h)`, `t_j = t(j+φ*,h)` for `j = 0..=p`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResonanceData {
    pub p: IsolaIndex,
    pub h: Depth,
    pub c: f64,
    pub phi_star: f64,
    pub omega_star: f64,
    pub residual: f64,
    pub omega: Vec<f64>,
    pub t: Vec<f64>,
}

impl ResonanceData {
    /// `ω*` evaluated from the upper branch, `c_h (p+φ*) − Ω_p`.
    pub fn omega_star_upper(&self) -> f64 {
        self.c * (self.p.as_f64() + self.phi_star) - self.omega[self.p.get() as usize]
    }

    /// `|Ω_0 + Ω_p − p c_h|`.
    pub fn collision_residual(&self) -> f64 {
        let n = self.p.get() as usize;
        (self.omega[0] + self.omega[n] - self.p.as_f64() * self.c).abs()
    }

    /// Representative of `φ*` in the first Brillouin zone `[−1/2, 1/2)`.
    ///
    /// The Floquet spectrum is 1-periodic in `μ`, so `φ* + k` for every integer
    /// `k` carries the same double eigenvalue.
    pub fn floquet_exponent(&self) -> f64 {
        let r = self.phi_star - self.phi_star.round();
        if r >= 0.5 {
            r - 1.0
        } else {
            r
        }
    }
}

/// Solve for `φ*` at full precision and tabulate `Ω_j`, `t_j`.
pub fn build_resonance_data(p: IsolaIndex, h: Depth) -> Result<ResonanceData> {
    use crate::extended::{add, to_f64};
    let root = solve_full_precision(p, h)?;
    let dd = crate::extended::resonance_from(p, h, root.phi)?;
    let round = |v: &[qd::Quad]| v.iter().copied().map(to_f64).collect::<Vec<_>>();
    Ok(ResonanceData {
        p,
        h,
        c: to_f64(dd.c),
        phi_star: to_f64(dd.phi),
        omega_star: to_f64(add(dd.c * dd.phi, dd.omega[0])),
        residual: root.residual,
        omega: round(&dd.omega),
        t: round(&dd.t),
    })
}

/// Branching point `ω*^(p)(h) = c_h φ* + Ω(φ*,h)` of the `p`-th isola.
pub fn omega_star(p: IsolaIndex, h: Depth) -> Result<f64> {
    Ok(build_resonance_data(p, h)?.omega_star)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dispersion::{eigenvalue_branch, BranchLabel, Krein};

    fn depth(h: f64) -> Depth {
        Depth::new(h).unwrap()
    }

    fn idx(p: u32) -> IsolaIndex {
        IsolaIndex::new(p).unwrap()
    }

    #[test]
    fn index_validation() {
        assert!(IsolaIndex::new(1).is_err());
        assert!(IsolaIndex::new(7).is_ok());
        assert_eq!(IsolaIndex::closed_form(5), Err(Error::UnsupportedIndex(5)));
        assert!(IsolaIndex::closed_form(4).is_ok());
    }

    #[test]
    fn residual_vanishes_at_deep_water_limit() {
        for p in 2..=6 {
            let phi = ((p - 1) * (p - 1)) as f64 / 4.0;
            let r = resonance_residual(phi, idx(p), depth(200.0)).unwrap();
            assert!(r.abs() <= 8.0 * f64::EPSILON * p as f64, "p = {p}: {r}");
        }
    }

    #[test]
    fn residual_sign_at_quarter() {
        // φ(2,10) > 1/4, so the increasing residual is negative at 1/4.
        let r = resonance_residual(0.25, idx(2), depth(10.0)).unwrap();
        assert!(r < 0.0);
        // 50-digit reference value of f(1/4) at p = 2, h = 10.
        assert!((r - -0.003_357_695_486_498_159).abs() < 1e-15, "{r}");
    }

    #[test]
    fn residual_is_increasing() {
        let (p, h) = (idx(3), depth(0.7));
        let mut prev = f64::NEG_INFINITY;
        for k in 1..2000 {
            let r = resonance_residual(k as f64 * 0.003, p, h).unwrap();
            assert!(r > prev);
            prev = r;
        }
    }

    #[test]
    fn residual_rejects_non_positive_phi() {
        assert!(resonance_residual(0.0, idx(2), depth(1.0)).is_err());
        assert!(resonance_residual(-1.0, idx(2), depth(1.0)).is_err());
    }

    #[test]
    fn solve_examples() {
        let root = solve_wavenumber(idx(2), depth(10.0), DEFAULT_TOL).unwrap();
        // 50-digit bisection reference for φ(2,10).
        assert!((root.phi - 0.252_415_948_378_138_46).abs() < 1e-14, "{}", root.phi);
        assert!(root.residual.abs() <= DEFAULT_TOL);

        let phi3 = solve_wavenumber(idx(3), depth(6.0), DEFAULT_TOL).unwrap().phi;
        let lead = 8.0 / 3.0 * (-12.0f64).exp();
        assert!((phi3 - (1.0 - lead)).abs() <= 0.01 * lead);

        let phi4 = solve_wavenumber(idx(4), depth(5.0), DEFAULT_TOL).unwrap().phi;
        let approx = 9.0 / 4.0 - 7.5 * (-10.0f64).exp();
        assert!((phi4 - approx).abs() <= 1e3 * (-20.0f64).exp());
    }

    #[test]
    fn solve_rejects_tiny_tolerance() {
        assert!(solve_wavenumber(idx(2), depth(1.0), 1e-16).is_err());
    }

    #[test]
    fn solve_handles_extreme_depths() {
        for h in [1e-3, 1e-2, 1e2, 1e3] {
            for p in 2..=5 {
                let root = solve_wavenumber(idx(p), depth(h), MIN_TOL).unwrap();
                assert!(root.phi > 0.0 && root.phi < p as f64 + 1.0);
                assert!(root.residual.abs() <= 1e-14, "p={p} h={h} r={}", root.residual);
            }
        }
    }

    #[test]
    fn resonance_data_deep_limits() {
        let d2 = build_resonance_data(idx(2), depth(80.0)).unwrap();
        let expect2 = [0.5, 5f64.sqrt() / 2.0, 1.5];
        for j in 0..3 {
            assert!((d2.omega[j] - expect2[j]).abs() < 1e-14);
            assert!((d2.t[j] - expect2[j]).abs() < 1e-14);
        }
        let d4 = build_resonance_data(idx(4), depth(80.0)).unwrap();
        let expect4 = [1.5, 13f64.sqrt() / 2.0, 17f64.sqrt() / 2.0, 21f64.sqrt() / 2.0, 2.5];
        for j in 0..5 {
            assert!((d4.omega[j] - expect4[j]).abs() < 1e-14);
        }
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn resonance_data_p3_h2() {
        let d = build_resonance_data(idx(3), depth(2.0)).unwrap();
        // 50-digit references for p = 3, h = 2.
        let phi = 0.955_941_985_063_948_2;
        let omega = [
            0.956_592_453_987_310_1,
            1.397_990_494_353_440_9,
            1.719_272_712_911_827_9,
            1.988_954_731_287_838_8,
        ];
        let t = [
            0.999_320_014_578_151_3,
            1.399_109_645_569_196_3,
            1.719_297_911_765_056,
            1.988_955_265_212_343_2,
        ];
        assert!((d.phi_star - phi).abs() < 1e-14);
        for j in 0..4 {
            assert!((d.omega[j] - omega[j]).abs() < 1e-14, "Omega_{j}");
            assert!((d.t[j] - t[j]).abs() < 1e-14, "t_{j}");
        }
        assert!(d.collision_residual() <= 1e-12);
        assert!((d.omega_star - d.omega_star_upper()).abs() <= 1e-12);
    }

    #[test]
    fn omega_star_values() {
        assert!((omega_star(idx(2), depth(200.0)).unwrap() - 0.75).abs() < 1e-14);
        assert!((omega_star(idx(3), depth(200.0)).unwrap() - 2.0).abs() < 1e-14);
        let h = depth(8.0);
        let d = build_resonance_data(idx(4), h).unwrap();
        // 50-digit reference for ω*^(4)(8).
        assert!((d.omega_star - 3.749_998_621_444_336_6).abs() < 1e-12, "{}", d.omega_star);
        let lower = eigenvalue_branch(BranchLabel::new(0, Krein::Minus), d.phi_star, h).unwrap();
        let upper = eigenvalue_branch(BranchLabel::new(4, Krein::Plus), d.phi_star, h).unwrap();
        assert!((lower - upper).abs() <= 1e-12);
    }

    #[test]
    fn unique_sign_change_on_wide_grid() {
        for p in 2..=4 {
            for h in [0.1, 1.0, 5.0] {
                let (p, h) = (idx(p), depth(h));
                let phi = solve_wavenumber(p, h, DEFAULT_TOL).unwrap().phi;
                let (a, b) = (phi / 4.0, 4.0 * phi + p.as_f64());
                let mut changes = 0;
                let mut prev = resonance_residual(a, p, h).unwrap();
                for k in 1..=10_000 {
                    let x = a + (b - a) * k as f64 / 10_000.0;
                    let r = resonance_residual(x, p, h).unwrap();
                    if r.signum() != prev.signum() {
                        changes += 1;
                    }
                    prev = r;
                }
                assert_eq!(changes, 1);
            }
        }
    }

    #[test]
    fn floquet_representative() {
        let d = build_resonance_data(idx(3), depth(2.0)).unwrap();
        let mu = d.floquet_exponent();
        assert!((-0.5..0.5).contains(&mu));
        assert!((mu - (d.phi_star - 1.0)).abs() < 1e-15);
    }
}
