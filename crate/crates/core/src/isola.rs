//! Leading-order model of the `p`-th instability isola.
//!
//! With the remainders dropped, the discriminant near the band centre `μ₀` is
//!
//! ```text
//!     D(μ₀ + ν) = 4 β₁² ε^{2p} − T₁² ν²,
//! ```
//!
//! the unstable band is `|ν| < 2|β₁| ε^p / T₁`, and the isola is the ellipse
//! `x² + E² (y − y₀)² = β₁² ε^{2p}`. `T₁` and `E` are not computed here and must
//! be supplied; `y₀` and `μ₀` default to `ω*` and `φ*`. All outputs carry the
//! model error `O(ε^{p+1})`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::beta::beta1;
use crate::resonance::{build_resonance_data, IsolaIndex};
use crate::{Depth, Error, Result};

/// Inputs of the isola model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsolaParams {
    pub p: IsolaIndex,
    pub h: Depth,
    pub eps: f64,
    pub beta1: f64,
    pub t1: f64,
    pub e: f64,
    /// Imaginary part of the double eigenvalue the pair splits from.
    pub omega_star: f64,
    /// Ordinate of the ellipse centre.
    pub y0: f64,
    /// Centre of the unstable band of Floquet exponents.
    pub mu0: f64,
}

fn domain(name: &'static str, value: f64, reason: &'static str) -> Error {
    Error::Domain { name, value, reason }
}

fn check(eps: f64, beta1: f64, t1: f64, e: f64) -> Result<()> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(domain("eps", eps, "amplitude must be positive and finite"));
    }
    if !beta1.is_finite() {
        return Err(domain("beta1", beta1, "must be finite"));
    }
    if !(t1 > 0.0 && t1.is_finite()) {
        return Err(domain("T1", t1, "must be positive and finite"));
    }
    if !(e > 0.0 && e < 1.0) {
        return Err(domain("E", e, "must lie in (0, 1)"));
    }
    Ok(())
}

impl IsolaParams {
    /// Parameters with `β₁^(p)(h)` computed, `y₀ = ω*` and `μ₀ = φ*`.
    pub fn new(p: IsolaIndex, h: Depth, eps: f64, t1: f64, e: f64) -> Result<Self> {
        let beta1 = beta1(p, h)?;
        check(eps, beta1, t1, e)?;
        let data = build_resonance_data(p, h)?;
        Ok(IsolaParams {
            p,
            h,
            eps,
            beta1,
            t1,
            e,
            omega_star: data.omega_star,
            y0: data.omega_star,
            mu0: data.phi_star,
        })
    }

    /// Parameters with every value supplied, for any `p ≥ 2`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        p: IsolaIndex,
        h: Depth,
        eps: f64,
        beta1: f64,
        t1: f64,
        e: f64,
        omega_star: f64,
        mu0: f64,
    ) -> Result<Self> {
        check(eps, beta1, t1, e)?;
        if !omega_star.is_finite() || !mu0.is_finite() {
            return Err(domain("omega_star", omega_star, "centre must be finite"));
        }
        Ok(IsolaParams { p, h, eps, beta1, t1, e, omega_star, y0: omega_star, mu0 })
    }

    pub fn with_y0(mut self, y0: f64) -> Self {
        self.y0 = y0;
        self
    }

    pub fn with_mu0(mut self, mu0: f64) -> Self {
        self.mu0 = mu0;
        self
    }

    pub fn with_eps(mut self, eps: f64) -> Result<Self> {
        check(eps, self.beta1, self.t1, self.e)?;
        self.eps = eps;
        Ok(self)
    }

    /// `|β₁| ε^p`: maximal real part and half-width of the ellipse in `x`.
    pub fn max_growth(&self) -> f64 {
        self.beta1.abs() * self.eps.powi(self.p.get() as i32)
    }
}

/// `D(μ₀ + ν) = 4β₁²ε^{2p} − T₁²ν²`.
pub fn discriminant(nu: f64, params: &IsolaParams) -> f64 {
    let g = params.max_growth();
    let s = params.t1 * nu;
    4.0 * g * g - s * s
}

/// Band of unstable Floquet exponents.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Band {
    pub mu_low: f64,
    pub mu_high: f64,
    pub half_width: f64,
    pub open: bool,
}

/// `μ₀ ∓ 2|β₁|ε^p / T₁`; empty iff `β₁ = 0`.
pub fn band_endpoints(params: &IsolaParams) -> Band {
    let half_width = 2.0 * params.max_growth() / params.t1;
    Band {
        mu_low: params.mu0 - half_width,
        mu_high: params.mu0 + half_width,
        half_width,
        open: half_width > 0.0,
    }
}

/// The eigenvalue pair `λ^±(μ)` of the truncated model.
///
/// Inside the band: `iω* ± √D / 2`. Outside: `iω* ± i√|D|`.
pub fn eigenvalue_pair(mu: f64, params: &IsolaParams) -> (Complex64, Complex64) {
    let d = discriminant(mu - params.mu0, params);
    let centre = Complex64::new(0.0, params.omega_star);
    let band = band_endpoints(params);
    let split = if band.open && mu > band.mu_low && mu < band.mu_high {
        Complex64::new(0.5 * d.max(0.0).sqrt(), 0.0)
    } else {
        Complex64::new(0.0, d.abs().sqrt())
    };
    (centre + split, centre - split)
}

/// One sample of the ellipse; `dy = y − y₀` is kept to avoid cancellation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipsePoint {
    pub x: f64,
    pub y: f64,
    pub dy: f64,
}

/// `n ≥ 8` points of `x² + E²(y − y₀)² = β₁²ε^{2p}`, counterclockwise from the
/// bottom vertex. Point `n − k` is the exact mirror image of point `k`.
pub fn ellipse_points(params: &IsolaParams, n: usize) -> Result<Vec<EllipsePoint>> {
    if n < 8 {
        return Err(domain("n", n as f64, "ellipse needs at least 8 samples"));
    }
    let r = params.max_growth();
    let r2 = r * r;
    let e = params.e;

    let point = |k: usize| -> (f64, f64) {
        if 2 * k == n {
            return (0.0, r / e);
        }
        if k == 0 {
            return (0.0, -r / e);
        }
        let theta = -PI / 2.0 + 2.0 * PI * k as f64 / n as f64;
        let x = (r * theta.cos()).clamp(-r, r);
        let dy = (r2 - x * x).max(0.0).sqrt() / e;
        (x, dy.copysign(theta.sin()))
    };

    Ok((0..n)
        .map(|k| {
            let (x, dy) = if 2 * k > n {
                let (x, dy) = point(n - k);
                (-x, dy)
            } else {
                point(k)
            };
            EllipsePoint { x, y: params.y0 + dy, dy }
        })
        .collect())
}

/// Band, growth and ellipse samples of one isola.
#[derive(Debug, Clone, PartialEq)]
pub struct IsolaGeometry {
    pub band: Band,
    pub max_growth: f64,
    pub ellipse: Vec<EllipsePoint>,
}

pub fn isola_geometry(params: &IsolaParams, n: usize) -> Result<IsolaGeometry> {
    Ok(IsolaGeometry {
        band: band_endpoints(params),
        max_growth: params.max_growth(),
        ellipse: ellipse_points(params, n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ulp;

    fn idx(p: u32) -> IsolaIndex {
        IsolaIndex::new(p).unwrap()
    }

    fn depth(h: f64) -> Depth {
        Depth::new(h).unwrap()
    }

    fn params() -> IsolaParams {
        IsolaParams::new(idx(2), depth(3.0), 0.1, 1.0, 0.5).unwrap()
    }

    #[test]
    fn validation() {
        assert!(IsolaParams::new(idx(2), depth(3.0), 0.0, 1.0, 0.5).is_err());
        assert!(IsolaParams::new(idx(2), depth(3.0), 0.1, -1.0, 0.5).is_err());
        assert!(IsolaParams::new(idx(2), depth(3.0), 0.1, 1.0, 1.0).is_err());
        assert!(IsolaParams::new(idx(5), depth(3.0), 0.1, 1.0, 0.5).is_err());
        assert!(IsolaParams::from_parts(idx(5), depth(3.0), 0.1, 0.2, 1.0, 0.5, 6.0, 0.4).is_ok());
    }

    #[test]
    fn defaults_come_from_resonance() {
        let q = params();
        let d = build_resonance_data(idx(2), depth(3.0)).unwrap();
        assert_eq!(q.y0, d.omega_star);
        assert_eq!(q.mu0, d.phi_star);
        assert_eq!(q.beta1, beta1(idx(2), depth(3.0)).unwrap());
    }

    #[test]
    fn discriminant_values() {
        let q = params();
        let g = q.max_growth();
        assert_eq!(discriminant(0.0, &q), 4.0 * g * g);
        let w = band_endpoints(&q).half_width;
        assert!(discriminant(w, &q).abs() <= 4.0 * ulp(4.0 * g * g));
        assert!(discriminant(-w, &q).abs() <= 4.0 * ulp(4.0 * g * g));
        let far = discriminant(2.0 * w, &q);
        assert!((far + 12.0 * g * g).abs() <= 8.0 * ulp(12.0 * g * g));
    }

    #[test]
    fn band_half_width() {
        let q = params();
        let band = band_endpoints(&q);
        assert!(band.open && band.mu_low < q.mu0 && q.mu0 < band.mu_high);
        let expect = 2.0 * q.beta1.abs() * 1e-2 / q.t1;
        assert!((band.half_width - expect).abs() <= 4.0 * ulp(expect));
        let closed = IsolaParams { beta1: 0.0, ..q };
        let b = band_endpoints(&closed);
        assert!(!b.open && b.mu_low == q.mu0 && b.mu_high == q.mu0);
    }

    #[test]
    fn width_scales_with_power_of_eps() {
        for p in 2..=4 {
            let q = IsolaParams::new(idx(p), depth(2.5), 0.04, 0.7, 0.3).unwrap();
            let q2 = q.with_eps(0.08).unwrap();
            let ratio = band_endpoints(&q2).half_width / band_endpoints(&q).half_width;
            assert_eq!(ratio, 2f64.powi(p as i32));
        }
    }

    #[test]
    fn eigenvalues_inside_and_outside() {
        let q = params();
        let (lp, lm) = eigenvalue_pair(q.mu0, &q);
        assert_eq!(lp.re, q.max_growth());
        assert_eq!(lm.re, -q.max_growth());
        assert_eq!(lp + lm, Complex64::new(0.0, 2.0 * q.omega_star));

        let band = band_endpoints(&q);
        for mu in [band.mu_low, band.mu_high] {
            let (a, b) = eigenvalue_pair(mu, &q);
            assert_eq!(a.re, 0.0);
            assert_eq!(b.re, 0.0);
            // μ is only known to an ulp of μ₀, and √D turns that rounding-level
            // D into a splitting of order √ulp.
            let g2 = 4.0 * q.max_growth().powi(2);
            let d_noise = 4.0 * q.t1 * q.t1 * band.half_width * ulp(q.mu0) + 16.0 * ulp(g2);
            assert!((a.im - b.im).abs() <= 2.0 * d_noise.sqrt());
        }
        let (a, b) = eigenvalue_pair(band.mu_high + band.half_width, &q);
        assert_eq!((a.re, b.re), (0.0, 0.0));
        assert!(a.im > q.omega_star && b.im < q.omega_star);
    }

    #[test]
    fn sign_pattern() {
        let q = params();
        let band = band_endpoints(&q);
        for k in 1..100 {
            let nu = band.half_width * k as f64 / 100.0;
            assert!(discriminant(nu, &q) > 0.0);
            assert!(discriminant(band.half_width + nu, &q) < 0.0);
        }
    }

    #[test]
    fn crossing_is_square_root_type() {
        // x(μ)² is linear in the distance to the endpoint while x(μ) is not.
        let q = params();
        let band = band_endpoints(&q);
        let x = |mu: f64| eigenvalue_pair(mu, &q).0.re;
        let mut prev_slope = 0.0;
        for k in 1..6 {
            let delta = band.half_width * 10f64.powi(-k);
            let mu = band.mu_high - delta;
            let slope = x(mu) / delta;
            let sq_slope = x(mu).powi(2) / delta;
            let expect = q.t1 * q.t1 * 2.0 * band.half_width / 4.0;
            assert!((sq_slope - expect).abs() <= 0.1 * expect * 10f64.powi(-k + 1));
            assert!(slope > 3.0 * prev_slope);
            prev_slope = slope;
        }
    }

    #[test]
    fn ellipse_identities() {
        let q = params();
        let pts = ellipse_points(&q, 64).unwrap();
        let r = q.max_growth();
        for pt in &pts {
            let lhs = pt.x * pt.x + q.e * q.e * pt.dy * pt.dy;
            assert!((lhs - r * r).abs() <= 4.0 * ulp(r * r), "{pt:?}");
        }
        for k in 1..64 {
            assert_eq!(pts[k].x, -pts[64 - k].x);
            assert_eq!(pts[k].dy, pts[64 - k].dy);
        }
        assert_eq!(pts[0].dy, -r / q.e);
        assert_eq!(pts[32].dy, r / q.e);
        assert_eq!(pts[16].x, r);
        assert_eq!(pts[48].x, -r);
        let half_width = pts.iter().fold(0.0f64, |m, p| m.max(p.x));
        assert_eq!(half_width, eigenvalue_pair(q.mu0, &q).0.re);
        assert!(ellipse_points(&q, 7).is_err());
    }

    #[test]
    fn ellipse_area() {
        let q = params();
        let pts = ellipse_points(&q, 512).unwrap();
        let mut twice = 0.0;
        for k in 0..pts.len() {
            let (a, b) = (pts[k], pts[(k + 1) % pts.len()]);
            twice += a.x * b.dy - b.x * a.dy;
        }
        let area = 0.5 * twice.abs();
        let exact = PI * q.max_growth().powi(2) / q.e;
        assert!((area - exact).abs() <= 0.01 * exact);
    }

    #[test]
    fn nearly_circular() {
        let q = IsolaParams { e: 1.0 - 1e-12, ..params() };
        let r = q.max_growth();
        for pt in ellipse_points(&q, 40).unwrap() {
            assert!((pt.x.hypot(pt.dy) - r).abs() <= 1e-10 * r);
        }
    }
}
