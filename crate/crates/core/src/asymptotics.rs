//! Deep-water (`h → ∞`) expansions and a two-point remainder rate fitter.
//!
//! Every expansion here has the shape `limit + coeff · e^{−rate·h} + O(e^{−s·h})`
//! with `s = remainder_rate > rate`. The fitter estimates `s` from two depths,
//! which is how the test suite checks the stated orders.

use num_rational::Rational64;

use crate::beta::GroupId;
use crate::resonance::IsolaIndex;
use crate::{Depth, Error, Result};

/// `limit + coeff · e^{−rate·h}` with remainder `O(e^{−remainder_rate·h})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticModel {
    pub limit: f64,
    pub coeff: f64,
    pub rate: f64,
    pub remainder_rate: f64,
    pub description: &'static str,
}

impl AsymptoticModel {
    pub fn eval(&self, h: Depth) -> f64 {
        self.limit + self.coeff * (-self.rate * h.get()).exp()
    }

    /// `value − eval(h)`.
    pub fn remainder(&self, value: f64, h: Depth) -> f64 {
        (value - self.limit) - self.coeff * (-self.rate * h.get()).exp()
    }
}

const fn model(
    limit: f64,
    coeff: f64,
    rate: f64,
    remainder_rate: f64,
    description: &'static str,
) -> AsymptoticModel {
    AsymptoticModel { limit, coeff, rate, remainder_rate, description }
}

/// Leading deep-water behaviour of `β₁^(p)`.
pub fn beta_model(p: IsolaIndex) -> Result<AsymptoticModel> {
    let coeff = beta_leading_coefficient(p)?.to_f64();
    Ok(match p.get() {
        2 => model(0.0, coeff, 0.5, 0.75, "beta_1^(2) = 3 sqrt3/64 e^{-h/2} + O(e^{-3h/4})"),
        3 => model(0.0, coeff, 2.0, 3.0, "beta_1^(3) = 2 sqrt2/3 e^{-2h} + O(e^{-3h})"),
        _ => model(0.0, coeff, 2.0, 4.0, "beta_1^(4) = -5 sqrt15/24 e^{-2h} + O(e^{-4h})"),
    })
}

/// The leading term `coeff · e^{−rate·h}` of `β₁^(p)(h)`.
pub fn leading_term(p: IsolaIndex, h: Depth) -> Result<f64> {
    Ok(beta_model(p)?.eval(h))
}

/// Two-term expansion of the collision wavenumber `φ(p,h)`.
pub fn wavenumber_model(p: IsolaIndex) -> Result<AsymptoticModel> {
    match p.get() {
        2 => Ok(model(0.25, 0.375, 0.5, 0.75, "phi(2,h) = 1/4 + 3/8 e^{-h/2}")),
        3 => Ok(model(1.0, -8.0 / 3.0, 2.0, 3.0, "phi(3,h) = 1 - 8/3 e^{-2h}")),
        4 => Ok(model(2.25, -7.5, 2.0, 4.0, "phi(4,h) = 9/4 - 15/2 e^{-2h}")),
        other => Err(Error::UnsupportedIndex(other)),
    }
}

pub fn wavenumber_asymptote(p: IsolaIndex, h: Depth) -> Result<f64> {
    Ok(wavenumber_model(p)?.eval(h))
}

/// Expansions of `Ω_j^(p)` and `t_j^(p)`, `j = 0..=p`.
pub fn dispersion_models(p: IsolaIndex) -> Result<Vec<(AsymptoticModel, AsymptoticModel)>> {
    let s = |x: f64| x.sqrt();
    let pair = |om: (f64, f64), t: (f64, f64), rate: f64, rem: f64| {
        (
            model(om.0, om.1, rate, rem, "Omega_j"),
            model(t.0, t.1, rate, rem, "t_j"),
        )
    };
    match p.get() {
        2 => {
            let r5 = (s(5.0) / 2.0, 3.0 / (8.0 * s(5.0)));
            Ok(vec![
                pair((0.5, -0.125), (0.5, 0.875), 0.5, 0.75),
                pair(r5, r5, 0.5, 0.75),
                pair((1.5, 0.125), (1.5, 0.125), 0.5, 0.75),
            ])
        }
        3 => {
            let v1 = (s(2.0), -2.0 * s(2.0) / 3.0);
            let v2 = (s(3.0), -4.0 / (3.0 * s(3.0)));
            let v3 = (2.0, -2.0 / 3.0);
            Ok(vec![
                pair((1.0, -7.0 / 3.0), (1.0, -1.0 / 3.0), 2.0, 3.0),
                pair(v1, v1, 2.0, 3.0),
                pair(v2, v2, 2.0, 3.0),
                pair(v3, v3, 2.0, 3.0),
            ])
        }
        4 => {
            let v = [
                (1.5, -2.5),
                (s(13.0) / 2.0, -15.0 / (2.0 * s(13.0))),
                (s(17.0) / 2.0, -15.0 / (2.0 * s(17.0))),
                (s(21.0) / 2.0, -5.0 * s(3.0) / (2.0 * s(7.0))),
                (2.5, -1.5),
            ];
            Ok(v.iter().map(|&x| pair(x, x, 2.0, 4.0)).collect())
        }
        other => Err(Error::UnsupportedIndex(other)),
    }
}

/// Expansions `limit + coeff e^{−2h} + O(e^{−4h})` of `(a_ℓ^[ℓ], p_ℓ^[ℓ])`, `ℓ = 1..=4`.
pub fn stokes_models() -> [(AsymptoticModel, AsymptoticModel); 4] {
    let m = |limit, coeff| model(limit, coeff, 2.0, 4.0, "Stokes coefficient");
    [
        (m(-2.0, 0.0), m(-2.0, -2.0)),
        (m(-2.0, -20.0), m(-2.0, -12.0)),
        (m(-3.0, -35.0), m(-3.0, -28.0)),
        (m(-16.0 / 3.0, -698.0 / 9.0), m(-16.0 / 3.0, -605.0 / 9.0)),
    ]
}

/// A value of a function together with its evaluation floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub value: f64,
    pub floor: f64,
}

impl Sample {
    pub fn exact(value: f64) -> Self {
        Sample { value, floor: 0.0 }
    }
}

/// Outcome of a two-point rate fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateFit {
    pub estimated_rate: f64,
    /// Set when either remainder is within 10 floors; the rate is then not meaningful.
    pub floor_flag: bool,
    pub r1: f64,
    pub r2: f64,
}

/// Estimate the decay rate `s` of `r(h) = f(h) − model(h)` from
/// `s ≈ −ln(|r(h2)| / |r(h1)|) / (h2 − h1)`.
pub fn fit_remainder_rate<F>(
    mut f: F,
    model: &AsymptoticModel,
    h1: Depth,
    h2: Depth,
) -> Result<RateFit>
where
    F: FnMut(Depth) -> Result<Sample>,
{
    if !(h2.get() > h1.get()) {
        return Err(Error::Domain {
            name: "h2",
            value: h2.get(),
            reason: "rate fit needs h2 > h1",
        });
    }
    let s1 = f(h1)?;
    let s2 = f(h2)?;
    let r1 = model.remainder(s1.value, h1);
    let r2 = model.remainder(s2.value, h2);
    if r1 == 0.0 {
        return Err(Error::DegenerateFit { h: h1.get() });
    }
    if r2 == 0.0 {
        return Err(Error::DegenerateFit { h: h2.get() });
    }
    Ok(RateFit {
        estimated_rate: -(r2.abs() / r1.abs()).ln() / (h2.get() - h1.get()),
        floor_flag: r1.abs() <= 10.0 * s1.floor || r2.abs() <= 10.0 * s2.floor,
        r1,
        r2,
    })
}

/// `coeff · √radicand` with a rational coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Surd {
    pub coeff: Rational64,
    pub radicand: i64,
}

impl Surd {
    pub fn new(num: i64, den: i64, radicand: i64) -> Self {
        Surd { coeff: Rational64::new(num, den), radicand }
    }

    pub fn to_f64(self) -> f64 {
        (*self.coeff.numer() as f64 / *self.coeff.denom() as f64) * (self.radicand as f64).sqrt()
    }

    /// Exact sum of surds sharing one radicand; `None` if radicands differ.
    pub fn sum<I: IntoIterator<Item = Surd>>(radicand: i64, items: I) -> Option<Surd> {
        let mut acc = Rational64::from_integer(0);
        for s in items {
            if s.radicand != radicand && *s.coeff.numer() != 0 {
                return None;
            }
            acc += s.coeff;
        }
        Some(Surd { coeff: acc, radicand })
    }
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}*sqrt({})", self.coeff, self.radicand)
    }
}

/// Coefficient of the leading term of `β₁^(p)`.
pub fn beta_leading_coefficient(p: IsolaIndex) -> Result<Surd> {
    match p.get() {
        2 => Ok(Surd::new(3, 64, 3)),
        3 => Ok(Surd::new(2, 3, 2)),
        4 => Ok(Surd::new(-5, 24, 15)),
        other => Err(Error::UnsupportedIndex(other)),
    }
}

/// Leading deep-water behaviour of one group sum, `coeff · e^{−rate·h}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupAsymptote {
    pub group: GroupId,
    pub coeff: Surd,
    pub rate: f64,
    pub remainder_rate: f64,
}

impl GroupAsymptote {
    pub fn model(&self) -> AsymptoticModel {
        model(0.0, self.coeff.to_f64(), self.rate, self.remainder_rate, "group sum")
    }
}

/// Leading coefficients of all group sums of `β₁^(p)` (zero where the group is
/// of the order of the remainder).
pub fn group_asymptotes(p: IsolaIndex) -> Result<Vec<GroupAsymptote>> {
    let (radicand, rate, rem, coeffs): (i64, f64, f64, Vec<(GroupId, i64, i64)>) = match p.get() {
        2 => (3, 0.5, 0.75, vec![(GroupId::B0, -3, 16), (GroupId::One(1), 15, 64)]),
        3 => (
            2,
            2.0,
            3.0,
            vec![
                (GroupId::B0, -2, 1),
                (GroupId::One(1), -10, 3),
                (GroupId::One(2), 8, 1),
                (GroupId::Two(1, 2), -2, 1),
            ],
        ),
        4 => (
            15,
            2.0,
            4.0,
            vec![
                (GroupId::B0, -5, 8),
                (GroupId::One(1), -39, 16),
                (GroupId::One(2), 0, 1),
                (GroupId::One(3), 63, 16),
                (GroupId::Two(1, 2), -2873, 384),
                (GroupId::Two(1, 3), 1183, 64),
                (GroupId::Two(2, 3), -1547, 128),
                (GroupId::Three, 0, 1),
            ],
        ),
        other => return Err(Error::UnsupportedIndex(other)),
    };
    Ok(coeffs
        .into_iter()
        .map(|(group, n, d)| GroupAsymptote {
            group,
            coeff: Surd::new(n, d, radicand),
            rate,
            remainder_rate: rem,
        })
        .collect())
}

/// Expansions of individual summands with one intermediate harmonic, keyed by
/// `(j, label)`: `limit + coeff e^{−rate h}`.
pub fn one_hop_models(p: IsolaIndex) -> Result<Vec<(u32, crate::Label, AsymptoticModel)>> {
    use crate::Label::{Minus, Plus};
    let s = |x: f64| x.sqrt();
    let m = |l, c, r, rem| model(l, c, r, rem, "one-hop summand");
    Ok(match p.get() {
        2 => {
            let lim = s(15.0) / 16.0;
            let (a, b) = (143.0 * s(5.0), 225.0);
            let d = 640.0 * s(3.0);
            vec![
                (1, Minus, m(lim, (a - b) / d, 0.5, 0.75)),
                (1, Plus, m(lim, (a + b) / d, 0.5, 0.75)),
            ]
        }
        3 => {
            let l2 = s(3.0) / (2.0 * s(2.0));
            let c2 = 125.0 / (6.0 * s(6.0));
            vec![
                (1, Minus, m(0.5, 5.0 / 6.0 * (5.0 + 2.0 * s(2.0)), 2.0, 3.0)),
                (1, Plus, m(0.5, 5.0 / 6.0 * (5.0 - 2.0 * s(2.0)), 2.0, 3.0)),
                (2, Minus, m(l2, c2 - 4.0 * s(2.0), 2.0, 3.0)),
                (2, Plus, m(l2, c2 + 4.0 * s(2.0), 2.0, 3.0)),
            ]
        }
        4 => {
            let l1 = 3.0 * s(195.0) / 32.0;
            let k1 = s(0.6) / 416.0;
            let l2 = s(255.0) / 16.0;
            let c2 = 4331.0 / (16.0 * s(255.0));
            let l3 = 9.0 * s(35.0) / 32.0;
            let (a3, b3) = (3723.0 / (32.0 * s(35.0)), 63.0 * s(15.0) / 32.0);
            vec![
                (1, Minus, m(l1, k1 * (1829.0 * s(13.0) + 2535.0), 2.0, 4.0)),
                (1, Plus, m(l1, k1 * (1829.0 * s(13.0) - 2535.0), 2.0, 4.0)),
                (2, Minus, m(l2, c2, 2.0, 4.0)),
                (2, Plus, m(l2, c2, 2.0, 4.0)),
                (3, Minus, m(l3, a3 - b3, 2.0, 4.0)),
                (3, Plus, m(l3, a3 + b3, 2.0, 4.0)),
            ]
        }
        other => return Err(Error::UnsupportedIndex(other)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resonance::build_resonance_data;
    use crate::stokes::stokes_coefficients;

    fn idx(p: u32) -> IsolaIndex {
        IsolaIndex::new(p).unwrap()
    }

    fn depth(h: f64) -> Depth {
        Depth::new(h).unwrap()
    }

    #[test]
    fn leading_coefficients() {
        assert!((beta_model(idx(2)).unwrap().coeff - 0.081_189_9).abs() < 1e-7);
        assert!((beta_model(idx(4)).unwrap().coeff + 0.806_871_5).abs() < 1e-7);
        let alt = -5.0 * 5f64.sqrt() / (8.0 * 3f64.sqrt());
        assert!((beta_model(idx(4)).unwrap().coeff - alt).abs() < 1e-15);
        for h in [0.1, 1.0, 10.0, 50.0] {
            assert!(leading_term(idx(3), depth(h)).unwrap() > 0.0);
        }
        assert!(leading_term(idx(5), depth(1.0)).is_err());
        for p in 2..=4 {
            let m = beta_model(idx(p)).unwrap();
            assert!(m.remainder_rate > m.rate);
        }
    }

    #[test]
    fn group_coefficients_sum_to_leading() {
        for p in 2..=4 {
            let groups = group_asymptotes(idx(p)).unwrap();
            let leading = beta_leading_coefficient(idx(p)).unwrap();
            let sum = Surd::sum(leading.radicand, groups.iter().map(|g| g.coeff)).unwrap();
            assert_eq!(sum, leading, "p = {p}");
        }
        // −5√15/24 and −5√5/(8√3) are the same number: (5/24)²·15 = (5/8)²·5/3.
        let lhs = Rational64::new(5, 24).pow(2) * 15;
        let rhs = Rational64::new(5, 8).pow(2) * Rational64::new(5, 3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wavenumber_asymptote_values() {
        assert!((wavenumber_asymptote(idx(2), depth(200.0)).unwrap() - 0.25).abs() < 1e-15);
        let v = wavenumber_asymptote(idx(4), depth(5.0)).unwrap();
        assert_eq!(v, 2.25 - 7.5 * (-10f64).exp());
    }

    #[test]
    fn wavenumber_p3_constant() {
        // The remainder at h = 4 is about 0.54 e^{-12}.
        let phi = crate::solve_wavenumber(idx(3), depth(4.0), 1e-15).unwrap().phi;
        let r = phi - wavenumber_asymptote(idx(3), depth(4.0)).unwrap();
        assert!(r.abs() <= 10.0 * (-12f64).exp(), "{r}");
    }

    #[test]
    fn harness_recovers_synthetic_rate() {
        let (c, r, d, s) = (0.7, 0.5, -3.0, 1.3);
        let m = model(0.0, c, r, s, "synthetic");
        let f = |h: Depth| Ok(Sample::exact(c * (-r * h.get()).exp() + d * (-s * h.get()).exp()));
        let fit = fit_remainder_rate(f, &m, depth(5.0), depth(7.0)).unwrap();
        assert!((fit.estimated_rate - s).abs() <= 0.02 * s, "{fit:?}");
        assert!(!fit.floor_flag);
    }

    #[test]
    fn harness_flags_floor_and_degenerate() {
        let m = model(0.0, 1.0, 1.0, 2.0, "exact");
        let exact = |h: Depth| Ok(Sample::exact((-h.get()).exp()));
        assert!(matches!(
            fit_remainder_rate(exact, &m, depth(1.0), depth(2.0)),
            Err(Error::DegenerateFit { .. })
        ));
        let noisy = |h: Depth| Ok(Sample { value: (-h.get()).exp() + 2e-16, floor: 1e-16 });
        assert!(fit_remainder_rate(noisy, &m, depth(1.0), depth(2.0)).unwrap().floor_flag);
        assert!(fit_remainder_rate(noisy, &m, depth(2.0), depth(1.0)).is_err());
    }

    #[test]
    fn stokes_expansions_have_quartic_remainder() {
        let models = stokes_models();
        for (l, (ma, mp)) in models.iter().enumerate() {
            for (which, m) in [("a", ma), ("p", mp)] {
                let get = |h: Depth| {
                    let s = stokes_coefficients(h);
                    Ok(Sample::exact(if which == "a" { s.a(l + 1) } else { s.p(l + 1) }))
                };
                let fit = fit_remainder_rate(get, m, depth(4.0), depth(6.0)).unwrap();
                assert!(
                    (fit.estimated_rate - 4.0).abs() < 0.1,
                    "{which}_{}: {}",
                    l + 1,
                    fit.estimated_rate
                );
            }
        }
    }

    #[test]
    fn dispersion_expansions_match() {
        for p in 2..=4 {
            let models = dispersion_models(idx(p)).unwrap();
            let h = if p == 2 { 20.0 } else { 9.0 };
            let d = build_resonance_data(idx(p), depth(h)).unwrap();
            for (j, (mo, mt)) in models.iter().enumerate() {
                let lead = (-mo.rate * h).exp();
                let bound = 10.0 * (-mo.remainder_rate * h).exp().max(1e-15);
                assert!(mo.remainder(d.omega[j], depth(h)).abs() <= bound, "p={p} Omega_{j}");
                assert!(mt.remainder(d.t[j], depth(h)).abs() <= bound, "p={p} t_{j}");
                assert!(bound < lead);
            }
        }
    }

    #[test]
    fn one_hop_expansions_match() {
        for (p, h) in [(2, 16.0), (3, 5.0), (4, 5.0)] {
            let b = crate::beta1_breakdown(idx(p), depth(h)).unwrap();
            for (j, s, m) in one_hop_models(idx(p)).unwrap() {
                let v = b.term(crate::TermKind::OneHop { j, s }).unwrap().value;
                let r = m.remainder(v, depth(h));
                let first = m.coeff * (-m.rate * h).exp();
                assert!(r.abs() < 0.2 * first.abs(), "p={p} j={j} {s:?}: r={r} lead={first}");
            }
        }
    }
}
