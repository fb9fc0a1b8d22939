//! The coefficient `β₁^(p)(h)` as a signed sum of explicit summands.
//!
//! Each summand follows a path `0 → j₁ → … → j_k → p` through intermediate
//! harmonics, every intermediate carrying a label `±`. With node signs
//! `ε_0 = +1`, `ε_p = −1` and `ε_j = +1` for `−`, `−1` for `+`, a summand is
//!
//! ```text
//!   Ω_{j₁}⋯Ω_{j_k} √(Ω_0 Ω_p) / 4^{k+1}
//!     · Π_hops (a_ℓ + p_ℓ (ε_u t_u + ε_v t_v))          ℓ = v − u
//!     / Π_j (j c_h + ε_j Ω_j − Ω_0)
//! ```
//!
//! and enters `β₁` with sign `(−1)^{#minus labels}`. The tables below list the
//! summands in their customary order with that sign written out; a test checks
//! the tables against the rule and against the enumeration of compositions of `p`.
//!
//! In deep water all summands are `O(1)` while `β₁` is exponentially small, so
//! the sum is accumulated with compensation and every result carries its
//! cancellation floor, 8 ulps of the largest summand.

use std::fmt;

use rayon::prelude::*;

use crate::asymptotics::leading_term;
use crate::resonance::{IsolaIndex, ResonanceData};
use crate::roots::{brent, Termination};
use crate::stokes::StokesCoefficients;
use qd::Quad;

use crate::extended::{self, ResonanceQ};
use crate::{ulp, Depth, Error, Result};

/// Denominators smaller than this in magnitude are reported as singular.
pub const SINGULAR_DENOMINATOR: f64 = 1e-10;

/// Number of ulps of the largest summand that make up the cancellation floor.
pub const FLOOR_ULPS: f64 = 8.0;

/// Label of an intermediate harmonic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Minus,
    Plus,
}

impl Label {
    /// `ε_j`: the sign multiplying `Ω_j` in the denominator and `t_j` in the hops.
    #[inline]
    pub fn node_sign(self) -> f64 {
        match self {
            Label::Minus => 1.0,
            Label::Plus => -1.0,
        }
    }

    fn symbol(self) -> char {
        match self {
            Label::Minus => '-',
            Label::Plus => '+',
        }
    }
}

use Label::{Minus as M, Plus as P};

/// Shape of a summand: the intermediate harmonics it visits and their labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermKind {
    B0,
    OneHop { j: u32, s: Label },
    TwoHop { j1: u32, j2: u32, s1: Label, s2: Label },
    /// Visits `1, 2, 3`; only present for `p = 4`.
    ThreeHop { s1: Label, s2: Label, s3: Label },
}

impl TermKind {
    /// Intermediate harmonics with their labels, in increasing order.
    pub fn intermediates(&self) -> Vec<(u32, Label)> {
        match *self {
            TermKind::B0 => vec![],
            TermKind::OneHop { j, s } => vec![(j, s)],
            TermKind::TwoHop { j1, j2, s1, s2 } => vec![(j1, s1), (j2, s2)],
            TermKind::ThreeHop { s1, s2, s3 } => vec![(1, s1), (2, s2), (3, s3)],
        }
    }

    pub fn group(&self) -> GroupId {
        match *self {
            TermKind::B0 => GroupId::B0,
            TermKind::OneHop { j, .. } => GroupId::One(j),
            TermKind::TwoHop { j1, j2, .. } => GroupId::Two(j1, j2),
            TermKind::ThreeHop { .. } => GroupId::Three,
        }
    }
}

/// Identifies a summand of `β₁^(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BetaTermId {
    pub p: IsolaIndex,
    pub kind: TermKind,
}

impl fmt::Display for BetaTermId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self
            .kind
            .intermediates()
            .iter()
            .map(|(_, s)| s.symbol().to_string())
            .collect();
        match self.kind {
            TermKind::B0 => write!(f, "b0"),
            TermKind::OneHop { .. } => write!(f, "{}^{}", self.kind.group(), labels[0]),
            _ => write!(f, "{}^{{{}}}", self.kind.group(), labels.join(",")),
        }
    }
}

/// Groups of summands sharing the same intermediate harmonics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    B0,
    One(u32),
    Two(u32, u32),
    Three,
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupId::B0 => write!(f, "b0"),
            GroupId::One(j) => write!(f, "B1,{j}"),
            GroupId::Two(j1, j2) => write!(f, "B2,{{{j1},{j2}}}"),
            GroupId::Three => write!(f, "B3,{{1,2,3}}"),
        }
    }
}

const fn one(j: u32, s: Label) -> TermKind {
    TermKind::OneHop { j, s }
}

const fn two(j1: u32, j2: u32, s1: Label, s2: Label) -> TermKind {
    TermKind::TwoHop { j1, j2, s1, s2 }
}

const fn three(s1: Label, s2: Label, s3: Label) -> TermKind {
    TermKind::ThreeHop { s1, s2, s3 }
}

const TERMS_P2: [(f64, TermKind); 3] = [(1.0, TermKind::B0), (-1.0, one(1, M)), (1.0, one(1, P))];

const TERMS_P3: [(f64, TermKind); 9] = [
    (1.0, TermKind::B0),
    (-1.0, one(1, M)),
    (1.0, one(1, P)),
    (-1.0, one(2, M)),
    (1.0, one(2, P)),
    (-1.0, two(1, 2, M, P)),
    (1.0, two(1, 2, M, M)),
    (-1.0, two(1, 2, P, M)),
    (1.0, two(1, 2, P, P)),
];

const TERMS_P4: [(f64, TermKind); 27] = [
    (1.0, TermKind::B0),
    (-1.0, one(1, M)),
    (1.0, one(1, P)),
    (-1.0, one(2, M)),
    (1.0, one(2, P)),
    (-1.0, one(3, M)),
    (1.0, one(3, P)),
    (-1.0, two(1, 2, M, P)),
    (1.0, two(1, 2, M, M)),
    (-1.0, two(1, 2, P, M)),
    (1.0, two(1, 2, P, P)),
    (-1.0, two(1, 3, M, P)),
    (1.0, two(1, 3, M, M)),
    (-1.0, two(1, 3, P, M)),
    (1.0, two(1, 3, P, P)),
    (-1.0, two(2, 3, M, P)),
    (1.0, two(2, 3, M, M)),
    (-1.0, two(2, 3, P, M)),
    (1.0, two(2, 3, P, P)),
    (-1.0, three(M, P, P)),
    (1.0, three(M, M, P)),
    (-1.0, three(P, M, P)),
    (1.0, three(P, P, P)),
    (-1.0, three(P, P, M)),
    (1.0, three(P, M, M)),
    (-1.0, three(M, M, M)),
    (1.0, three(M, P, M)),
];

/// Signed summands of `β₁^(p)` in their customary order.
pub fn term_table(p: IsolaIndex) -> Result<&'static [(f64, TermKind)]> {
    match p.get() {
        2 => Ok(&TERMS_P2),
        3 => Ok(&TERMS_P3),
        4 => Ok(&TERMS_P4),
        other => Err(Error::UnsupportedIndex(other)),
    }
}

fn denominator_name(j: u32, s: Label) -> String {
    let k = if j == 1 { String::new() } else { j.to_string() };
    let op = match s {
        Label::Minus => '+',
        Label::Plus => '-',
    };
    format!("{k}c_h {op} Omega_{j} - Omega_0")
}

/// Unsigned value of one summand.
pub fn term_value(
    kind: TermKind,
    data: &ResonanceData,
    coeffs: &StokesCoefficients,
) -> Result<f64> {
    let p = data.p.get();
    let om = &data.omega;
    let t = &data.t;

    let mut nodes: Vec<(u32, f64)> = vec![(0, 1.0)];
    nodes.extend(kind.intermediates().iter().map(|&(j, s)| (j, s.node_sign())));
    nodes.push((p, -1.0));
    let k = nodes.len() - 2;

    let mut value = (om[0] * om[p as usize]).sqrt() / 4f64.powi(k as i32 + 1);
    for &(j, s) in &nodes[1..=k] {
        let d = j as f64 * data.c + s * om[j as usize] - om[0];
        if d.abs() < SINGULAR_DENOMINATOR {
            let label = if s > 0.0 { Label::Minus } else { Label::Plus };
            return Err(Error::Singular {
                name: denominator_name(j, label),
                value: d,
                h: data.h.get(),
            });
        }
        value *= om[j as usize] / d;
    }
    for w in nodes.windows(2) {
        let ((u, su), (v, sv)) = (w[0], w[1]);
        let order = (v - u) as usize;
        value *= coeffs.hop(order, su * t[u as usize] + sv * t[v as usize]);
    }
    Ok(value)
}

/// One summand with the sign it carries in `β₁`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaTerm {
    pub id: BetaTermId,
    pub sign: f64,
    pub value: f64,
}

impl BetaTerm {
    /// `sign · value`, the contribution to `β₁`.
    #[inline]
    pub fn contribution(&self) -> f64 {
        self.sign * self.value
    }
}

/// Every summand of `β₁^(p)(h)`, the group sums and the total.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaBreakdown {
    pub p: IsolaIndex,
    pub h: Depth,
    pub b0: f64,
    pub terms: Vec<BetaTerm>,
    /// Signed sums of the members of each group, in table order.
    pub group_sums: Vec<(GroupId, f64)>,
    pub total: f64,
    /// Largest `|summand|`.
    pub max_term: f64,
    /// Cancellation floor: `FLOOR_ULPS` ulps of `max_term`.
    pub floor: f64,
}

impl BetaBreakdown {
    pub fn group(&self, g: GroupId) -> Option<f64> {
        self.group_sums.iter().find(|(id, _)| *id == g).map(|&(_, v)| v)
    }

    pub fn term(&self, kind: TermKind) -> Option<&BetaTerm> {
        self.terms.iter().find(|t| t.id.kind == kind)
    }
}

/// `β₁^(p)(h)` with its full breakdown.
///
/// Resonance data, coefficients, summands and sums are carried in
/// double-double and rounded once at the end; see [`term_value`] for the
/// double-precision form of a single summand.
pub fn beta1_breakdown(p: IsolaIndex, h: Depth) -> Result<BetaBreakdown> {
    let table = term_table(p)?;
    let data = extended::resonance(p, h)?;
    let coeffs = extended::stokes(data.c);

    let mut terms = Vec::with_capacity(table.len());
    let mut groups: Vec<(GroupId, Quad)> = Vec::new();
    let mut total = Quad::ZERO;
    for &(sign, kind) in table {
        let value = term_value_dd(kind, p, h, &data, &coeffs)?;
        let contribution = if sign < 0.0 { -value } else { value };
        let g = kind.group();
        match groups.iter_mut().find(|(id, _)| *id == g) {
            Some((_, acc)) => *acc = extended::add(*acc, contribution),
            None => groups.push((g, contribution)),
        }
        total = extended::add(total, contribution);
        terms.push(BetaTerm {
            id: BetaTermId { p, kind },
            sign,
            value: extended::to_f64(value),
        });
    }

    let max_term = terms.iter().fold(0.0f64, |m, t| m.max(t.value.abs()));
    Ok(BetaBreakdown {
        p,
        h,
        b0: terms[0].value,
        group_sums: groups.into_iter().map(|(g, acc)| (g, extended::to_f64(acc))).collect(),
        total: extended::to_f64(total),
        max_term,
        floor: FLOOR_ULPS * ulp(max_term),
        terms,
    })
}

fn term_value_dd(
    kind: TermKind,
    p: IsolaIndex,
    h: Depth,
    data: &ResonanceQ,
    (a, pc): &([Quad; 4], [Quad; 4]),
) -> Result<Quad> {
    use extended::{add, q, sub};
    let p = p.get();
    let (om, t) = (&data.omega, &data.t);

    let mut nodes: Vec<(u32, f64)> = vec![(0, 1.0)];
    nodes.extend(kind.intermediates().iter().map(|&(j, s)| (j, s.node_sign())));
    nodes.push((p, -1.0));
    let k = nodes.len() - 2;

    let signed = |s: f64, x: Quad| if s < 0.0 { -x } else { x };
    let mut value = (om[0] * om[p as usize]).sqrt() / q(4f64.powi(k as i32 + 1));
    for &(j, s) in &nodes[1..=k] {
        let d = sub(add(q(j as f64) * data.c, signed(s, om[j as usize])), om[0]);
        let df = extended::to_f64(d);
        if df.abs() < SINGULAR_DENOMINATOR {
            let label = if s > 0.0 { Label::Minus } else { Label::Plus };
            return Err(Error::Singular {
                name: denominator_name(j, label),
                value: df,
                h: h.get(),
            });
        }
        value = value * om[j as usize] / d;
    }
    for w in nodes.windows(2) {
        let ((u, su), (v, sv)) = (w[0], w[1]);
        let l = (v - u) as usize - 1;
        let x = add(signed(su, t[u as usize]), signed(sv, t[v as usize]));
        value *= add(a[l], pc[l] * x);
    }
    Ok(value)
}

/// `β₁^(p)(h)` for `p ∈ {2, 3, 4}`.
pub fn beta1(p: IsolaIndex, h: Depth) -> Result<f64> {
    Ok(beta1_breakdown(p, h)?.total)
}

/// A located zero of `β₁^(p)` with the value of `β₁` there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaZero {
    pub h: f64,
    pub beta: f64,
}

/// Zeros of `β₁^(p)` on `[h_min, h_max]`: sign changes on a uniform grid of
/// `grid_n` intervals, each refined by Brent's method to `|Δh| <= tol`.
///
/// Zeros of even multiplicity, and pairs closer than the grid spacing, are not seen.
pub fn find_beta_zeros(
    p: IsolaIndex,
    h_min: Depth,
    h_max: Depth,
    grid_n: usize,
    tol: f64,
) -> Result<Vec<BetaZero>> {
    term_table(p)?;
    let (a, b) = (h_min.get(), h_max.get());
    if !(a < b) {
        return Err(Error::Domain {
            name: "h_max",
            value: b,
            reason: "scan interval must satisfy h_min < h_max",
        });
    }
    if grid_n < 100 {
        return Err(Error::Domain {
            name: "grid_n",
            value: grid_n as f64,
            reason: "zero scan needs at least 100 grid intervals",
        });
    }
    if !(tol > 0.0) {
        return Err(Error::Domain {
            name: "tol",
            value: tol,
            reason: "tolerance must be positive",
        });
    }

    let eval = |h: f64| -> Result<f64> { beta1(p, Depth::new(h)?) };
    let grid = HGrid::new(a, b, grid_n + 1)?;
    let values = grid
        .points()
        .into_par_iter()
        .map(|h| eval(h).map(|v| (h, v)))
        .collect::<Result<Vec<_>>>()?;

    let brackets: Vec<_> = values
        .windows(2)
        .filter(|w| w[0].1 == 0.0 || w[0].1.signum() != w[1].1.signum() && w[1].1 != 0.0)
        .map(|w| (w[0], w[1]))
        .collect();

    brackets
        .into_par_iter()
        .map(|((x0, f0), (x1, f1))| {
            let mut failure = None;
            let stop = Termination { xtol: tol, ..Termination::default() };
            let root = brent(
                |h| match eval(h) {
                    Ok(v) => v,
                    Err(e) => {
                        failure.get_or_insert(e);
                        f64::NAN
                    }
                },
                x0,
                x1,
                f0,
                f1,
                stop,
            );
            if let Some(e) = failure {
                return Err(e);
            }
            let root = root?;
            Ok(BetaZero { h: root.x, beta: root.fx })
        })
        .collect()
}

/// Uniform grid of depths, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HGrid {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl HGrid {
    pub fn new(min: f64, max: f64, n: usize) -> Result<Self> {
        Depth::new(min)?;
        Depth::new(max)?;
        if n == 0 || (n > 1 && !(min < max)) || (n == 1 && min != max) {
            return Err(Error::Domain {
                name: "n",
                value: n as f64,
                reason: "grid needs n >= 1 points and min < max (or min = max for one point)",
            });
        }
        Ok(HGrid { min, max, n })
    }

    pub fn single(h: Depth) -> Self {
        HGrid { min: h.get(), max: h.get(), n: 1 }
    }

    pub fn points(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.n - 1) as f64;
        (0..self.n)
            .map(|k| if k + 1 == self.n { self.max } else { self.min + step * k as f64 })
            .collect()
    }
}

/// One row of a `β₁` scan: the value, the leading deep-water term and the floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub h: f64,
    pub beta1: f64,
    pub leading: f64,
    pub ratio: f64,
    pub floor: f64,
    /// `|β₁|` is within 10 floors, so its digits are not trustworthy.
    pub floor_flag: bool,
}

/// `β₁^(p)` and its leading asymptotic term on a grid, ordered by `h`.
pub fn beta_scan(p: IsolaIndex, grid: &HGrid) -> Result<Vec<ScanRow>> {
    term_table(p)?;
    grid.points()
        .into_par_iter()
        .map(|h| {
            let depth = Depth::new(h)?;
            let b = beta1_breakdown(p, depth)?;
            let leading = leading_term(p, depth)?;
            Ok(ScanRow {
                h,
                beta1: b.total,
                leading,
                ratio: b.total / leading,
                floor: b.floor,
                floor_flag: b.total.abs() <= 10.0 * b.floor,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resonance::build_resonance_data;
    use crate::summation::compensated_sum;

    fn idx(p: u32) -> IsolaIndex {
        IsolaIndex::new(p).unwrap()
    }

    fn depth(h: f64) -> Depth {
        Depth::new(h).unwrap()
    }

    fn compositions(n: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn tables_follow_the_path_rule() {
        for p in 2..=4 {
            let table = term_table(idx(p)).unwrap();
            assert_eq!(table.len(), 3usize.pow(p - 1));
            for &(sign, kind) in table {
                let inter = kind.intermediates();
                let minus = inter.iter().filter(|(_, s)| *s == Label::Minus).count();
                let expect = if minus % 2 == 0 { 1.0 } else { -1.0 };
                assert_eq!(sign, expect, "{kind:?}");
                assert!(inter.windows(2).all(|w| w[0].0 < w[1].0));
                assert!(inter.iter().all(|&(j, _)| 0 < j && j < p));
            }
            // Every composition of p with every labelling appears exactly once.
            let mut expected = 0;
            for comp in compositions(p) {
                let mut nodes = Vec::new();
                let mut acc = 0;
                for step in &comp[..comp.len() - 1] {
                    acc += step;
                    nodes.push(acc);
                }
                expected += 1 << nodes.len();
                let found = table
                    .iter()
                    .filter(|(_, k)| k.intermediates().iter().map(|x| x.0).collect::<Vec<_>>() == nodes)
                    .count();
                assert_eq!(found, 1 << nodes.len(), "p = {p}, path {nodes:?}");
            }
            assert_eq!(expected, table.len());
        }
    }

    #[test]
    fn term_names() {
        let id = |kind| BetaTermId { p: idx(4), kind }.to_string();
        assert_eq!(id(TermKind::B0), "b0");
        assert_eq!(id(one(2, M)), "B1,2^-");
        assert_eq!(id(two(1, 3, P, M)), "B2,{1,3}^{+,-}");
        assert_eq!(id(three(M, P, P)), "B3,{1,2,3}^{-,+,+}");
        assert_eq!(GroupId::Two(2, 3).to_string(), "B2,{2,3}");
    }

    #[test]
    fn rejects_unsupported_index() {
        assert_eq!(beta1(idx(5), depth(1.0)), Err(Error::UnsupportedIndex(5)));
    }

    #[test]
    fn breakdown_is_consistent() {
        for p in 2..=4 {
            for h in [0.3, 1.0, 3.0, 9.0] {
                let b = beta1_breakdown(idx(p), depth(h)).unwrap();
                assert_eq!(b.terms.len(), 3usize.pow(p - 1));
                assert_eq!(b.b0, b.terms[0].value);
                // Summands are reported rounded; the sums are taken before rounding.
                let rounding: f64 = b.terms.iter().map(|t| 0.5 * ulp(t.value)).sum();
                let reversed = compensated_sum(b.terms.iter().rev().map(BetaTerm::contribution));
                assert!((reversed - b.total).abs() <= rounding + ulp(b.total));
                let from_groups = compensated_sum(b.group_sums.iter().map(|g| g.1));
                assert!((from_groups - b.total).abs() <= b.floor);
                for &(g, sum) in &b.group_sums {
                    let members: Vec<_> = b.terms.iter().filter(|t| t.id.kind.group() == g).collect();
                    let rounding: f64 = members.iter().map(|t| 0.5 * ulp(t.value)).sum();
                    let direct = compensated_sum(members.iter().map(|t| t.contribution()));
                    assert!((direct - sum).abs() <= rounding + ulp(sum), "{g}");
                }
            }
        }
    }

    #[test]
    fn forward_and_reversed_sums_agree() {
        for p in 2..=4 {
            for h in [0.3, 1.0, 3.0, 9.0, 15.0] {
                let (pi, d) = (idx(p), depth(h));
                let data = extended::resonance(pi, d).unwrap();
                let coeffs = extended::stokes(data.c);
                let signed: Vec<Quad> = term_table(pi)
                    .unwrap()
                    .iter()
                    .map(|&(s, k)| {
                        let v = term_value_dd(k, pi, d, &data, &coeffs).unwrap();
                        if s < 0.0 { -v } else { v }
                    })
                    .collect();
                let fwd = signed.iter().fold(Quad::ZERO, |acc, &v| extended::add(acc, v));
                let rev = signed.iter().rev().fold(Quad::ZERO, |acc, &v| extended::add(acc, v));
                let b = beta1_breakdown(pi, d).unwrap();
                assert_eq!(extended::to_f64(fwd), b.total);
                assert!((extended::to_f64(rev) - b.total).abs() <= 4.0 * ulp(b.max_term));
            }
        }
    }

    #[test]
    fn reported_terms_reconstruct_total_p4() {
        let b = beta1_breakdown(idx(4), depth(3.0)).unwrap();
        assert_eq!(b.terms.len(), 27);
        let sum = compensated_sum(b.terms.iter().map(BetaTerm::contribution));
        assert!((sum - b.total).abs() <= 8.0 * ulp(b.max_term));
    }

    #[test]
    fn double_path_matches_summands() {
        for p in 2..=4 {
            for h in [0.5, 2.0, 8.0] {
                let b = beta1_breakdown(idx(p), depth(h)).unwrap();
                let data = build_resonance_data(idx(p), depth(h)).unwrap();
                let coeffs = crate::stokes::stokes_coefficients(depth(h));
                for t in &b.terms {
                    let v = term_value(t.id.kind, &data, &coeffs).unwrap();
                    assert!((v - t.value).abs() <= 32.0 * ulp(b.max_term), "{}", t.id);
                }
            }
        }
    }

    #[test]
    fn p2_summands_tend_to_common_limit() {
        let b = beta1_breakdown(idx(2), depth(30.0)).unwrap();
        let limit = 15f64.sqrt() / 16.0;
        for kind in [one(1, M), one(1, P)] {
            assert!((b.term(kind).unwrap().value - limit).abs() < 1e-5);
        }
        assert!(b.group(GroupId::One(1)).unwrap().abs() < 1e-5);
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn values_against_reference() {
        // 50-digit references from an independent evaluation.
        let cases = [
            (2, 6.0, 0.003_661_003_219_194_189_2),
            (3, 2.0, 0.019_123_702_191_337_485),
            (4, 3.0, -0.001_989_185_962_634_745_5),
        ];
        for (p, h, reference) in cases {
            let b = beta1_breakdown(idx(p), depth(h)).unwrap();
            assert!((b.total - reference).abs() <= b.floor, "p={p} h={h}: {} vs {reference}", b.total);
        }
    }

    #[test]
    fn singular_denominator_is_named() {
        let mut data = build_resonance_data(idx(2), depth(1.0)).unwrap();
        data.omega[1] = data.omega[0] - data.c;
        let err = term_value(one(1, M), &data, &crate::stokes::stokes_coefficients(depth(1.0))).unwrap_err();
        match err {
            Error::Singular { name, .. } => assert_eq!(name, "c_h + Omega_1 - Omega_0"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zeros_of_p2_and_empty_scan() {
        let zeros = find_beta_zeros(idx(2), depth(0.5), depth(5.0), 2000, 1e-8).unwrap();
        assert_eq!(zeros.len(), 1);
        assert!((zeros[0].h - 1.849_40).abs() < 5e-4);
        let none = find_beta_zeros(idx(3), depth(2.0), depth(10.0), 1000, 1e-8).unwrap();
        assert!(none.is_empty());
        assert!(find_beta_zeros(idx(2), depth(1.0), depth(2.0), 10, 1e-8).is_err());
    }

    #[test]
    fn scan_sign_pattern_p4() {
        let grid = HGrid::new(0.3, 3.0, 271).unwrap();
        let rows = beta_scan(idx(4), &grid).unwrap();
        let mut signs: Vec<f64> = Vec::new();
        for r in &rows {
            let s = r.beta1.signum();
            if signs.last() != Some(&s) {
                signs.push(s);
            }
        }
        assert_eq!(signs, vec![-1.0, 1.0, -1.0]);
        assert!(rows.windows(2).all(|w| w[0].h < w[1].h));
    }

    #[test]
    fn grid_points() {
        let g = HGrid::new(1.0, 2.0, 5).unwrap();
        assert_eq!(g.points(), vec![1.0, 1.25, 1.5, 1.75, 2.0]);
        assert_eq!(HGrid::single(depth(3.0)).points(), vec![3.0]);
        assert!(HGrid::new(2.0, 1.0, 5).is_err());
    }
}
