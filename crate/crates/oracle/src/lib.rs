//! Arbitrary-precision reference values of `β₁^(p)(h)`, `p = 2, 3, 4`.
//!
//! Every summand is written out by hand as a closed formula, with no shared
//! tables or path enumeration, so that a transcription slip in either this
//! crate or the main library shows up as a disagreement between the two.
//! The collision wavenumber is found by plain bisection at working precision.

use std::cell::{Cell, RefCell};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static BITS: Cell<usize> = const { Cell::new(256) };
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    Precision(u32),
    UnsupportedIndex(u32),
    Depth(f64),
    Bracket { p: u32, h: f64 },
    NoConvergence { p: u32, h: f64, iterations: u32 },
    Arithmetic(String),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Precision(d) => write!(f, "working precision of {d} digits is below the minimum of 50"),
            Self::UnsupportedIndex(p) => write!(f, "no closed form for p = {p}; supported: 2, 3, 4"),
            Self::Depth(h) => write!(f, "depth must be finite and positive, got {h}"),
            Self::Bracket { p, h } => write!(f, "could not bracket the collision wavenumber for p = {p}, h = {h}"),
            Self::NoConvergence { p, h, iterations } => {
                write!(f, "bisection for p = {p}, h = {h} did not converge in {iterations} steps")
            }
            Self::Arithmetic(msg) => write!(f, "arithmetic failure: {msg}"),
        }
    }
}

impl std::error::Error for OracleError {}

pub type Result<T> = std::result::Result<T, OracleError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Working precision in decimal digits.
    pub digits: u32,
    /// Cap on bisection steps for the wavenumber.
    pub max_bisect: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { digits: 50, max_bisect: 600 }
    }
}

impl OracleConfig {
    pub fn new(digits: u32, max_bisect: u32) -> Result<Self> {
        if digits < 50 {
            return Err(OracleError::Precision(digits));
        }
        Ok(Self { digits, max_bisect })
    }

    /// Binary working precision, with guard bits.
    fn bits(&self) -> usize {
        (self.digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 64
    }
}

/// A number at the current working precision.
#[derive(Clone, Debug)]
pub struct Real(BigFloat);

fn bits() -> usize {
    BITS.with(Cell::get)
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

impl Real {
    pub fn from_f64(x: f64) -> Self {
        Real(BigFloat::from_f64(x, bits()))
    }

    pub fn int(n: i64) -> Self {
        Real(BigFloat::from_i64(n, bits()))
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.sqrt(bits(), RM))
    }

    pub fn tanh(&self) -> Self {
        Real(with_consts(|cc| self.0.tanh(bits(), RM, cc)))
    }

    pub fn exp(&self) -> Self {
        Real(with_consts(|cc| self.0.exp(bits(), RM, cc)))
    }

    pub fn abs(&self) -> Self {
        Real(self.0.abs())
    }

    pub fn powi(&self, n: usize) -> Self {
        Real(self.0.powi(n, bits(), RM))
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    /// `log10 |x|`, rounded down; `None` for zero.
    pub fn decimal_exponent(&self) -> Option<i64> {
        if self.0.is_zero() {
            return None;
        }
        let l = with_consts(|cc| self.0.abs().log10(128, RM, cc));
        let s = format_big(&l, 30);
        s.parse::<f64>().ok().map(|v| v.floor() as i64)
    }

    /// Scientific decimal string with `sig` significant digits.
    pub fn to_decimal(&self, sig: usize) -> String {
        format_big(&self.0, sig)
    }

    /// Nearest double.
    pub fn to_f64(&self) -> f64 {
        // 40 significant digits round to the correct double except in
        // pathological ties, which do not occur for these values.
        self.to_decimal(40).parse().unwrap_or(f64::NAN)
    }
}

fn format_big(x: &BigFloat, sig: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let raw = with_consts(|cc| x.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
    round_scientific(&raw, sig)
}

/// Rounds a decimal string of the form `[-]d.ddd[e±x]` to `sig` significant digits.
fn round_scientific(raw: &str, sig: usize) -> String {
    let (neg, body) = match raw.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, raw),
    };
    let (mantissa, exp) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], body[i + 1..].parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let mut digits: Vec<u8> = int_part.bytes().chain(frac_part.bytes()).map(|b| b - b'0').collect();
    let mut point = int_part.len() as i64 + exp;
    let lead = digits.iter().position(|&d| d != 0).unwrap_or(digits.len());
    digits.drain(..lead);
    point -= lead as i64;
    if digits.is_empty() {
        return "0".to_string();
    }
    if digits.len() > sig {
        let round_up = digits[sig] >= 5;
        digits.truncate(sig);
        if round_up {
            let mut i = sig;
            loop {
                if i == 0 {
                    digits.insert(0, 1);
                    digits.truncate(sig);
                    point += 1;
                    break;
                }
                i -= 1;
                if digits[i] == 9 {
                    digits[i] = 0;
                } else {
                    digits[i] += 1;
                    break;
                }
            }
        }
    }
    while digits.len() > 1 && digits.last() == Some(&0) {
        digits.pop();
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push((b'0' + digits[0]) as char);
    if digits.len() > 1 {
        out.push('.');
        out.extend(digits[1..].iter().map(|&d| (b'0' + d) as char));
    }
    out.push_str(&format!("e{}", point - 1));
    out
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                Real(self.0.$op(&rhs.0, bits(), RM))
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                (&self).$m(rhs)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(BigFloat::neg(&self.0))
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(BigFloat::neg(&self.0))
    }
}

fn n(k: i64) -> Real {
    Real::int(k)
}

/// Runs `f` with the working precision of `cfg`.
fn at_precision<T>(cfg: &OracleConfig, f: impl FnOnce() -> T) -> T {
    let saved = bits();
    BITS.with(|b| b.set(cfg.bits()));
    let out = f();
    BITS.with(|b| b.set(saved));
    out
}

fn omega(phi: &Real, h: &Real) -> Real {
    (phi * (h * phi).tanh()).sqrt()
}

fn t_of(phi: &Real, h: &Real) -> Real {
    (phi / (h * phi).tanh()).sqrt()
}

/// Collision wavenumber: the root of `Ω(φ) + Ω(φ+p) − p√tanh h` on `(0, ∞)`.
pub fn oracle_wavenumber(p: u32, h: f64, cfg: &OracleConfig) -> Result<Real> {
    check(p, h)?;
    at_precision(cfg, || wavenumber(p, h, cfg))
}

fn check(p: u32, h: f64) -> Result<()> {
    if !(2..=4).contains(&p) {
        return Err(OracleError::UnsupportedIndex(p));
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(OracleError::Depth(h));
    }
    Ok(())
}

fn wavenumber(p: u32, h: f64, cfg: &OracleConfig) -> Result<Real> {
    let hr = Real::from_f64(h);
    let pr = n(p as i64);
    let c = hr.tanh().sqrt();
    let f = |phi: &Real| omega(phi, &hr) + omega(&(phi + &pr), &hr) - &pr * &c;

    // f(0) = Ω(p) − p c_h < 0, and f grows without bound.
    let mut lo = n(0);
    let mut hi = n((p * p) as i64);
    let mut tries = 0;
    while f(&hi).is_negative() {
        lo = hi.clone();
        hi = &hi * n(2);
        tries += 1;
        if tries > 60 {
            return Err(OracleError::Bracket { p, h });
        }
    }

    let tol = Real::from_f64(2f64.powi(-(cfg.bits() as i32) + 8));
    for _ in 0..cfg.max_bisect {
        let mid = (&lo + &hi) / n(2);
        if f(&mid).is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
        if ((&hi - &lo) - &tol * &hi).is_negative() {
            return Ok((lo + hi) / n(2));
        }
    }
    Err(OracleError::NoConvergence { p, h, iterations: cfg.max_bisect })
}

/// One summand, named as in the customary listing, with its sign in `β₁`.
#[derive(Debug, Clone)]
pub struct OracleTerm {
    pub name: &'static str,
    pub sign: i8,
    pub value: Real,
}

/// `β₁^(p)(h)` and the largest `|summand|`.
#[derive(Debug, Clone)]
pub struct OracleValue {
    pub beta1: Real,
    pub max_term: Real,
    pub terms: Vec<OracleTerm>,
}

impl OracleValue {
    /// Decimal digits of `β₁` expected to be correct: working digits less the
    /// digits lost to cancellation, less a small margin.
    pub fn correct_digits(&self, cfg: &OracleConfig) -> u32 {
        let (Some(big), Some(small)) = (self.max_term.decimal_exponent(), self.beta1.decimal_exponent()) else {
            return 0;
        };
        let lost = (big - small).max(0);
        (cfg.digits as i64 - lost - 3).max(0) as u32
    }
}

pub fn oracle_beta1(p: u32, h: f64, cfg: &OracleConfig) -> Result<Real> {
    Ok(oracle_evaluate(p, h, cfg)?.beta1)
}

pub fn oracle_evaluate(p: u32, h: f64, cfg: &OracleConfig) -> Result<OracleValue> {
    check(p, h)?;
    at_precision(cfg, || {
        let phi = wavenumber(p, h, cfg)?;
        let terms = match p {
            2 => terms_p2(&Inputs::new(2, h, &phi)),
            3 => terms_p3(&Inputs::new(3, h, &phi)),
            _ => terms_p4(&Inputs::new(4, h, &phi)),
        };
        let mut beta1 = n(0);
        let mut max_term = n(0);
        for t in &terms {
            if !t.value.is_finite() {
                return Err(OracleError::Arithmetic(format!("{} is not finite at h = {h}", t.name)));
            }
            beta1 = if t.sign > 0 { beta1 + &t.value } else { beta1 - &t.value };
            if (&max_term - t.value.abs()).is_negative() {
                max_term = t.value.abs();
            }
        }
        Ok(OracleValue { beta1, max_term, terms })
    })
}

/// `c_h`, the Stokes-wave coefficients and `Ω_j`, `t_j` at the collision.
struct Inputs {
    c: Real,
    a: [Real; 5],
    pc: [Real; 5],
    om: Vec<Real>,
    t: Vec<Real>,
}

impl Inputs {
    fn new(p: u32, h: f64, phi: &Real) -> Self {
        let hr = Real::from_f64(h);
        let c = hr.tanh().sqrt();
        let ch = |k: usize| c.powi(k);

        let p1 = -(n(2) / &c);
        let a1 = -(ch(2) + n(1) / ch(2));
        let p2 = -((n(3) + ch(4)) / (n(2) * ch(7)));
        let a2 = (n(-14) * ch(4) + n(9) * ch(8) - n(3)) / (n(4) * ch(8));
        let p3 = -((ch(12) + n(17) * ch(8) + n(51) * ch(4) + n(27)) / (n(32) * ch(13)));
        let a3 = (-ch(16) - n(98) * ch(12) + n(252) * ch(8) - n(318) * ch(4) - n(27)) / (n(64) * ch(14));
        let p4 = (-ch(20) - n(39) * ch(16) - n(366) * ch(12) - n(850) * ch(8) - n(657) * ch(4) - n(135))
            / (n(64) * ch(19) * (ch(4) + n(5)));
        let a4 = (n(9) * ch(24) + n(238) * ch(20) - n(233) * ch(16) - n(1676) * ch(12) + n(743) * ch(8)
            - n(3042) * ch(4)
            - n(135))
            / (n(128) * ch(20) * (ch(4) + n(5)));

        let mut om = Vec::new();
        let mut t = Vec::new();
        for j in 0..=p {
            let x = phi + n(j as i64);
            om.push(omega(&x, &hr));
            t.push(t_of(&x, &hr));
        }
        Inputs { c, a: [n(0), a1, a2, a3, a4], pc: [n(0), p1, p2, p3, p4], om, t }
    }
}

fn term(name: &'static str, sign: i8, value: Real) -> OracleTerm {
    OracleTerm { name, sign, value }
}

fn terms_p2(x: &Inputs) -> Vec<OracleTerm> {
    let (c, a, p, om, t) = (&x.c, &x.a, &x.pc, &x.om, &x.t);
    let s = (&om[0] * &om[2]).sqrt();

    let b0 = &s / n(4) * (&a[2] + &p[2] * (&t[0] - &t[2]));
    let b11m = &om[1] * &s / (n(16) * (c + &om[1] - &om[0]))
        * (&a[1] + &p[1] * (&t[1] - &t[2]))
        * (&a[1] + &p[1] * (&t[1] + &t[0]));
    let b11p = &om[1] * &s / (n(16) * (c - &om[1] - &om[0]))
        * (&a[1] - &p[1] * (&t[1] + &t[2]))
        * (&a[1] + &p[1] * (&t[0] - &t[1]));

    vec![term("b0", 1, b0), term("B1,1^-", -1, b11m), term("B1,1^+", 1, b11p)]
}

fn terms_p3(x: &Inputs) -> Vec<OracleTerm> {
    let (c, a, p, om, t) = (&x.c, &x.a, &x.pc, &x.om, &x.t);
    let s = (&om[0] * &om[3]).sqrt();
    let c2 = n(2) * c;

    let b0 = &s / n(4) * (&a[3] + &p[3] * (&t[0] - &t[3]));

    let b11m = &om[1] * &s / (n(16) * (c + &om[1] - &om[0]))
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[2] + &p[2] * (&t[1] - &t[3]));
    let b11p = &om[1] * &s / (n(16) * (c - &om[1] - &om[0]))
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[2] - &p[2] * (&t[1] + &t[3]));
    let b12m = &om[2] * &s / (n(16) * (&c2 + &om[2] - &om[0]))
        * (&a[1] + &p[1] * (&t[2] - &t[3]))
        * (&a[2] + &p[2] * (&t[0] + &t[2]));
    let b12p = &om[2] * &s / (n(16) * (&c2 - &om[2] - &om[0]))
        * (&a[1] - &p[1] * (&t[2] + &t[3]))
        * (&a[2] + &p[2] * (&t[0] - &t[2]));

    let w = &om[1] * &om[2] * &s;
    let b2mp = &w
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[1] + &p[1] * (&t[1] - &t[2]))
        * (&a[1] - &p[1] * (&t[2] + &t[3]))
        / (n(64) * (c + &om[1] - &om[0]) * (&c2 - &om[2] - &om[0]));
    let b2mm = &w
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[1] + &p[1] * (&t[1] + &t[2]))
        * (&a[1] + &p[1] * (&t[2] - &t[3]))
        / (n(64) * (c + &om[1] - &om[0]) * (&c2 + &om[2] - &om[0]));
    let b2pm = &w
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[1] + &p[1] * (-&t[1] + &t[2]))
        * (&a[1] + &p[1] * (&t[2] - &t[3]))
        / (n(64) * (c - &om[1] - &om[0]) * (&c2 + &om[2] - &om[0]));
    let b2pp = &w
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[1] - &p[1] * (&t[1] + &t[2]))
        * (&a[1] - &p[1] * (&t[2] + &t[3]))
        / (n(64) * (c - &om[1] - &om[0]) * (&c2 - &om[2] - &om[0]));

    vec![
        term("b0", 1, b0),
        term("B1,1^-", -1, b11m),
        term("B1,1^+", 1, b11p),
        term("B1,2^-", -1, b12m),
        term("B1,2^+", 1, b12p),
        term("B2,{1,2}^{-,+}", -1, b2mp),
        term("B2,{1,2}^{-,-}", 1, b2mm),
        term("B2,{1,2}^{+,-}", -1, b2pm),
        term("B2,{1,2}^{+,+}", 1, b2pp),
    ]
}

fn terms_p4(x: &Inputs) -> Vec<OracleTerm> {
    let (c, a, p, om, t) = (&x.c, &x.a, &x.pc, &x.om, &x.t);
    let s = (&om[0] * &om[4]).sqrt();
    let c2 = n(2) * c;
    let c3 = n(3) * c;

    // Denominators `j c_h ∓ Ω_j − Ω_0`: `m` for the `−` label, `p` for `+`.
    let d1m = c + &om[1] - &om[0];
    let d1p = c - &om[1] - &om[0];
    let d2m = &c2 + &om[2] - &om[0];
    let d2p = &c2 - &om[2] - &om[0];
    let d3m = &c3 + &om[3] - &om[0];
    let d3p = &c3 - &om[3] - &om[0];

    let b0 = &s / n(4) * (&a[4] + &p[4] * (&t[0] - &t[4]));

    let b11m = &om[1] * &s / (n(16) * &d1m)
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[3] + &p[3] * (&t[1] - &t[4]));
    let b11p = &om[1] * &s / (n(16) * &d1p)
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[3] - &p[3] * (&t[1] + &t[4]));
    let b12m = &om[2] * &s / (n(16) * &d2m)
        * (&a[2] + &p[2] * (&t[2] - &t[4]))
        * (&a[2] + &p[2] * (&t[0] + &t[2]));
    let b12p = &om[2] * &s / (n(16) * &d2p)
        * (&a[2] - &p[2] * (&t[2] + &t[4]))
        * (&a[2] + &p[2] * (&t[0] - &t[2]));
    let b13m = &om[3] * &s / (n(16) * &d3m)
        * (&a[1] + &p[1] * (&t[3] - &t[4]))
        * (&a[3] + &p[3] * (&t[0] + &t[3]));
    let b13p = &om[3] * &s / (n(16) * &d3p)
        * (&a[1] - &p[1] * (&t[3] + &t[4]))
        * (&a[3] + &p[3] * (&t[0] - &t[3]));

    let w12 = &om[1] * &om[2] * &s;
    let b212mp = &w12
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[1] + &p[1] * (&t[1] - &t[2]))
        * (&a[2] - &p[2] * (&t[2] + &t[4]))
        / (n(64) * &d1m * &d2p);
    let b212mm = &w12
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[1] + &p[1] * (&t[1] + &t[2]))
        * (&a[2] + &p[2] * (&t[2] - &t[4]))
        / (n(64) * &d1m * &d2m);
    let b212pm = &w12
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[1] + &p[1] * (-&t[1] + &t[2]))
        * (&a[2] + &p[2] * (&t[2] - &t[4]))
        / (n(64) * &d1p * &d2m);
    let b212pp = &w12
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[1] - &p[1] * (&t[1] + &t[2]))
        * (&a[2] - &p[2] * (&t[2] + &t[4]))
        / (n(64) * &d1p * &d2p);

    let w13 = &om[1] * &om[3] * &s;
    let b213mp = &w13
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[2] + &p[2] * (&t[1] - &t[3]))
        * (&a[1] - &p[1] * (&t[3] + &t[4]))
        / (n(64) * &d1m * &d3p);
    let b213mm = &w13
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[2] + &p[2] * (&t[1] + &t[3]))
        * (&a[1] + &p[1] * (&t[3] - &t[4]))
        / (n(64) * &d1m * &d3m);
    let b213pm = &w13
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[2] + &p[2] * (-&t[1] + &t[3]))
        * (&a[1] + &p[1] * (&t[3] - &t[4]))
        / (n(64) * &d1p * &d3m);
    let b213pp = &w13
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[2] - &p[2] * (&t[1] + &t[3]))
        * (&a[1] - &p[1] * (&t[3] + &t[4]))
        / (n(64) * &d1p * &d3p);

    let w23 = &om[2] * &om[3] * &s;
    let b223mp = &w23
        * (&a[2] + &p[2] * (&t[0] + &t[2]))
        * (&a[1] + &p[1] * (&t[2] - &t[3]))
        * (&a[1] - &p[1] * (&t[3] + &t[4]))
        / (n(64) * &d2m * &d3p);
    let b223mm = &w23
        * (&a[2] + &p[2] * (&t[0] + &t[2]))
        * (&a[1] + &p[1] * (&t[2] + &t[3]))
        * (&a[1] + &p[1] * (&t[3] - &t[4]))
        / (n(64) * &d2m * &d3m);
    let b223pm = &w23
        * (&a[2] + &p[2] * (&t[0] - &t[2]))
        * (&a[1] + &p[1] * (-&t[2] + &t[3]))
        * (&a[1] + &p[1] * (&t[3] - &t[4]))
        / (n(64) * &d2p * &d3m);
    let b223pp = &w23
        * (&a[2] + &p[2] * (&t[0] - &t[2]))
        * (&a[1] - &p[1] * (&t[2] + &t[3]))
        * (&a[1] - &p[1] * (&t[3] + &t[4]))
        / (n(64) * &d2p * &d3p);

    let w123 = &om[1] * &om[2] * &om[3] * &s;
    let b3ppp = &w123
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[1] - &p[1] * (&t[1] + &t[2]))
        * (&a[1] - &p[1] * (&t[2] + &t[3]))
        * (&a[1] - &p[1] * (&t[3] + &t[4]))
        / (n(256) * &d1p * &d2p * &d3p);
    let b3mpp = &w123
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[1] + &p[1] * (&t[1] - &t[2]))
        * (&a[1] - &p[1] * (&t[2] + &t[3]))
        * (&a[1] - &p[1] * (&t[3] + &t[4]))
        / (n(256) * &d1m * &d2p * &d3p);
    let b3pmp = &w123
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[1] - &p[1] * (&t[1] - &t[2]))
        * (&a[1] - &p[1] * (&t[3] - &t[2]))
        * (&a[1] - &p[1] * (&t[3] + &t[4]))
        / (n(256) * &d1p * &d2m * &d3p);
    let b3ppm = &w123
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[1] - &p[1] * (&t[1] + &t[2]))
        * (&a[1] - &p[1] * (&t[2] - &t[3]))
        * (&a[1] - &p[1] * (&t[4] - &t[3]))
        / (n(256) * &d1p * &d2p * &d3m);
    let b3mmp = &w123
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[1] + &p[1] * (&t[1] + &t[2]))
        * (&a[1] + &p[1] * (&t[2] - &t[3]))
        * (&a[1] - &p[1] * (&t[3] + &t[4]))
        / (n(256) * &d1m * &d2m * &d3p);
    let b3pmm = &w123
        * (&a[1] + &p[1] * (&t[0] - &t[1]))
        * (&a[1] - &p[1] * (&t[1] - &t[2]))
        * (&a[1] + &p[1] * (&t[3] + &t[2]))
        * (&a[1] - &p[1] * (&t[4] - &t[3]))
        / (n(256) * &d1p * &d2m * &d3m);
    let b3mpm = &w123
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[1] - &p[1] * (&t[2] - &t[1]))
        * (&a[1] - &p[1] * (&t[2] - &t[3]))
        * (&a[1] - &p[1] * (&t[4] - &t[3]))
        / (n(256) * &d1m * &d2p * &d3m);
    let b3mmm = &w123
        * (&a[1] + &p[1] * (&t[0] + &t[1]))
        * (&a[1] + &p[1] * (&t[1] + &t[2]))
        * (&a[1] + &p[1] * (&t[2] + &t[3]))
        * (&a[1] + &p[1] * (&t[3] - &t[4]))
        / (n(256) * &d1m * &d2m * &d3m);

    vec![
        term("b0", 1, b0),
        term("B1,1^-", -1, b11m),
        term("B1,1^+", 1, b11p),
        term("B1,2^-", -1, b12m),
        term("B1,2^+", 1, b12p),
        term("B1,3^-", -1, b13m),
        term("B1,3^+", 1, b13p),
        term("B2,{1,2}^{-,+}", -1, b212mp),
        term("B2,{1,2}^{-,-}", 1, b212mm),
        term("B2,{1,2}^{+,-}", -1, b212pm),
        term("B2,{1,2}^{+,+}", 1, b212pp),
        term("B2,{1,3}^{-,+}", -1, b213mp),
        term("B2,{1,3}^{-,-}", 1, b213mm),
        term("B2,{1,3}^{+,-}", -1, b213pm),
        term("B2,{1,3}^{+,+}", 1, b213pp),
        term("B2,{2,3}^{-,+}", -1, b223mp),
        term("B2,{2,3}^{-,-}", 1, b223mm),
        term("B2,{2,3}^{+,-}", -1, b223pm),
        term("B2,{2,3}^{+,+}", 1, b223pp),
        term("B3,{1,2,3}^{-,+,+}", -1, b3mpp),
        term("B3,{1,2,3}^{-,-,+}", 1, b3mmp),
        term("B3,{1,2,3}^{+,-,+}", -1, b3pmp),
        term("B3,{1,2,3}^{+,+,+}", 1, b3ppp),
        term("B3,{1,2,3}^{+,+,-}", -1, b3ppm),
        term("B3,{1,2,3}^{+,-,-}", 1, b3pmm),
        term("B3,{1,2,3}^{-,-,-}", -1, b3mmm),
        term("B3,{1,2,3}^{-,+,-}", 1, b3mpm),
    ]
}
