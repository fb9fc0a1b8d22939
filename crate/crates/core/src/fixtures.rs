//! Reference-value fixture files.
//!
//! One record per line, four tab-separated fields `p h value digits`, all
//! decimal strings; blank lines and lines starting with `#` are ignored.
//! `h` is written in shortest round-trip form so that the reference was
//! computed at exactly the double the main path sees.

use std::fmt::Write as _;

use crate::{Error, Result};

/// One reference value `β₁^(p)(h)` correct to `digits` significant digits.
#[derive(Debug, Clone, PartialEq)]
pub struct FixtureRecord {
    pub p: u32,
    pub h: f64,
    /// Decimal string as stored; may carry more digits than an `f64` holds.
    pub value: String,
    pub digits: u32,
}

impl FixtureRecord {
    pub fn value_f64(&self) -> f64 {
        // Validated at parse time.
        self.value.parse().unwrap_or(f64::NAN)
    }
}

fn field<T: std::str::FromStr>(line: usize, name: &str, raw: Option<&str>) -> Result<T> {
    let raw = raw.ok_or_else(|| Error::Fixture {
        line,
        message: format!("missing field {name}"),
    })?;
    raw.trim().parse().map_err(|_| Error::Fixture {
        line,
        message: format!("cannot parse {name} from {raw:?}"),
    })
}

pub fn parse(text: &str) -> Result<Vec<FixtureRecord>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut cols = trimmed.split('\t');
        let p: u32 = field(line, "p", cols.next())?;
        let h: f64 = field(line, "h", cols.next())?;
        let value: String = field(line, "value", cols.next())?;
        let digits: u32 = field(line, "digits", cols.next())?;
        if cols.next().is_some() {
            return Err(Error::Fixture { line, message: "more than four fields".into() });
        }
        if value.parse::<f64>().map_or(true, |v| !v.is_finite()) {
            return Err(Error::Fixture { line, message: format!("value {value:?} is not a finite number") });
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::Fixture { line, message: format!("depth {h} must be positive") });
        }
        out.push(FixtureRecord { p, h, value, digits });
    }
    Ok(out)
}

pub fn write(header: &str, records: &[FixtureRecord]) -> String {
    let mut s = String::new();
    for line in header.lines() {
        let _ = writeln!(s, "# {line}");
    }
    let _ = writeln!(s, "# p\th\tvalue\tdigits");
    for r in records {
        let _ = writeln!(s, "{}\t{:?}\t{}\t{}", r.p, r.h, r.value, r.digits);
    }
    s
}
