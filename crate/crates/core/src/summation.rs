//! Compensated summation built on the error-free `TwoSum` transformation.
//!
//! The signed sums defining `β₁^(p)` are exponentially small in deep water
//! while their terms are O(1); the running rounding errors are carried in a
//! second accumulator so that the result is accurate to about one ulp of the
//! sum plus `O(n²ε²)` times the sum of magnitudes.

use std::iter::FromIterator;
use std::ops::AddAssign;

/// `a + b = s + err` exactly, with `s = fl(a + b)`.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Cascaded (Ogita–Rump–Oishi "Sum2") accumulator.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    err: f64,
    abs_sum: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let (s, e) = two_sum(self.sum, x);
        self.sum = s;
        self.err += e;
        self.abs_sum += x.abs();
    }

    pub fn value(&self) -> f64 {
        self.sum + self.err
    }

    /// Sum of the magnitudes of everything added so far.
    pub fn magnitude(&self) -> f64 {
        self.abs_sum
    }
}

impl AddAssign<f64> for CompensatedSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated sum of a sequence.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<CompensatedSum>().value()
}
