//! Independent oracles used by the test suites.
//!
//! The generators here deliberately avoid the recurrences of
//! [`crate::ranges::veronese_sequence`]: convergents are produced by the
//! classical continued-fraction digit algorithm for quadratic surds, so the
//! two paths agree only if both are right.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::scalar::ExactScalar;

/// A quadratic surd `(p + sqrt(d)) / q` with `d` a positive non-square and
/// `q` dividing `d - p^2`, the invariant preserved by the digit step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Surd {
    pub p: i64,
    pub q: i64,
    pub d: i64,
}

/// `1 + 1/sqrt(3) = (3 + sqrt(3)) / 3`.
pub const ONE_PLUS_INV_SQRT3: Surd = Surd { p: 3, q: 3, d: 3 };

/// `1 - 1/sqrt(3) = (-3 + sqrt(3)) / (-3)`.
pub const ONE_MINUS_INV_SQRT3: Surd = Surd { p: -3, q: -3, d: 3 };

fn isqrt(d: i64) -> i64 {
    let mut s = (d as f64).sqrt() as i64;
    while (s + 1) * (s + 1) <= d {
        s += 1;
    }
    while s * s > d {
        s -= 1;
    }
    s
}

/// `floor((p + sqrt(d)) / q)` in exact integer arithmetic. Because `sqrt(d)`
/// is irrational the value is never an integer, which makes the ceiling in
/// the negative-denominator branch `floor + 1`.
fn floor_surd(p: i64, q: i64, d: i64) -> i64 {
    let s = isqrt(d);
    debug_assert!(s * s != d, "d must not be a perfect square");
    if q > 0 {
        (p + s).div_euclid(q)
    } else {
        -((p + s).div_euclid(-q) + 1)
    }
}

/// The first `n` continued-fraction digits of the surd.
pub fn cf_digits(surd: Surd, n: usize) -> Vec<i64> {
    let Surd { mut p, mut q, d } = surd;
    debug_assert_eq!((d - p * p) % q, 0, "q must divide d - p^2");
    let mut digits = Vec::with_capacity(n);
    for _ in 0..n {
        let a = floor_surd(p, q, d);
        digits.push(a);
        p = a * q - p;
        q = (d - p * p) / q;
    }
    digits
}

/// Convergents `h_k / k_k` from a digit sequence via the standard recurrence.
pub fn convergents(digits: &[i64]) -> Vec<ExactScalar> {
    let mut out = Vec::with_capacity(digits.len());
    let (mut h_prev, mut h) = (BigInt::from(1), BigInt::from(digits[0]));
    let (mut k_prev, mut k) = (BigInt::from(0), BigInt::from(1));
    out.push(ExactScalar::new(h.clone(), k.clone()));
    for &a in &digits[1..] {
        let h_next = a * &h + &h_prev;
        let k_next = a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        out.push(ExactScalar::new(h.clone(), k.clone()));
    }
    out
}

/// The first `n` continued-fraction convergents of the surd.
pub fn surd_convergents(surd: Surd, n: usize) -> Vec<ExactScalar> {
    convergents(&cf_digits(surd, n))
}

/// Exact comparison of a rational against the surd.
pub fn cmp_rational_surd(x: &ExactScalar, surd: Surd) -> Ordering {
    // x - (p + sqrt(d))/q = (x q - p - sqrt(d)) / q.
    let u = x * BigInt::from(surd.q) - BigInt::from(surd.p);
    let num_cmp = if !u.is_positive() {
        Ordering::Less
    } else {
        (&u * &u).cmp(&ExactScalar::from_integer(surd.d.into()))
    };
    debug_assert_ne!(num_cmp, Ordering::Equal, "sqrt(d) is irrational");
    if surd.q > 0 {
        num_cmp
    } else {
        num_cmp.reverse()
    }
}

/// Exact comparison of `|a - s|` against `|b - s|` where `s` is the surd:
/// the sign of `(a - b)(a + b - 2s)` decides, and `a + b - 2s` is compared
/// through the doubled surd `(2p + sqrt(4d)) / q`.
pub fn cmp_abs_distance_to_surd(a: &ExactScalar, b: &ExactScalar, surd: Surd) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let doubled = Surd {
        p: 2 * surd.p,
        q: surd.q,
        d: 4 * surd.d,
    };
    let sum_side = cmp_rational_surd(&(a + b), doubled);
    let diff_side = if a > b {
        Ordering::Greater
    } else {
        Ordering::Less
    };
    if diff_side == sum_side {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}
