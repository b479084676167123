//! Exact scalar arithmetic and the combinatorial primitives (factorials,
//! rising factorials, binomial and multinomial coefficients) shared by
//! every engine.
//!
//! Rationals are kept in lowest terms with a positive denominator at all
//! times; no operation ever rounds. Values render as `p/q`, or bare `p`
//! when the denominator is 1, and parse back from either form.

use std::cell::RefCell;

use num::bigint::Sign;
use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::error::Error;

/// The universal exact scalar: an arbitrary-precision fraction, always
/// normalized (gcd 1, denominator positive).
pub type Rat = BigRational;

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Arbitrary-precision nonnegative integer.
pub type Nat = BigUint;

/// Shorthand for an integer-valued rational.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Shorthand for `p/q`. Panics if `q == 0`; intended for literals in
/// tests and seed tables.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

pub fn nat_to_rat(n: &Nat) -> Rat {
    Rat::from_integer(Int::from_biguint(Sign::Plus, n.clone()))
}

/// Exact division that reports a zero divisor instead of panicking.
pub fn checked_div(a: &Rat, b: &Rat) -> Result<Rat, Error> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Parses `p`, `p/q`, or `-p/q`. Rejects a zero denominator.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: Int = num_str.trim().parse().map_err(|_| bad())?;
    let denom: Int = match den_str {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => Int::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

thread_local! {
    // Per-thread memo table; concurrent callers each grow their own copy.
    static FACTORIALS: RefCell<Vec<Nat>> = RefCell::new(vec![Nat::one(), Nat::one()]);
}

/// `n!`, memoized.
pub fn factorial(n: usize) -> Nat {
    FACTORIALS.with(|cell| {
        let mut table = cell.borrow_mut();
        while table.len() <= n {
            let next = table.last().unwrap() * Nat::from(table.len());
            table.push(next);
        }
        table[n].clone()
    })
}

pub fn factorial_rat(n: usize) -> Rat {
    nat_to_rat(&factorial(n))
}

/// Rising factorial `x(x+1)...(x+n-1)`; the empty product 1 when `n = 0`.
pub fn rising_factorial(x: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..n {
        acc *= x + rat_int(i as i64);
    }
    acc
}

/// Binomial coefficient with the usual out-of-range convention:
/// 0 when `k < 0` or `k > n`.
pub fn binomial(n: usize, k: i64) -> Nat {
    if k < 0 || k as usize > n {
        return Nat::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = Nat::one();
    for i in 0..k {
        // exact at every step: C(n, i+1) = C(n, i) * (n - i) / (i + 1)
        acc = acc * Nat::from(n - i) / Nat::from(i + 1);
    }
    acc
}

pub fn binomial_rat(n: usize, k: i64) -> Rat {
    nat_to_rat(&binomial(n, k))
}

/// Multinomial coefficient `(t_1 + ... + t_m)! / (t_1! ... t_m!)`.
pub fn multinomial(parts: &[usize]) -> Nat {
    let total: usize = parts.iter().sum();
    let mut acc = factorial(total);
    for &t in parts {
        if t > 1 {
            acc /= factorial(t);
        }
    }
    acc
}

pub fn multinomial_rat(parts: &[usize]) -> Rat {
    nat_to_rat(&multinomial(parts))
}

/// `base^exp` for a rational base and machine-size exponent.
pub fn pow_rat(base: &Rat, exp: usize) -> Rat {
    num::traits::Pow::pow(base, exp)
}
