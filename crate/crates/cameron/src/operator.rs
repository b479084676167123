//! The sequence operator `x -> z` defined by
//! `1 + sum z_n t^n = (1 - sum x_n t^n)^(-1)`, computed by its defining
//! recurrences in restricted and associated modes, together with the
//! closed forms for geometric and arithmetic-progression seeds and a
//! truncated series-reciprocal oracle.

use num::{One, Zero};

use crate::error::Error;
use crate::rational::{binomial_rat, pow_rat, rat_int, Rat};
use crate::sequence::CoefficientSequence;

/// Restricted transform: `z_0 = 1`, `z_n = sum_{k=1}^{min(n,m)} x_k z_{n-k}`,
/// where `m` is the seed's highest index.
pub fn restricted_transform(
    seed: &CoefficientSequence,
    n_max: usize,
) -> Result<CoefficientSequence, Error> {
    let m = seed.max_index();
    if m == 0 {
        return Err(Error::EmptySeed);
    }
    let mut z = Vec::with_capacity(n_max + 1);
    z.push(Rat::one());
    for n in 1..=n_max {
        let mut acc = Rat::zero();
        for k in 1..=n.min(m) {
            let xk = seed.get(k)?;
            if !xk.is_zero() {
                acc += xk * &z[n - k];
            }
        }
        z.push(acc);
    }
    CoefficientSequence::new(z)
}

fn check_associated_seed(seed: &CoefficientSequence, m: usize, n_max: usize) -> Result<(), Error> {
    if m == 0 {
        return Err(Error::InvalidParameter("associated transform requires m >= 1".into()));
    }
    if m > n_max {
        return Ok(()); // trivial output; no seed entries consulted
    }
    if seed.max_index() < n_max {
        return Err(Error::OutOfRange { index: n_max, len: seed.len() });
    }
    for i in 1..m {
        if !seed.get(i)?.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "associated seed must vanish below m = {m}, found x_{i} = {}",
                seed.get(i)?
            )));
        }
    }
    Ok(())
}

/// Associated transform by the primary recurrence
/// `z_n = sum_{k=0}^{n-m} x_{m+k} z_{n-m-k}` with `z_0 = 1` and
/// `z_1 = ... = z_{m-1} = 0`. A start `m > n_max` yields the trivial
/// sequence `(1, 0, ..., 0)`.
pub fn associated_transform(
    seed: &CoefficientSequence,
    m: usize,
    n_max: usize,
) -> Result<CoefficientSequence, Error> {
    check_associated_seed(seed, m, n_max)?;
    let mut z = vec![Rat::zero(); n_max + 1];
    z[0] = Rat::one();
    for n in m..=n_max {
        let mut acc = Rat::zero();
        for k in 0..=n - m {
            let x = seed.get(m + k)?;
            if !x.is_zero() {
                acc += x * &z[n - m - k];
            }
        }
        z[n] = acc;
    }
    CoefficientSequence::new(z)
}

/// Associated transform by the alternative recurrence
/// `z_n = x_n + sum_{k=0}^{n-2m} x_{m+k} z_{n-m-k}`; must agree with
/// [`associated_transform`] everywhere.
pub fn associated_transform_alt(
    seed: &CoefficientSequence,
    m: usize,
    n_max: usize,
) -> Result<CoefficientSequence, Error> {
    check_associated_seed(seed, m, n_max)?;
    let mut z = vec![Rat::zero(); n_max + 1];
    z[0] = Rat::one();
    for n in m..=n_max {
        let mut acc = seed.get(n)?.clone();
        if n >= 2 * m {
            for k in 0..=n - 2 * m {
                let x = seed.get(m + k)?;
                if !x.is_zero() {
                    acc += x * &z[n - m - k];
                }
            }
        }
        z[n] = acc;
    }
    CoefficientSequence::new(z)
}

/// Truncated reciprocal of a formal power series with constant term 1:
/// returns `r` with `sum_{k=0}^{n} d_k r_{n-k} = [n = 0]` up to `n_max`.
/// Coefficients of `d` past its stored end are taken as zero.
///
/// This is the independent oracle for both operator modes: the restricted
/// transform is the reciprocal of `1 - x_1 t - ... - x_m t^m`, the
/// associated transform that of `1 - x_m t^m - ... - x_n t^n`.
pub fn series_reciprocal(
    d: &CoefficientSequence,
    n_max: usize,
) -> Result<CoefficientSequence, Error> {
    let mut r = Vec::with_capacity(n_max + 1);
    r.push(Rat::one());
    for n in 1..=n_max {
        let mut acc = Rat::zero();
        for k in 1..=n {
            let dk = d.get_or_zero(k);
            if !dk.is_zero() {
                acc += dk * &r[n - k];
            }
        }
        r.push(-acc);
    }
    CoefficientSequence::new(r)
}

/// Negates entries 1.. of a seed, i.e. maps the seed of
/// `(1 - sum x_n t^n)^(-1)` to the coefficient list of the denominator
/// `1 - x_1 t - ...` consumed by [`series_reciprocal`].
pub fn negate_tail(seq: &CoefficientSequence) -> CoefficientSequence {
    let mut values: Vec<Rat> = seq.values().to_vec();
    for v in values.iter_mut().skip(1) {
        *v = -v.clone();
    }
    CoefficientSequence::new(values).expect("head unchanged")
}

/// Parameters of the geometric associated seed `x_n = a^(n-m) b` (`n >= m`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeometricParams {
    pub a: i64,
    pub b: i64,
    pub m: usize,
}

impl GeometricParams {
    pub fn new(a: i64, b: i64, m: usize) -> Result<Self, Error> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter("geometric seed requires a != 0 and b != 0".into()));
        }
        if m == 0 {
            return Err(Error::InvalidParameter("geometric seed requires m >= 1".into()));
        }
        Ok(Self { a, b, m })
    }

    pub fn seed(&self, n_max: usize) -> CoefficientSequence {
        let mut values = vec![Rat::zero(); n_max + 1];
        values[0] = Rat::one();
        for (n, slot) in values.iter_mut().enumerate().skip(self.m) {
            *slot = pow_rat(&rat_int(self.a), n - self.m) * rat_int(self.b);
        }
        CoefficientSequence::new(values).expect("head is 1")
    }
}

/// Parameters of the arithmetic-progression associated seed
/// `x_n = (n-m)a + b` (`n >= m`); `m = 1` is the classical case
/// `x_n = (n-1)a + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArithmeticParams {
    pub a: i64,
    pub b: i64,
    pub m: usize,
}

impl ArithmeticParams {
    pub fn new(a: i64, b: i64, m: usize) -> Result<Self, Error> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter("arithmetic seed requires a != 0 and b != 0".into()));
        }
        if m == 0 {
            return Err(Error::InvalidParameter("arithmetic seed requires m >= 1".into()));
        }
        Ok(Self { a, b, m })
    }

    pub fn seed(&self, n_max: usize) -> CoefficientSequence {
        let mut values = vec![Rat::zero(); n_max + 1];
        values[0] = Rat::one();
        for (n, slot) in values.iter_mut().enumerate().skip(self.m) {
            *slot = rat_int((n - self.m) as i64 * self.a + self.b);
        }
        CoefficientSequence::new(values).expect("head is 1")
    }

    /// Index of the first `z_n` the short recurrence produces.
    pub fn recurrence_start(&self) -> usize {
        if self.m >= 3 {
            self.m + 1
        } else {
            3
        }
    }

    /// Initial values `z_0..z_{start-1}` preceding the recurrence.
    pub fn initial_values(&self) -> Vec<Rat> {
        if self.m >= 2 {
            // z_0 = 1, z_1 = ... = z_{m-1} = 0, z_m = b
            let mut init = vec![Rat::zero(); self.m + 1];
            init[0] = Rat::one();
            init[self.m] = rat_int(self.b);
            init
        } else {
            // z_0 = 1, z_1 = b, z_2 = a + b(b+1)
            vec![
                Rat::one(),
                rat_int(self.b),
                rat_int(self.a + self.b * (self.b + 1)),
            ]
        }
    }
}

/// One step of the short recurrence satisfied by the transform of an
/// arithmetic-progression seed:
///
/// * `m >= 3`: `z_n = 2 z_{n-1} - z_{n-2} + b z_{n-m} + (a-b) z_{n-m-1}`
/// * `m = 2`:  `z_n = 2 z_{n-1} + (b-1) z_{n-2} + (a-b) z_{n-3}`
/// * `m = 1`:  `z_n = (b+2) z_{n-1} + (a-b-1) z_{n-2}`
///
/// `history` must hold `z_0..z_{n-1}` starting from the stated initial values.
pub fn arithmetic_recurrence_step(
    p: &ArithmeticParams,
    history: &CoefficientSequence,
    n: usize,
) -> Result<Rat, Error> {
    let start = p.recurrence_start();
    if n < start {
        return Err(Error::BelowRecurrenceStart { n, start });
    }
    if history.max_index() < n - 1 {
        return Err(Error::OutOfRange { index: n - 1, len: history.len() });
    }
    let z = |i: usize| history.get(i).cloned();
    let (a, b) = (rat_int(p.a), rat_int(p.b));
    let value = if p.m >= 3 {
        rat_int(2) * z(n - 1)? - z(n - 2)? + &b * z(n - p.m)? + (&a - &b) * z(n - p.m - 1)?
    } else if p.m == 2 {
        rat_int(2) * z(n - 1)? + (&b - rat_int(1)) * z(n - 2)? + (&a - &b) * z(n - 3)?
    } else {
        (&b + rat_int(2)) * z(n - 1)? + (&a - &b - rat_int(1)) * z(n - 2)?
    };
    Ok(value)
}

/// Runs the arithmetic-progression recurrence from its initial values
/// out to `n_max`.
pub fn arithmetic_sequence(
    p: &ArithmeticParams,
    n_max: usize,
) -> Result<CoefficientSequence, Error> {
    let mut values = p.initial_values();
    values.truncate(n_max + 1);
    let mut seq = CoefficientSequence::new(values)?;
    for n in seq.len()..=n_max {
        let next = arithmetic_recurrence_step(p, &seq, n)?;
        let mut v = seq.values().to_vec();
        v.push(next);
        seq = CoefficientSequence::new(v)?;
    }
    Ok(seq)
}

/// Closed form for the geometric associated seed:
/// `z_n = sum_{k=1}^{floor(n/m)} C(n-km+k-1, k-1) a^(n-km) b^k`.
pub fn geometric_closed_form(p: &GeometricParams, n: usize) -> Result<Rat, Error> {
    if n < p.m {
        return Err(Error::BelowSupport { n, m: p.m });
    }
    let (a, b) = (rat_int(p.a), rat_int(p.b));
    let mut acc = Rat::zero();
    for k in 1..=n / p.m {
        let coeff = binomial_rat(n - k * p.m + k - 1, k as i64 - 1);
        acc += coeff * pow_rat(&a, n - k * p.m) * pow_rat(&b, k);
    }
    Ok(acc)
}

/// Closed form for the all-ones associated seed:
/// `z_n = sum_{k=1}^{floor(n/m)} C(n-km+k-1, k-1)`; `2^(n-1)` at `m = 1`
/// and the Fibonacci number `F_{n-1}` at `m = 2`.
pub fn ones_closed_form(m: usize, n: usize) -> Result<Rat, Error> {
    if m == 0 {
        return Err(Error::InvalidParameter("ones closed form requires m >= 1".into()));
    }
    if n < m {
        return Err(Error::BelowSupport { n, m });
    }
    let mut acc = Rat::zero();
    for k in 1..=n / m {
        acc += binomial_rat(n - k * m + k - 1, k as i64 - 1);
    }
    Ok(acc)
}
