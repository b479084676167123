//! Indexed coefficient sequences and the operator mode switch.

use std::fmt;

use num::{One, Zero};

use crate::error::Error;
use crate::rational::{rat_int, Rat};

/// A finite sequence `c_0..c_n` of exact rationals with the convention
/// `c_0 = 1`. Holds both seed (`x`) and transformed (`z`) sequences.
///
/// Out-of-range reads are errors, never implicit zeros; operations that
/// zero-extend say so at their definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSequence {
    values: Vec<Rat>,
}

impl CoefficientSequence {
    /// Wraps `values[0..=n_max]`; rejects an empty list or `values[0] != 1`.
    pub fn new(values: Vec<Rat>) -> Result<Self, Error> {
        match values.first() {
            None => Err(Error::EmptySeed),
            Some(v) if !v.is_one() => Err(Error::LeadingCoefficientNotOne(v.to_string())),
            _ => Ok(Self { values }),
        }
    }

    /// Builds the sequence `1, x_1, ..., x_k` from the entries at indices 1 and up.
    pub fn from_tail(tail: Vec<Rat>) -> Self {
        let mut values = Vec::with_capacity(tail.len() + 1);
        values.push(Rat::one());
        values.extend(tail);
        Self { values }
    }

    /// Builds `1, 0, ..., 0, x_m, ..., x_n` for a seed supported on `m..=n`.
    pub fn from_support(m: usize, support: Vec<Rat>) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidParameter("support start m must be >= 1".into()));
        }
        let mut values = vec![Rat::zero(); m];
        values[0] = Rat::one();
        values.extend(support);
        Ok(Self { values })
    }

    pub fn from_i64(tail: &[i64]) -> Self {
        Self::from_tail(tail.iter().map(|&v| rat_int(v)).collect())
    }

    /// The trivial sequence `1, 0, ..., 0`.
    pub fn trivial(n_max: usize) -> Self {
        let mut values = vec![Rat::zero(); n_max + 1];
        values[0] = Rat::one();
        Self { values }
    }

    /// Highest stored index.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, index: usize) -> Result<&Rat, Error> {
        self.values.get(index).ok_or(Error::OutOfRange {
            index,
            len: self.values.len(),
        })
    }

    /// The value at `index`, or exact zero past the stored end. Only for
    /// operations whose contract documents zero-extension.
    pub fn get_or_zero(&self, index: usize) -> Rat {
        self.values.get(index).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always holds index 0
    }

    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }
}

impl fmt::Display for CoefficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", rendered.join(", "))
    }
}

/// Selects between the restricted operator (seed truncated to `1..=m`)
/// and the associated operator (seed supported on `m..`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorMode {
    Restricted { m: usize },
    Associated { m: usize },
}

impl OperatorMode {
    pub fn restricted(m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidParameter("restricted mode requires m >= 1".into()));
        }
        Ok(Self::Restricted { m })
    }

    pub fn associated(m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidParameter("associated mode requires m >= 1".into()));
        }
        Ok(Self::Associated { m })
    }

    pub fn m(&self) -> usize {
        match *self {
            Self::Restricted { m } | Self::Associated { m } => m,
        }
    }

    pub fn is_restricted(&self) -> bool {
        matches!(self, Self::Restricted { .. })
    }

    /// First index of the seed's support: 1 for restricted, `m` for associated.
    pub fn support_start(&self) -> usize {
        match *self {
            Self::Restricted { .. } => 1,
            Self::Associated { m } => m,
        }
    }

    /// Whether a seed entry at `index >= 1` may be nonzero in this mode.
    pub fn on_support(&self, index: usize) -> bool {
        match *self {
            Self::Restricted { m } => index >= 1 && index <= m,
            Self::Associated { m } => index >= m,
        }
    }
}

impl fmt::Display for OperatorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Restricted { m } => write!(f, "restricted(m={m})"),
            Self::Associated { m } => write!(f, "associated(m={m})"),
        }
    }
}

/// A seed supplied as an explicit list or as a generator rule evaluated
/// lazily up to `n_max`. Generator entries are indexed relative to the
/// mode's support start `s`: geometric `x_n = a^(n-s) b`, arithmetic
/// `x_n = (n-s)a + b`, ones `x_n = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeedRule {
    Explicit(Vec<Rat>),
    Geometric { a: i64, b: i64 },
    Arithmetic { a: i64, b: i64 },
    Ones,
}

impl SeedRule {
    /// Materializes the seed for `mode` as a sequence over `0..=n_max`
    /// (entries off the mode's support are zero).
    pub fn materialize(&self, mode: OperatorMode, n_max: usize) -> Result<CoefficientSequence, Error> {
        if let SeedRule::Geometric { a, b } | SeedRule::Arithmetic { a, b } = self {
            if *a == 0 || *b == 0 {
                return Err(Error::InvalidParameter(
                    "generator rules require nonzero a and b".into(),
                ));
            }
        }
        if let SeedRule::Explicit(tail) = self {
            return match mode {
                OperatorMode::Restricted { .. } => Ok(CoefficientSequence::from_tail(tail.clone())),
                OperatorMode::Associated { m } => {
                    CoefficientSequence::from_support(m, tail.clone())
                }
            };
        }
        let s = mode.support_start();
        let mut values = vec![Rat::zero(); n_max + 1];
        values[0] = Rat::one();
        for (n, slot) in values.iter_mut().enumerate().skip(1) {
            if !mode.on_support(n) {
                continue;
            }
            *slot = match self {
                SeedRule::Geometric { a, b } => {
                    num::traits::Pow::pow(&rat_int(*a), n - s) * rat_int(*b)
                }
                SeedRule::Arithmetic { a, b } => rat_int((n as i64 - s as i64) * a + b),
                SeedRule::Ones => Rat::one(),
                SeedRule::Explicit(_) => unreachable!(),
            };
        }
        CoefficientSequence::new(values)
    }
}
