//! Exact-arithmetic engines for the sequence operator
//! `1 + sum z_n t^n = (1 - sum x_n t^n)^(-1)` in its restricted
//! (seed truncated to `1..=m`) and associated (seed supported on `m..`)
//! forms, together with the modified hypergeometric Bernoulli, Cauchy,
//! and Euler number families it induces.
//!
//! Every transformed value is computable by five independent routes —
//! defining recurrence, banded Hessenberg determinant, composition sum,
//! Trudi multinomial sum, and truncated series reciprocal — and the
//! inversion relations recover the seed from the transform. The
//! [`verify`] module cross-checks all of it over randomized corpora.

pub mod combinatorics;
pub mod determinant;
pub mod error;
pub mod hyper;
pub mod io;
pub mod operator;
pub mod rational;
pub mod sequence;
pub mod verify;

pub use error::Error;
pub use rational::{Int, Nat, Rat};
pub use sequence::{CoefficientSequence, OperatorMode, SeedRule};
