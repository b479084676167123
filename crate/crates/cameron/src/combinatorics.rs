//! Explicit enumeration routes: composition sums, Trudi multinomial sums
//! over restricted exponent vectors, the alternating inversion sums, and
//! the binomial-coefficient expansion over zero-allowing compositions.
//!
//! Enumeration streams; nothing materializes the full composition list.
//! Sums fold a running product over a depth-first walk, so memory stays
//! O(n) while work stays O(#compositions).

use num::{One, Zero};

use crate::error::Error;
use crate::rational::{binomial_rat, multinomial_rat, pow_rat, Rat};
use crate::sequence::CoefficientSequence;

/// Part-count constraint for composition enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartCount {
    Any,
    Exactly(usize),
}

/// Streaming lexicographic enumeration of the ordered tuples
/// `(i_1, ..., i_k)` with `i_1 + ... + i_k = n` and `lo <= i_j <= hi`.
///
/// A zero lower bound is meaningful only with a fixed part count
/// ([`PartCount::Exactly`]); combined with [`PartCount::Any`] the stream
/// is empty. An infeasible bound combination also yields an empty stream.
pub fn compositions(n: usize, count: PartCount, lo: usize, hi: usize) -> Compositions {
    let degenerate = lo > hi || (lo == 0 && matches!(count, PartCount::Any));
    Compositions {
        lo,
        hi,
        exact: match count {
            PartCount::Any => None,
            PartCount::Exactly(k) => Some(k),
        },
        n,
        parts: Vec::new(),
        rem: 0,
        state: if degenerate { IterState::Done } else { IterState::Fresh },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Mid,
    Done,
}

#[derive(Debug, Clone)]
pub struct Compositions {
    n: usize,
    lo: usize,
    hi: usize,
    exact: Option<usize>,
    parts: Vec<usize>,
    rem: usize,
    state: IterState,
}

impl Compositions {
    /// Can `rem` still be written with the parts remaining after `used`?
    fn feasible_suffix(&self, rem: usize, used: usize) -> bool {
        match self.exact {
            Some(k) => {
                if used > k {
                    return false;
                }
                let q = k - used;
                q * self.lo <= rem && rem <= q * self.hi
            }
            None => {
                if rem == 0 {
                    return true;
                }
                let jmin = rem.div_ceil(self.hi);
                jmin * self.lo <= rem
            }
        }
    }

    fn is_complete(&self) -> bool {
        self.rem == 0
            && match self.exact {
                Some(k) => self.parts.len() == k,
                None => !self.parts.is_empty(),
            }
    }

    /// Greedily extends the current prefix to its lexicographically
    /// smallest completion. Succeeds whenever the prefix is feasible.
    fn descend(&mut self) -> bool {
        loop {
            if self.is_complete() {
                return true;
            }
            let used_after = self.parts.len() + 1;
            let mut placed = false;
            for v in self.lo..=self.hi.min(self.rem) {
                if self.feasible_suffix(self.rem - v, used_after) {
                    self.parts.push(v);
                    self.rem -= v;
                    placed = true;
                    break;
                }
            }
            if !placed {
                return false;
            }
        }
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        match self.state {
            IterState::Done => None,
            IterState::Fresh => {
                self.state = IterState::Mid;
                self.parts.clear();
                self.rem = self.n;
                if self.descend() {
                    Some(self.parts.clone())
                } else {
                    self.state = IterState::Done;
                    None
                }
            }
            IterState::Mid => {
                while let Some(top) = self.parts.pop() {
                    self.rem += top;
                    let used_after = self.parts.len() + 1;
                    let from = top + 1;
                    for v in from..=self.hi.min(self.rem) {
                        if self.feasible_suffix(self.rem - v, used_after) {
                            self.parts.push(v);
                            self.rem -= v;
                            let ok = self.descend();
                            debug_assert!(ok, "feasible prefix must complete");
                            return Some(self.parts.clone());
                        }
                    }
                }
                self.state = IterState::Done;
                None
            }
        }
    }
}

/// Enumerates the exponent vectors `(t_lo, ..., t_hi)` of nonnegative
/// integers with `lo*t_lo + ... + hi*t_hi = n` (the Trudi constraint).
/// The vector is indexed `j - lo`. Deterministic order: `t_hi` varies
/// slowest, ascending.
pub fn exponent_vectors(n: usize, lo: usize, hi: usize) -> ExponentVectors {
    let mut out = Vec::new();
    if lo >= 1 && lo <= hi {
        let mut t = vec![0usize; hi - lo + 1];
        collect_vectors(hi, lo, n, &mut t, &mut out);
    } else if lo > hi && n == 0 {
        out.push(Vec::new());
    }
    ExponentVectors { items: out.into_iter() }
}

fn collect_vectors(j: usize, lo: usize, rem: usize, t: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if j == lo {
        if rem % lo == 0 {
            t[0] = rem / lo;
            out.push(t.clone());
            t[0] = 0;
        }
        return;
    }
    for tj in 0..=rem / j {
        t[j - lo] = tj;
        collect_vectors(j - 1, lo, rem - j * tj, t, out);
    }
    t[j - lo] = 0;
}

pub struct ExponentVectors {
    items: std::vec::IntoIter<Vec<usize>>,
}

impl Iterator for ExponentVectors {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.items.next()
    }
}

/// `S_k` for `k = 0..=n`: the sum over compositions of `n` into exactly
/// `k` parts from `[lo, hi]` of the products `x_{i_1} ... x_{i_k}`,
/// with `values[i]` supplying `x_i`. Requires `lo >= 1`.
///
/// Every alternating/weighted composition sum in this module is a linear
/// combination of these, so the depth-first walk runs once per call.
/// Integer inputs small enough to bound the products take an i64/i128
/// fast path; anything else folds exact rationals.
pub fn composition_sums_by_count(values: &[Rat], n: usize, lo: usize, hi: usize) -> Vec<Rat> {
    assert!(lo >= 1, "composition sums need a positive lower part bound");
    let hi = hi.min(n).min(values.len().saturating_sub(1));
    let mut acc = vec![Rat::zero(); n + 1];
    if n == 0 {
        acc[0] = Rat::one();
        return acc;
    }
    if lo > hi {
        return acc;
    }
    if let Some(ints) = small_integer_values(values, lo, hi, n) {
        let mut buckets = vec![0i128; n + 1];
        fold_i64(&ints, n, lo, hi, 0, 1, &mut buckets);
        for (slot, b) in acc.iter_mut().zip(buckets) {
            *slot = Rat::from_integer(b.into());
        }
    } else {
        fold_rat(values, n, lo, hi, 0, &Rat::one(), &mut acc);
    }
    acc
}

/// i64 view of the values, accepted only when the worst-case running
/// product and per-bucket sums provably fit the machine integers.
///
/// The product bound is the exact maximum of `sum bits(|x_{i_j}|)` over
/// compositions of every remainder up to `n`, found by dynamic
/// programming — a crude `vmax^(n/lo)` bound would reject transform
/// values, whose products grow like `rho^n` rather than `vmax^k`.
fn small_integer_values(values: &[Rat], lo: usize, hi: usize, n: usize) -> Option<Vec<i64>> {
    let mut ints = vec![0i64; hi + 1];
    let mut bits = vec![0.0f64; hi + 1];
    for i in lo..=hi {
        if !values[i].is_integer() {
            return None;
        }
        let v: i64 = values[i].numer().try_into().ok()?;
        ints[i] = v;
        bits[i] = (v.unsigned_abs().max(1) as f64).log2();
    }
    let mut max_bits = vec![f64::NEG_INFINITY; n + 1];
    max_bits[0] = 0.0;
    let mut worst: f64 = 0.0;
    for r in 1..=n {
        for v in lo..=hi.min(r) {
            if ints[v] != 0 && max_bits[r - v] > f64::NEG_INFINITY {
                max_bits[r] = max_bits[r].max(bits[v] + max_bits[r - v]);
            }
        }
        if max_bits[r] > f64::NEG_INFINITY {
            worst = worst.max(max_bits[r]);
        }
    }
    let count_bits = n as f64; // #compositions < 2^(n-1)
    (worst <= 60.0 && worst + count_bits <= 120.0).then_some(ints)
}

fn fold_i64(values: &[i64], rem: usize, lo: usize, hi: usize, k: usize, prod: i64, acc: &mut [i128]) {
    if rem == 0 {
        acc[k] += prod as i128;
        return;
    }
    for v in lo..=hi.min(rem) {
        let xv = values[v];
        if xv != 0 {
            fold_i64(values, rem - v, lo, hi, k + 1, prod * xv, acc);
        }
    }
}

fn fold_rat(values: &[Rat], rem: usize, lo: usize, hi: usize, k: usize, prod: &Rat, acc: &mut [Rat]) {
    if rem == 0 {
        acc[k] += prod;
        return;
    }
    for v in lo..=hi.min(rem) {
        let xv = &values[v];
        if !xv.is_zero() {
            fold_rat(values, rem - v, lo, hi, k + 1, &(prod * xv), acc);
        }
    }
}

/// Sum over exponent vectors `(t_lo..t_hi)` with `sum j*t_j = n` of
/// `weight_by_total[t_lo + ... + t_hi] * multinomial(t) * prod values[j]^(t_j)`.
pub fn weighted_exponent_sum(
    values: &[Rat],
    n: usize,
    lo: usize,
    hi: usize,
    weight_by_total: &[Rat],
) -> Rat {
    let hi = hi.min(n).min(values.len().saturating_sub(1));
    let mut total = Rat::zero();
    if lo > hi {
        return total;
    }
    'vectors: for t in exponent_vectors(n, lo, hi) {
        let mut prod = Rat::one();
        let mut count = 0usize;
        for (offset, &tj) in t.iter().enumerate() {
            if tj == 0 {
                continue;
            }
            let j = lo + offset;
            if values[j].is_zero() {
                continue 'vectors;
            }
            prod *= pow_rat(&values[j], tj);
            count += tj;
        }
        total += &weight_by_total[count] * multinomial_rat(&t) * prod;
    }
    total
}

fn ones(n: usize) -> Vec<Rat> {
    vec![Rat::one(); n + 1]
}

fn alternating(n: usize, even_positive: bool) -> Vec<Rat> {
    (0..=n)
        .map(|k| {
            if (k % 2 == 0) == even_positive {
                Rat::one()
            } else {
                -Rat::one()
            }
        })
        .collect()
}

fn require_entries(x: &CoefficientSequence, hi: usize) -> Result<(), Error> {
    if x.max_index() < hi {
        return Err(Error::OutOfRange { index: hi, len: x.len() });
    }
    Ok(())
}

/// `z_n` by the double sum over part counts and compositions with parts
/// in `[1, m]`: `sum_k sum_{i_1+...+i_k=n} x_{i_1} ... x_{i_k}`.
pub fn composition_sum_restricted(
    x: &CoefficientSequence,
    m: usize,
    n: usize,
) -> Result<Rat, Error> {
    if n == 0 {
        return Ok(Rat::one());
    }
    let hi = m.min(n);
    require_entries(x, hi)?;
    let sums = composition_sums_by_count(x.values(), n, 1, hi);
    Ok(sums.into_iter().skip(1).sum())
}

/// `z_n` by the double sum over compositions with all parts `>= m`;
/// zero when `n < m` (no compositions).
pub fn composition_sum_associated(
    x: &CoefficientSequence,
    m: usize,
    n: usize,
) -> Result<Rat, Error> {
    if n == 0 {
        return Ok(Rat::one());
    }
    if m == 0 || n < m {
        return Ok(Rat::zero());
    }
    require_entries(x, n)?;
    let sums = composition_sums_by_count(x.values(), n, m, n);
    Ok(sums.into_iter().skip(1).sum())
}

/// `z_n` by Trudi's formula: the multinomial-weighted sum over exponent
/// vectors with `t_1 + 2 t_2 + ... + m t_m = n`.
pub fn trudi_restricted(x: &CoefficientSequence, m: usize, n: usize) -> Result<Rat, Error> {
    if n == 0 {
        return Ok(Rat::one());
    }
    let hi = m.min(n);
    require_entries(x, hi)?;
    Ok(weighted_exponent_sum(x.values(), n, 1, hi, &ones(n)))
}

/// The associated Trudi sum, over vectors `(t_m, ..., t_n)` with
/// `m t_m + ... + n t_n = n`; zero when `n < m`.
pub fn trudi_associated(x: &CoefficientSequence, m: usize, n: usize) -> Result<Rat, Error> {
    if n == 0 {
        return Ok(Rat::one());
    }
    if m == 0 || n < m {
        return Ok(Rat::zero());
    }
    require_entries(x, n)?;
    Ok(weighted_exponent_sum(x.values(), n, m, n, &ones(n)))
}

/// The alternating composition sum
/// `sum_k (-1)^(k-1) sum_{i_1+...+i_k=n} z_{i_1} ... z_{i_k}`,
/// which recovers `x_n` on the seed's support and 0 off it.
pub fn inversion_sum(z: &CoefficientSequence, n: usize) -> Result<Rat, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("inversion sum requires n >= 1".into()));
    }
    require_entries(z, n)?;
    let sums = composition_sums_by_count(z.values(), n, 1, n);
    let signs = alternating(n, false); // (-1)^(k-1): positive at odd k
    Ok(sums
        .iter()
        .zip(signs.iter())
        .skip(1)
        .map(|(s, sig)| s * sig)
        .sum())
}

/// The signed multinomial form of the same inversion relation:
/// `sum_t multinomial(t) (-1)^(t_1+...+t_n-1) z_1^(t_1) ... z_n^(t_n)`.
/// Must agree with [`inversion_sum`] term-for-total.
pub fn inversion_sum_multinomial(z: &CoefficientSequence, n: usize) -> Result<Rat, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("inversion sum requires n >= 1".into()));
    }
    require_entries(z, n)?;
    let signs = alternating(n, false);
    Ok(weighted_exponent_sum(z.values(), n, 1, n, &signs))
}

/// The binomial-coefficient expansion of the reciprocal
/// `(sum_{n>=0} x_n t^n)^(-1)` with `x_0 = 1`:
///
/// `z_n = sum_{k=1}^n (-1)^k C(n+1, k+1) sum x_{i_1} ... x_{i_k}`
///
/// where the inner compositions allow zero parts and nonzero parts range
/// over `[max(min_part, 1), ..]`. Zero parts contribute the factor
/// `x_0 = 1`; placing `k - j` of them among `k` slots around a
/// composition with `j` nonzero parts multiplies its products by
/// `C(k, j)`, which is how the inner sums are aggregated here — direct
/// enumeration of zero-allowing tuples grows like `C(n+k-1, k-1)` and is
/// infeasible beyond toy sizes.
pub fn binomial_expansion_sum(
    x: &CoefficientSequence,
    n: usize,
    min_part: usize,
) -> Result<Rat, Error> {
    if n == 0 {
        return Ok(Rat::one());
    }
    let lo = min_part.max(1);
    let hi = x.max_index().min(n);
    let nonzero = composition_sums_by_count(x.values(), n, lo, hi.max(lo));
    let mut total = Rat::zero();
    for k in 1..=n {
        let mut inner = Rat::zero();
        for (j, u_j) in nonzero.iter().enumerate().take(k + 1).skip(1) {
            if !u_j.is_zero() {
                inner += binomial_rat(k, j as i64) * u_j;
            }
        }
        if inner.is_zero() {
            continue;
        }
        let term = binomial_rat(n + 1, k as i64 + 1) * inner;
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{restricted_transform, series_reciprocal};
    use crate::rational::{factorial_rat, rat, rat_int, binomial};
    use crate::sequence::CoefficientSequence;

    #[test]
    fn compositions_of_four_with_parts_up_to_three() {
        let all: Vec<_> = compositions(4, PartCount::Any, 1, 3).collect();
        assert_eq!(all.len(), 7);
        // lexicographic order, each exactly once
        let expect: Vec<Vec<usize>> = vec![
            vec![1, 1, 1, 1],
            vec![1, 1, 2],
            vec![1, 2, 1],
            vec![1, 3],
            vec![2, 1, 1],
            vec![2, 2],
            vec![3, 1],
        ];
        assert_eq!(all, expect);
    }

    #[test]
    fn composition_singleton_and_empty_streams() {
        let only: Vec<_> = compositions(4, PartCount::Any, 4, 4).collect();
        assert_eq!(only, vec![vec![4]]);
        assert_eq!(compositions(3, PartCount::Any, 5, 9).count(), 0);
        assert_eq!(compositions(3, PartCount::Any, 2, 1).count(), 0);
        assert_eq!(compositions(3, PartCount::Any, 0, 3).count(), 0); // zero lower bound needs fixed k
        assert_eq!(compositions(5, PartCount::Exactly(0), 1, 5).count(), 0);
    }

    #[test]
    fn composition_count_with_fixed_parts_at_least_m() {
        // #\{i_1+...+i_k = n, i_j >= m\} = C(n - km + k - 1, k - 1)
        for n in 1..=14usize {
            for m in 1..=4usize {
                for k in 1..=n / m.max(1) {
                    let got = compositions(n, PartCount::Exactly(k), m, n).count();
                    let expect = binomial(n - k * m + k - 1, k as i64 - 1);
                    assert_eq!(
                        crate::rational::Nat::from(got),
                        expect,
                        "n={n} m={m} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn compositions_with_zero_parts() {
        let all: Vec<_> = compositions(2, PartCount::Exactly(2), 0, 2).collect();
        assert_eq!(all, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        // C(n+k-1, k-1) tuples of k nonnegative parts
        assert_eq!(compositions(4, PartCount::Exactly(3), 0, 4).count(), 15);
    }

    #[test]
    fn exponent_vectors_satisfy_constraint() {
        for n in 1..=12usize {
            for lo in 1..=3usize {
                for hi in lo..=n {
                    for t in exponent_vectors(n, lo, hi) {
                        let weighted: usize =
                            t.iter().enumerate().map(|(o, tj)| (lo + o) * tj).sum();
                        assert_eq!(weighted, n);
                    }
                }
            }
        }
        // count = partitions of 5 into parts 1..=5
        assert_eq!(exponent_vectors(5, 1, 5).count(), 7);
    }

    #[test]
    fn multinomial_counts_compositions_with_same_part_multiset() {
        // collapsing orderings: multinomial(t) = #compositions with that multiset
        for n in 1..=12usize {
            let m = 3usize;
            let mut by_multiset = std::collections::HashMap::<Vec<usize>, usize>::new();
            for c in compositions(n, PartCount::Any, 1, m) {
                let mut key = c.clone();
                key.sort_unstable();
                *by_multiset.entry(key).or_default() += 1;
            }
            for t in exponent_vectors(n, 1, m) {
                let mut key = Vec::new();
                for (o, &tj) in t.iter().enumerate() {
                    key.extend(std::iter::repeat_n(1 + o, tj));
                }
                let mult = crate::rational::multinomial(&t);
                let count = by_multiset.get(&key).copied().unwrap_or(0);
                assert_eq!(mult, crate::rational::Nat::from(count), "n={n} t={t:?}");
            }
        }
    }

    #[test]
    fn restricted_composition_sum_examples() {
        let fib = CoefficientSequence::from_i64(&[1, 1]);
        assert_eq!(composition_sum_restricted(&fib, 2, 6).unwrap(), rat_int(13));
        let tri = CoefficientSequence::from_i64(&[1, 1, 1]);
        assert_eq!(composition_sum_restricted(&tri, 3, 4).unwrap(), rat_int(7));
        let q = CoefficientSequence::from_tail(vec![rat(3, 5)]);
        assert_eq!(
            composition_sum_restricted(&q, 1, 4).unwrap(),
            pow_rat(&rat(3, 5), 4)
        );
    }

    #[test]
    fn associated_composition_sum_examples() {
        let ones_seed = CoefficientSequence::from_i64(&[0, 1, 1, 1, 1, 1, 1]);
        assert_eq!(composition_sum_associated(&ones_seed, 2, 7).unwrap(), rat_int(8));
        assert!(composition_sum_associated(&ones_seed, 4, 3).unwrap().is_zero());
        let geo = crate::operator::GeometricParams::new(2, 3, 2).unwrap().seed(4);
        assert_eq!(composition_sum_associated(&geo, 2, 4).unwrap(), rat_int(21));
    }

    #[test]
    fn trudi_fibonacci_terms_as_printed() {
        // F_6 = 3!/(1!2!) + 4!/(3!1!) + 5!/(5!0!) = 3 + 4 + 1 = 8
        let fib = CoefficientSequence::from_i64(&[1, 1]);
        let mut terms: Vec<Rat> = exponent_vectors(5, 1, 2)
            .map(|t| multinomial_rat(&t))
            .collect();
        terms.sort();
        assert_eq!(terms, vec![rat_int(1), rat_int(3), rat_int(4)]);
        assert_eq!(trudi_restricted(&fib, 2, 5).unwrap(), rat_int(8));
        // F_7 = 1 + 6 + 5 + 1 = 13
        let mut terms7: Vec<Rat> = exponent_vectors(6, 1, 2)
            .map(|t| multinomial_rat(&t))
            .collect();
        terms7.sort();
        assert_eq!(terms7, vec![rat_int(1), rat_int(1), rat_int(5), rat_int(6)]);
        assert_eq!(trudi_restricted(&fib, 2, 6).unwrap(), rat_int(13));
    }

    #[test]
    fn trudi_single_part_is_power() {
        let q = CoefficientSequence::from_tail(vec![rat(-2, 7)]);
        assert_eq!(trudi_restricted(&q, 1, 5).unwrap(), pow_rat(&rat(-2, 7), 5));
    }

    #[test]
    fn trudi_associated_examples() {
        let ones_seed = CoefficientSequence::from_i64(&[0, 1, 1, 1, 1, 1]);
        assert_eq!(trudi_associated(&ones_seed, 2, 6).unwrap(), rat_int(5));
        // m = n: single vector t_n = 1
        let x = CoefficientSequence::from_tail(vec![rat_int(0), rat_int(0), rat(9, 4)]);
        assert_eq!(trudi_associated(&x, 3, 3).unwrap(), rat(9, 4));
        assert!(trudi_associated(&x, 3, 2).unwrap().is_zero());
    }

    #[test]
    fn inversion_sum_on_tribonacci() {
        let seed = CoefficientSequence::from_i64(&[1, 1, 1]);
        let z = restricted_transform(&seed, 5).unwrap();
        // n=3: T_4 - 2 T_2 T_3 + T_2^3 = 4 - 4 + 1 = 1
        assert_eq!(inversion_sum(&z, 3).unwrap(), rat_int(1));
        // n=4: 7 - 12 + 6 - 1 = 0
        assert!(inversion_sum(&z, 4).unwrap().is_zero());
        assert_eq!(inversion_sum(&z, 1).unwrap(), rat_int(1));
        assert_eq!(inversion_sum(&z, 2).unwrap(), rat_int(1));
        assert!(inversion_sum(&z, 5).unwrap().is_zero());
    }

    #[test]
    fn inversion_sum_on_geometric_z() {
        // z = (1, q, q^2, ...) comes from the m = 1 seed (q)
        let q = rat(5, 3);
        let z = CoefficientSequence::from_tail((1..=6).map(|n| pow_rat(&q, n)).collect());
        assert_eq!(inversion_sum(&z, 1).unwrap(), q);
        for n in 2..=6 {
            assert!(inversion_sum(&z, n).unwrap().is_zero(), "n = {n}");
        }
    }

    #[test]
    fn inversion_forms_agree() {
        let seed = CoefficientSequence::from_tail(vec![rat(1, 2), rat_int(-2), rat(3, 4)]);
        let z = restricted_transform(&seed, 10).unwrap();
        for n in 1..=10 {
            assert_eq!(
                inversion_sum(&z, n).unwrap(),
                inversion_sum_multinomial(&z, n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn binomial_expansion_geometric_reciprocal() {
        // reciprocal of 1 - t is all ones
        let x = CoefficientSequence::from_i64(&[-1]);
        for n in 1..=8 {
            assert_eq!(binomial_expansion_sum(&x, n, 0).unwrap(), Rat::one(), "n = {n}");
        }
    }

    #[test]
    fn binomial_expansion_bernoulli() {
        // x_n = 1/(n+1)! -> z_n = B_n/n!
        let x = CoefficientSequence::from_tail(
            (1..=10).map(|k| factorial_rat(k + 1).recip()).collect(),
        );
        assert_eq!(binomial_expansion_sum(&x, 1, 0).unwrap(), rat(-1, 2));
        assert_eq!(binomial_expansion_sum(&x, 2, 0).unwrap(), rat(1, 12));
        assert!(binomial_expansion_sum(&x, 3, 0).unwrap().is_zero());
        let oracle = series_reciprocal(&x, 10).unwrap();
        for n in 1..=10 {
            assert_eq!(
                &binomial_expansion_sum(&x, n, 0).unwrap(),
                oracle.get(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn binomial_expansion_first_coefficient() {
        let x = CoefficientSequence::from_tail(vec![rat(4, 7), rat(1, 3)]);
        // z_1 = -x_1
        assert_eq!(binomial_expansion_sum(&x, 1, 0).unwrap(), rat(-4, 7));
    }

    #[test]
    fn binomial_expansion_matches_direct_zero_enumeration() {
        // the aggregated inner sums equal brute-force enumeration of
        // zero-allowing tuples
        let x = CoefficientSequence::from_tail(vec![rat(1, 2), rat(-2, 3), rat(3, 5)]);
        for n in 1..=8usize {
            let mut direct = Rat::zero();
            for k in 1..=n {
                let mut inner = Rat::zero();
                for c in compositions(n, PartCount::Exactly(k), 0, n) {
                    let mut prod = Rat::one();
                    for &i in &c {
                        prod *= x.get_or_zero(i);
                    }
                    inner += prod;
                }
                let signed = binomial_rat(n + 1, k as i64 + 1) * inner;
                if k % 2 == 0 {
                    direct += signed;
                } else {
                    direct -= signed;
                }
            }
            assert_eq!(binomial_expansion_sum(&x, n, 0).unwrap(), direct, "n = {n}");
        }
    }

    #[test]
    fn fast_and_generic_folds_agree() {
        let values: Vec<Rat> = [0, 3, -2, 0, 5, 1].iter().map(|&v| rat_int(v)).collect();
        for n in 1..=12usize {
            let fast = composition_sums_by_count(&values, n, 1, 5);
            let mut generic = vec![Rat::zero(); n + 1];
            fold_rat(&values, n, 1, 5, 0, &Rat::one(), &mut generic);
            assert_eq!(fast, generic, "n = {n}");
        }
    }

    #[test]
    fn fast_path_declines_oversized_inputs() {
        let huge = vec![Rat::zero(), rat_int(i64::MAX / 2)];
        assert!(small_integer_values(&huge, 1, 1, 40).is_none());
        let frac = vec![Rat::zero(), rat(1, 2)];
        assert!(small_integer_values(&frac, 1, 1, 4).is_none());
        let ok = vec![Rat::zero(), rat_int(5)];
        assert_eq!(small_integer_values(&ok, 1, 1, 22), Some(vec![0, 5]));
    }
}
