//! The four families of modified hypergeometric numbers — Bernoulli,
//! Cauchy, Euler, and Euler second kind — in restricted and associated
//! modes, each computable by five routes: the defining generating
//! function (series reciprocal), a banded determinant, a signed
//! composition sum, a binomial-coefficient expansion, and a signed
//! multinomial (Trudi) sum.
//!
//! # Index mapping
//!
//! The Euler-kind generating functions are even series in `x`, so the
//! determinant/sum machinery runs in the variable `u = x^2`. One engine
//! order `n` therefore produces the Euler number at *paper index* `2n`;
//! odd paper indices are exactly zero and emitted as such. Bernoulli and
//! Cauchy paper indices coincide with engine orders. Public entry points
//! below say which kind of index they take.
//!
//! # Conventions fixed numerically
//!
//! The per-family sign placement in the unified sum propositions is
//! absorbed into `xi_n` here and was pinned against the generating
//! function route: with `S_k` the sum of `alpha`-products over
//! compositions of `n` into `k` allowed parts,
//!
//! `A*_n = xi_n * sum_k (-1)^(n-k) S_k`
//!
//! holds for all four families in *both* modes, restricted parts in
//! `[1, m]` and associated parts in `[m, n]`.

use num::{One, Zero};

use crate::combinatorics::{composition_sums_by_count, weighted_exponent_sum};
use crate::determinant::{hessenberg_det, x_from_z_det, HessenbergSpec};
use crate::error::Error;
use crate::operator::series_reciprocal;
use crate::rational::{binomial_rat, factorial_rat, Rat};
use crate::sequence::{CoefficientSequence, OperatorMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Bernoulli,
    Cauchy,
    Euler,
    EulerSecond,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Cauchy => "cauchy",
            Family::Euler => "euler",
            Family::EulerSecond => "euler-second",
        }
    }

    /// Paper indices advance by this step per engine order: 2 for the
    /// even Euler-kind series, 1 otherwise.
    pub fn index_step(&self) -> usize {
        match self {
            Family::Euler | Family::EulerSecond => 2,
            _ => 1,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "bernoulli" | "b" => Ok(Family::Bernoulli),
            "cauchy" | "c" => Ok(Family::Cauchy),
            "euler" | "e" => Ok(Family::Euler),
            "euler-second" | "euler2" | "e2" => Ok(Family::EulerSecond),
            other => Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        }
    }
}

/// A family together with its order `N` (`N >= 1` for Bernoulli and
/// Cauchy, `N >= 0` for the Euler kinds).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    order: u32,
}

impl FamilySpec {
    pub fn new(family: Family, order: u32) -> Result<Self, Error> {
        if matches!(family, Family::Bernoulli | Family::Cauchy) && order < 1 {
            return Err(Error::InvalidParameter(format!(
                "{} numbers require N >= 1",
                family.name()
            )));
        }
        Ok(Self { family, order })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}(N={})", self.family.name(), self.order)
    }
}

/// Resolves the one printed ambiguity: the restricted Euler-second-kind
/// denominator is a partial sum to `m - 1` as printed; the extended
/// reading truncates at `m` like every other family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HyperConfig {
    pub euler_second_extended_band: bool,
}

impl HyperConfig {
    pub fn extended() -> Self {
        Self { euler_second_extended_band: true }
    }
}

/// One computed number, tagged with where it lives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperNumber {
    pub family: FamilySpec,
    pub mode: OperatorMode,
    pub paper_index: usize,
    pub value: Rat,
}

/// The seed table entry `alpha_j > 0` for `j >= 1`.
pub fn alpha(spec: &FamilySpec, j: usize) -> Rat {
    assert!(j >= 1, "alpha is defined for j >= 1");
    let n = spec.order as usize;
    match spec.family {
        Family::Bernoulli => factorial_rat(n) / factorial_rat(n + j),
        Family::Cauchy => Rat::new((n as i64).into(), ((n + j) as i64).into()),
        Family::Euler => factorial_rat(2 * n) / factorial_rat(2 * n + 2 * j),
        Family::EulerSecond => factorial_rat(2 * n + 1) / factorial_rat(2 * n + 2 * j + 1),
    }
}

/// The scale factor `xi_n` at engine order `n`: `(-1)^n n!` (Bernoulli),
/// `n!` (Cauchy), `(-1)^n (2n)!` (both Euler kinds).
pub fn xi(spec: &FamilySpec, n: usize) -> Rat {
    let magnitude = match spec.family {
        Family::Bernoulli | Family::Cauchy => factorial_rat(n),
        Family::Euler | Family::EulerSecond => factorial_rat(2 * n),
    };
    let negate = !matches!(spec.family, Family::Cauchy) && n % 2 == 1;
    if negate {
        -magnitude
    } else {
        magnitude
    }
}

/// Highest seed index of the restricted denominator: `m`, except the
/// as-printed Euler-second reading where it is `m - 1`.
fn restricted_band(spec: &FamilySpec, m: usize, cfg: HyperConfig) -> usize {
    if spec.family == Family::EulerSecond && !cfg.euler_second_extended_band {
        m - 1
    } else {
        m
    }
}

/// Allowed part range (engine orders) for the mode's seed support,
/// clipped for a sum at order `n`.
fn support_range(spec: &FamilySpec, mode: OperatorMode, cfg: HyperConfig, n: usize) -> (usize, usize) {
    match mode {
        OperatorMode::Restricted { m } => (1, restricted_band(spec, m, cfg).min(n)),
        OperatorMode::Associated { m } => (m, n),
    }
}

/// Whether engine order `n >= 1` lies in the mode's seed support, i.e.
/// where the inversion relations recover `alpha_n` rather than 0.
pub fn on_support(spec: &FamilySpec, mode: OperatorMode, cfg: HyperConfig, n: usize) -> bool {
    match mode {
        OperatorMode::Restricted { m } => n >= 1 && n <= restricted_band(spec, m, cfg),
        OperatorMode::Associated { m } => n >= m,
    }
}

/// `alpha`-values laid out by index: `values[j] = alpha_j` on
/// `lo..=hi`, zero elsewhere.
fn alpha_values(spec: &FamilySpec, lo: usize, hi: usize) -> Vec<Rat> {
    let mut values = vec![Rat::zero(); hi.max(1) + 1];
    for (j, slot) in values.iter_mut().enumerate().skip(lo.max(1)) {
        *slot = alpha(spec, j);
    }
    values
}

/// Cauchy's denominator carries `(-x)^n`, i.e. an extra `(-1)^j` on the
/// seed; every other family's denominator coefficients are `alpha_j`.
fn denominator_coefficient(spec: &FamilySpec, j: usize) -> Rat {
    let a = alpha(spec, j);
    if spec.family == Family::Cauchy && j % 2 == 1 {
        -a
    } else {
        a
    }
}

/// The defining denominator series in the engine variable, over
/// `0..=n_max` engine orders.
fn denominator_series(
    spec: &FamilySpec,
    mode: OperatorMode,
    cfg: HyperConfig,
    n_max: usize,
) -> CoefficientSequence {
    let mut d = vec![Rat::zero(); n_max + 1];
    d[0] = Rat::one();
    for (j, slot) in d.iter_mut().enumerate().skip(1) {
        let in_support = match mode {
            OperatorMode::Restricted { m } => j <= restricted_band(spec, m, cfg),
            OperatorMode::Associated { m } => j >= m,
        };
        if in_support {
            *slot = denominator_coefficient(spec, j);
        }
    }
    CoefficientSequence::new(d).expect("constant term 1")
}

fn make_number(spec: &FamilySpec, mode: OperatorMode, paper_index: usize, value: Rat) -> HyperNumber {
    HyperNumber { family: *spec, mode, paper_index, value }
}

/// The numbers `A*_0..A*_{n_max}` (paper indices) straight from the
/// defining generating function: build the denominator exactly as
/// printed, take the truncated series reciprocal, and scale coefficient
/// `p` by `p!`. This is the source of truth the other four routes are
/// verified against.
pub fn hyper_from_definition(
    spec: &FamilySpec,
    mode: OperatorMode,
    cfg: HyperConfig,
    n_max: usize,
) -> Result<Vec<HyperNumber>, Error> {
    let step = spec.family.index_step();
    let d = denominator_series(spec, mode, cfg, n_max / step);
    let r = series_reciprocal(&d, n_max / step)?;
    let mut out = Vec::with_capacity(n_max + 1);
    for p in 0..=n_max {
        let value = if p % step == 0 {
            factorial_rat(p) * r.get(p / step)?
        } else {
            Rat::zero()
        };
        out.push(make_number(spec, mode, p, value));
    }
    Ok(out)
}

/// One number by the determinant route: `xi_n` times the determinant of
/// the banded Hessenberg matrix whose `k`-th subdiagonal band holds
/// `alpha_k` over the mode's support (all entries positive as printed;
/// the sign alternation of the generic `z`-determinant is absorbed by
/// `xi`). Takes a paper index.
pub fn hyper_det(
    spec: &FamilySpec,
    mode: OperatorMode,
    cfg: HyperConfig,
    paper_index: usize,
) -> Result<HyperNumber, Error> {
    if paper_index == 0 {
        return Ok(make_number(spec, mode, 0, Rat::one()));
    }
    let step = spec.family.index_step();
    if paper_index % step != 0 {
        return Ok(make_number(spec, mode, paper_index, Rat::zero()));
    }
    let n = paper_index / step;
    let (lo, hi) = support_range(spec, mode, cfg, n);
    let mut band = vec![Rat::zero(); n];
    if lo <= hi {
        for k in lo..=hi {
            band[k - 1] = alpha(spec, k);
        }
    }
    let matrix = HessenbergSpec::toeplitz(n, band)?;
    let value = xi(spec, n) * hessenberg_det(&matrix);
    Ok(make_number(spec, mode, paper_index, value))
}

/// One number by the signed composition sum
/// `xi_n sum_k (-1)^(n-k) sum alpha_{i_1} ... alpha_{i_k}` over parts in
/// the mode's support. Takes a paper index.
pub fn hyper_sum(
    spec: &FamilySpec,
    mode: OperatorMode,
    cfg: HyperConfig,
    paper_index: usize,
) -> Result<HyperNumber, Error> {
    if paper_index == 0 {
        return Ok(make_number(spec, mode, 0, Rat::one()));
    }
    let step = spec.family.index_step();
    if paper_index % step != 0 {
        return Ok(make_number(spec, mode, paper_index, Rat::zero()));
    }
    let n = paper_index / step;
    let (lo, hi) = support_range(spec, mode, cfg, n);
    let mut total = Rat::zero();
    if lo <= hi {
        let values = alpha_values(spec, lo, hi);
        let sums = composition_sums_by_count(&values, n, lo, hi);
        for (k, s_k) in sums.iter().enumerate().skip(1) {
            if s_k.is_zero() {
                continue;
            }
            if (n - k) % 2 == 0 {
                total += s_k;
            } else {
                total -= s_k;
            }
        }
    }
    Ok(make_number(spec, mode, paper_index, xi(spec, n) * total))
}

/// One number by the binomial-coefficient expansion over zero-allowing
/// compositions (`alpha_0 = 1`):
/// `xi_n sum_k (-1)^(n-k) C(n+1, k+1) sum alpha_{i_1} ... alpha_{i_k}`,
/// nonzero parts in the mode's support. Takes a paper index.
///
/// The zero parts are placed combinatorially: a composition with `j`
/// nonzero parts occurs in `C(k, j)` of the `k`-slot tuples.
pub fn hyper_binom_sum(
    spec: &FamilySpec,
    mode: OperatorMode,
    cfg: HyperConfig,
    paper_index: usize,
) -> Result<HyperNumber, Error> {
    if paper_index == 0 {
        return Ok(make_number(spec, mode, 0, Rat::one()));
    }
    let step = spec.family.index_step();
    if paper_index % step != 0 {
        return Ok(make_number(spec, mode, paper_index, Rat::zero()));
    }
    let n = paper_index / step;
    let (lo, hi) = support_range(spec, mode, cfg, n);
    let mut total = Rat::zero();
    if lo <= hi {
        let values = alpha_values(spec, lo, hi);
        let nonzero = composition_sums_by_count(&values, n, lo, hi);
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
            if (n - k) % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    Ok(make_number(spec, mode, paper_index, xi(spec, n) * total))
}

/// One number by the signed Trudi sum
/// `(-1)^n xi_n sum_t multinomial(t) (-1)^(t_lo+...+t_hi)
/// alpha_lo^(t_lo) ... alpha_hi^(t_hi)` over the mode's exponent
/// vectors. Takes a paper index.
pub fn hyper_trudi(
    spec: &FamilySpec,
    mode: OperatorMode,
    cfg: HyperConfig,
    paper_index: usize,
) -> Result<HyperNumber, Error> {
    if paper_index == 0 {
        return Ok(make_number(spec, mode, 0, Rat::one()));
    }
    let step = spec.family.index_step();
    if paper_index % step != 0 {
        return Ok(make_number(spec, mode, paper_index, Rat::zero()));
    }
    let n = paper_index / step;
    let (lo, hi) = support_range(spec, mode, cfg, n);
    let mut value = Rat::zero();
    if lo <= hi {
        let values = alpha_values(spec, lo, hi);
        let signs: Vec<Rat> = (0..=n)
            .map(|c| if c % 2 == 0 { Rat::one() } else { -Rat::one() })
            .collect();
        let sum = weighted_exponent_sum(&values, n, lo, hi, &signs);
        value = xi(spec, n) * sum;
        if n % 2 == 1 {
            value = -value;
        }
    }
    Ok(make_number(spec, mode, paper_index, value))
}

/// Evaluates both printed inversion forms on the numbers `A*_1..A*_n`
/// (engine orders; for the Euler kinds these carry paper indices
/// `2, 4, ..., 2n`): the Toeplitz determinant with first column
/// `A*_j / xi_j`, and the signed multinomial sum. The two must agree —
/// disagreement is reported as an error, not papered over. Returns the
/// common value, which is `alpha_n` on the mode's support and 0 off it.
pub fn hyper_inversion_check(
    spec: &FamilySpec,
    mode: OperatorMode,
    cfg: HyperConfig,
    n: usize,
) -> Result<Rat, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("inversion check requires n >= 1".into()));
    }
    let step = spec.family.index_step();
    let numbers = hyper_from_definition(spec, mode, cfg, n * step)?;
    let mut w = Vec::with_capacity(n + 1);
    w.push(Rat::one());
    for j in 1..=n {
        w.push(&numbers[j * step].value / xi(spec, j));
    }
    let w = CoefficientSequence::new(w)?;

    let by_determinant = x_from_z_det(&w, n)?;
    let signs: Vec<Rat> = (0..=n)
        .map(|c| {
            if (n - c) % 2 == 0 {
                Rat::one()
            } else {
                -Rat::one()
            }
        })
        .collect();
    let by_multinomial = weighted_exponent_sum(w.values(), n, 1, n, &signs);

    if by_determinant != by_multinomial {
        return Err(Error::RouteDisagreement(format!(
            "inversion of {spec} {mode} at n={n}: determinant {by_determinant} vs multinomial {by_multinomial}"
        )));
    }
    Ok(by_determinant)
}

/// Convenience: all five routes at one paper index, in the order
/// definition, determinant, sum, binomial sum, Trudi.
pub fn hyper_all_routes(
    spec: &FamilySpec,
    mode: OperatorMode,
    cfg: HyperConfig,
    paper_index: usize,
) -> Result<[Rat; 5], Error> {
    let def = hyper_from_definition(spec, mode, cfg, paper_index)?
        .pop()
        .expect("nonempty")
        .value;
    Ok([
        def,
        hyper_det(spec, mode, cfg, paper_index)?.value,
        hyper_sum(spec, mode, cfg, paper_index)?.value,
        hyper_binom_sum(spec, mode, cfg, paper_index)?.value,
        hyper_trudi(spec, mode, cfg, paper_index)?.value,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use num::Signed;

    fn cfg() -> HyperConfig {
        HyperConfig::default()
    }

    fn bern(n: u32) -> FamilySpec {
        FamilySpec::new(Family::Bernoulli, n).unwrap()
    }

    fn cauchy(n: u32) -> FamilySpec {
        FamilySpec::new(Family::Cauchy, n).unwrap()
    }

    fn euler(n: u32) -> FamilySpec {
        FamilySpec::new(Family::Euler, n).unwrap()
    }

    fn euler2(n: u32) -> FamilySpec {
        FamilySpec::new(Family::EulerSecond, n).unwrap()
    }

    #[test]
    fn order_validation() {
        assert!(FamilySpec::new(Family::Bernoulli, 0).is_err());
        assert!(FamilySpec::new(Family::Cauchy, 0).is_err());
        assert!(FamilySpec::new(Family::Euler, 0).is_ok());
        assert!(FamilySpec::new(Family::EulerSecond, 0).is_ok());
    }

    #[test]
    fn alpha_table_values() {
        assert_eq!(alpha(&bern(1), 1), rat(1, 2));
        assert_eq!(alpha(&cauchy(1), 2), rat(1, 3));
        assert_eq!(alpha(&euler2(0), 1), rat(1, 6));
        assert_eq!(alpha(&euler(0), 1), rat(1, 2));
        assert!(alpha(&euler(2), 5).is_positive());
    }

    #[test]
    fn xi_table_values() {
        assert_eq!(xi(&bern(1), 1), rat_int(-1));
        assert_eq!(xi(&cauchy(3), 3), rat_int(6));
        assert_eq!(xi(&euler(0), 2), rat_int(24));
        assert_eq!(xi(&euler2(1), 1), rat_int(-2));
        assert_eq!(xi(&bern(2), 0), rat_int(1));
    }

    #[test]
    fn definition_gives_classical_values() {
        let mode = OperatorMode::associated(1).unwrap();
        // B_1 = -1/2
        let b = hyper_from_definition(&bern(1), mode, cfg(), 4).unwrap();
        assert_eq!(b[1].value, rat(-1, 2));
        assert_eq!(b[2].value, rat(1, 6));
        assert!(b[3].value.is_zero());
        assert_eq!(b[4].value, rat(-1, 30));
        // c_1 = 1/2
        let c = hyper_from_definition(&cauchy(1), mode, cfg(), 2).unwrap();
        assert_eq!(c[1].value, rat(1, 2));
        assert_eq!(c[2].value, rat(-1, 6));
        // E_2 = -1
        let e = hyper_from_definition(&euler(0), mode, cfg(), 4).unwrap();
        assert_eq!(e[2].value, rat_int(-1));
        assert_eq!(e[4].value, rat_int(5));
        assert!(e[1].value.is_zero() && e[3].value.is_zero());
        // second kind: paper index 2 -> -1/3
        let e2 = hyper_from_definition(&euler2(0), mode, cfg(), 4).unwrap();
        assert_eq!(e2[2].value, rat(-1, 3));
        assert_eq!(e2[4].value, rat(7, 15));
    }

    #[test]
    fn definition_restricted_m1_bernoulli() {
        // reciprocal of 1 + x/2: coefficient of x^2 is 1/4, times 2!
        let mode = OperatorMode::restricted(1).unwrap();
        let b = hyper_from_definition(&bern(1), mode, cfg(), 2).unwrap();
        assert_eq!(b[2].value, rat(1, 2));
    }

    #[test]
    fn determinant_route_small_cases() {
        // 1x1: xi_1 alpha_1 = -1/2 for Bernoulli N=1, any restricted m
        for m in 1..=4 {
            let mode = OperatorMode::restricted(m).unwrap();
            assert_eq!(hyper_det(&bern(1), mode, cfg(), 1).unwrap().value, rat(-1, 2));
        }
        // Euler N=0: E_2 = -2 * 1/2 = -1
        let mode = OperatorMode::associated(1).unwrap();
        assert_eq!(hyper_det(&euler(0), mode, cfg(), 2).unwrap().value, rat_int(-1));
    }

    #[test]
    fn determinant_matches_definition_cauchy() {
        let mode = OperatorMode::restricted(2).unwrap();
        let def = hyper_from_definition(&cauchy(2), mode, cfg(), 4).unwrap();
        assert_eq!(hyper_det(&cauchy(2), mode, cfg(), 4).unwrap().value, def[4].value);
    }

    #[test]
    fn sum_route_examples() {
        let mode = OperatorMode::restricted(1).unwrap();
        assert_eq!(hyper_sum(&bern(1), mode, cfg(), 2).unwrap().value, rat(1, 2));
        // n = 1 reduces to xi_1 alpha_1 for every family
        for spec in [bern(1), cauchy(2), euler(1), euler2(1)] {
            let m2 = OperatorMode::restricted(2).unwrap();
            let paper = spec.family().index_step();
            assert_eq!(
                hyper_sum(&spec, m2, cfg(), paper).unwrap().value,
                xi(&spec, 1) * alpha(&spec, 1),
                "{spec}"
            );
        }
        let am2 = OperatorMode::associated(2).unwrap();
        let def = hyper_from_definition(&euler(1), am2, cfg(), 4).unwrap();
        assert_eq!(hyper_sum(&euler(1), am2, cfg(), 4).unwrap().value, def[4].value);
    }

    #[test]
    fn binom_sum_examples() {
        let m1 = OperatorMode::associated(1).unwrap();
        assert_eq!(hyper_binom_sum(&bern(1), m1, cfg(), 1).unwrap().value, rat(-1, 2));
        // classical c_2 = -1/6
        let def = hyper_from_definition(&cauchy(1), m1, cfg(), 2).unwrap();
        assert_eq!(def[2].value, rat(-1, 6));
        assert_eq!(hyper_binom_sum(&cauchy(1), m1, cfg(), 2).unwrap().value, rat(-1, 6));
        // n = 1: single term C(2,2) alpha_1, sign (-1)^(1-1)
        for spec in [bern(2), cauchy(1), euler(0)] {
            let paper = spec.family().index_step();
            let got = hyper_binom_sum(&spec, m1, cfg(), paper).unwrap().value;
            assert_eq!(got, xi(&spec, 1) * alpha(&spec, 1), "{spec}");
        }
    }

    #[test]
    fn trudi_route_examples() {
        let m3 = OperatorMode::restricted(3).unwrap();
        // n = 1: single vector, (-1)^1 xi_1 (-1)^1 alpha_1
        assert_eq!(
            hyper_trudi(&cauchy(1), m3, cfg(), 1).unwrap().value,
            xi(&cauchy(1), 1) * alpha(&cauchy(1), 1)
        );
        // classical B_3 = 0 via m = n
        let mn = OperatorMode::restricted(3).unwrap();
        assert!(hyper_trudi(&bern(1), mn, cfg(), 3).unwrap().value.is_zero());
        let am2 = OperatorMode::associated(2).unwrap();
        let def = hyper_from_definition(&euler2(1), am2, cfg(), 4).unwrap();
        assert_eq!(hyper_trudi(&euler2(1), am2, cfg(), 4).unwrap().value, def[4].value);
    }

    #[test]
    fn five_routes_agree_smoke() {
        let modes = [OperatorMode::restricted(2).unwrap(), OperatorMode::associated(2).unwrap()];
        for spec in [bern(1), cauchy(1), euler(0), euler2(0)] {
            for mode in modes {
                for p in 1..=8usize {
                    let [a, b, c, d, e] = hyper_all_routes(&spec, mode, cfg(), p).unwrap();
                    assert_eq!(a, b, "{spec} {mode} det p={p}");
                    assert_eq!(a, c, "{spec} {mode} sum p={p}");
                    assert_eq!(a, d, "{spec} {mode} binom p={p}");
                    assert_eq!(a, e, "{spec} {mode} trudi p={p}");
                }
            }
        }
    }

    #[test]
    fn inversion_check_support_window() {
        // 1x1 case: alpha_1
        for m in 1..=3 {
            let mode = OperatorMode::restricted(m).unwrap();
            assert_eq!(
                hyper_inversion_check(&bern(1), mode, cfg(), 1).unwrap(),
                alpha(&bern(1), 1)
            );
        }
        // restricted: 0 past m
        let r2 = OperatorMode::restricted(2).unwrap();
        assert!(hyper_inversion_check(&bern(1), r2, cfg(), 3).unwrap().is_zero());
        // associated: 0 below m
        let a2 = OperatorMode::associated(2).unwrap();
        assert!(hyper_inversion_check(&cauchy(2), a2, cfg(), 1).unwrap().is_zero());
        assert_eq!(
            hyper_inversion_check(&cauchy(2), a2, cfg(), 2).unwrap(),
            alpha(&cauchy(2), 2)
        );
    }

    #[test]
    fn euler_odd_indices_vanish() {
        for spec in [euler(0), euler(2), euler2(1)] {
            for mode in [OperatorMode::restricted(3).unwrap(), OperatorMode::associated(2).unwrap()] {
                let nums = hyper_from_definition(&spec, mode, cfg(), 9).unwrap();
                for p in (1..=9).step_by(2) {
                    assert!(nums[p].value.is_zero(), "{spec} {mode} p={p}");
                    assert!(hyper_det(&spec, mode, cfg(), p).unwrap().value.is_zero());
                }
            }
        }
    }

    #[test]
    fn euler_second_band_readings_differ() {
        // as printed, restricted m = 1 truncates the denominator to 1
        let r1 = OperatorMode::restricted(1).unwrap();
        let printed = hyper_from_definition(&euler2(0), r1, cfg(), 6).unwrap();
        for p in 1..=6 {
            assert!(printed[p].value.is_zero());
        }
        let extended = hyper_from_definition(&euler2(0), r1, HyperConfig::extended(), 6).unwrap();
        assert_eq!(extended[2].value, rat(-1, 3)); // reciprocal of 1 + u/3!
        // both readings stay five-way consistent
        for p in 1..=6 {
            let [a, b, c, d, e] =
                hyper_all_routes(&euler2(0), r1, HyperConfig::extended(), p).unwrap();
            assert!(a == b && a == c && a == d && a == e, "p={p}");
        }
    }
}
