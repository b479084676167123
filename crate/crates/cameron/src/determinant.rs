//! Lower-Hessenberg matrices with unit superdiagonal and their exact
//! determinants, evaluated by elimination on the band — a route through
//! matrix arithmetic, independent of the transform recurrences, so the
//! two can serve as mutual oracles.

use num::{One, Zero};

use crate::error::Error;
use crate::rational::Rat;
use crate::sequence::CoefficientSequence;

/// An `n x n` lower-Hessenberg matrix: zero above the first superdiagonal,
/// superdiagonal entries fixed to 1, and entries on or below the diagonal
/// given by a rule `(row, col) -> value` (1-indexed, `col <= row`).
///
/// `band` limits how deep below the diagonal the rule is consulted:
/// entries with `row - col + 1 > band` are zero and never materialized.
pub struct HessenbergSpec<'a> {
    order: usize,
    band: usize,
    rule: Box<dyn Fn(usize, usize) -> Rat + 'a>,
}

impl<'a> HessenbergSpec<'a> {
    pub fn new(
        order: usize,
        band: usize,
        rule: impl Fn(usize, usize) -> Rat + 'a,
    ) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::InvalidParameter("matrix order must be >= 1".into()));
        }
        Ok(Self { order, band: band.min(order), rule: Box::new(rule) })
    }

    /// Toeplitz form: the entry at `(row, col)` depends only on the
    /// diagonal index `k = row - col + 1` and equals `band_values[k-1]`.
    pub fn toeplitz(order: usize, band_values: Vec<Rat>) -> Result<Self, Error> {
        let band = band_values.len();
        Self::new(order, band, move |row, col| band_values[row - col].clone())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn band(&self) -> usize {
        self.band
    }

    /// Full matrix semantics, including the fixed superdiagonal and zeros.
    pub fn entry(&self, row: usize, col: usize) -> Rat {
        debug_assert!(row >= 1 && col >= 1 && row <= self.order && col <= self.order);
        if col == row + 1 {
            Rat::one()
        } else if col > row || row - col + 1 > self.band {
            Rat::zero()
        } else {
            (self.rule)(row, col)
        }
    }
}

/// Exact determinant by elimination. The unit superdiagonal supplies every
/// pivot, so no division and no pivot search occur: step `i` subtracts
/// multiples of row `i` to clear column `i+1` below the diagonal. Fill-in
/// lands only in column 1; the final matrix is a column permutation of an
/// upper-triangular one.
pub fn hessenberg_det(spec: &HessenbergSpec<'_>) -> Rat {
    let n = spec.order;
    // first column, 1-indexed via offset
    let mut col1: Vec<Rat> = (1..=n).map(|i| spec.entry(i, 1)).collect();
    for i in 1..n {
        if col1[i - 1].is_zero() {
            continue;
        }
        let hi = (i + spec.band).min(n);
        for r in (i + 1)..=hi {
            // column i+1 below row i still holds its original entries:
            // earlier steps only wrote columns 1 and <= i
            let mult = spec.entry(r, i + 1);
            if !mult.is_zero() {
                let delta = mult * &col1[i - 1];
                col1[r - 1] -= delta;
            }
        }
    }
    // cyclic shift of column 1 behind column n leaves an upper-triangular
    // matrix with diagonal (1, ..., 1, c_n): det = (-1)^(n-1) c_n
    let c_n = col1.pop().expect("order >= 1");
    if n % 2 == 1 {
        c_n
    } else {
        -c_n
    }
}

/// Reference evaluator: full cofactor expansion along the first column of
/// the densely materialized matrix. Exponential; for cross-checking
/// [`hessenberg_det`] at small orders only.
pub fn cofactor_det(spec: &HessenbergSpec<'_>) -> Rat {
    let n = spec.order;
    let dense: Vec<Vec<Rat>> = (1..=n)
        .map(|i| (1..=n).map(|j| spec.entry(i, j)).collect())
        .collect();
    fn expand(m: &[Vec<Rat>]) -> Rat {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Rat::zero();
        for i in 0..n {
            if m[i][0].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rat>> = m
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != i)
                .map(|(_, row)| row[1..].to_vec())
                .collect();
            let term = &m[i][0] * expand(&minor);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
    expand(&dense)
}

/// `z_n` of the restricted transform as a determinant: the `n x n`
/// Toeplitz-Hessenberg matrix whose `k`-th subdiagonal band holds
/// `(-1)^(k-1) x_k`, truncated to bandwidth `m`.
pub fn restricted_z_det(x: &CoefficientSequence, m: usize, n: usize) -> Result<Rat, Error> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("restricted determinant requires n, m >= 1".into()));
    }
    let band = m.min(n);
    let mut band_values = Vec::with_capacity(band);
    for k in 1..=band {
        let v = x.get(k)?.clone();
        band_values.push(if k % 2 == 1 { v } else { -v });
    }
    let spec = HessenbergSpec::toeplitz(n, band_values)?;
    Ok(hessenberg_det(&spec))
}

/// `z_n` of the associated transform as a determinant: first column
/// `(0, ..., 0, (-1)^(m-1) x_m, ..., (-1)^(n-1) x_n)` with shifted copies
/// and unit superdiagonal. Rejects `n < m`; those `z_n` are zero by
/// definition and carry no determinant expression.
pub fn associated_z_det(x: &CoefficientSequence, m: usize, n: usize) -> Result<Rat, Error> {
    if m == 0 {
        return Err(Error::InvalidParameter("associated determinant requires m >= 1".into()));
    }
    if n < m {
        return Err(Error::BelowSupport { n, m });
    }
    let mut band_values = vec![Rat::zero(); n];
    for (k, slot) in band_values.iter_mut().enumerate().skip(m - 1) {
        let k = k + 1; // diagonal index
        if k >= m {
            let v = x.get(k)?.clone();
            *slot = if k % 2 == 1 { v } else { -v };
        }
    }
    let spec = HessenbergSpec::toeplitz(n, band_values)?;
    Ok(hessenberg_det(&spec))
}

/// The inversion determinant: first column `(z_1, ..., z_n)`, shifted
/// copies, unit superdiagonal. Equals `(-1)^(n-1) x_n` on the seed's
/// support and 0 off it.
pub fn x_from_z_det(z: &CoefficientSequence, n: usize) -> Result<Rat, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("inversion determinant requires n >= 1".into()));
    }
    let mut band_values = Vec::with_capacity(n);
    for k in 1..=n {
        band_values.push(z.get(k)?.clone());
    }
    let spec = HessenbergSpec::toeplitz(n, band_values)?;
    Ok(hessenberg_det(&spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{associated_transform, restricted_transform};
    use crate::rational::{rat, rat_int};

    #[test]
    fn order_one() {
        let spec = HessenbergSpec::toeplitz(1, vec![rat(5, 3)]).unwrap();
        assert_eq!(hessenberg_det(&spec), rat(5, 3));
    }

    #[test]
    fn order_two_expansion() {
        // ((x1, 1), (-x2, x1)) -> x1^2 + x2
        let x = CoefficientSequence::from_tail(vec![rat(1, 2), rat(1, 3)]);
        let det = restricted_z_det(&x, 2, 2).unwrap();
        assert_eq!(det, rat(1, 4) + rat(1, 3));
    }

    #[test]
    fn fibonacci_six_by_six() {
        let x = CoefficientSequence::from_i64(&[1, 1]);
        assert_eq!(restricted_z_det(&x, 2, 6).unwrap(), rat_int(13)); // F_7
        assert_eq!(restricted_z_det(&x, 2, 5).unwrap(), rat_int(8)); // F_6
        assert_eq!(restricted_z_det(&x, 2, 1).unwrap(), rat_int(1)); // x_1
    }

    #[test]
    fn tribonacci_value() {
        let x = CoefficientSequence::from_i64(&[1, 1, 1]);
        assert_eq!(restricted_z_det(&x, 3, 4).unwrap(), rat_int(7)); // T_5
    }

    #[test]
    fn associated_fibonacci_value() {
        let ones = CoefficientSequence::from_i64(&[1, 1, 1, 1, 1, 1]);
        assert_eq!(associated_z_det(&ones, 2, 6).unwrap(), rat_int(5)); // F_5
    }

    #[test]
    fn associated_single_band() {
        // m = n: only contribution is x_n itself
        let x = CoefficientSequence::from_tail(vec![
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat(7, 2),
        ]);
        assert_eq!(associated_z_det(&x, 4, 4).unwrap(), rat(7, 2));
    }

    #[test]
    fn associated_m1_equals_restricted_full_band() {
        let x = CoefficientSequence::from_tail(vec![rat(1, 2), rat_int(-2), rat(3, 5), rat_int(1)]);
        for n in 1..=4 {
            assert_eq!(
                associated_z_det(&x, 1, n).unwrap(),
                restricted_z_det(&x, n, n).unwrap()
            );
        }
    }

    #[test]
    fn associated_rejects_below_support() {
        let x = CoefficientSequence::from_i64(&[0, 0, 1]);
        assert!(matches!(
            associated_z_det(&x, 3, 2),
            Err(Error::BelowSupport { n: 2, m: 3 })
        ));
    }

    #[test]
    fn inversion_determinant_on_fibonacci() {
        // z_n = F_{n+1}: recovers (1, -1, 0, 0, 0) as (-1)^(n-1) x_n
        let seed = CoefficientSequence::from_i64(&[1, 1]);
        let z = restricted_transform(&seed, 6).unwrap();
        assert_eq!(x_from_z_det(&z, 1).unwrap(), rat_int(1));
        assert_eq!(x_from_z_det(&z, 2).unwrap(), rat_int(-1));
        for n in 3..=6 {
            assert!(x_from_z_det(&z, n).unwrap().is_zero(), "n = {n}");
        }
    }

    #[test]
    fn inversion_determinant_on_tribonacci() {
        let seed = CoefficientSequence::from_i64(&[1, 1, 1]);
        let z = restricted_transform(&seed, 5).unwrap();
        assert!(x_from_z_det(&z, 4).unwrap().is_zero());
        assert!(x_from_z_det(&z, 5).unwrap().is_zero());
    }

    #[test]
    fn inversion_determinant_on_trivial_z() {
        let z = CoefficientSequence::trivial(5);
        for n in 1..=5 {
            assert!(x_from_z_det(&z, n).unwrap().is_zero());
        }
    }

    #[test]
    fn elimination_matches_cofactor_expansion() {
        // deterministic pseudo-random rational entries, general (row, col) rule
        let cell = |row: usize, col: usize| {
            let h = (row * 31 + col * 17) % 23;
            rat(h as i64 - 11, 1 + ((row + col) % 4) as i64)
        };
        for n in 1..=8usize {
            for band in 1..=n {
                let spec = HessenbergSpec::new(n, band, cell).unwrap();
                assert_eq!(
                    hessenberg_det(&spec),
                    cofactor_det(&spec),
                    "order {n} band {band}"
                );
            }
        }
    }

    #[test]
    fn determinant_equals_transform_on_random_rationals() {
        let seed = CoefficientSequence::from_tail(vec![rat(2, 3), rat(-1, 2), rat_int(2)]);
        let z = restricted_transform(&seed, 12).unwrap();
        for n in 1..=12 {
            assert_eq!(&restricted_z_det(&seed, 3, n).unwrap(), z.get(n).unwrap());
        }
        let aseed = CoefficientSequence::from_support(
            2,
            vec![rat(1, 2), rat(-2, 3), rat_int(1), rat(5, 7), rat_int(-1)],
        )
        .unwrap();
        let az = associated_transform(&aseed, 2, 6).unwrap();
        for n in 2..=6 {
            assert_eq!(&associated_z_det(&aseed, 2, n).unwrap(), az.get(n).unwrap());
        }
    }
}
