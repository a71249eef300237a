//! Plücker row-exchange relation for a pair of square matrices, and the
//! determinant-level derivation of the main identity from it.
//!
//! For `p × p` matrices A, B and rows `r_1 < … < r_k` of A,
//!
//! `|A| |B| = Σ_{s_1 < … < s_k} |A with rows r_i ← b_{s_i}| · |B with rows s_i ← a_{r_i}|`.

use alloc::vec::Vec;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::identity::{Identity, Term};
use crate::linalg;
use crate::partition::{MuVector, Partition};
use crate::strip::{peel_complete, validate_specs, StripSpec};

/// Strictly increasing 1-based row indices `r_1 < … < r_k` within `1..=p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangeData {
    rows: Vec<usize>,
}

impl ExchangeData {
    pub fn new(rows: Vec<usize>, p: usize) -> Result<Self> {
        if rows.is_empty() || rows.len() > p {
            return Err(Error::InvalidExchangeData("need 1 ≤ k ≤ p rows"));
        }
        if rows.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidExchangeData("rows must be strictly increasing"));
        }
        if rows[0] == 0 || rows[rows.len() - 1] > p {
            return Err(Error::InvalidExchangeData("rows must lie in 1..=p"));
        }
        Ok(ExchangeData { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Every valid exchange data set for size `p`.
    pub fn all(p: usize) -> Vec<ExchangeData> {
        (1u32..(1 << p))
            .map(|mask| ExchangeData {
                rows: (0..p).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect(),
            })
            .collect()
    }
}

/// One summand of the relation: the exchanged row sets of A and B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exchange<R> {
    /// The rows `s_1 < … < s_k` of B taking part in this summand.
    pub partner_rows: Vec<usize>,
    pub left: Vec<R>,
    pub right: Vec<R>,
}

fn subsets(p: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, p: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for s in start..=p {
            acc.push(s);
            rec(s + 1, p, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, p, k, &mut Vec::new(), &mut out);
    out
}

/// Enumerates all row exchanges of the relation for abstract rows.
pub fn exchanges<R: Clone>(a: &[R], b: &[R], data: &ExchangeData) -> Result<Vec<Exchange<R>>> {
    let p = a.len();
    if b.len() != p || data.rows.last().is_some_and(|&r| r > p) {
        return Err(Error::SizeMismatch);
    }
    Ok(subsets(p, data.k())
        .into_iter()
        .map(|partner_rows| {
            let mut left = a.to_vec();
            let mut right = b.to_vec();
            for (&r, &s) in data.rows.iter().zip(&partner_rows) {
                left[r - 1] = b[s - 1].clone();
                right[s - 1] = a[r - 1].clone();
            }
            Exchange { partner_rows, left, right }
        })
        .collect())
}

/// `|A||B|` together with the determinant pair of every summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerExpansion {
    pub product: BigRational,
    pub terms: Vec<(BigRational, BigRational)>,
}

impl PluckerExpansion {
    pub fn sum(&self) -> BigRational {
        self.terms.iter().map(|(l, r)| l * r).sum()
    }

    pub fn holds(&self) -> bool {
        self.sum() == self.product
    }
}

fn check_square(m: &[Vec<BigRational>]) -> Result<()> {
    if m.iter().any(|row| row.len() != m.len()) {
        return Err(Error::SizeMismatch);
    }
    Ok(())
}

/// Expands `|A||B|` over the row exchanges prescribed by `data`.
pub fn plucker_expand(
    a: &[Vec<BigRational>],
    b: &[Vec<BigRational>],
    data: &ExchangeData,
) -> Result<PluckerExpansion> {
    check_square(a)?;
    check_square(b)?;
    let terms = exchanges(a, b, data)?
        .into_iter()
        .map(|ex| (linalg::det(&ex.left), linalg::det(&ex.right)))
        .collect();
    Ok(PluckerExpansion { product: linalg::det(a) * linalg::det(b), terms })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfTestReport {
    pub trials: usize,
    pub checks: usize,
    pub failures: usize,
}

/// Runs the numeric relation on `trials` seeded random integer matrix pairs
/// with entries in `[−9, 9]`, cycling the size through `2..=max_size`, and
/// checks every exchange data set of each pair.
pub fn plucker_selftest(max_size: usize, trials: usize, seed: u64) -> Result<SelfTestReport> {
    if max_size < 2 {
        return Err(Error::InvalidRange("matrix size must be at least 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SelfTestReport { trials, checks: 0, failures: 0 };
    for trial in 0..trials {
        let p = 2 + trial % (max_size - 1);
        let mut random_matrix = || -> Vec<Vec<BigRational>> {
            (0..p)
                .map(|_| {
                    (0..p)
                        .map(|_| BigRational::from_integer(rng.random_range(-9i64..=9).into()))
                        .collect()
                })
                .collect()
        };
        let a = random_matrix();
        let b = random_matrix();
        for data in ExchangeData::all(p) {
            report.checks += 1;
            if !plucker_expand(&a, &b, &data)?.holds() {
                report.failures += 1;
            }
        }
    }
    Ok(report)
}

/// A Jacobi–Trudi determinant given by the leading indices of its rows
/// (row `i` is `(h_{μ_i}, h_{μ_i + 1}, …)`), identified with a signed Schur
/// label. Equal leading indices make the determinant vanish.
pub fn jacobi_trudi_label(rows: &[i64]) -> Option<(i64, Partition)> {
    let mut sorted = rows.to_vec();
    let mut sign = 1;
    // insertion sort into strictly decreasing order, counting transpositions
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] < sorted[j] {
            sorted.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && sorted[j - 1] == sorted[j] {
            return None;
        }
    }
    let label = MuVector::new(sorted).ok()?.to_partition().ok()?;
    Some((sign, label))
}

/// Rebuilds the main identity from the Plücker relation on the
/// Jacobi–Trudi matrices of `λ` and `λ⁺↓`, both of size `n`.
///
/// Rows `r_i + m_i − 1` of the first matrix are exchanged against every
/// k-subset of rows of the second; summands containing a repeated row are
/// dropped, the rest are sorted back into Jacobi–Trudi form with their
/// permutation signs. The right-hand side lists surviving summands unmerged.
pub fn derive_main_identity(lambda: &Partition, specs: &[StripSpec], n: usize) -> Result<Identity> {
    validate_specs(lambda, specs).map_err(Error::InvalidStripSpec)?;
    let min = lambda.height() + 1;
    if n < min {
        return Err(Error::SizeTooSmall { size: n, min });
    }
    let first = lambda.to_mu(n)?;
    let mut plus = first.clone();
    for s in specs {
        plus = plus.add_strip(s.r, s.m, s.t)?;
    }
    // Shifting μ left and appending 1 − N is exact only when N = ℓ(λ⁺);
    // for larger N the tail rows of λ⁺↓ must read 1 − i.
    let second = peel_complete(&plus.to_partition()?).to_mu(n)?;

    let data = ExchangeData::new(specs.iter().map(StripSpec::start_row).collect(), n)?;
    let mut rhs = Vec::new();
    for ex in exchanges(first.entries(), second.entries(), &data)? {
        let (Some((sl, left)), Some((sr, right))) =
            (jacobi_trudi_label(&ex.left), jacobi_trudi_label(&ex.right))
        else {
            continue;
        };
        rhs.push(Term::new(sl * sr, left, right));
    }
    let lhs = Term::unit(first.to_partition()?, second.to_partition()?);
    Identity::new(alloc::vec![lhs], rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::main_identity;
    use alloc::vec;
    use num_traits::One;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn exchange_data_validation() {
        assert!(ExchangeData::new(vec![], 3).is_err());
        assert!(ExchangeData::new(vec![2, 1], 3).is_err());
        assert!(ExchangeData::new(vec![0], 3).is_err());
        assert!(ExchangeData::new(vec![4], 3).is_err());
        assert_eq!(ExchangeData::all(3).len(), 7);
    }

    #[test]
    fn identity_matrices() {
        let id = mat(&[&[1, 0], &[0, 1]]);
        let data = ExchangeData::new(vec![1], 2).unwrap();
        let ex = plucker_expand(&id, &id, &data).unwrap();
        assert_eq!(ex.product, BigRational::one());
        assert_eq!(ex.sum(), BigRational::one());
        assert_eq!(ex.terms.len(), 2);
    }

    #[test]
    fn full_swap_is_a_single_term() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let b = mat(&[&[5, -1], &[2, 7]]);
        let data = ExchangeData::new(vec![1, 2], 2).unwrap();
        let ex = plucker_expand(&a, &b, &data).unwrap();
        assert_eq!(ex.terms, vec![(linalg::det(&b), linalg::det(&a))]);
        assert!(ex.holds());
    }

    #[test]
    fn three_by_three() {
        let a = mat(&[&[3, -9, 2], &[0, 5, -4], &[7, 1, 1]]);
        let b = mat(&[&[-2, 8, 6], &[4, 4, -1], &[9, -3, 0]]);
        let data = ExchangeData::new(vec![2], 3).unwrap();
        let ex = plucker_expand(&a, &b, &data).unwrap();
        assert_eq!(ex.product, q(209) * q(-354));
        assert!(ex.holds());
        assert!(plucker_expand(&a, &mat(&[&[1, 0], &[0, 1]]), &data).is_err());
        assert!(plucker_expand(&mat(&[&[1, 0]]), &a, &data).is_err());
    }

    #[test]
    fn selftest_small() {
        let report = plucker_selftest(4, 12, 3).unwrap();
        assert_eq!(report.failures, 0);
        assert_eq!(report.checks, 4 * (3 + 7 + 15));
        assert!(plucker_selftest(1, 1, 0).is_err());
    }

    #[test]
    fn symbolic_labels() {
        assert_eq!(jacobi_trudi_label(&[2, 0, -1]), Some((1, Partition::new(&[2, 1, 1]).unwrap())));
        assert_eq!(jacobi_trudi_label(&[0, 2, -1]), Some((-1, Partition::new(&[2, 1, 1]).unwrap())));
        assert_eq!(jacobi_trudi_label(&[2, 0, 2]), None);
        assert_eq!(jacobi_trudi_label(&[0, -3]), None);
        assert_eq!(jacobi_trudi_label(&[]), Some((1, Partition::empty())));
    }

    #[test]
    fn derivation_reproduces_the_examples() {
        let cases: [(&[u32], &[StripSpec]); 3] = [
            (&[2, 1, 1], &[StripSpec { r: 2, m: 1, t: 1 }]),
            (&[4, 2, 1], &[StripSpec { r: 2, m: 2, t: 1 }]),
            (&[3, 2, 1], &[StripSpec { r: 2, m: 1, t: 1 }, StripSpec { r: 3, m: 1, t: 1 }]),
        ];
        for (raw, specs) in cases {
            let lam = Partition::new(raw).unwrap();
            let expected = main_identity(&lam, specs).unwrap();
            for n in lam.height() + 1..lam.height() + 4 {
                let derived = derive_main_identity(&lam, specs, n).unwrap();
                assert_eq!(derived, expected);
                assert_eq!(derived.rhs.len(), specs.len() + 1);
                assert!(derived.rhs.iter().all(|t| t.coeff == 1));
            }
        }
        let lam = Partition::new(&[2, 1, 1]).unwrap();
        let spec = [StripSpec::new(2, 1, 1)];
        assert_eq!(
            derive_main_identity(&lam, &spec, 3),
            Err(Error::SizeTooSmall { size: 3, min: 4 })
        );
        assert!(matches!(
            derive_main_identity(&lam, &[StripSpec::new(1, 1, 1)], 4),
            Err(Error::InvalidStripSpec(_))
        ));
    }
}
