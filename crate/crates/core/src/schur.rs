//! Schur polynomials in finitely many variables, computed three independent
//! ways: the bialternant ratio, Jacobi–Trudi determinants in h or e, and a
//! brute-force semistandard tableau expansion.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::Partition;

/// A point `(t_1, …, t_m)` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvalPoint {
    coords: Vec<BigRational>,
}

impl EvalPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPoint);
        }
        Ok(EvalPoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        EvalPoint::new(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// The point `(1, 2, …, m)`.
    pub fn staircase(m: usize) -> Self {
        let coords = (1..=m as i64).map(|c| BigRational::from_integer(c.into())).collect();
        EvalPoint { coords }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Number of variables m.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn has_distinct_coords(&self) -> bool {
        let mut sorted = self.coords.clone();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    pub fn scaled(&self, c: &BigRational) -> EvalPoint {
        EvalPoint { coords: self.coords.iter().map(|t| t * c).collect() }
    }
}

/// Which family of symmetric functions fills a Jacobi–Trudi matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// Complete homogeneous h_k.
    Complete,
    /// Elementary e_k.
    Elementary,
}

/// Values of h_0..=h_max or e_0..=e_max at `point`.
pub fn symmetric_basis_values(kind: BasisKind, point: &EvalPoint, max_k: usize) -> Vec<BigRational> {
    let mut values = vec![BigRational::zero(); max_k + 1];
    values[0] = BigRational::one();
    for t in point.coords() {
        match kind {
            // h_k(t_1..t_j) = h_k(t_1..t_{j-1}) + t_j h_{k-1}(t_1..t_j)
            BasisKind::Complete => {
                for k in 1..=max_k {
                    let add = t * &values[k - 1];
                    values[k] += add;
                }
            }
            // e_k(t_1..t_j) = e_k(t_1..t_{j-1}) + t_j e_{k-1}(t_1..t_{j-1})
            BasisKind::Elementary => {
                for k in (1..=max_k).rev() {
                    let add = t * &values[k - 1];
                    values[k] += add;
                }
            }
        }
    }
    values
}

/// `det ‖v_{rows_i − i + j}‖` over `size × size`, reading `v_k` as 0 for
/// negative k. `values` must cover index `rows_1 + size − 1`.
pub fn jacobi_trudi_det(rows: &Partition, values: &[BigRational], size: usize) -> BigRational {
    let matrix: Vec<Vec<BigRational>> = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| {
                    let k = rows.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        BigRational::zero()
                    } else {
                        values.get(k as usize).cloned().unwrap_or_else(BigRational::zero)
                    }
                })
                .collect()
        })
        .collect();
    linalg::det(&matrix)
}

/// s_λ at `point` from the Jacobi–Trudi determinant of the given kind.
/// The h form needs `size ≥ ℓ(λ)`, the e form `size ≥ λ_1`.
pub fn schur_eval_jacobi_trudi(
    lambda: &Partition,
    point: &EvalPoint,
    kind: BasisKind,
    size: usize,
) -> Result<BigRational> {
    let rows = match kind {
        BasisKind::Complete => lambda.clone(),
        BasisKind::Elementary => lambda.conjugate(),
    };
    let min = rows.height();
    if size < min {
        return Err(Error::SizeTooSmall { size, min });
    }
    let values = symmetric_basis_values(kind, point, rows.part(1) as usize + size);
    Ok(jacobi_trudi_det(&rows, &values, size))
}

/// s_λ at `point` as `det(t_i^{λ_j + m − j}) / det(t_i^{m − j})`.
pub fn schur_eval_bialternant(lambda: &Partition, point: &EvalPoint) -> Result<BigRational> {
    Bialternant::new(point)?.eval(lambda)
}

/// Bialternant evaluator bound to one point, caching powers and the
/// Vandermonde denominator across partitions.
#[derive(Debug, Clone)]
pub struct Bialternant {
    coords: Vec<BigRational>,
    powers: Vec<Vec<BigRational>>,
    vandermonde: BigRational,
}

impl Bialternant {
    pub fn new(point: &EvalPoint) -> Result<Self> {
        if !point.has_distinct_coords() {
            return Err(Error::RepeatedCoordinates);
        }
        let m = point.len();
        let coords = point.coords().to_vec();
        let vandermonde_matrix: Vec<Vec<BigRational>> = coords
            .iter()
            .map(|t| (0..m).map(|j| t.pow((m - 1 - j) as i32)).collect())
            .collect();
        let vandermonde = linalg::det(&vandermonde_matrix);
        debug_assert!(!vandermonde.is_zero());
        Ok(Bialternant { coords, powers: vec![Vec::new(); m], vandermonde })
    }

    fn power(&mut self, i: usize, e: usize) -> BigRational {
        let row = &mut self.powers[i];
        if row.is_empty() {
            row.push(BigRational::one());
        }
        while row.len() <= e {
            let next = row.last().unwrap() * &self.coords[i];
            row.push(next);
        }
        row[e].clone()
    }

    pub fn eval(&mut self, lambda: &Partition) -> Result<BigRational> {
        let m = self.coords.len();
        if lambda.height() > m {
            return Err(Error::HeightExceedsVariables { height: lambda.height(), vars: m });
        }
        let matrix: Vec<Vec<BigRational>> = (0..m)
            .map(|i| {
                (1..=m)
                    .map(|j| self.power(i, lambda.part(j) as usize + m - j))
                    .collect()
            })
            .collect();
        Ok(linalg::det(&matrix) / &self.vandermonde)
    }
}

/// Monomial expansion `exponent vector ↦ coefficient`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonomialMap {
    terms: BTreeMap<Vec<u32>, u64>,
}

impl MonomialMap {
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, u64> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> u64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients, i.e. the value at (1, …, 1).
    pub fn coefficient_sum(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn evaluate(&self, point: &EvalPoint) -> BigRational {
        let mut total = BigRational::zero();
        for (exps, &c) in &self.terms {
            let mut term = BigRational::from_integer(BigInt::from(c));
            for (t, &e) in point.coords().iter().zip(exps) {
                term *= t.pow(e as i32);
            }
            total += term;
        }
        total
    }
}

pub const SSYT_MAX_WEIGHT: u32 = 12;
pub const SSYT_MAX_VARS: usize = 8;

/// Expansion of s_λ(t_1..t_m) by enumerating semistandard tableaux with
/// entries in 1..=m; each tableau contributes the monomial of its content.
pub fn schur_expand_ssyt(lambda: &Partition, m: usize) -> Result<MonomialMap> {
    if lambda.weight() > SSYT_MAX_WEIGHT || m > SSYT_MAX_VARS {
        return Err(Error::TooLarge { weight: lambda.weight(), vars: m });
    }
    let mut map = MonomialMap::default();
    if lambda.height() > m {
        return Ok(map);
    }
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = lambda.parts().iter().map(|&len| vec![0; len as usize]).collect();
    let mut content = vec![0u32; m];
    let columns: Vec<u32> = lambda.conjugate().parts().to_vec();
    fill(&columns, &cells, 0, m as u32, &mut grid, &mut content, &mut map.terms);
    Ok(map)
}

fn fill(
    columns: &[u32],
    cells: &[(usize, usize)],
    at: usize,
    m: u32,
    grid: &mut Vec<Vec<u32>>,
    content: &mut Vec<u32>,
    out: &mut BTreeMap<Vec<u32>, u64>,
) {
    let Some(&(r, c)) = cells.get(at) else {
        *out.entry(content.clone()).or_insert(0) += 1;
        return;
    };
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    // column c still needs strictly larger entries in the rows below
    let below = columns[c] - r as u32 - 1;
    for v in left.max(above)..=m.saturating_sub(below) {
        grid[r][c] = v;
        content[v as usize - 1] += 1;
        fill(columns, cells, at + 1, m, grid, content, out);
        content[v as usize - 1] -= 1;
    }
}
