//! Exact determinants.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
/// The empty matrix has determinant 1.
pub fn det_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { m[n - 1][n - 1].clone() };
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Determinant of a rational matrix: clear each row's denominators, run
/// Bareiss over the integers and divide the scale back out.
pub fn det(m: &[Vec<BigRational>]) -> BigRational {
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
            scale *= lcm;
            ints
        })
        .collect();
    BigRational::new(det_int(rows), scale)
}
