//! Exact verification of identities by evaluation at rational points.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::identity::{Identity, Term};
use crate::partition::Partition;
use crate::schur::{Bialternant, EvalPoint};

/// Random coordinates are distinct integers drawn from `1..=COORD_RANGE`
/// (widened to `2m` when there are more than `COORD_RANGE / 2` variables).
pub const COORD_RANGE: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub verified: bool,
    pub points_checked: usize,
    pub counterexample: Option<EvalPoint>,
}

/// One more variable than the tallest label.
pub fn default_variable_count(id: &Identity) -> usize {
    id.max_height() + 1
}

/// The deterministic point `(1, …, m)` followed by `trials` seeded random
/// points with distinct integer coordinates.
pub fn evaluation_points(m: usize, trials: usize, seed: u64) -> Vec<EvalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = COORD_RANGE.max(2 * m);
    let mut points = Vec::with_capacity(trials + 1);
    points.push(EvalPoint::staircase(m));
    for _ in 0..trials {
        let coords: Vec<BigRational> = rand::seq::index::sample(&mut rng, range, m)
            .into_iter()
            .map(|c| BigRational::from_integer(BigInt::from(c + 1)))
            .collect();
        points.push(EvalPoint::new(coords).expect("m ≥ 1"));
    }
    points
}

/// Evaluates both sides at `point` and compares them exactly.
pub fn holds_at(id: &Identity, point: &EvalPoint) -> Result<bool> {
    let mut oracle = Bialternant::new(point)?;
    let mut cache: BTreeMap<Partition, BigRational> = BTreeMap::new();
    let mut side = |terms: &[Term]| -> Result<BigRational> {
        let mut total = BigRational::zero();
        for term in terms {
            let mut product = BigRational::from_integer(term.coeff.into());
            for label in &term.factors {
                let value = match cache.get(label) {
                    Some(v) => v.clone(),
                    None => {
                        let v = oracle.eval(label)?;
                        cache.insert(label.clone(), v.clone());
                        v
                    }
                };
                product *= value;
            }
            total += product;
        }
        Ok(total)
    };
    let lhs = side(&id.lhs)?;
    let rhs = side(&id.rhs)?;
    Ok(lhs == rhs)
}

/// Checks `id` at `(1, …, m)` and at `trials` pseudo-random points, stopping
/// at the first point where the two sides differ.
pub fn verify_identity(
    id: &Identity,
    m: usize,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let height = id.max_height();
    if m == 0 || m < height {
        return Err(Error::VariableCountTooSmall { vars: m, height });
    }
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let mut points_checked = 0;
    for point in evaluation_points(m, trials, seed) {
        points_checked += 1;
        if !holds_at(id, &point)? {
            return Ok(VerificationReport {
                verified: false,
                points_checked,
                counterexample: Some(point),
            });
        }
    }
    Ok(VerificationReport { verified: true, points_checked, counterexample: None })
}
