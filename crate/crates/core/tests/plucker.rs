use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schurid_core::plucker::{exchanges, jacobi_trudi_label};
use schurid_core::{plucker_expand, plucker_selftest, ExchangeData};

fn random_matrix(rng: &mut ChaCha8Rng, p: usize) -> Vec<Vec<BigRational>> {
    (0..p)
        .map(|_| (0..p).map(|_| BigRational::from_integer(rng.random_range(-9i64..=9).into())).collect())
        .collect()
}

#[test]
fn relation_holds_for_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checks = 0;
    for trial in 0..200 {
        let p = 2 + trial % 4;
        let a = random_matrix(&mut rng, p);
        let b = random_matrix(&mut rng, p);
        for data in ExchangeData::all(p) {
            let ex = plucker_expand(&a, &b, &data).unwrap();
            assert_eq!(ex.sum(), ex.product, "trial {trial} rows {:?}", data.rows());
            checks += 1;
        }
    }
    // 50 pairs of each size, 2^p − 1 row sets each
    assert_eq!(checks, 50 * (3 + 7 + 15 + 31));
}

#[test]
fn selftest_report() {
    let report = plucker_selftest(5, 200, 42).unwrap();
    assert_eq!(report.trials, 200);
    assert_eq!(report.checks, 50 * (3 + 7 + 15 + 31));
    assert_eq!(report.failures, 0);
    assert_eq!(plucker_selftest(5, 200, 42).unwrap(), report);
}

#[test]
fn summand_count_is_binomial() {
    let a: Vec<u8> = (0..6).collect();
    let b: Vec<u8> = (10..16).collect();
    for (rows, count) in [(vec![1], 6), (vec![2, 5], 15), (vec![1, 3, 4], 20), (vec![1, 2, 3, 4, 5, 6], 1)] {
        let data = ExchangeData::new(rows, 6).unwrap();
        let ex = exchanges(&a, &b, &data).unwrap();
        assert_eq!(ex.len(), count);
        for e in &ex {
            let mut all: Vec<u8> = e.left.iter().chain(&e.right).copied().collect();
            all.sort_unstable();
            assert_eq!(all, (0..6).chain(10..16).collect::<Vec<u8>>());
        }
    }
}

#[test]
fn row_swaps_change_the_sign() {
    let (s, lam) = jacobi_trudi_label(&[3, 1, -2, 0]).unwrap();
    assert_eq!(s, -1);
    assert_eq!(lam.parts(), &[3, 2, 2, 1]);
}
