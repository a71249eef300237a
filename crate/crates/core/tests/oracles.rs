use num_rational::BigRational;
use num_traits::Zero;
use schurid_core::schur::{
    jacobi_trudi_det, schur_eval_bialternant, schur_eval_jacobi_trudi, schur_expand_ssyt,
    symmetric_basis_values,
};
use schurid_core::{BasisKind, EvalPoint, Partition};

#[test]
fn all_oracles_agree_at_the_staircase() {
    for lam in Partition::all_up_to_weight(6) {
        let (n, width) = (lam.height(), lam.part(1) as usize);
        let mut vars = vec![n, n + 1, 4];
        vars.retain(|&m| m > 0);
        for m in vars {
            let pt = EvalPoint::staircase(m);
            // fewer variables than rows: the bialternant is undefined, the rest vanish
            let expected = if n > m {
                assert!(schur_eval_bialternant(&lam, &pt).is_err());
                BigRational::zero()
            } else {
                schur_eval_bialternant(&lam, &pt).unwrap()
            };
            for size in [n, n + 2] {
                let h = schur_eval_jacobi_trudi(&lam, &pt, BasisKind::Complete, size).unwrap();
                assert_eq!(h, expected, "{lam} h size {size} m {m}");
            }
            for size in [width, width + 2] {
                let e = schur_eval_jacobi_trudi(&lam, &pt, BasisKind::Elementary, size).unwrap();
                assert_eq!(e, expected, "{lam} e size {size} m {m}");
            }
            assert_eq!(schur_expand_ssyt(&lam, m).unwrap().evaluate(&pt), expected);
        }
    }
}

#[test]
fn too_few_variables_vanish() {
    for lam in Partition::all_up_to_weight(6).into_iter().filter(|l| l.height() >= 2) {
        let m = lam.height() - 1;
        let pt = EvalPoint::staircase(m);
        assert!(schur_expand_ssyt(&lam, m).unwrap().is_empty());
        let e = schur_eval_jacobi_trudi(&lam, &pt, BasisKind::Elementary, lam.part(1) as usize);
        assert!(e.unwrap().is_zero());
        assert!(schur_eval_bialternant(&lam, &pt).is_err());
    }
}

#[test]
fn swapping_the_basis_conjugates() {
    let pt = EvalPoint::from_ints(&[2, -1, 5, 3]).unwrap();
    let e = symmetric_basis_values(BasisKind::Elementary, &pt, 16);
    for lam in Partition::all_up_to_weight(6) {
        let swapped = jacobi_trudi_det(&lam, &e, lam.height());
        let conj = lam.conjugate();
        let direct = schur_eval_jacobi_trudi(&conj, &pt, BasisKind::Complete, conj.height());
        assert_eq!(swapped, direct.unwrap(), "{lam}");
    }
}

#[test]
fn rational_points() {
    let coords = [(1, 2), (-3, 7), (5, 1), (2, 9)]
        .iter()
        .map(|&(p, q)| BigRational::new(p.into(), q.into()))
        .collect();
    let pt = EvalPoint::new(coords).unwrap();
    for lam in Partition::all_up_to_weight(5).into_iter().filter(|l| l.height() <= 4) {
        let b = schur_eval_bialternant(&lam, &pt).unwrap();
        assert_eq!(schur_expand_ssyt(&lam, 4).unwrap().evaluate(&pt), b);
        let h = schur_eval_jacobi_trudi(&lam, &pt, BasisKind::Complete, lam.height()).unwrap();
        assert_eq!(h, b);
    }
}

#[test]
fn kostka_numbers_of_small_shapes() {
    // coefficient of x1 x2 x3 x4 in s_λ counts standard tableaux
    let ones = [1, 1, 1, 1];
    for (raw, count) in [(&[4][..], 1), (&[3, 1], 3), (&[2, 2], 2), (&[2, 1, 1], 3), (&[1, 1, 1, 1], 1)] {
        let map = schur_expand_ssyt(&Partition::new(raw).unwrap(), 4).unwrap();
        assert_eq!(map.coefficient(&ones), count);
    }
}
