use schurid_core::families::{nu_construction, rectangle_identity};
use schurid_core::strip::{enumerate_specs, strip_box_count};
use schurid_core::verify::default_variable_count;
use schurid_core::{
    barred_identity, conjugate_identity, derive_main_identity, fulmek_kleber_identity,
    fulmek_kleber_via_main, gps_identity, main_identity, square_identity, square_identity_via_nu,
    verify_identity, Axis, Identity, Partition, Term,
};

fn holds(id: &Identity) -> bool {
    let m = default_variable_count(id);
    verify_identity(id, m, 3, 42).unwrap().verified
}

fn p(raw: &[u32]) -> Partition {
    Partition::new(raw).unwrap()
}

#[test]
fn main_and_barred_families_verify() {
    for lam in Partition::all_up_to_weight(7) {
        for specs in enumerate_specs(&lam, 3) {
            let main = main_identity(&lam, &specs).unwrap();
            assert_eq!(main.rhs.len(), specs.len() + 1);
            assert!(holds(&main), "{lam} {specs:?}");
            assert!(holds(&conjugate_identity(&main)), "{lam} {specs:?} conjugated");
            for axis in [Axis::Row, Axis::Column] {
                let barred = barred_identity(&lam, &specs, axis).unwrap();
                assert!(holds(&barred), "{lam} {specs:?} {axis:?}");
                assert!(holds(&conjugate_identity(&barred)));
            }
        }
    }
}

#[test]
fn every_term_has_the_same_degree() {
    for lam in Partition::all_up_to_weight(8) {
        for specs in enumerate_specs(&lam, 2) {
            let id = main_identity(&lam, &specs).unwrap();
            let d = id.degree().unwrap();
            assert!(id.terms().all(|t| t.degree() == d));
            // λ⁺ keeps the first row and the height of λ
            let boxes = strip_box_count(&lam, &specs);
            assert_eq!(d + lam.part(1) + lam.height() as u32, 2 * lam.weight() + boxes + 1);
        }
    }
}

#[test]
fn derivation_matches_construction() {
    for lam in Partition::all_up_to_weight(8) {
        for specs in enumerate_specs(&lam, 3) {
            let expected = main_identity(&lam, &specs).unwrap();
            for n in lam.height() + 1..=lam.height() + 2 {
                let derived = derive_main_identity(&lam, &specs, n).unwrap();
                assert_eq!(derived.rhs.len(), specs.len() + 1, "{lam} {specs:?} N={n}");
                assert!(derived.rhs.iter().all(|t| t.coeff == 1));
                assert_eq!(derived, expected, "{lam} {specs:?} N={n}");
            }
        }
    }
}

#[test]
fn squares_verify_and_agree_with_the_nu_route() {
    for lam in Partition::all_up_to_weight(8) {
        let sq = square_identity(&lam);
        assert_eq!(sq.rhs.len(), lam.inner_corners().len());
        assert!(holds(&sq), "{lam}");
        assert!(holds(&conjugate_identity(&sq)));
        if lam.is_empty() {
            assert!(square_identity_via_nu(&lam).is_err());
            continue;
        }
        assert_eq!(square_identity_via_nu(&lam).unwrap(), sq, "{lam}");
        let (nu, specs) = nu_construction(&lam).unwrap();
        assert_eq!(nu.height(), lam.height() + 1);
        assert_eq!(specs.len(), lam.inner_corners().len() - 1);
    }
}

#[test]
fn rectangles_have_two_terms() {
    for width in 1..=4 {
        for rows in 1..=4 {
            let rect = Partition::rectangle(width, rows);
            let sq = square_identity(&rect);
            assert_eq!(sq.rhs.len(), 2);
            assert_eq!(sq, rectangle_identity(width, rows).unwrap());
            assert!(holds(&sq));
        }
    }
}

#[test]
fn fulmek_kleber_family() {
    for lam in Partition::all_up_to_weight(8).into_iter().filter(|l| (2..=4).contains(&l.height())) {
        let fk = fulmek_kleber_identity(&lam).unwrap();
        assert!(holds(&fk), "{lam}");
        assert_eq!(fulmek_kleber_via_main(&lam).unwrap(), fk, "{lam}");
    }
    let pieri = fulmek_kleber_identity(&p(&[3, 1])).unwrap();
    let expected = Identity::new(
        vec![Term::unit(p(&[1]), p(&[3]))],
        vec![Term::unit(p(&[4]), Partition::empty()), Term::unit(p(&[3, 1]), Partition::empty())],
    )
    .unwrap();
    assert_eq!(pieri, expected);
}

/// The same alternating sums with every bracket read the other way round,
/// `[r|p] = (r^p)`.
fn gps_transposed(a: u32, b: u32, m: u32, n: u32) -> Option<Identity> {
    let rect = |r: u32, w: u32| p(&vec![r; w as usize]);
    let upper = |r: u32, w: u32, k: u32| {
        let mut v = vec![r + 1; k as usize];
        v.extend(std::iter::repeat_n(r, (w - k) as usize));
        p(&v)
    };
    let lower = |r: u32, w: u32, k: u32| {
        let mut v = vec![r; w as usize];
        v.push(k);
        Partition::new(&v).ok()
    };
    let sign = |e: u32| if e.is_multiple_of(2) { 1 } else { -1 };
    let mut rhs = Vec::new();
    for k in (a + b).saturating_sub(n).max(1)..=a {
        if k - 1 > b - 1 {
            return None;
        }
        rhs.push(Term::new(sign(a - k), lower(m, n, a + b - k)?, upper(a - 1, b - 1, k - 1)));
    }
    for k in (a + b).saturating_sub(m).max(1)..=b {
        if a + b - k > n {
            return None;
        }
        rhs.push(Term::new(sign(b - k), upper(m, n, a + b - k), lower(a - 1, b - 1, k - 1)?));
    }
    Identity::new(vec![Term::unit(rect(a, b), rect(m, n))], rhs).ok()
}

#[test]
fn gps_orientation() {
    let (mut chosen, mut transposed, mut total) = (0, 0, 0);
    for m in 1..=3 {
        for n in 1..=3 {
            for a in 1..=m {
                for b in 1..=n {
                    total += 1;
                    if holds(&gps_identity(a, b, m, n).unwrap()) {
                        chosen += 1;
                    }
                    if gps_transposed(a, b, m, n).is_some_and(|id| holds(&id)) {
                        transposed += 1;
                    }
                }
            }
        }
    }
    assert_eq!(total, 36);
    assert_eq!(chosen, 36);
    assert!(transposed < total);
}
