mod common;

use proptest::prelude::*;
use symplie_core::free_lie::{is_lyndon, lyndon_words, witt_dimension, FreeLie, LieElement};

fn lie_element(f: &FreeLie, degree: usize) -> impl Strategy<Value = LieElement> {
    let dim = f.dim(degree);
    common::sparse(dim, 4).prop_map(move |v| LieElement::from_coords(degree, v))
}

#[test]
fn witt_numbers() {
    assert_eq!(witt_dimension(6, 1), 6);
    assert_eq!(witt_dimension(6, 2), 15);
    assert_eq!(witt_dimension(6, 3), 70);
    assert_eq!(witt_dimension(6, 5), 1554);
    let f = FreeLie::new(2);
    for m in 1..=6 {
        assert_eq!(f.dim(m) as u128, witt_dimension(4, m));
    }
}

#[test]
fn lyndon_enumeration() {
    let w = lyndon_words(2, 4);
    assert_eq!(w, vec![vec![0, 0, 0, 1], vec![0, 0, 1, 1], vec![0, 1, 1, 1]]);
    assert!(w.iter().all(|x| is_lyndon(x)));
    assert!(!is_lyndon(&[1, 0]));
}

#[test]
fn theta_is_invariant() {
    use symplie_core::sp_rep::SpGenerator;
    let f = FreeLie::new(3);
    let t = f.theta();
    for x in SpGenerator::all(3) {
        assert!(f.sp_act(x, &t).is_zero());
    }
}

proptest! {
    #![proptest_config(common::config(256))]

    #[test]
    fn antisymmetry(x in lie_element(&FreeLie::new(3), 1), y in lie_element(&FreeLie::new(3), 2)) {
        let f = FreeLie::new(3);
        let minus = symplie_core::linalg::Rational::from_int(-1);
        prop_assert_eq!(f.bracket(&x, &y), f.bracket(&y, &x).scale(&minus));
        prop_assert!(f.bracket(&y, &y).is_zero());
    }

    #[test]
    fn jacobi(x in lie_element(&FreeLie::new(2), 1), y in lie_element(&FreeLie::new(2), 2), z in lie_element(&FreeLie::new(2), 1)) {
        let f = FreeLie::new(2);
        let a = f.bracket(&x, &f.bracket(&y, &z));
        let b = f.bracket(&y, &f.bracket(&z, &x));
        let c = f.bracket(&z, &f.bracket(&x, &y));
        prop_assert!(a.add(&b).add(&c).is_zero());
    }

    #[test]
    fn tensor_round_trip(x in lie_element(&FreeLie::new(2), 4)) {
        let f = FreeLie::new(2);
        let t = f.to_tensor(&x);
        prop_assert_eq!(f.from_tensor(&t).unwrap(), x.clone());
        prop_assert_eq!(f.dynkin_projection(&t).unwrap(), x);
    }
}
