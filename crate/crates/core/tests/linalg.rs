mod common;

use proptest::prelude::*;
use symplie_core::linalg::{
    kernel_basis, solve_membership, Echelon, Membership, Rational, SparseMatrix, SparseVector,
};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = SparseMatrix> {
    prop::collection::vec(common::sparse(cols, 4), rows).prop_map(move |r| SparseMatrix::from_rows(cols, r))
}

fn shaped_matrix() -> impl Strategy<Value = SparseMatrix> {
    (1usize..7, 1usize..9).prop_flat_map(|(r, c)| matrix(r, c))
}

#[test]
fn kernel_of_known_matrix() {
    let m = SparseMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
    let k = kernel_basis(&m);
    assert_eq!(k.len(), 2);
    for v in &k {
        assert!(m.mul_vec(v).unwrap().is_zero());
    }
    assert_eq!(m.rank(), 1);
}

#[test]
fn membership_coefficients() {
    let span = vec![
        SparseVector::from_dense(&[Rational::one(), Rational::zero()]),
        SparseVector::from_dense(&[Rational::one(), Rational::one()]),
    ];
    let v = SparseVector::from_dense(&[Rational::from_int(3), Rational::new(1, 2)]);
    match solve_membership(&v, &span).unwrap() {
        Membership::InSpan(c) => assert_eq!(c, vec![Rational::new(5, 2), Rational::new(1, 2)]),
        Membership::NotInSpan => panic!("vector lies in the span"),
    }
}

proptest! {
    #![proptest_config(common::config(256))]

    #[test]
    fn rank_nullity(m in shaped_matrix()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.len(), m.ncols());
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn normal_form_ignores_insertion_order(rows in prop::collection::vec(common::sparse(6, 4), 1..6), v in common::sparse(6, 6)) {
        let mut a = Echelon::new(6);
        let mut b = Echelon::new(6);
        for r in &rows {
            a.insert(r.clone());
        }
        for r in rows.iter().rev() {
            b.insert(r.clone());
        }
        prop_assert_eq!(a.rank(), b.rank());
        prop_assert_eq!(a.normal_form(&v), b.normal_form(&v));
    }

    #[test]
    fn tracked_solution_reconstructs(rows in prop::collection::vec(common::sparse(5, 3), 1..6), c in prop::collection::vec(-3i64..=3, 6)) {
        let mut e = Echelon::with_tracking(5);
        for r in &rows {
            e.insert(r.clone());
        }
        let mut target = SparseVector::zero(5);
        for (r, k) in rows.iter().zip(&c) {
            target = target.add_scaled(r, &Rational::from_int(*k));
        }
        let x = e.solve(&target).expect("combination of the rows");
        let mut back = SparseVector::zero(5);
        for (i, k) in x.iter() {
            back = back.add_scaled(&rows[i], k);
        }
        prop_assert_eq!(back, target);
    }

    #[test]
    fn rational_field_laws(a in -50i64..50, b in 1i64..30, c in -50i64..50, d in 1i64..30) {
        let x = Rational::new(a, b);
        let y = Rational::new(c, d);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&x * &y, &y * &x);
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x.clone());
        }
        let s = x.to_string();
        prop_assert_eq!(s.parse::<Rational>().unwrap(), x);
    }
}
