mod common;

use common::*;
use proptest::prelude::*;
use tdhopf_core::{TensorSquare, TensorWord};

fn square(vars: usize, max_len: usize) -> impl Strategy<Value = TensorSquare> {
    proptest::collection::vec((word(vars, max_len), word(vars, max_len), coefficient()), 1..=2)
        .prop_map(|terms| terms.into_iter().map(|(u, v, c)| ((u, v), c)).collect())
}

#[test]
fn right_counit_witness_for_each_generator() {
    for vars in 1..=3 {
        let a = tdhopf_core::TdAlgebra::polynomial(vars);
        for i in 0..vars {
            let x = a.word(TensorWord::letter(a.generator(i))).unwrap();
            let px = a.p_shift(&x).unwrap();
            let d = a.coproduct(&px).unwrap();
            assert!(a.counit_right(&d).is_zero());
            assert_ne!(a.counit_right(&d), px);
        }
    }
}

#[test]
fn coproduct_of_shifted_unit() {
    let a = algebra();
    let p1 = a.p_shift(&a.unit()).unwrap();
    let one = a.unit_word();
    let expected = TensorSquare::basis((one.clone(), one.prepend(a.unit_monomial())));
    assert_eq!(a.coproduct(&p1).unwrap(), expected);
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn coproduct_multiplicative(x in lambda_element(VARS, 3, 2), y in lambda_element(VARS, 3, 2)) {
        let a = algebra();
        let lhs = a.coproduct(&a.diamond(&x, &y).unwrap()).unwrap();
        let rhs = a.square_mul(&a.coproduct(&x).unwrap(), &a.coproduct(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_multiplicative(x in lambda_element(VARS, 3, 2), y in lambda_element(VARS, 3, 2)) {
        let a = algebra();
        let lhs = a.counit(&a.diamond(&x, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs, &a.counit(&x).unwrap() * &a.counit(&y).unwrap());
    }

    #[test]
    fn coassociative(x in lambda_element(VARS, 4, 2)) {
        let a = algebra();
        let (l, r) = a.coassociativity_sides(&x).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn left_counital(x in lambda_element(VARS, 4, 3)) {
        let a = algebra();
        prop_assert_eq!(a.counit_left(&a.coproduct(&x).unwrap()), x);
    }

    #[test]
    fn cocycle(x in lambda_element(VARS, 3, 2)) {
        let a = algebra();
        let lhs = a.coproduct(&a.p_shift(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, a.square_op(&a.coproduct(&x).unwrap()));
    }

    #[test]
    fn square_operator_is_lambda_td(x in square(VARS, 2), y in square(VARS, 2)) {
        let a = algebra();
        let (lhs, rhs) = a.square_td_sides(&x, &y);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn interchange(x in square(VARS, 3)) {
        let a = algebra();
        prop_assert_eq!(a.id_tensor_coproduct(&a.square_op(&x)), a.triple_op_last(&a.id_tensor_coproduct(&x)));
        prop_assert_eq!(a.coproduct_tensor_id(&a.square_op(&x)), a.triple_op_last(&a.coproduct_tensor_id(&x)));
    }

    #[test]
    fn reduced_coproduct_on_kernel(x in lambda_element(VARS, 3, 2)) {
        let a = algebra();
        let (_, k) = a.counit_split(&x).unwrap();
        let reduced = a.reduced_coproduct(&k).unwrap();
        let mut full = a.coproduct(&k).unwrap();
        full.sub_assign(&reduced);
        let expected: TensorSquare = k.terms().iter().map(|(w, c)| ((a.unit_word(), w.clone()), c.clone())).collect();
        prop_assert_eq!(full, expected);
    }
}
