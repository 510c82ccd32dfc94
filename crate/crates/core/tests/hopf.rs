mod common;

use std::time::Instant;

use common::*;
use proptest::prelude::*;
use tdhopf_core::{Counterexample, TdAlgebra, TensorWord, WordCombination};

/// Words of degree ≤ d by direct count: `d = Σ deg(a_i) + m - 1`.
fn count_words(vars: usize, bound: u32) -> usize {
    fn monomials(vars: usize, degree: u32) -> usize {
        (1..vars as u32).fold(1usize, |acc, i| acc * (degree + i) as usize / i as usize)
    }
    fn words(vars: usize, budget: u32) -> usize {
        (0..=budget)
            .map(|d| monomials(vars, d) * if budget > d { 1 + words(vars, budget - d - 1) } else { 1 })
            .sum()
    }
    words(vars, bound)
}

#[test]
fn enumeration_matches_count() {
    for vars in 1..=3 {
        for bound in 0..=4 {
            let a = TdAlgebra::polynomial(vars);
            let words = a.enumerate_words(bound);
            assert_eq!(words.len(), count_words(vars, bound), "vars {vars} bound {bound}");
            assert!(words.windows(2).all(|p| p[0] < p[1]));
            assert!(words.iter().all(|w| a.word_degree(w).unwrap() <= bound));
        }
    }
}

#[test]
fn exhaustive_one_variable_degree_five() {
    let a = TdAlgebra::polynomial(1);
    let t = Instant::now();
    let report = a.hopf_check(5).unwrap();
    eprintln!("1 var, degree 5: {} words in {:?}", report.words, t.elapsed());
    assert!(report.passed(), "{report:?}");
}

#[test]
fn exhaustive_two_variables_degree_four() {
    let a = TdAlgebra::polynomial(2);
    let t = Instant::now();
    let report = a.hopf_check(4).unwrap();
    eprintln!("2 vars, degree 4: {} words in {:?}", report.words, t.elapsed());
    assert_eq!(report.words, 88);
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.product_filtration.checked, 88 * 88);
}

#[test]
fn primitive_antipode_convolution() {
    let a = algebra();
    let s = a.antipode_table(1).unwrap();
    let id = tdhopf_core::LinearMapTable::identity();
    for i in 0..VARS {
        let x = a.word(TensorWord::letter(a.generator(i))).unwrap();
        assert!(a.convolution(&id, &s, &x).unwrap().is_zero());
    }
}

#[test]
fn corrupted_antipode_names_the_word() {
    let a = TdAlgebra::polynomial(1);
    let mut s = a.antipode_table(3).unwrap();
    let target = w(&[&[0], &[1]]);
    s.assign(target.clone(), WordCombination::basis(target.clone()));
    let report = a.hopf_check_with(3, &s).unwrap();
    assert!(!report.passed());
    match report.antipode.first.unwrap() {
        Counterexample::Antipode { word, computed, expected } => {
            assert_ne!(computed, expected);
            assert!(expected.is_zero() || word == a.unit_word());
        }
        other => panic!("{other:?}"),
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn split_recombines(x in lambda_element(VARS, 3, 3)) {
        let a = algebra();
        let (eps, k) = a.counit_split(&x).unwrap();
        prop_assert!(a.counit(&k).unwrap().is_zero());
        prop_assert_eq!(a.unit().scale(&eps).add(&k).unwrap(), x);
    }

    #[test]
    fn kernel_decomposition_is_unique(x in lambda_element(VARS, 3, 3), c in coefficient()) {
        let a = algebra();
        let (_, k) = a.counit_split(&x).unwrap();
        let shifted = k.add(&a.unit().scale(&c)).unwrap();
        let (eps, k2) = a.counit_split(&shifted).unwrap();
        prop_assert_eq!(eps, c);
        prop_assert_eq!(&k2, &k);
        prop_assert!(a.element_degree(&k).unwrap() <= a.element_degree(&x).unwrap());
    }

    #[test]
    fn diamond_degree_bound(x in word(VARS, 3), y in word(VARS, 3)) {
        let a = algebra();
        let bound = a.word_degree(&x).unwrap() + a.word_degree(&y).unwrap();
        for t in a.diamond_words(&x, &y).keys() {
            prop_assert!(a.word_degree(t).unwrap() <= bound);
        }
    }

    #[test]
    fn antipode_right_inverse(x in lambda_element(VARS, 3, 2)) {
        let a = algebra();
        let bound = a.element_degree(&x).unwrap();
        let s = a.antipode_table(bound).unwrap();
        let id = tdhopf_core::LinearMapTable::identity();
        let lhs = a.convolution(&id, &s, &x).unwrap();
        prop_assert_eq!(lhs, a.unit().scale(&a.counit(&x).unwrap()));
    }

    #[test]
    fn antipode_linear(x in lambda_element(VARS, 3, 2), y in lambda_element(VARS, 3, 2), c in coefficient()) {
        let a = algebra();
        let lhs = a.antipode(&x.scale(&c).add(&y).unwrap()).unwrap();
        let rhs = a.antipode(&x).unwrap().scale(&c).add(&a.antipode(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
