#![allow(dead_code)]

use std::collections::HashMap;

use proptest::prelude::*;
use tdhopf_core::{Coefficient, Monomial, Space, TdAlgebra, TensorElement, TensorWord, WordCombination};

pub const VARS: usize = 2;

pub fn m(e: &[u16]) -> Monomial {
    Monomial::from_exponents(e)
}

pub fn w(letters: &[&[u16]]) -> TensorWord {
    TensorWord::new(letters.iter().map(|e| m(e)).collect())
}

pub fn l() -> Coefficient {
    Coefficient::lambda()
}

pub fn int(n: i64) -> Coefficient {
    Coefficient::from(n)
}

pub fn comb(terms: &[(TensorWord, Coefficient)]) -> WordCombination {
    terms.iter().cloned().collect()
}

/// Shuffle through the closed recursion
/// `a⊔b = a1⊗(a'⊔b) + b1⊗(a⊔b') - a1b1⊗1⊗(a'⊔b')` (tails not both empty),
/// `a1⊔b1 = a1⊗b1 + b1⊗a1 + λ a1b1 - a1b1⊗1`.
pub struct OracleShuffle {
    lambda: Coefficient,
    unit: Monomial,
    memo: HashMap<(Vec<Monomial>, Vec<Monomial>), WordCombination>,
}

impl OracleShuffle {
    pub fn new(vars: usize, lambda: Coefficient) -> Self {
        OracleShuffle {
            lambda,
            unit: Monomial::unit(vars),
            memo: HashMap::new(),
        }
    }

    fn prefix(head: &[Monomial], tail: &WordCombination) -> WordCombination {
        tail.iter()
            .map(|(t, c)| {
                let mut letters = head.to_vec();
                letters.extend_from_slice(t.letters());
                (TensorWord::new(letters), c.clone())
            })
            .collect()
    }

    pub fn words(&mut self, a: &[Monomial], b: &[Monomial]) -> WordCombination {
        if a.is_empty() {
            return WordCombination::basis(TensorWord::new(b.to_vec()));
        }
        if b.is_empty() {
            return WordCombination::basis(TensorWord::new(a.to_vec()));
        }
        let key = (a.to_vec(), b.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let ab = a[0].times(&b[0]);
        let mut out = Self::prefix(&a[..1], &self.words(&a[1..], b));
        out.add_assign(&Self::prefix(&b[..1], &self.words(a, &b[1..])));
        if a.len() == 1 && b.len() == 1 {
            out.add_term(TensorWord::new(vec![ab.clone()]), self.lambda.clone());
            out.add_term(TensorWord::new(vec![ab, self.unit.clone()]), int(-1));
        } else {
            let rest = self.words(&a[1..], &b[1..]);
            out.sub_assign(&Self::prefix(&[ab, self.unit.clone()], &rest));
        }
        self.memo.insert(key, out.clone());
        out
    }

    pub fn combinations(&mut self, a: &WordCombination, b: &WordCombination) -> WordCombination {
        let mut out = WordCombination::zero();
        for (u, cu) in a {
            for (v, cv) in b {
                out.add_scaled(&self.words(u.letters(), v.letters()), &(cu * cv));
            }
        }
        out
    }
}

pub fn monomial(vars: usize, max_degree: u16) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_degree, vars)
        .prop_filter("bounded degree", move |e| e.iter().sum::<u16>() <= max_degree)
        .prop_map(|e| Monomial::from_exponents(&e))
}

pub fn word(vars: usize, max_len: usize) -> impl Strategy<Value = TensorWord> {
    proptest::collection::vec(monomial(vars, 2), 1..=max_len).prop_map(TensorWord::new)
}

pub fn coefficient() -> impl Strategy<Value = Coefficient> {
    prop_oneof![
        Just(int(1)),
        Just(int(-1)),
        Just(Coefficient::constant(tdhopf_core::Rational::new(1, 2))),
        Just(l()),
        Just(&l() - &int(1)),
        Just(int(2)),
    ]
}

pub fn combination(vars: usize, max_len: usize, max_terms: usize) -> impl Strategy<Value = WordCombination> {
    proptest::collection::vec((word(vars, max_len), coefficient()), 1..=max_terms)
        .prop_map(|terms| terms.into_iter().collect())
}

pub fn lambda_element(vars: usize, max_len: usize, max_terms: usize) -> impl Strategy<Value = TensorElement> {
    combination(vars, max_len, max_terms).prop_map(|c| TensorElement::new(Space::Lambda, c).unwrap())
}

pub fn plus_element(vars: usize, max_len: usize) -> impl Strategy<Value = TensorElement> {
    (combination(vars, max_len, 2), coefficient(), any::<bool>()).prop_map(|(c, s, with_scalar)| {
        let mut terms = c;
        if with_scalar {
            terms.add_term(TensorWord::empty(), s);
        }
        TensorElement::new(Space::Plus, terms).unwrap()
    })
}

pub fn algebra() -> TdAlgebra {
    TdAlgebra::polynomial(VARS)
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::with_cases(cases)
    }
}
