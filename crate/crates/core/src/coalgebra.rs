//! The cocycle coproduct `Δ`, the counit `ε`, the tensor-square algebra
//! `(Ш_Λ ⊗ Ш_Λ, •, id⊗P)` and convolution of linear maps.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::TdAlgebra;
use crate::coefficients::Coefficient;
use crate::error::{Error, Result};
use crate::products::require_lambda;
use crate::tensor::{Space, TensorElement, TensorSquare, TensorTriple, TensorWord, WordCombination};

fn tensor2(a: &WordCombination, b: &WordCombination, scale: &Coefficient, out: &mut TensorSquare) {
    for (u, cu) in a {
        for (v, cv) in b {
            out.add_term((u.clone(), v.clone()), &(cu * cv) * scale);
        }
    }
}

impl TdAlgebra {
    /// `•`: componentwise `⋄` on `Ш_Λ ⊗ Ш_Λ`.
    pub fn square_mul(&self, a: &TensorSquare, b: &TensorSquare) -> TensorSquare {
        let mut out = TensorSquare::zero();
        for ((u1, v1), c1) in a {
            for ((u2, v2), c2) in b {
                let left = self.diamond_words(u1, u2);
                let right = self.diamond_words(v1, v2);
                tensor2(&left, &right, &(c1 * c2), &mut out);
            }
        }
        out
    }

    /// `id ⊗ P`.
    pub fn square_op(&self, a: &TensorSquare) -> TensorSquare {
        let one = self.unit_monomial();
        a.iter().map(|((u, v), c)| ((u.clone(), v.prepend(one.clone())), c.clone())).collect()
    }

    /// Both sides of the λ-TD identity for `id⊗P` on `(Ш_Λ ⊗ Ш_Λ, •)`.
    pub fn square_td_sides(&self, x: &TensorSquare, y: &TensorSquare) -> (TensorSquare, TensorSquare) {
        let (px, py) = (self.square_op(x), self.square_op(y));
        let lhs = self.square_mul(&px, &py);
        let p1 = self.square_op(&self.square_unit());
        let mut inner = self.square_mul(x, &py);
        inner.add_assign(&self.square_mul(&px, y));
        inner.add_scaled(&self.square_mul(x, y), self.lambda());
        inner.sub_assign(&self.square_mul(&self.square_mul(x, &p1), y));
        (lhs, self.square_op(&inner))
    }

    /// `1_A ⊗ 1_A`, the unit of `•`.
    pub fn square_unit(&self) -> TensorSquare {
        TensorSquare::basis((self.unit_word(), self.unit_word()))
    }

    /// `Δ` on a non-empty word: `Δ_A` on letters, and
    /// `Δ(a1 ⊗ a') = Δ(a1) • (id⊗P)Δ(a')` for longer words.
    pub fn coproduct_word(&self, w: &TensorWord) -> Arc<TensorSquare> {
        assert!(!w.is_empty(), "Δ is defined on Ш_Λ only");
        if let Some(hit) = self.coproduct_memo.get(w) {
            return hit;
        }
        let head = &w.letters()[0];
        let mut head_square = TensorSquare::zero();
        for (r, l, rr) in self.base().coproduct_basis(head) {
            head_square.add_term((TensorWord::letter(l), TensorWord::letter(rr)), Coefficient::constant(r));
        }
        let value = if w.len() == 1 {
            head_square
        } else {
            let tail = self.coproduct_word(&w.tail());
            self.square_mul(&head_square, &self.square_op(&tail))
        };
        self.coproduct_memo.insert(w.clone(), value)
    }

    pub(crate) fn coproduct_combination(&self, a: &WordCombination) -> TensorSquare {
        let mut out = TensorSquare::zero();
        for (w, c) in a {
            out.add_scaled(&self.coproduct_word(w), c);
        }
        out
    }

    pub fn coproduct(&self, a: &TensorElement) -> Result<TensorSquare> {
        require_lambda(a)?;
        Ok(self.coproduct_combination(a.terms()))
    }

    /// `ε(a1) = ε_A(a1)`, and `ε` vanishes on words of length ≥ 2.
    pub fn counit_word(&self, w: &TensorWord) -> Coefficient {
        match w.letters() {
            [a1] => Coefficient::constant(self.base().counit_basis(a1)),
            _ => Coefficient::zero(),
        }
    }

    pub(crate) fn counit_combination(&self, a: &WordCombination) -> Coefficient {
        let mut acc = Coefficient::zero();
        for (w, c) in a {
            acc += &(c * &self.counit_word(w));
        }
        acc
    }

    pub fn counit(&self, a: &TensorElement) -> Result<Coefficient> {
        require_lambda(a)?;
        Ok(self.counit_combination(a.terms()))
    }

    /// `Δ̃(a) = Δ(a) - 1 ⊗ a` for `a ∈ ker ε`.
    pub fn reduced_coproduct(&self, a: &TensorElement) -> Result<TensorSquare> {
        let eps = self.counit(a)?;
        if !eps.is_zero() {
            return Err(Error::NonzeroCounit(eps));
        }
        Ok(self.reduced_combination(a.terms()))
    }

    pub(crate) fn reduced_combination(&self, a: &WordCombination) -> TensorSquare {
        let mut out = self.coproduct_combination(a);
        let one = self.unit_word();
        for (w, c) in a {
            out.add_term((one.clone(), w.clone()), -c);
        }
        out
    }

    /// `(ε ⊗ id)`, with `k ⊗ Ш_Λ` identified with `Ш_Λ`.
    pub fn counit_left(&self, a: &TensorSquare) -> TensorElement {
        let mut out = WordCombination::zero();
        for ((u, v), c) in a {
            out.add_term(v.clone(), c * &self.counit_word(u));
        }
        TensorElement::lambda_unchecked(out)
    }

    /// `(id ⊗ ε)`, with `Ш_Λ ⊗ k` identified with `Ш_Λ`.
    pub fn counit_right(&self, a: &TensorSquare) -> TensorElement {
        let mut out = WordCombination::zero();
        for ((u, v), c) in a {
            out.add_term(u.clone(), c * &self.counit_word(v));
        }
        TensorElement::lambda_unchecked(out)
    }

    /// `(id ⊗ Δ)`.
    pub fn id_tensor_coproduct(&self, a: &TensorSquare) -> TensorTriple {
        let mut out = TensorTriple::zero();
        for ((u, v), c) in a {
            for ((v1, v2), d) in self.coproduct_word(v).iter() {
                out.add_term((u.clone(), v1.clone(), v2.clone()), c * d);
            }
        }
        out
    }

    /// `(Δ ⊗ id)`.
    pub fn coproduct_tensor_id(&self, a: &TensorSquare) -> TensorTriple {
        let mut out = TensorTriple::zero();
        for ((u, v), c) in a {
            for ((u1, u2), d) in self.coproduct_word(u).iter() {
                out.add_term((u1.clone(), u2.clone(), v.clone()), c * d);
            }
        }
        out
    }

    /// `(id ⊗ id ⊗ P)`.
    pub fn triple_op_last(&self, a: &TensorTriple) -> TensorTriple {
        let one = self.unit_monomial();
        a.iter()
            .map(|((x, y, z), c)| ((x.clone(), y.clone(), z.prepend(one.clone())), c.clone()))
            .collect()
    }

    /// Both association orders `((id⊗Δ)Δ(a), (Δ⊗id)Δ(a))` as flat triples.
    pub fn coassociativity_sides(&self, a: &TensorElement) -> Result<(TensorTriple, TensorTriple)> {
        let d = self.coproduct(a)?;
        Ok((self.id_tensor_coproduct(&d), self.coproduct_tensor_id(&d)))
    }

    /// `m ∘ (f ⊗ g) ∘ Δ`, multiplied with `⋄`.
    pub fn convolution(&self, f: &LinearMapTable, g: &LinearMapTable, a: &TensorElement) -> Result<TensorElement> {
        let d = self.coproduct(a)?;
        let mut out = WordCombination::zero();
        for ((u, v), c) in &d {
            let fu = f.apply_word(self, u)?;
            let gv = g.apply_word(self, v)?;
            out.add_scaled(&self.diamond_combinations(&fu, &gv), c);
        }
        Ok(TensorElement::lambda_unchecked(out))
    }
}

/// How a [`LinearMapTable`] treats words without an explicit value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefaultRule {
    Identity,
    /// `e = μ ∘ ε`: a word goes to `ε(w)·1_A`.
    CounitUnit,
    Zero,
    Reject,
}

/// A linear map `Ш_Λ -> Ш_Λ` given by its values on basis words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMapTable {
    assigned: BTreeMap<TensorWord, WordCombination>,
    default: DefaultRule,
}

impl LinearMapTable {
    pub fn new(default: DefaultRule) -> Self {
        LinearMapTable {
            assigned: BTreeMap::new(),
            default,
        }
    }

    pub fn identity() -> Self {
        Self::new(DefaultRule::Identity)
    }

    pub fn counit_unit() -> Self {
        Self::new(DefaultRule::CounitUnit)
    }

    pub fn assign(&mut self, w: TensorWord, value: WordCombination) {
        self.assigned.insert(w, value);
    }

    pub fn with(mut self, w: TensorWord, value: WordCombination) -> Self {
        self.assign(w, value);
        self
    }

    pub fn assigned(&self) -> impl Iterator<Item = (&TensorWord, &WordCombination)> {
        self.assigned.iter()
    }

    pub fn default_rule(&self) -> DefaultRule {
        self.default
    }

    pub fn apply_word(&self, alg: &TdAlgebra, w: &TensorWord) -> Result<WordCombination> {
        if let Some(v) = self.assigned.get(w) {
            return Ok(v.clone());
        }
        match self.default {
            DefaultRule::Identity => Ok(WordCombination::basis(w.clone())),
            DefaultRule::CounitUnit => Ok(WordCombination::term(alg.unit_word(), alg.counit_word(w))),
            DefaultRule::Zero => Ok(WordCombination::zero()),
            DefaultRule::Reject => Err(Error::UnassignedWord(w.clone())),
        }
    }

    pub fn apply(&self, alg: &TdAlgebra, a: &TensorElement) -> Result<TensorElement> {
        let mut out = WordCombination::zero();
        for (w, c) in a.terms() {
            out.add_scaled(&self.apply_word(alg, w)?, c);
        }
        TensorElement::new(Space::Lambda, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Monomial;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn w(letters: &[&[u16]]) -> TensorWord {
        TensorWord::new(letters.iter().map(|e| m(e)).collect())
    }

    fn pair(l: &[&[u16]], r: &[&[u16]]) -> (TensorWord, TensorWord) {
        (w(l), w(r))
    }

    const X: &[u16] = &[1, 0];
    const Y: &[u16] = &[0, 1];
    const U: &[u16] = &[0, 0];

    #[test]
    fn square_mul_examples() {
        let a = TdAlgebra::polynomial(2);
        let left = TensorSquare::basis(pair(&[X], &[U]));
        let right = TensorSquare::basis(pair(&[U], &[Y]));
        assert_eq!(a.square_mul(&left, &right), TensorSquare::basis(pair(&[X], &[Y])));

        let xy = TensorSquare::term(pair(&[X, Y], &[Y]), Coefficient::lambda());
        assert_eq!(a.square_mul(&a.square_unit(), &xy), xy);

        let s = TensorSquare::basis(pair(&[X], &[Y]));
        let yy = a.diamond_words(&w(&[Y]), &w(&[Y]));
        let mut expected = TensorSquare::zero();
        tensor2(&WordCombination::basis(w(&[&[2, 0]])), &yy, &Coefficient::one(), &mut expected);
        assert_eq!(a.square_mul(&s, &s), expected);
    }

    #[test]
    fn square_op_examples() {
        let a = TdAlgebra::polynomial(2);
        assert_eq!(a.square_op(&TensorSquare::basis(pair(&[X], &[Y]))), TensorSquare::basis(pair(&[X], &[U, Y])));
        let two: TensorSquare = [(pair(&[X], &[Y]), Coefficient::one()), (pair(&[Y], &[X, X]), Coefficient::from(2))]
            .into_iter()
            .collect();
        let expected: TensorSquare = [(pair(&[X], &[U, Y]), Coefficient::one()), (pair(&[Y], &[U, X, X]), Coefficient::from(2))]
            .into_iter()
            .collect();
        assert_eq!(a.square_op(&two), expected);
        assert_eq!(a.square_op(&a.square_unit()), TensorSquare::basis(pair(&[U], &[U, U])));
    }

    #[test]
    fn coproduct_examples() {
        let a = TdAlgebra::polynomial(2);
        assert_eq!(a.coproduct(&a.unit()).unwrap(), a.square_unit());

        // Δ(P(x)) = x ⊗ P(1) + 1 ⊗ P(x)
        let px = a.word(w(&[U, X])).unwrap();
        let expected: TensorSquare = [(pair(&[X], &[U, U]), Coefficient::one()), (pair(&[U], &[U, X]), Coefficient::one())]
            .into_iter()
            .collect();
        assert_eq!(a.coproduct(&px).unwrap(), expected);

        // Δ(x ⊗ 1) = x ⊗ (1⊗1) + 1 ⊗ (x⊗1)
        let x1 = a.word(w(&[X, U])).unwrap();
        let expected: TensorSquare = [(pair(&[X], &[U, U]), Coefficient::one()), (pair(&[U], &[X, U]), Coefficient::one())]
            .into_iter()
            .collect();
        assert_eq!(a.coproduct(&x1).unwrap(), expected);
    }

    #[test]
    fn counit_examples() {
        let a = TdAlgebra::polynomial(2);
        assert_eq!(a.counit(&a.unit()).unwrap(), Coefficient::one());
        assert!(a.counit(&a.word(w(&[X, Y])).unwrap()).unwrap().is_zero());
        let e = a.unit().scale(&Coefficient::from(3)).add(&a.word(w(&[X])).unwrap()).unwrap();
        assert_eq!(a.counit(&e).unwrap(), Coefficient::from(3));
    }

    #[test]
    fn reduced_coproduct_examples() {
        let a = TdAlgebra::polynomial(2);
        let x = a.word(w(&[X])).unwrap();
        assert_eq!(a.reduced_coproduct(&x).unwrap(), TensorSquare::basis(pair(&[X], &[U])));
        let p1 = a.word(w(&[U, U])).unwrap();
        assert!(a.reduced_coproduct(&p1).unwrap().is_zero());
        assert!(a.reduced_coproduct(&TensorElement::zero(Space::Lambda)).unwrap().is_zero());
        assert_eq!(a.reduced_coproduct(&a.unit()).unwrap_err(), Error::NonzeroCounit(Coefficient::one()));
    }

    #[test]
    fn convolution_examples() {
        let a = TdAlgebra::polynomial(2);
        let id = LinearMapTable::identity();
        assert_eq!(a.convolution(&id, &id, &a.unit()).unwrap(), a.unit());

        let e = LinearMapTable::counit_unit();
        let sample = a.word(w(&[X, U, Y])).unwrap().add(&a.word(w(&[&[1, 1]])).unwrap().scale(&Coefficient::lambda())).unwrap();
        assert_eq!(a.convolution(&e, &id, &sample).unwrap(), sample);

        // S(x) = -x, S(1) = 1 makes (id ∗ S)(x) vanish.
        let s = LinearMapTable::new(DefaultRule::Reject)
            .with(w(&[X]), WordCombination::term(w(&[X]), Coefficient::from(-1)))
            .with(w(&[U]), WordCombination::basis(w(&[U])));
        assert!(a.convolution(&id, &s, &a.word(w(&[X])).unwrap()).unwrap().is_zero());

        let strict = LinearMapTable::new(DefaultRule::Reject);
        assert_eq!(a.convolution(&id, &strict, &a.unit()).unwrap_err(), Error::UnassignedWord(w(&[U])));
    }

    #[test]
    fn right_counit_fails_on_shifted_generators() {
        let a = TdAlgebra::polynomial(3);
        for i in 0..3 {
            let px = a.p_shift(&a.word(TensorWord::letter(a.generator(i))).unwrap()).unwrap();
            let d = a.coproduct(&px).unwrap();
            assert!(a.counit_right(&d).is_zero());
            assert!(!px.is_zero());
            assert_eq!(a.counit_left(&d), px);
        }
    }
}
