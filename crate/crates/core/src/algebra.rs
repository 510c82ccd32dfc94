use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use crate::base::{BaseBialgebra, BaseElement, Monomial, PolynomialBialgebra};
use crate::coefficients::{Coefficient, Rational};
use crate::error::{Error, Result};
use crate::tensor::{Space, TensorElement, TensorSquare, TensorWord, WordCombination};

/// A memo table that is safe to share between threads. Two racing writers
/// can only ever store the same value for a key.
pub(crate) struct Memo<K, V> {
    table: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash, V> Memo<K, V> {
    fn new() -> Self {
        Memo {
            table: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get(&self, key: &K) -> Option<Arc<V>> {
        self.table.read().expect("memo lock poisoned").get(key).cloned()
    }

    pub(crate) fn insert(&self, key: K, value: V) -> Arc<V> {
        let value = Arc::new(value);
        self.table
            .write()
            .expect("memo lock poisoned")
            .entry(key)
            .or_insert_with(|| value.clone())
            .clone()
    }

    fn clear(&self) {
        self.table.write().expect("memo lock poisoned").clear();
    }

    fn len(&self) -> usize {
        self.table.read().expect("memo lock poisoned").len()
    }
}

/// The free commutative λ-TD algebra `Ш_Λ(A)` over a base bialgebra, with a
/// fixed weight.
///
/// The weight is normally the formal symbol `L`, so every identity computed
/// here holds for all weights at once; it can also be a rational constant.
/// All products are memoized on basis words. The caches are invisible to
/// callers: every operation is a pure function of its arguments.
pub struct TdAlgebra {
    base: Arc<dyn BaseBialgebra>,
    lambda: Coefficient,
    pub(crate) shuffle_memo: Memo<(TensorWord, TensorWord), WordCombination>,
    pub(crate) coproduct_memo: Memo<TensorWord, TensorSquare>,
    pub(crate) antipode_memo: Memo<TensorWord, WordCombination>,
}

impl TdAlgebra {
    pub fn new(base: Arc<dyn BaseBialgebra>, lambda: Coefficient) -> Self {
        TdAlgebra {
            base,
            lambda,
            shuffle_memo: Memo::new(),
            coproduct_memo: Memo::new(),
            antipode_memo: Memo::new(),
        }
    }

    /// Polynomial base on `vars` primitive generators with symbolic weight.
    pub fn polynomial(vars: usize) -> Self {
        Self::new(Arc::new(PolynomialBialgebra::new(vars)), Coefficient::lambda())
    }

    /// Polynomial base with the weight specialized to a rational.
    pub fn polynomial_at(vars: usize, lambda: Rational) -> Self {
        Self::new(Arc::new(PolynomialBialgebra::new(vars)), Coefficient::constant(lambda))
    }

    pub fn base(&self) -> &dyn BaseBialgebra {
        self.base.as_ref()
    }

    pub fn vars(&self) -> usize {
        self.base.vars()
    }

    pub fn lambda(&self) -> &Coefficient {
        &self.lambda
    }

    /// A copy with the same base and a different weight; caches are not shared.
    pub fn with_lambda(&self, lambda: Coefficient) -> TdAlgebra {
        TdAlgebra::new(self.base.clone(), lambda)
    }

    pub fn unit_monomial(&self) -> Monomial {
        self.base.unit()
    }

    /// The generator `x_{index+1}` of `A`.
    pub fn generator(&self, index: usize) -> Monomial {
        Monomial::generator(self.vars(), index)
    }

    /// `1_A` as a length-one word, the unit of `(Ш_Λ, ⋄)`.
    pub fn unit_word(&self) -> TensorWord {
        TensorWord::letter(self.unit_monomial())
    }

    pub fn unit(&self) -> TensorElement {
        TensorElement::lambda_unchecked(WordCombination::basis(self.unit_word()))
    }

    /// The Ш_Λ element given by a single word.
    pub fn word(&self, w: TensorWord) -> Result<TensorElement> {
        self.check_word(&w)?;
        TensorElement::word(Space::Lambda, w)
    }

    pub fn check_word(&self, w: &TensorWord) -> Result<()> {
        for m in w.letters() {
            if m.vars() != self.vars() {
                return Err(Error::VarsMismatch {
                    expected: self.vars(),
                    found: m.vars(),
                });
            }
        }
        Ok(())
    }

    pub fn check_element(&self, e: &TensorElement) -> Result<()> {
        e.terms().keys().try_for_each(|w| self.check_word(w))
    }

    pub(crate) fn base_product(&self, a: &Monomial, b: &Monomial) -> BaseElement {
        self.base
            .mul_basis(a, b)
            .into_iter()
            .map(|(r, m)| (m, Coefficient::constant(r)))
            .collect()
    }

    /// Drops every memoized product, coproduct and antipode value.
    pub fn clear_caches(&self) {
        self.shuffle_memo.clear();
        self.coproduct_memo.clear();
        self.antipode_memo.clear();
    }

    /// Number of memoized entries, for diagnostics.
    pub fn cache_sizes(&self) -> (usize, usize, usize) {
        (self.shuffle_memo.len(), self.coproduct_memo.len(), self.antipode_memo.len())
    }
}

impl fmt::Debug for TdAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TdAlgebra")
            .field("base", &self.base)
            .field("lambda", &self.lambda.to_string())
            .finish()
    }
}
