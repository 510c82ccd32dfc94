//! Carrier modules: `Ш⁺(A) = ⊕_{n≥0} A^⊗n` and `Ш_Λ(A) = ⊕_{n≥1} A^⊗n`.
//!
//! Elements are expanded over the monomial-word basis, so equality of
//! elements is decided by comparing canonical term maps.

use std::cmp::Ordering;
use std::fmt;

use crate::base::{BaseElement, BaseSquare, Monomial};
use crate::coefficients::Coefficient;
use crate::error::{Error, Result};
use crate::linear::Combination;

/// A pure tensor of monomials `a1 ⊗ ... ⊗ am`. The empty word is the scalar `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorWord(Vec<Monomial>);

impl TensorWord {
    pub fn new(letters: Vec<Monomial>) -> Self {
        TensorWord(letters)
    }

    pub fn empty() -> Self {
        TensorWord(Vec::new())
    }

    pub fn letter(m: Monomial) -> Self {
        TensorWord(vec![m])
    }

    pub fn letters(&self) -> &[Monomial] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn head(&self) -> Option<&Monomial> {
        self.0.first()
    }

    /// Everything after the first letter; empty for words of length ≤ 1.
    pub fn tail(&self) -> TensorWord {
        TensorWord(self.0.iter().skip(1).cloned().collect())
    }

    pub fn prepend(&self, head: Monomial) -> TensorWord {
        let mut letters = Vec::with_capacity(self.0.len() + 1);
        letters.push(head);
        letters.extend_from_slice(&self.0);
        TensorWord(letters)
    }

    /// Sum of letter degrees plus `(length - 1)`.
    pub fn degree(&self) -> Result<u32> {
        if self.0.is_empty() {
            return Err(Error::EmptyWordDegree);
        }
        Ok(self.0.iter().map(Monomial::degree).sum::<u32>() + self.0.len() as u32 - 1)
    }
}

impl From<Vec<Monomial>> for TensorWord {
    fn from(letters: Vec<Monomial>) -> Self {
        TensorWord(letters)
    }
}

/// Shorter words first, then lexicographic in the monomial order.
impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which carrier an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    /// `Ш⁺(A)`, words of any length including the empty word.
    Plus,
    /// `Ш_Λ(A)`, words of length at least one.
    Lambda,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Plus => f.write_str("Ш⁺"),
            Space::Lambda => f.write_str("Ш_Λ"),
        }
    }
}

pub type WordCombination = Combination<TensorWord>;

/// An element of `Ш_Λ ⊗ Ш_Λ`.
pub type TensorSquare = Combination<(TensorWord, TensorWord)>;

/// An element of `Ш_Λ ⊗ Ш_Λ ⊗ Ш_Λ`, flat.
pub type TensorTriple = Combination<(TensorWord, TensorWord, TensorWord)>;

/// A space-tagged linear combination of words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    space: Space,
    terms: WordCombination,
}

impl TensorElement {
    pub fn zero(space: Space) -> Self {
        TensorElement {
            space,
            terms: WordCombination::zero(),
        }
    }

    /// Fails if a Ш_Λ element would contain the empty word.
    pub fn new(space: Space, terms: WordCombination) -> Result<Self> {
        if space == Space::Lambda && terms.keys().any(TensorWord::is_empty) {
            return Err(Error::EmptyWordInLambda);
        }
        Ok(TensorElement { space, terms })
    }

    /// Shorthand for `new(Space::Lambda, ..)` on combinations already known to avoid the empty word.
    pub(crate) fn lambda_unchecked(terms: WordCombination) -> Self {
        debug_assert!(!terms.keys().any(TensorWord::is_empty));
        TensorElement {
            space: Space::Lambda,
            terms,
        }
    }

    pub fn word(space: Space, w: TensorWord) -> Result<Self> {
        Self::new(space, WordCombination::basis(w))
    }

    /// A scalar of `Ш⁺`, i.e. `c` times the empty word.
    pub fn scalar(c: Coefficient) -> Self {
        TensorElement {
            space: Space::Plus,
            terms: WordCombination::term(TensorWord::empty(), c),
        }
    }

    /// Multilinear expansion of `a1 ⊗ ... ⊗ am` into the word basis.
    pub fn from_pure(space: Space, factors: &[BaseElement]) -> Result<Self> {
        let mut acc = WordCombination::basis(TensorWord::empty());
        for factor in factors {
            let mut next = WordCombination::zero();
            for (w, c) in &acc {
                for (m, d) in factor {
                    let mut letters = w.letters().to_vec();
                    letters.push(m.clone());
                    next.add_term(TensorWord(letters), c * d);
                }
            }
            acc = next;
        }
        Self::new(space, acc)
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn terms(&self) -> &WordCombination {
        &self.terms
    }

    pub fn into_terms(self) -> WordCombination {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch {
                left: self.space,
                right: other.space,
            });
        }
        Ok(TensorElement {
            space: self.space,
            terms: self.terms.plus(&other.terms),
        })
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coefficient) -> TensorElement {
        TensorElement {
            space: self.space,
            terms: self.terms.scale(c),
        }
    }

    pub fn neg(&self) -> TensorElement {
        TensorElement {
            space: self.space,
            terms: self.terms.neg(),
        }
    }

    /// The inclusion `Ш_Λ ⊂ Ш⁺`.
    pub fn embed_plus(&self) -> TensorElement {
        TensorElement {
            space: Space::Plus,
            terms: self.terms.clone(),
        }
    }

    /// Reinterprets a Ш⁺ element as a Ш_Λ element; fails on a scalar component.
    pub fn to_lambda(&self) -> Result<TensorElement> {
        Self::new(Space::Lambda, self.terms.clone())
    }

    /// Applies a coefficient transformation termwise (e.g. specializing `L`).
    pub fn map_coefficients(&self, f: impl FnMut(&Coefficient) -> Coefficient) -> TensorElement {
        TensorElement {
            space: self.space,
            terms: self.terms.map_coefficients(f),
        }
    }
}

/// Prepends `head` to every word of `tail`. A scalar component `c` of the
/// tail becomes the length-one word `c·(head)`.
pub fn graft(head: &BaseElement, tail: &WordCombination) -> WordCombination {
    let mut out = WordCombination::zero();
    for (m, c) in head {
        for (w, d) in tail {
            out.add_term(w.prepend(m.clone()), c * d);
        }
    }
    out
}

/// `graft` for a single monomial head.
pub(crate) fn graft_monomial(head: &Monomial, tail: &WordCombination) -> WordCombination {
    tail.iter().map(|(w, c)| (w.prepend(head.clone()), c.clone())).collect()
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Coefficient, body: &dyn fmt::Display) -> fmt::Result {
    let single = c.terms().len() == 1;
    let negative = single && c.leading_is_negative();
    if !first {
        f.write_str(if negative { " - " } else { " + " })?;
    } else if negative {
        f.write_str("-")?;
    }
    let mag = if negative { -c } else { c.clone() };
    if mag.is_one() {
        write!(f, "{body}")
    } else if single {
        write!(f, "{mag}*{body}")
    } else {
        write!(f, "({mag})*{body}")
    }
}

impl fmt::Display for BaseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.iter().enumerate() {
            write_term(f, i == 0, c, m)?;
        }
        Ok(())
    }
}

impl fmt::Display for BaseSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((l, r), c)) in self.iter().enumerate() {
            write_term(f, i == 0, c, &format_args!("({l} ⊗ {r})"))?;
        }
        Ok(())
    }
}

/// Canonical text form: `[x1, x2] - (1/2)*[1] + (L - 1)*[x1^2]`, `0` when empty.
impl fmt::Display for WordCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.iter().enumerate() {
            write_term(f, i == 0, c, w)?;
        }
        Ok(())
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.terms, f)
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.space, self.terms)
    }
}

struct Pair<'a>(&'a TensorWord, &'a TensorWord);

impl fmt::Display for Pair<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

struct Triple<'a>(&'a TensorWord, &'a TensorWord, &'a TensorWord);

impl fmt::Display for Triple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {} ⊗ {}", self.0, self.1, self.2)
    }
}

impl fmt::Display for TensorSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((l, r), c)) in self.iter().enumerate() {
            write_term(f, i == 0, c, &format_args!("({})", Pair(l, r)))?;
        }
        Ok(())
    }
}

impl fmt::Display for TensorTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((a, b, c), k)) in self.iter().enumerate() {
            write_term(f, i == 0, k, &format_args!("({})", Triple(a, b, c)))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Rational;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn w(letters: &[&[u16]]) -> TensorWord {
        TensorWord::new(letters.iter().map(|e| m(e)).collect())
    }

    fn be(terms: &[(&[u16], i64)]) -> BaseElement {
        terms.iter().map(|(e, c)| (m(e), Coefficient::from(*c))).collect()
    }

    const X: &[u16] = &[1, 0];
    const Y: &[u16] = &[0, 1];
    const ONE: &[u16] = &[0, 0];

    #[test]
    fn add_examples() {
        let xy = TensorElement::word(Space::Lambda, w(&[X, Y])).unwrap();
        assert!(xy.add(&xy.neg()).unwrap().is_zero());

        let x = TensorElement::word(Space::Lambda, w(&[X])).unwrap();
        let sum = x.scale(&Coefficient::lambda()).add(&x).unwrap();
        assert_eq!(sum.terms().coefficient(&w(&[X])), &Coefficient::lambda() + &Coefficient::one());

        let yy = TensorElement::word(Space::Lambda, w(&[Y, Y])).unwrap();
        assert_eq!(x.add(&yy).unwrap().terms().len(), 2);
    }

    #[test]
    fn mixing_spaces_is_rejected() {
        let x = TensorElement::word(Space::Lambda, w(&[X])).unwrap();
        let err = x.add(&TensorElement::scalar(Coefficient::one())).unwrap_err();
        assert_eq!(
            err,
            Error::SpaceMismatch {
                left: Space::Lambda,
                right: Space::Plus
            }
        );
        assert_eq!(TensorElement::word(Space::Lambda, TensorWord::empty()).unwrap_err(), Error::EmptyWordInLambda);
        assert!(TensorElement::scalar(Coefficient::one()).to_lambda().is_err());
    }

    #[test]
    fn from_pure_examples() {
        let e = TensorElement::from_pure(Space::Lambda, &[be(&[(X, 1), (ONE, 1)]), be(&[(Y, 1)])]).unwrap();
        let expected: WordCombination = [(w(&[X, Y]), Coefficient::one()), (w(&[ONE, Y]), Coefficient::one())].into_iter().collect();
        assert_eq!(e.terms(), &expected);

        let unit = TensorElement::from_pure(Space::Lambda, &[be(&[(ONE, 1)])]).unwrap();
        assert_eq!(unit.terms(), &WordCombination::basis(w(&[ONE])));

        let scaled = TensorElement::from_pure(Space::Lambda, &[be(&[(X, 2)]), be(&[(Y, 3)])]).unwrap();
        assert_eq!(scaled.terms(), &WordCombination::term(w(&[X, Y]), Coefficient::from(6)));
    }

    #[test]
    fn graft_examples() {
        let x = be(&[(X, 1)]);
        assert_eq!(graft(&x, &WordCombination::basis(w(&[Y]))), WordCombination::basis(w(&[X, Y])));

        let ab = be(&[(&[1, 1], 1)]);
        let scalar = WordCombination::term(TensorWord::empty(), Coefficient::lambda());
        assert_eq!(graft(&ab, &scalar), WordCombination::term(w(&[&[1, 1]]), Coefficient::lambda()));

        assert!(graft(&x, &WordCombination::zero()).is_zero());
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let mut words = vec![w(&[X, Y]), w(&[Y]), w(&[ONE, ONE]), w(&[X])];
        words.sort();
        assert_eq!(words, vec![w(&[X]), w(&[Y]), w(&[ONE, ONE]), w(&[X, Y])]);
    }

    #[test]
    fn degrees() {
        assert_eq!(w(&[ONE, ONE]).degree().unwrap(), 1);
        assert_eq!(w(&[X]).degree().unwrap(), 1);
        assert_eq!(w(&[X, &[2, 0]]).degree().unwrap(), 4);
        assert_eq!(TensorWord::empty().degree().unwrap_err(), Error::EmptyWordDegree);
    }

    #[test]
    fn text_rendering() {
        let e: WordCombination = [
            (w(&[X]), Coefficient::one()),
            (w(&[ONE, Y]), Coefficient::from_terms([(1, Rational::one()), (0, Rational::from(-1))])),
            (w(&[Y]), Coefficient::constant(Rational::new(-1, 2))),
        ]
        .into_iter()
        .collect();
        assert_eq!(e.to_string(), "[x1] - 1/2*[x2] + (L - 1)*[1, x2]");
        assert_eq!(WordCombination::zero().to_string(), "0");
    }

    fn arb_base() -> impl Strategy<Value = BaseElement> {
        prop::collection::vec(((0u16..3, 0u16..2), -2i64..3), 1..3)
            .prop_map(|ts| ts.into_iter().map(|((a, b), c)| (m(&[a, b]), Coefficient::from(c))).collect())
    }

    proptest! {
        #[test]
        fn from_pure_is_order_independent(factors in prop::collection::vec(arb_base(), 1..4)) {
            // Expanding right-to-left must give the same canonical element.
            let left = TensorElement::from_pure(Space::Plus, &factors).unwrap();
            let mut right = WordCombination::basis(TensorWord::empty());
            for factor in factors.iter().rev() {
                right = graft(factor, &right);
            }
            prop_assert_eq!(left.terms(), &right);
        }

        #[test]
        fn graft_is_linear(h in arb_base(), t1 in arb_base(), t2 in arb_base(), k in -3i64..4) {
            let a = TensorElement::from_pure(Space::Plus, &[t1]).unwrap().into_terms();
            let b = TensorElement::from_pure(Space::Plus, &[t2]).unwrap().into_terms();
            prop_assert_eq!(graft(&h, &a.plus(&b)), graft(&h, &a).plus(&graft(&h, &b)));
            let c = Coefficient::from(k);
            prop_assert_eq!(graft(&h.scale(&c), &a), graft(&h, &a).scale(&c));
        }
    }
}
