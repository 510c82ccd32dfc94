//! Multiplicative structure: the λ-TD shuffle `⊔` on `Ш⁺`, the product `⋄`
//! and right-shift operator `P` on `Ш_Λ`, the double product `∗_λ`,
//! operator-identity checking, and the universal extension map.

use std::fmt;

use crate::algebra::TdAlgebra;
use crate::base::{BaseElement, Monomial};
use crate::coefficients::Coefficient;
use crate::error::{Error, Result};
use crate::tensor::{graft, graft_monomial, Space, TensorElement, TensorWord, WordCombination};

/// A linear operator on `Ш_Λ` whose operator identities can be checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OperatorId {
    /// `P(a) = 1_A ⊗ a`.
    RightShift,
    Zero,
    /// `P(a) = c·a`.
    Scale(Coefficient),
    /// `P(a) = -Q(a)`.
    Negated(Box<OperatorId>),
}

impl OperatorId {
    pub fn negated(&self) -> OperatorId {
        match self {
            OperatorId::Negated(inner) => (**inner).clone(),
            other => OperatorId::Negated(Box::new(other.clone())),
        }
    }
}

impl fmt::Display for OperatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorId::RightShift => f.write_str("P"),
            OperatorId::Zero => f.write_str("0"),
            OperatorId::Scale(c) => write!(f, "({c})·id"),
            OperatorId::Negated(inner) => write!(f, "-{inner}"),
        }
    }
}

/// Operator identities. Each carries the weight it is stated with.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LawId {
    /// `P(x)P(y) = P(xP(y) + P(x)y + w·xy)`
    RotaBaxter(Coefficient),
    /// `P(x)P(y) = P(xP(y) + P(x)y - xP(1)y)`
    Td,
    /// `P(x)P(y) = P(xP(y) + P(x)y + w·xy - xP(1)y)`
    LambdaTd(Coefficient),
    /// `P(x)P(y) = P(xP(y) + P(x)y + w·xy) - xP(1)y`
    ModifiedTd(Coefficient),
}

impl LawId {
    /// The same law with its weight transformed, used for `L -> -L` duality.
    pub fn map_weight(&self, f: impl Fn(&Coefficient) -> Coefficient) -> LawId {
        match self {
            LawId::RotaBaxter(w) => LawId::RotaBaxter(f(w)),
            LawId::Td => LawId::Td,
            LawId::LambdaTd(w) => LawId::LambdaTd(f(w)),
            LawId::ModifiedTd(w) => LawId::ModifiedTd(f(w)),
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawId::RotaBaxter(w) => write!(f, "Rota-Baxter(weight {w})"),
            LawId::Td => f.write_str("TD"),
            LawId::LambdaTd(w) => write!(f, "λ-TD(weight {w})"),
            LawId::ModifiedTd(w) => write!(f, "modified λ-TD(weight {w})"),
        }
    }
}

/// The product an identity is evaluated in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ambient {
    Diamond,
    /// `∗_λ` built from the given operator.
    Star(OperatorId),
}

/// Both sides of a failed identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub index: usize,
    pub x: TensorElement,
    pub y: TensorElement,
    pub lhs: TensorElement,
    pub rhs: TensorElement,
    /// `lhs - rhs`.
    pub difference: TensorElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawVerdict {
    Holds { checked: usize },
    Violated(Box<LawViolation>),
}

impl LawVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, LawVerdict::Holds { .. })
    }
}

pub(crate) fn require_lambda(e: &TensorElement) -> Result<()> {
    match e.space() {
        Space::Lambda => Ok(()),
        Space::Plus => {
            if e.terms().keys().any(TensorWord::is_empty) {
                Err(Error::EmptyWordInLambda)
            } else {
                Ok(())
            }
        }
    }
}

impl TdAlgebra {
    /// `⊔` on two words of `Ш⁺`, by the defining recursion
    /// `a⊔b = a1⊗(a'⊔b) + b1⊗(a⊔b') + λ a1b1⊗(a'⊔b') - a1b1⊗((a'⊔1_A)⊔b')`.
    pub fn shuffle_words(&self, a: &TensorWord, b: &TensorWord) -> std::sync::Arc<WordCombination> {
        if a.is_empty() {
            return std::sync::Arc::new(WordCombination::basis(b.clone()));
        }
        if b.is_empty() {
            return std::sync::Arc::new(WordCombination::basis(a.clone()));
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.shuffle_memo.get(&key) {
            return hit;
        }

        let (a1, a_tail) = (&a.letters()[0], a.tail());
        let (b1, b_tail) = (&b.letters()[0], b.tail());
        let head = self.base_product(a1, b1);

        let mut out = graft_monomial(a1, &self.shuffle_words(&a_tail, b));
        out.add_assign(&graft_monomial(b1, &self.shuffle_words(a, &b_tail)));

        let tails = self.shuffle_words(&a_tail, &b_tail);
        out.add_scaled(&graft(&head, &tails), self.lambda());

        let with_unit = self.shuffle_words(&a_tail, &self.unit_word());
        let nested = self.shuffle_combinations(&with_unit, &WordCombination::basis(b_tail));
        out.sub_assign(&graft(&head, &nested));

        self.shuffle_memo.insert(key, out)
    }

    /// Bilinear extension of [`shuffle_words`](Self::shuffle_words).
    pub fn shuffle_combinations(&self, a: &WordCombination, b: &WordCombination) -> WordCombination {
        let mut out = WordCombination::zero();
        for (wa, ca) in a {
            for (wb, cb) in b {
                out.add_scaled(&self.shuffle_words(wa, wb), &(ca * cb));
            }
        }
        out
    }

    /// `⊔` on `Ш⁺`. Ш_Λ operands are embedded first.
    pub fn shuffle(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        let terms = self.shuffle_combinations(a.terms(), b.terms());
        TensorElement::new(Space::Plus, terms).expect("Ш⁺ admits every word")
    }

    /// `⋄` on two non-empty words: `a1b1 ⊗ (a' ⊔ b')`.
    pub fn diamond_words(&self, a: &TensorWord, b: &TensorWord) -> WordCombination {
        let (Some(a1), Some(b1)) = (a.head(), b.head()) else {
            panic!("⋄ is defined on non-empty words only");
        };
        let head = self.base_product(a1, b1);
        graft(&head, &self.shuffle_words(&a.tail(), &b.tail()))
    }

    pub(crate) fn diamond_combinations(&self, a: &WordCombination, b: &WordCombination) -> WordCombination {
        let mut out = WordCombination::zero();
        for (wa, ca) in a {
            for (wb, cb) in b {
                out.add_scaled(&self.diamond_words(wa, wb), &(ca * cb));
            }
        }
        out
    }

    /// `⋄` on `Ш_Λ`. A Ш⁺-tagged operand is accepted only if it has no scalar component.
    pub fn diamond(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        require_lambda(a)?;
        require_lambda(b)?;
        Ok(TensorElement::lambda_unchecked(self.diamond_combinations(a.terms(), b.terms())))
    }

    /// Infallible `⋄` for elements already known to be in `Ш_Λ`.
    pub(crate) fn dia(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        TensorElement::lambda_unchecked(self.diamond_combinations(a.terms(), b.terms()))
    }

    pub(crate) fn shift_combination(&self, a: &WordCombination) -> WordCombination {
        let one = self.unit_monomial();
        graft_monomial(&one, a)
    }

    /// The right-shift operator `P(a) = 1_A ⊗ a`.
    pub fn p_shift(&self, a: &TensorElement) -> Result<TensorElement> {
        require_lambda(a)?;
        Ok(TensorElement::lambda_unchecked(self.shift_combination(a.terms())))
    }

    pub fn apply_operator(&self, op: &OperatorId, a: &TensorElement) -> TensorElement {
        match op {
            OperatorId::RightShift => TensorElement::lambda_unchecked(self.shift_combination(a.terms())),
            OperatorId::Zero => TensorElement::zero(Space::Lambda),
            OperatorId::Scale(c) => a.scale(c),
            OperatorId::Negated(inner) => self.apply_operator(inner, a).neg(),
        }
    }

    /// `x ∗_λ y = x⋄P(y) + P(x)⋄y + λ x⋄y - x⋄P(1)⋄y`.
    pub fn star_lambda(&self, x: &TensorElement, y: &TensorElement, op: &OperatorId) -> Result<TensorElement> {
        require_lambda(x)?;
        require_lambda(y)?;
        Ok(self.star(x, y, op))
    }

    pub(crate) fn star(&self, x: &TensorElement, y: &TensorElement, op: &OperatorId) -> TensorElement {
        let px = self.apply_operator(op, x);
        let py = self.apply_operator(op, y);
        let p1 = self.apply_operator(op, &self.unit());
        let mut out = self.dia(x, &py).into_terms();
        out.add_assign(self.dia(&px, y).terms());
        out.add_scaled(self.dia(x, y).terms(), self.lambda());
        out.sub_assign(self.dia(&self.dia(x, &p1), y).terms());
        TensorElement::lambda_unchecked(out)
    }

    fn ambient_mul(&self, ambient: &Ambient, x: &TensorElement, y: &TensorElement) -> TensorElement {
        match ambient {
            Ambient::Diamond => self.dia(x, y),
            Ambient::Star(op) => self.star(x, y, op),
        }
    }

    /// Left and right sides of `law` for operator `op` at `(x, y)`.
    pub fn law_sides(
        &self,
        op: &OperatorId,
        law: &LawId,
        ambient: &Ambient,
        x: &TensorElement,
        y: &TensorElement,
    ) -> (TensorElement, TensorElement) {
        let p = |e: &TensorElement| self.apply_operator(op, e);
        let mul = |a: &TensorElement, b: &TensorElement| self.ambient_mul(ambient, a, b);
        let add = |a: TensorElement, b: TensorElement| a.add(&b).expect("both in Ш_Λ");

        let (px, py) = (p(x), p(y));
        let lhs = mul(&px, &py);
        let mixed = add(mul(x, &py), mul(&px, y));
        let correction = || mul(&mul(x, &p(&self.unit())), y);
        let rhs = match law {
            LawId::RotaBaxter(w) => p(&add(mixed, mul(x, y).scale(w))),
            LawId::Td => p(&add(mixed, correction().neg())),
            LawId::LambdaTd(w) => p(&add(add(mixed, mul(x, y).scale(w)), correction().neg())),
            LawId::ModifiedTd(w) => add(p(&add(mixed, mul(x, y).scale(w))), correction().neg()),
        };
        (lhs, rhs)
    }

    /// Evaluates `law` exactly on every sample pair and reports the first violation.
    pub fn check_law(
        &self,
        op: &OperatorId,
        law: &LawId,
        ambient: &Ambient,
        samples: &[(TensorElement, TensorElement)],
    ) -> Result<LawVerdict> {
        for (index, (x, y)) in samples.iter().enumerate() {
            require_lambda(x)?;
            require_lambda(y)?;
            let (x, y) = (
                TensorElement::lambda_unchecked(x.terms().clone()),
                TensorElement::lambda_unchecked(y.terms().clone()),
            );
            let (lhs, rhs) = self.law_sides(op, law, ambient, &x, &y);
            let difference = lhs.sub(&rhs).expect("both in Ш_Λ");
            if !difference.is_zero() {
                return Ok(LawVerdict::Violated(Box::new(LawViolation {
                    index,
                    x,
                    y,
                    lhs,
                    rhs,
                    difference,
                })));
            }
        }
        Ok(LawVerdict::Holds { checked: samples.len() })
    }
}

/// The minimal capability a target λ-TD algebra must offer for [`free_extension`].
pub trait TdTarget {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn unit(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Coefficient, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn operator(&self, a: &Self::Elem) -> Self::Elem;
}

fn monomial_image<T: TdTarget>(target: &T, generator_images: &[T::Elem], m: &Monomial) -> T::Elem {
    let mut acc = target.unit();
    for (i, &e) in m.exponents().iter().enumerate() {
        for _ in 0..e {
            acc = target.mul(&acc, &generator_images[i]);
        }
    }
    acc
}

/// The λ-TD homomorphism `f̄: Ш_Λ(A) -> R` extending the algebra map `f`
/// fixed by `generator_images` (one image per generator of `A`):
/// `f̄(a1) = f(a1)` and `f̄(a1 ⊗ a') = f(a1) P(f̄(a'))`.
pub fn free_extension<T: TdTarget>(target: &T, generator_images: &[T::Elem], a: &TensorElement) -> Result<T::Elem> {
    require_lambda(a)?;
    let mut out = target.zero();
    for (w, c) in a.terms() {
        let mut value: Option<T::Elem> = None;
        for m in w.letters().iter().rev() {
            let fm = monomial_image(target, generator_images, m);
            value = Some(match value {
                None => fm,
                Some(inner) => target.mul(&fm, &target.operator(&inner)),
            });
        }
        let value = value.expect("non-empty word");
        out = target.add(&out, &target.scale(c, &value));
    }
    Ok(out)
}

/// `(Ш_Λ(A), ⋄, P)` itself as a target.
pub struct FreeTarget<'a>(pub &'a TdAlgebra);

impl TdTarget for FreeTarget<'_> {
    type Elem = TensorElement;

    fn zero(&self) -> TensorElement {
        TensorElement::zero(Space::Lambda)
    }
    fn unit(&self) -> TensorElement {
        self.0.unit()
    }
    fn add(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        a.add(b).expect("both in Ш_Λ")
    }
    fn scale(&self, c: &Coefficient, a: &TensorElement) -> TensorElement {
        a.scale(c)
    }
    fn mul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        self.0.dia(a, b)
    }
    fn operator(&self, a: &TensorElement) -> TensorElement {
        self.0.apply_operator(&OperatorId::RightShift, a)
    }
}

impl FreeTarget<'_> {
    /// Images of the generators under the inclusion `j_A`.
    pub fn inclusion_images(&self) -> Vec<TensorElement> {
        (0..self.0.vars())
            .map(|i| self.0.word(TensorWord::letter(self.0.generator(i))).expect("generator word"))
            .collect()
    }
}

/// The base algebra `A` with the zero operator, a λ-TD algebra for every weight.
pub struct BaseZeroTarget<'a>(pub &'a TdAlgebra);

impl TdTarget for BaseZeroTarget<'_> {
    type Elem = BaseElement;

    fn zero(&self) -> BaseElement {
        BaseElement::zero()
    }
    fn unit(&self) -> BaseElement {
        BaseElement::basis(self.0.unit_monomial())
    }
    fn add(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        a.plus(b)
    }
    fn scale(&self, c: &Coefficient, a: &BaseElement) -> BaseElement {
        a.scale(c)
    }
    fn mul(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        self.0.base().mul(a, b)
    }
    fn operator(&self, _a: &BaseElement) -> BaseElement {
        BaseElement::zero()
    }
}

impl BaseZeroTarget<'_> {
    pub fn identity_images(&self) -> Vec<BaseElement> {
        (0..self.0.vars()).map(|i| BaseElement::basis(self.0.generator(i))).collect()
    }
}
