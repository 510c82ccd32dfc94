//! Degree filtration, the splitting `H = k1 ⊕ ker ε`, the right antipode and
//! an exhaustive Hopf check over all basis words up to a degree bound.

use rayon::prelude::*;

use crate::algebra::TdAlgebra;
use crate::base::Monomial;
use crate::coalgebra::{DefaultRule, LinearMapTable};
use crate::coefficients::Coefficient;
use crate::error::{Error, Result};
use crate::products::require_lambda;
use crate::tensor::{TensorElement, TensorSquare, TensorWord, WordCombination};

impl TdAlgebra {
    /// `deg(a1 ⊗ ... ⊗ am) = deg(a1) + ... + deg(am) + m - 1`.
    pub fn word_degree(&self, w: &TensorWord) -> Result<u32> {
        if w.is_empty() {
            return Err(Error::EmptyWordDegree);
        }
        let letters: u32 = w.letters().iter().map(|m| self.base().degree_basis(m)).sum();
        Ok(letters + w.len() as u32 - 1)
    }

    /// Smallest `n` with `a ∈ Λⁿ`; zero for the zero element.
    pub fn element_degree(&self, a: &TensorElement) -> Result<u32> {
        require_lambda(a)?;
        a.terms().keys().map(|w| self.word_degree(w)).try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// `x ↦ (ε(x), x - ε(x)·1)`.
    pub fn counit_split(&self, a: &TensorElement) -> Result<(Coefficient, TensorElement)> {
        let eps = self.counit(a)?;
        let kernel = a.sub(&self.unit().scale(&eps))?;
        Ok((eps, kernel))
    }

    /// The right antipode on a basis word: `S(1) = 1` and
    /// `S(x) = -Σ x' ⋄ S(x'')` over `Δ̃(x) = Σ x' ⊗ x''` on `ker ε`.
    pub fn antipode_word(&self, w: &TensorWord) -> Result<std::sync::Arc<WordCombination>> {
        if let Some(hit) = self.antipode_memo.get(w) {
            return Ok(hit);
        }
        let one = self.unit_word();
        if *w == one {
            return Ok(self.antipode_memo.insert(w.clone(), WordCombination::basis(one)));
        }
        let degree = self.word_degree(w)?;
        let eps = self.counit_word(w);
        let kernel = WordCombination::basis(w.clone()).minus(&WordCombination::term(one.clone(), eps.clone()));
        let mut out = WordCombination::term(one, eps);
        for ((left, right), c) in &self.reduced_combination(&kernel) {
            let right_degree = self.word_degree(right)?;
            if right_degree >= degree {
                return Err(Error::DegreeNotDecreasing {
                    word: w.clone(),
                    factor: right.clone(),
                    word_degree: degree,
                    factor_degree: right_degree,
                });
            }
            let s = self.antipode_word(right)?;
            out.add_scaled(&self.diamond_words_combination(left, &s), &-c);
        }
        Ok(self.antipode_memo.insert(w.clone(), out))
    }

    fn diamond_words_combination(&self, w: &TensorWord, b: &WordCombination) -> WordCombination {
        self.diamond_combinations(&WordCombination::basis(w.clone()), b)
    }

    pub fn antipode(&self, a: &TensorElement) -> Result<TensorElement> {
        require_lambda(a)?;
        let mut out = WordCombination::zero();
        for (w, c) in a.terms() {
            out.add_scaled(&*self.antipode_word(w)?, c);
        }
        Ok(TensorElement::lambda_unchecked(out))
    }

    /// `S` tabulated on every basis word of degree at most `bound`.
    pub fn antipode_table(&self, bound: u32) -> Result<LinearMapTable> {
        let words = self.enumerate_words(bound);
        let values: Vec<_> = words
            .par_iter()
            .map(|w| self.antipode_word(w).map(|s| (w.clone(), (*s).clone())))
            .collect::<Result<_>>()?;
        let mut table = LinearMapTable::new(DefaultRule::Reject);
        for (w, s) in values {
            table.assign(w, s);
        }
        Ok(table)
    }

    /// All basis words of degree at most `bound`, in canonical word order.
    pub fn enumerate_words(&self, bound: u32) -> Vec<TensorWord> {
        let letters = self.base().basis_up_to(bound);
        let degrees: Vec<u32> = letters.iter().map(|m| self.base().degree_basis(m)).collect();
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        extend_words(&letters, &degrees, bound, &mut prefix, &mut out);
        out.sort();
        out
    }

    /// Exhaustive check of `id ∗ S = e` and both filtration inclusions on
    /// all basis words of degree at most `bound`.
    pub fn hopf_check(&self, bound: u32) -> Result<HopfReport> {
        let table = self.antipode_table(bound)?;
        self.hopf_check_with(bound, &table)
    }

    /// [`TdAlgebra::hopf_check`] with a caller-supplied antipode table.
    pub fn hopf_check_with(&self, bound: u32, antipode: &LinearMapTable) -> Result<HopfReport> {
        let words = self.enumerate_words(bound);
        let degrees: Vec<u32> = words.iter().map(|w| self.word_degree(w)).collect::<Result<_>>()?;
        let id = LinearMapTable::identity();

        let per_word: Vec<WordOutcome> = words
            .par_iter()
            .zip(&degrees)
            .map(|(w, &d)| self.check_word_outcome(w, d, antipode, &id))
            .collect::<Result<_>>()?;

        let mut report = HopfReport {
            bound,
            vars: self.vars(),
            words: words.len(),
            antipode: Tally::new("antipode"),
            product_filtration: Tally::new("product-filtration"),
            coproduct_filtration: Tally::new("coproduct-filtration"),
            left_convolution: LeftConvolution::default(),
        };
        for outcome in per_word {
            report.antipode.record(outcome.antipode);
            report.coproduct_filtration.record(outcome.coproduct);
            if outcome.left_agrees {
                report.left_convolution.agrees += 1;
            } else {
                report.left_convolution.differs += 1;
                if report.left_convolution.first_difference.is_none() {
                    report.left_convolution.first_difference = outcome.left_value;
                }
            }
        }

        let pairs: Vec<Option<Counterexample>> = (0..words.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let words = &words;
                let degrees = &degrees;
                (0..words.len()).map(move |j| self.product_outcome(&words[i], degrees[i], &words[j], degrees[j]))
            })
            .collect::<Result<_>>()?;
        for p in pairs {
            report.product_filtration.record(p);
        }
        Ok(report)
    }

    fn check_word_outcome(
        &self,
        w: &TensorWord,
        degree: u32,
        antipode: &LinearMapTable,
        id: &LinearMapTable,
    ) -> Result<WordOutcome> {
        let element = TensorElement::lambda_unchecked(WordCombination::basis(w.clone()));
        let expected = WordCombination::term(self.unit_word(), self.counit_word(w));

        let computed = self.convolution(id, antipode, &element)?.into_terms();
        let antipode_failure = (computed != expected).then(|| Counterexample::Antipode {
            word: w.clone(),
            computed: computed.clone(),
            expected: expected.clone(),
        });

        let square = self.coproduct_word(w);
        let mut coproduct_failure = None;
        for (u, v) in square.keys() {
            let (du, dv) = (self.word_degree(u)?, self.word_degree(v)?);
            if du + dv > degree {
                coproduct_failure = Some(Counterexample::Coproduct {
                    word: w.clone(),
                    degree,
                    coproduct: (*square).clone(),
                    left: u.clone(),
                    right: v.clone(),
                    left_degree: du,
                    right_degree: dv,
                });
                break;
            }
        }

        let left = self.convolution(antipode, id, &element)?.into_terms();
        let left_agrees = left == expected;
        Ok(WordOutcome {
            antipode: antipode_failure,
            coproduct: coproduct_failure,
            left_agrees,
            left_value: (!left_agrees).then(|| (w.clone(), left)),
        })
    }

    fn product_outcome(&self, a: &TensorWord, da: u32, b: &TensorWord, db: u32) -> Result<Option<Counterexample>> {
        let product = self.diamond_words(a, b);
        for w in product.keys() {
            let d = self.word_degree(w)?;
            if d > da + db {
                return Ok(Some(Counterexample::Product {
                    left: a.clone(),
                    right: b.clone(),
                    product: product.clone(),
                    term: w.clone(),
                    term_degree: d,
                    bound: da + db,
                }));
            }
        }
        Ok(None)
    }
}

fn extend_words(letters: &[Monomial], degrees: &[u32], budget: u32, prefix: &mut Vec<Monomial>, out: &mut Vec<TensorWord>) {
    for (m, &d) in letters.iter().zip(degrees) {
        if d > budget {
            continue;
        }
        prefix.push(m.clone());
        out.push(TensorWord::new(prefix.clone()));
        if budget - d >= 1 {
            extend_words(letters, degrees, budget - d - 1, prefix, out);
        }
        prefix.pop();
    }
}

struct WordOutcome {
    antipode: Option<Counterexample>,
    coproduct: Option<Counterexample>,
    left_agrees: bool,
    left_value: Option<(TensorWord, WordCombination)>,
}

/// The first failure found by a check, with the full expansion involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// `(id ∗ S)(word) ≠ ε(word)·1`.
    Antipode {
        word: TensorWord,
        computed: WordCombination,
        expected: WordCombination,
    },
    /// A term of `left ⋄ right` above `deg(left) + deg(right)`.
    Product {
        left: TensorWord,
        right: TensorWord,
        product: WordCombination,
        term: TensorWord,
        term_degree: u32,
        bound: u32,
    },
    /// A pair of `Δ(word)` with `deg(left) + deg(right) > deg(word)`.
    Coproduct {
        word: TensorWord,
        degree: u32,
        coproduct: TensorSquare,
        left: TensorWord,
        right: TensorWord,
        left_degree: u32,
        right_degree: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub first: Option<Counterexample>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            checked: 0,
            failed: 0,
            first: None,
        }
    }

    fn record(&mut self, outcome: Option<Counterexample>) {
        self.checked += 1;
        if let Some(c) = outcome {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(c);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// `S ∗ id` on the enumeration. Reported, not asserted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LeftConvolution {
    pub agrees: usize,
    pub differs: usize,
    pub first_difference: Option<(TensorWord, WordCombination)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfReport {
    pub bound: u32,
    pub vars: usize,
    pub words: usize,
    pub antipode: Tally,
    pub product_filtration: Tally,
    pub coproduct_filtration: Tally,
    pub left_convolution: LeftConvolution,
}

impl HopfReport {
    pub fn tallies(&self) -> [&Tally; 3] {
        [&self.antipode, &self.product_filtration, &self.coproduct_filtration]
    }

    /// True when every asserted check passed. `S ∗ id` does not count.
    pub fn passed(&self) -> bool {
        self.tallies().iter().all(|t| t.passed())
    }
}
