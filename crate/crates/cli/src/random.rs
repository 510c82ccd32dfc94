//! Seeded random elements for the law harness.
//!
//! An element has 1 to 3 words. A word has 1 to `max_length` letters whose
//! total degrees sum to at most `max_degree`. Coefficients are drawn from
//! `{1, -1, 1/2, -1/2, L, L - 1}`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdhopf_core::{BaseElement, Coefficient, Monomial, Rational, Space, TensorElement, TensorSquare, TensorWord, WordCombination};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub vars: usize,
    pub max_degree: u32,
    pub max_length: usize,
}

/// The generator for trial `index` of law `law` under `seed`. Independent
/// of how many other trials run or in which order.
pub fn trial_rng(seed: u64, law: &str, index: usize) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in law.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h);
    rng.set_stream(index as u64);
    rng
}

pub fn coefficient(rng: &mut impl Rng) -> Coefficient {
    let half = Rational::new(1, 2);
    match rng.gen_range(0..6) {
        0 => Coefficient::one(),
        1 => Coefficient::from(-1),
        2 => Coefficient::constant(half),
        3 => Coefficient::constant(-&half),
        4 => Coefficient::lambda(),
        _ => &Coefficient::lambda() - &Coefficient::one(),
    }
}

/// A uniformly chosen monomial of total degree `degree`.
pub fn monomial(rng: &mut impl Rng, vars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u16; vars];
    for _ in 0..degree {
        exps[rng.gen_range(0..vars)] += 1;
    }
    Monomial::from_exponents(&exps)
}

pub fn word(rng: &mut impl Rng, shape: Shape) -> TensorWord {
    let len = rng.gen_range(1..=shape.max_length.max(1));
    let budget = rng.gen_range(0..=shape.max_degree);
    let mut degrees = vec![0u32; len];
    for _ in 0..budget {
        if rng.gen_bool(0.5) {
            degrees[rng.gen_range(0..len)] += 1;
        }
    }
    TensorWord::new(degrees.into_iter().map(|d| monomial(rng, shape.vars, d)).collect())
}

pub fn combination(rng: &mut impl Rng, shape: Shape) -> WordCombination {
    let count = rng.gen_range(1..=3);
    let mut out = WordCombination::zero();
    for _ in 0..count {
        out.add_term(word(rng, shape), coefficient(rng));
    }
    out
}

/// A random element of `Ш_Λ`. May be zero after cancellation.
pub fn lambda_element(rng: &mut impl Rng, shape: Shape) -> TensorElement {
    TensorElement::new(Space::Lambda, combination(rng, shape)).expect("words are non-empty")
}

/// A random element of `Ш⁺`, with a scalar part half of the time.
pub fn plus_element(rng: &mut impl Rng, shape: Shape) -> TensorElement {
    let mut terms = combination(rng, shape);
    if rng.gen_bool(0.5) {
        terms.add_term(TensorWord::empty(), coefficient(rng));
    }
    TensorElement::new(Space::Plus, terms).expect("Ш⁺ accepts every word")
}

pub fn square(rng: &mut impl Rng, shape: Shape) -> TensorSquare {
    let count = rng.gen_range(1..=3);
    let mut out = TensorSquare::zero();
    for _ in 0..count {
        out.add_term((word(rng, shape), word(rng, shape)), coefficient(rng));
    }
    out
}

pub fn base_element(rng: &mut impl Rng, shape: Shape) -> BaseElement {
    let count = rng.gen_range(1..=3);
    let mut out = BaseElement::zero();
    for _ in 0..count {
        let d = rng.gen_range(0..=shape.max_degree);
        out.add_term(monomial(rng, shape.vars, d), coefficient(rng));
    }
    out
}

pub fn choose<'a, T>(rng: &mut impl Rng, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("non-empty choice")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SHAPE: Shape = Shape {
        vars: 2,
        max_degree: 5,
        max_length: 4,
    };

    #[test]
    fn reproducible_per_trial() {
        let a = lambda_element(&mut trial_rng(7, "x", 3), SHAPE);
        let b = lambda_element(&mut trial_rng(7, "x", 3), SHAPE);
        assert_eq!(a, b);
        let others: Vec<_> = (0..8).map(|i| lambda_element(&mut trial_rng(7, "x", i), SHAPE)).collect();
        assert!(others.iter().any(|o| *o != a));
    }

    #[test]
    fn shape_respected() {
        let mut rng = trial_rng(1, "shape", 0);
        for _ in 0..200 {
            let w = word(&mut rng, SHAPE);
            assert!((1..=4).contains(&w.len()));
            assert!(w.letters().iter().map(Monomial::degree).sum::<u32>() <= 5);
            assert!(w.letters().iter().all(|m| m.vars() == 2));
        }
    }
}
