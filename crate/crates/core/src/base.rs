//! The generating bialgebra `A`.
//!
//! Upstream modules only see [`BaseBialgebra`], a contract on the monomial
//! basis. The shipped instance is the polynomial bialgebra on primitive
//! generators `x1, ..., xv`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use smallvec::SmallVec;

use crate::coefficients::{Coefficient, Rational};
use crate::linear::Combination;

/// A commutative monomial `x1^e1 * ... * xv^ev`; all-zero exponents is `1_A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: SmallVec<[u16; 4]>,
}

impl Monomial {
    pub fn unit(vars: usize) -> Self {
        Monomial {
            exponents: SmallVec::from_elem(0, vars),
        }
    }

    /// The generator `x_{index+1}` (zero-based index).
    pub fn generator(vars: usize, index: usize) -> Self {
        let mut m = Monomial::unit(vars);
        m.exponents[index] = 1;
        m
    }

    pub fn from_exponents(exponents: &[u16]) -> Self {
        Monomial {
            exponents: SmallVec::from_slice(exponents),
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exponents
    }

    pub fn vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().map(|&e| u32::from(e)).sum()
    }

    /// Exponent-wise sum; both sides must have the same generator count.
    pub fn times(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Graded order: total degree first, then `x1` before `x2` and so on.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of `A`: a linear combination of monomials.
pub type BaseElement = Combination<Monomial>;

/// An element of `A ⊗ A`.
pub type BaseSquare = Combination<(Monomial, Monomial)>;

/// Capability contract for a connected filtered bialgebra with a monomial basis.
///
/// Structure constants are rational; the weight never enters `A`.
pub trait BaseBialgebra: Send + Sync + fmt::Debug {
    fn vars(&self) -> usize;

    fn unit(&self) -> Monomial {
        Monomial::unit(self.vars())
    }

    fn mul_basis(&self, a: &Monomial, b: &Monomial) -> Vec<(Rational, Monomial)>;

    /// `Δ_A` on a basis element as `(coefficient, left, right)` triples.
    fn coproduct_basis(&self, m: &Monomial) -> Vec<(Rational, Monomial, Monomial)>;

    fn counit_basis(&self, m: &Monomial) -> Rational;

    fn degree_basis(&self, m: &Monomial) -> u32;

    /// Every basis element of filtration degree at most `degree`, in basis order.
    fn basis_up_to(&self, degree: u32) -> Vec<Monomial>;

    fn mul(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        let mut out = BaseElement::zero();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let c = ca * cb;
                for (r, m) in self.mul_basis(ma, mb) {
                    out.add_term(m, c.scale(&r));
                }
            }
        }
        out
    }

    fn coproduct(&self, a: &BaseElement) -> BaseSquare {
        let mut out = BaseSquare::zero();
        for (m, c) in a {
            for (r, l, rr) in self.coproduct_basis(m) {
                out.add_term((l, rr), c.scale(&r));
            }
        }
        out
    }

    fn counit(&self, a: &BaseElement) -> Coefficient {
        let mut acc = Coefficient::zero();
        for (m, c) in a {
            acc += &c.scale(&self.counit_basis(m));
        }
        acc
    }

    /// `min { k | a ∈ A^k }`; zero for the zero element.
    fn degree(&self, a: &BaseElement) -> u32 {
        a.keys().map(|m| self.degree_basis(m)).max().unwrap_or(0)
    }
}

/// Polynomial bialgebra `k[x1, ..., xv]` with every generator primitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolynomialBialgebra {
    vars: usize,
}

impl PolynomialBialgebra {
    pub fn new(vars: usize) -> Self {
        PolynomialBialgebra { vars }
    }
}

impl BaseBialgebra for PolynomialBialgebra {
    fn vars(&self) -> usize {
        self.vars
    }

    fn mul_basis(&self, a: &Monomial, b: &Monomial) -> Vec<(Rational, Monomial)> {
        vec![(Rational::one(), a.times(b))]
    }

    /// `Δ(x^e) = Π_j Σ_i C(e_j, i) x_j^i ⊗ x_j^(e_j - i)`.
    fn coproduct_basis(&self, m: &Monomial) -> Vec<(Rational, Monomial, Monomial)> {
        let mut acc: Vec<(BigInt, Vec<u16>, Vec<u16>)> = vec![(BigInt::from(1), Vec::new(), Vec::new())];
        for &e in m.exponents() {
            let mut next = Vec::with_capacity(acc.len() * (usize::from(e) + 1));
            for (c, l, r) in &acc {
                for i in 0..=e {
                    let mut l = l.clone();
                    let mut r = r.clone();
                    l.push(i);
                    r.push(e - i);
                    next.push((c * binomial(BigInt::from(e), BigInt::from(i)), l, r));
                }
            }
            acc = next;
        }
        acc.into_iter()
            .map(|(c, l, r)| (Rational::from(c), Monomial::from_exponents(&l), Monomial::from_exponents(&r)))
            .collect()
    }

    fn counit_basis(&self, m: &Monomial) -> Rational {
        if m.is_unit() {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    fn degree_basis(&self, m: &Monomial) -> u32 {
        m.degree()
    }

    fn basis_up_to(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0u16; self.vars];
        fill_monomials(&mut current, 0, degree, &mut out);
        out.sort();
        out
    }
}

fn fill_monomials(current: &mut Vec<u16>, slot: usize, budget: u32, out: &mut Vec<Monomial>) {
    if slot == current.len() {
        out.push(Monomial::from_exponents(current));
        return;
    }
    for e in 0..=budget {
        current[slot] = e as u16;
        fill_monomials(current, slot + 1, budget - e, out);
    }
    current[slot] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alg() -> PolynomialBialgebra {
        PolynomialBialgebra::new(2)
    }

    fn mono(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn elem(terms: &[(&[u16], i64)]) -> BaseElement {
        terms.iter().map(|(e, c)| (mono(e), Coefficient::from(*c))).collect()
    }

    /// `•` on `A ⊗ A`, written out from `mul` for cross-checking `coproduct`.
    fn square_mul(a: &BaseSquare, b: &BaseSquare) -> BaseSquare {
        let mut out = BaseSquare::zero();
        for ((l1, r1), c1) in a {
            for ((l2, r2), c2) in b {
                out.add_term((l1.times(l2), r1.times(r2)), c1 * c2);
            }
        }
        out
    }

    #[test]
    fn mul_examples() {
        let a = alg();
        assert_eq!(a.mul(&elem(&[(&[1, 0], 1)]), &elem(&[(&[1, 0], 1)])), elem(&[(&[2, 0], 1)]));
        let x_plus_2 = elem(&[(&[1, 0], 1), (&[0, 0], 2)]);
        assert_eq!(a.mul(&elem(&[(&[0, 0], 1)]), &x_plus_2), x_plus_2);
        let lhs = a.mul(&elem(&[(&[1, 0], 1), (&[0, 1], 1)]), &elem(&[(&[1, 0], 1), (&[0, 1], -1)]));
        assert_eq!(lhs, elem(&[(&[2, 0], 1), (&[0, 2], -1)]));
    }

    #[test]
    fn coproduct_examples() {
        let a = alg();
        let one = mono(&[0, 0]);
        let x = mono(&[1, 0]);
        let x2 = mono(&[2, 0]);
        assert_eq!(a.coproduct(&BaseElement::basis(one.clone())), BaseSquare::basis((one.clone(), one.clone())));
        let dx: BaseSquare = [((x.clone(), one.clone()), Coefficient::one()), ((one.clone(), x.clone()), Coefficient::one())]
            .into_iter()
            .collect();
        assert_eq!(a.coproduct(&BaseElement::basis(x.clone())), dx);
        // Δ(x²) must equal Δ(x)•Δ(x) in the tensor-square algebra.
        let squared = square_mul(&dx, &dx);
        let expected: BaseSquare = [
            ((x2.clone(), one.clone()), Coefficient::one()),
            ((x.clone(), x.clone()), Coefficient::from(2)),
            ((one.clone(), x2.clone()), Coefficient::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(squared, expected);
        assert_eq!(a.coproduct(&BaseElement::basis(x2)), expected);
    }

    #[test]
    fn counit_and_degree() {
        let a = alg();
        assert_eq!(a.counit(&elem(&[(&[0, 0], 1)])), Coefficient::one());
        assert!(a.counit(&elem(&[(&[1, 0], 1)])).is_zero());
        let e = elem(&[(&[0, 0], 3), (&[1, 0], 2), (&[2, 1], 1)]);
        assert_eq!(a.counit(&e), Coefficient::from(3));
        assert_eq!(mono(&[0, 0]).degree(), 0);
        assert_eq!(mono(&[1, 0]).degree(), 1);
        assert_eq!(mono(&[2, 1]).degree(), 3);
    }

    #[test]
    fn display_and_order() {
        assert_eq!(mono(&[2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(mono(&[0, 0]).to_string(), "1");
        let basis = alg().basis_up_to(2);
        let shown: Vec<String> = basis.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["1", "x1", "x2", "x1^2", "x1*x2", "x2^2"]);
    }

    #[test]
    fn filtration_shape_of_coproduct() {
        let a = PolynomialBialgebra::new(2);
        for m in a.basis_up_to(6) {
            let n = m.degree();
            for (_, l, r) in a.coproduct_basis(&m) {
                assert!(l.degree() + r.degree() <= n, "{m}: {l} ⊗ {r}");
            }
        }
    }

    fn arb_elem() -> impl Strategy<Value = BaseElement> {
        prop::collection::vec(((0u16..3, 0u16..3), -3i64..4), 0..4)
            .prop_map(|ts| ts.into_iter().map(|((a, b), c)| (mono(&[a, b]), Coefficient::from(c))).collect())
    }

    type Triple = Combination<(Monomial, Monomial, Monomial)>;

    fn coassoc_sides(a: &PolynomialBialgebra, x: &BaseElement) -> (Triple, Triple) {
        let d = a.coproduct(x);
        let mut left = Combination::zero();
        let mut right = Combination::zero();
        for ((l, r), c) in &d {
            for (rr, l2, r2) in a.coproduct_basis(r) {
                left.add_term((l.clone(), l2, r2), c.scale(&rr));
            }
            for (rr, l1, r1) in a.coproduct_basis(l) {
                right.add_term((l1, r1, r.clone()), c.scale(&rr));
            }
        }
        (left, right)
    }

    proptest! {
        #[test]
        fn commutative_monoid(x in arb_elem(), y in arb_elem(), z in arb_elem()) {
            let a = alg();
            prop_assert_eq!(a.mul(&x, &y), a.mul(&y, &x));
            prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
            prop_assert_eq!(a.mul(&x, &BaseElement::basis(a.unit())), x);
        }

        #[test]
        fn structure_maps_are_multiplicative(x in arb_elem(), y in arb_elem()) {
            let a = alg();
            prop_assert_eq!(a.coproduct(&a.mul(&x, &y)), square_mul(&a.coproduct(&x), &a.coproduct(&y)));
            prop_assert_eq!(a.counit(&a.mul(&x, &y)), &a.counit(&x) * &a.counit(&y));
        }

        #[test]
        fn coassociative_and_counital(x in arb_elem()) {
            let a = alg();
            let (l, r) = coassoc_sides(&a, &x);
            prop_assert_eq!(l, r);
            let d = a.coproduct(&x);
            let mut left = BaseElement::zero();
            let mut right = BaseElement::zero();
            for ((l, r), c) in &d {
                left.add_term(r.clone(), c.scale(&a.counit_basis(l)));
                right.add_term(l.clone(), c.scale(&a.counit_basis(r)));
            }
            prop_assert_eq!(&left, &x);
            prop_assert_eq!(&right, &x);
        }

        #[test]
        fn degree_is_subadditive(x in arb_elem(), y in arb_elem()) {
            let a = alg();
            let p = a.mul(&x, &y);
            if !p.is_zero() {
                prop_assert!(a.degree(&p) <= a.degree(&x) + a.degree(&y));
            }
        }
    }
}
