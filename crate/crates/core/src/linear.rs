//! Sparse linear combinations over `Coefficient`, keyed by an ordered basis.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;

use crate::coefficients::{Coefficient, Rational};

/// A finite formal sum `Σ c_k · k` with no zero coefficients.
///
/// Terms are kept in the basis order of `K`, which makes iteration and
/// rendering deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Coefficient>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Coefficient::one())
    }

    pub fn term(key: K, coeff: Coefficient) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Coefficient> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Coefficient> {
        self.terms.keys()
    }

    pub fn coefficient(&self, key: &K) -> Coefficient {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: K, coeff: Coefficient) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &Combination<K>, scale: &Coefficient) {
        if scale.is_zero() {
            return;
        }
        let unit = scale.is_one();
        for (k, c) in &other.terms {
            let c = if unit { c.clone() } else { c * scale };
            self.add_term(k.clone(), c);
        }
    }

    pub fn add_assign(&mut self, other: &Combination<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Combination<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), -c);
        }
    }

    pub fn plus(&self, other: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn scale(&self, c: &Coefficient) -> Combination<K> {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Combination<K> {
        self.scale(&Coefficient::constant(r.clone()))
    }

    pub fn neg(&self) -> Combination<K> {
        Combination {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Combination<L>) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Transforms every coefficient, dropping any that become zero.
    pub fn map_coefficients(&self, mut f: impl FnMut(&Coefficient) -> Coefficient) -> Combination<K> {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Coefficient)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, Coefficient)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> IntoIterator for Combination<K> {
    type Item = (K, Coefficient);
    type IntoIter = btree_map::IntoIter<K, Coefficient>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a Combination<K> {
    type Item = (&'a K, &'a Coefficient);
    type IntoIter = btree_map::Iter<'a, K, Coefficient>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, c)| (k, c.to_string()))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut a: Combination<u8> = Combination::basis(1);
        a.add_term(1, Coefficient::from(-1));
        assert!(a.is_zero());
    }

    #[test]
    fn like_terms_collect() {
        let mut a: Combination<u8> = Combination::term(3, Coefficient::lambda());
        a.add_term(3, Coefficient::one());
        assert_eq!(a.coefficient(&3), &Coefficient::lambda() + &Coefficient::one());
        assert_eq!(a.len(), 1);
    }
}
