//! Sparse linear combinations with exact coefficients.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;

use crate::scalar::ScalarRing;

/// A finite sum Σ c_k·k with no zero coefficient stored.
///
/// The ring is passed to every operation that creates or combines
/// coefficients; keys iterate in their natural order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination<K: Ord, E> {
    terms: BTreeMap<K, E>,
}

impl<K: Ord, E> Default for Combination<K, E> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, E: Clone> Combination<K, E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_term<R: ScalarRing<Elem = E>>(ring: &R, key: K, coeff: E) -> Self {
        let mut c = Self::new();
        c.add_term(ring, key, coeff);
        c
    }

    pub fn basis<R: ScalarRing<Elem = E>>(ring: &R, key: K) -> Self {
        Self::from_term(ring, key, ring.one())
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

    pub fn iter(&self) -> btree_map::Iter<'_, K, E> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, E> {
        self.terms.keys()
    }

    pub fn get(&self, key: &K) -> Option<&E> {
        self.terms.get(key)
    }

    /// The coefficient of `key`, zero when absent.
    pub fn coeff<R: ScalarRing<Elem = E>>(&self, ring: &R, key: &K) -> E {
        self.terms.get(key).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn add_term<R: ScalarRing<Elem = E>>(&mut self, ring: &R, key: K, coeff: E) {
        if ring.is_zero(&coeff) {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                ring.add_assign(o.get_mut(), &coeff);
                if ring.is_zero(o.get()) {
                    o.remove();
                }
            }
        }
    }

    /// self += c·other.
    pub fn add_scaled<R: ScalarRing<Elem = E>>(&mut self, ring: &R, other: &Self, c: &E) {
        if ring.is_zero(c) {
            return;
        }
        let unit = ring.is_one(c);
        for (k, v) in &other.terms {
            let v = if unit { v.clone() } else { ring.mul(v, c) };
            self.add_term(ring, k.clone(), v);
        }
    }

    pub fn add<R: ScalarRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(ring, other, &ring.one());
        out
    }

    pub fn sub<R: ScalarRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(ring, other, &ring.from_int(-1));
        out
    }

    pub fn scale<R: ScalarRing<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        let mut out = Self::new();
        out.add_scaled(ring, self, c);
        out
    }

    pub fn neg<R: ScalarRing<Elem = E>>(&self, ring: &R) -> Self {
        Self { terms: self.terms.iter().map(|(k, v)| (k.clone(), ring.neg(v))).collect() }
    }

    /// Σ c_k f(k), where f returns a combination.
    pub fn flat_map<K2: Ord + Clone, R: ScalarRing<Elem = E>>(
        &self,
        ring: &R,
        mut f: impl FnMut(&K) -> Combination<K2, E>,
    ) -> Combination<K2, E> {
        let mut out = Combination::new();
        for (k, c) in &self.terms {
            out.add_scaled(ring, &f(k), c);
        }
        out
    }

    /// Relabels keys; colliding keys are summed.
    pub fn map_keys<K2: Ord + Clone, R: ScalarRing<Elem = E>>(
        &self,
        ring: &R,
        mut f: impl FnMut(&K) -> K2,
    ) -> Combination<K2, E> {
        let mut out = Combination::new();
        for (k, c) in &self.terms {
            out.add_term(ring, f(k), c.clone());
        }
        out
    }

    /// Keeps the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> Vec<(K, E)> {
        self.terms.into_iter().collect()
    }
}

impl<K: Ord + Clone, E: Clone> IntoIterator for Combination<K, E> {
    type Item = (K, E);
    type IntoIter = btree_map::IntoIter<K, E>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord, E> IntoIterator for &'a Combination<K, E> {
    type Item = (&'a K, &'a E);
    type IntoIter = btree_map::Iter<'a, K, E>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}
