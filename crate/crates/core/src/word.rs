//! Monomials θ_{i_1}⋯θ_{i_N}, stored left to right as written.

use alloc::vec::Vec;
use core::fmt;

use crate::cartan::{CartanDatum, MultiDegree};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Self(alloc::vec![i as u8])
    }

    /// Letters must be below the rank of the datum in use (at most 255).
    pub fn new(letters: &[usize]) -> Self {
        Self(letters.iter().map(|&i| i as u8).collect())
    }

    pub(crate) fn from_bytes(v: Vec<u8>) -> Self {
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn at(&self, p: usize) -> usize {
        self.0[p] as usize
    }

    pub fn letters(&self) -> impl ExactSizeIterator<Item = usize> + DoubleEndedIterator + '_ {
        self.0.iter().map(|&b| b as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.letters().collect()
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn content(&self, rank: usize) -> MultiDegree {
        let mut c = alloc::vec![0u32; rank];
        for &b in &self.0 {
            c[b as usize] += 1;
        }
        MultiDegree::new(c)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn prepend(&self, i: usize) -> Self {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(i as u8);
        v.extend_from_slice(&self.0);
        Self(v)
    }

    pub fn append(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.push(i as u8);
        Self(v)
    }

    pub fn remove(&self, p: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(p);
        Self(v)
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, start: usize, end: usize) -> Self {
        Self(self.0[start..end].to_vec())
    }

    /// Letters at the given positions, in order.
    pub fn select(&self, positions: &[usize]) -> Self {
        Self(positions.iter().map(|&p| self.0[p]).collect())
    }

    /// Relabels every letter through `f`.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Self {
        Self(self.0.iter().map(|&b| f(b as usize) as u8).collect())
    }

    /// (Σ_{q<p} w_q)·i, the twist picked up by moving a letter `i` past the
    /// prefix of length `p`.
    pub fn prefix_dot(&self, cartan: &CartanDatum, p: usize, i: usize) -> i64 {
        self.0[..p].iter().map(|&b| cartan.dot(b as usize, i)).sum()
    }

    /// All words with the given content, in lexicographic order.
    pub fn all_with_content(nu: &MultiDegree) -> Vec<Self> {
        let mut out = Vec::new();
        let mut left: Vec<u32> = nu.counts().to_vec();
        let mut cur = Vec::with_capacity(nu.depth());
        fn rec(left: &mut [u32], cur: &mut Vec<u8>, n: usize, out: &mut Vec<Word>) {
            if cur.len() == n {
                out.push(Word(cur.clone()));
                return;
            }
            for i in 0..left.len() {
                if left[i] > 0 {
                    left[i] -= 1;
                    cur.push(i as u8);
                    rec(left, cur, n, out);
                    cur.pop();
                    left[i] += 1;
                }
            }
        }
        rec(&mut left, &mut cur, nu.depth(), &mut out);
        out
    }

    /// All words of length `len` over `rank` letters, in lexicographic order.
    pub fn all_of_length(rank: usize, len: usize) -> Vec<Self> {
        let mut out = alloc::vec![Self::empty()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| (0..rank).map(move |i| w.append(i)))
                .collect();
        }
        out
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, b) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ".")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}
