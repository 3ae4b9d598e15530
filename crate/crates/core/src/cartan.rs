//! Cartan data, multidegrees and weights.
//!
//! A weight is stored as the vector of its pairings ⟨Λ, i⟩ with the
//! generators of ℤ[I], in the normalisation where ⟨λ_ν, i⟩ = ν·i. For data
//! that are not simply laced the coroot pairing ⟨i, Λ⟩ is ⟨Λ, i⟩ / d_i, so
//! [⟨i, λ⟩]_{ζ_i} is the ordinary bracket of the stored value.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest rank accepted; letters are stored as bytes.
pub const MAX_RANK: usize = 255;

/// A finite set I with a symmetric ℤ-valued form on ℤ[I].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    rank: usize,
    dot: Vec<i64>,
    name: Option<String>,
}

impl CartanDatum {
    /// Any symmetric integer matrix.
    pub fn new(dot: Vec<Vec<i64>>) -> Result<Self> {
        let rank = dot.len();
        if rank > MAX_RANK {
            return Err(Error::InvalidCartan("rank too large"));
        }
        if dot.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidCartan("matrix is not square"));
        }
        for i in 0..rank {
            for j in 0..i {
                if dot[i][j] != dot[j][i] {
                    return Err(Error::InvalidCartan("matrix is not symmetric"));
                }
            }
        }
        Ok(Self { rank, dot: dot.into_iter().flatten().collect(), name: None })
    }

    /// One of `A1`, `A1xA1`, `A2`, `A3`, `B2`, `G2` (case-insensitive, `A1×A1` also accepted).
    pub fn preset(name: &str) -> Result<Self> {
        let canonical = match name.to_ascii_uppercase().replace('×', "X").as_str() {
            "A1" => "A1",
            "A1XA1" => "A1xA1",
            "A2" => "A2",
            "A3" => "A3",
            "B2" => "B2",
            "G2" => "G2",
            _ => return Err(Error::UnknownPreset),
        };
        let dot = match canonical {
            "A1" => vec![vec![2]],
            "A1xA1" => vec![vec![2, 0], vec![0, 2]],
            "A2" => vec![vec![2, -1], vec![-1, 2]],
            "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            "B2" => vec![vec![2, -2], vec![-2, 4]],
            _ => vec![vec![2, -3], vec![-3, 6]],
        };
        let mut c = Self::new(dot)?;
        c.name = Some(canonical.into());
        Ok(c)
    }

    pub fn preset_names() -> &'static [&'static str] {
        &["A1", "A1xA1", "A2", "A3", "B2", "G2"]
    }

    pub fn rank_zero() -> Self {
        Self { rank: 0, dot: Vec::new(), name: None }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// i·j for generators.
    #[inline]
    pub fn dot(&self, i: usize, j: usize) -> i64 {
        self.dot[i * self.rank + j]
    }

    pub fn dot_matrix(&self) -> Vec<Vec<i64>> {
        self.dot.chunks(self.rank.max(1)).take(self.rank).map(<[i64]>::to_vec).collect()
    }

    /// The bilinear extension to signed vectors on ℤ[I].
    pub fn dot_product(&self, nu: &[i64], mu: &[i64]) -> Result<i64> {
        self.check_len(nu.len())?;
        self.check_len(mu.len())?;
        let mut acc = 0;
        for (i, &a) in nu.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in mu.iter().enumerate() {
                acc += a * b * self.dot(i, j);
            }
        }
        Ok(acc)
    }

    pub fn dot_degrees(&self, nu: &MultiDegree, mu: &MultiDegree) -> Result<i64> {
        self.dot_product(&nu.signed(), &mu.signed())
    }

    /// i·ν.
    pub fn dot_letter(&self, i: usize, nu: &MultiDegree) -> i64 {
        nu.counts.iter().enumerate().map(|(j, &c)| i64::from(c) * self.dot(i, j)).sum()
    }

    /// d_i = (i·i)/2, which must be a positive integer.
    pub fn symmetrizer(&self, i: usize) -> Result<i64> {
        let ii = self.dot(i, i);
        if ii <= 0 || ii % 2 != 0 {
            return Err(Error::InvalidSymmetrizer(ii));
        }
        Ok(ii / 2)
    }

    /// i·i = 2 for all i and off-diagonal entries in {0, −1}.
    pub fn is_simply_laced(&self) -> bool {
        (0..self.rank).all(|i| {
            (0..self.rank).all(|j| {
                let v = self.dot(i, j);
                if i == j {
                    v == 2
                } else {
                    v == 0 || v == -1
                }
            })
        })
    }

    /// The shape conditions of a finite-type datum: i·i ∈ {2, 4, 6} and
    /// i·j ≤ 0 off the diagonal.
    pub fn check_finite_type_shape(&self) -> Result<()> {
        for i in 0..self.rank {
            if ![2, 4, 6].contains(&self.dot(i, i)) {
                return Err(Error::InvalidCartan("diagonal entries must lie in {2, 4, 6}"));
            }
            for j in 0..self.rank {
                if i != j && self.dot(i, j) > 0 {
                    return Err(Error::InvalidCartan("off-diagonal entries must be nonpositive"));
                }
            }
        }
        Ok(())
    }

    /// ⟨i, j'⟩ = i·j / d_i.
    pub fn cartan_integer(&self, i: usize, j: usize) -> Result<i64> {
        let d = self.symmetrizer(i)?;
        let v = self.dot(i, j);
        if v % d != 0 {
            return Err(Error::InvalidCartan("i·j is not divisible by d_i"));
        }
        Ok(v / d)
    }

    pub fn lambda_nu(&self, nu: &MultiDegree) -> Weight {
        Weight { values: (0..self.rank).map(|i| self.dot_letter(i, nu)).collect() }
    }

    /// −ρ: pairing −1 with every generator.
    pub fn minus_rho(&self) -> Weight {
        Weight { values: vec![-1; self.rank] }
    }

    pub fn zero_weight(&self) -> Weight {
        Weight { values: vec![0; self.rank] }
    }

    /// Pulls the form back along `pi: J → I`.
    pub fn pullback(&self, pi: &[usize]) -> Result<Self> {
        if let Some(&bad) = pi.iter().find(|&&i| i >= self.rank) {
            return Err(Error::InvalidGenerator(bad));
        }
        let dot = pi.iter().map(|&a| pi.iter().map(|&b| self.dot(a, b)).collect()).collect();
        Self::new(dot)
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: len });
        }
        Ok(())
    }

}

/// An element of ℕ[I].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiDegree {
    counts: Vec<u32>,
}

impl MultiDegree {
    pub fn new(counts: Vec<u32>) -> Self {
        Self { counts }
    }

    pub fn zero(rank: usize) -> Self {
        Self { counts: vec![0; rank] }
    }

    /// The generator i as a degree.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut d = Self::zero(rank);
        d.counts[i] = 1;
        d
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn rank(&self) -> usize {
        self.counts.len()
    }

    pub fn depth(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Number of words with this content, or `None` on overflow.
    pub fn word_count(&self) -> Option<usize> {
        let mut total = 1usize;
        let mut placed = 0usize;
        for &c in &self.counts {
            for k in 1..=c as usize {
                placed += 1;
                total = total.checked_mul(placed)? / k;
            }
        }
        Some(total)
    }

    pub fn get(&self, i: usize) -> u32 {
        self.counts[i]
    }

    pub fn signed(&self) -> Vec<i64> {
        self.counts.iter().map(|&c| i64::from(c)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { counts: self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect() }
    }

    pub fn add_letter(&self, i: usize) -> Self {
        let mut d = self.clone();
        d.counts[i] += 1;
        d
    }

    /// `self − other` when it stays in ℕ[I].
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Self { counts })
    }

    pub fn sub_letter(&self, i: usize) -> Option<Self> {
        let c = self.counts[i].checked_sub(1)?;
        let mut d = self.clone();
        d.counts[i] = c;
        Some(d)
    }

    /// All μ ≤ self componentwise, in lexicographic order of counts.
    pub fn sub_degrees(&self) -> Vec<Self> {
        let mut out = vec![Self::zero(self.rank())];
        for i in 0..self.rank() {
            let mut next = Vec::new();
            for base in &out {
                for c in 0..=self.counts[i] {
                    let mut d = base.clone();
                    d.counts[i] = c;
                    next.push(d);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// Every degree of depth exactly `depth`, in lexicographic order.
    pub fn all_of_depth(rank: usize, depth: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; rank];
        fn rec(i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
            if i + 1 == cur.len() {
                cur[i] = left as u32;
                out.push(MultiDegree { counts: cur.clone() });
                return;
            }
            for c in (0..=left).rev() {
                cur[i] = c as u32;
                rec(i + 1, left - c, cur, out);
            }
        }
        if rank == 0 {
            if depth == 0 {
                out.push(Self::zero(0));
            }
            return out;
        }
        rec(0, depth, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Every degree of depth at most `depth_max`, by depth and then lexicographically.
    pub fn up_to_depth(rank: usize, depth_max: usize) -> Vec<Self> {
        (0..=depth_max).flat_map(|d| Self::all_of_depth(rank, d)).collect()
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An element of Hom(ℤ[I], ℤ), stored as its values on the generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight {
    values: Vec<i64>,
}

impl Weight {
    pub fn new(values: Vec<i64>) -> Self {
        Self { values }
    }

    /// From coroot pairings ⟨i, Λ⟩, scaling each by d_i.
    pub fn from_coroot_pairings(cartan: &CartanDatum, pairings: &[i64]) -> Result<Self> {
        cartan.check_len(pairings.len())?;
        let values = pairings
            .iter()
            .enumerate()
            .map(|(i, &p)| Ok(p * cartan.symmetrizer(i)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// ⟨Λ, i⟩.
    #[inline]
    pub fn at(&self, i: usize) -> i64 {
        self.values[i]
    }

    /// ⟨Λ, ν⟩ = Σ ν_i ⟨Λ, i⟩.
    pub fn pairing(&self, nu: &MultiDegree) -> i64 {
        self.values.iter().zip(nu.counts()).map(|(&v, &c)| v * i64::from(c)).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect() }
    }

    /// Λ∘π for `pi: J → I`.
    pub fn pullback(&self, pi: &[usize]) -> Self {
        Self { values: pi.iter().map(|&i| self.values[i]).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(v: &[u32]) -> MultiDegree {
        MultiDegree::new(v.to_vec())
    }

    #[test]
    fn word_counts_are_multinomials() {
        for nu in MultiDegree::up_to_depth(3, 5) {
            assert_eq!(nu.word_count(), Some(crate::word::Word::all_with_content(&nu).len()), "{nu:?}");
        }
        assert_eq!(md(&[5, 5]).word_count(), Some(252));
        assert_eq!(md(&[200, 200]).word_count(), None);
    }

    #[test]
    fn dot_product_examples() {
        let a2 = CartanDatum::preset("A2").unwrap();
        assert_eq!(a2.dot_product(&[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(a2.dot_product(&[0, 0], &[3, 7]).unwrap(), 0);
        let b2 = CartanDatum::preset("B2").unwrap();
        assert_eq!(b2.dot_product(&[0, 1], &[0, 1]).unwrap(), 4);
        assert_eq!(b2.symmetrizer(0).unwrap(), 1);
        assert_eq!(b2.symmetrizer(1).unwrap(), 2);
        assert_eq!(
            a2.dot_product(&[1], &[1, 0]),
            Err(Error::RankMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn lambda_nu_examples() {
        let a1 = CartanDatum::preset("A1").unwrap();
        assert_eq!(a1.lambda_nu(&md(&[1])).values(), &[2]);
        assert_eq!(a1.lambda_nu(&md(&[0])), a1.zero_weight());
        let a2 = CartanDatum::preset("A2").unwrap();
        assert_eq!(a2.lambda_nu(&md(&[1, 1])).values(), &[1, 1]);
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(Weight::new(vec![3, -4]).pairing(&md(&[0, 0])), 0);
        assert_eq!(Weight::new(vec![5]).pairing(&md(&[2])), 10);
        let a2 = CartanDatum::preset("A2").unwrap();
        assert_eq!(a2.lambda_nu(&md(&[0, 1])).pairing(&md(&[1, 0])), -1);
    }

    #[test]
    fn minus_rho_examples() {
        assert_eq!(CartanDatum::preset("A1").unwrap().minus_rho().values(), &[-1]);
        assert_eq!(CartanDatum::preset("A2").unwrap().minus_rho().values(), &[-1, -1]);
        assert!(CartanDatum::rank_zero().minus_rho().values().is_empty());
    }

    #[test]
    fn presets_and_validation() {
        for name in CartanDatum::preset_names() {
            let c = CartanDatum::preset(name).unwrap();
            c.check_finite_type_shape().unwrap();
            let sl = c.is_simply_laced();
            assert_eq!(sl, !matches!(*name, "B2" | "G2"), "{name}");
            if sl {
                assert!((0..c.rank()).all(|i| c.symmetrizer(i).unwrap() == 1));
            }
        }
        assert!(CartanDatum::preset("a1×a1").is_ok());
        assert_eq!(CartanDatum::preset("E8"), Err(Error::UnknownPreset));
        assert!(CartanDatum::new(vec![vec![2, 1], vec![0, 2]]).is_err());
        let g2 = CartanDatum::preset("G2").unwrap();
        assert_eq!(g2.cartan_integer(0, 1).unwrap(), -3);
        assert_eq!(g2.cartan_integer(1, 0).unwrap(), -1);
        let w = Weight::from_coroot_pairings(&g2, &[1, 1]).unwrap();
        assert_eq!(w.values(), &[1, 3]);
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(MultiDegree::all_of_depth(2, 2).len(), 3);
        assert_eq!(MultiDegree::up_to_depth(2, 3).len(), 10);
        assert_eq!(MultiDegree::up_to_depth(0, 3), vec![MultiDegree::zero(0)]);
        assert_eq!(md(&[2, 1]).sub_degrees().len(), 6);
        assert_eq!(md(&[2, 1]).checked_sub(&md(&[0, 2])), None);
    }
}
