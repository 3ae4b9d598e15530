//! Dense exact linear algebra.
//!
//! Elimination is fraction-free (Bareiss): every intermediate entry is a
//! minor of the input, and the single division per update is exact, so the
//! same code runs over ℚ(ζ) and over the Laurent ring. In a field the
//! divisor's inverse is computed once per pivot step.

use alloc::vec::Vec;

use crate::scalar::ScalarRing;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros<R: ScalarRing<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: alloc::vec![ring.zero(); rows * cols] }
    }

    pub fn identity<R: ScalarRing<Elem = E>>(ring: &R, n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { ring.one() } else { ring.zero() })
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch);
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut E {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::ShapeMismatch);
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self { rows: self.rows + other.rows, cols, data })
    }

    pub fn is_zero<R: ScalarRing<Elem = E>>(&self, ring: &R) -> bool {
        self.data.iter().all(|x| ring.is_zero(x))
    }

    pub fn mul<R: ScalarRing<Elem = E>>(&self, ring: &R, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch);
        }
        let mut out = Self::zeros(ring, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if ring.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !ring.is_zero(b) {
                        let p = ring.mul(a, b);
                        ring.add_assign(out.get_mut(r, c), &p);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add<R: ScalarRing<Elem = E>>(&self, ring: &R, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch);
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| ring.add(a, b)).collect(),
        })
    }

    pub fn sub<R: ScalarRing<Elem = E>>(&self, ring: &R, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch);
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| ring.sub(a, b)).collect(),
        })
    }

    pub fn scale<R: ScalarRing<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| ring.mul(a, c)).collect(),
        }
    }

    /// A ⊗ B with rows and columns ordered lexicographically by (index in A, index in B).
    pub fn kronecker<R: ScalarRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            let a = self.get(r / other.rows, c / other.cols);
            if ring.is_zero(a) {
                return ring.zero();
            }
            ring.mul(a, other.get(r % other.rows, c % other.cols))
        })
    }

    pub fn is_symmetric(&self) -> bool
    where
        E: PartialEq,
    {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }
}

/// The outcome of fraction-free row reduction.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub rank: usize,
    /// Pivot columns in increasing order; the first `rank` columns that are
    /// independent of their predecessors.
    pub pivots: Vec<usize>,
    /// Last nonzero pivot, which equals ± the determinant for a square
    /// nonsingular input.
    pub last_pivot: Option<E>,
    /// Parity of the row swaps performed.
    pub swaps_odd: bool,
}

/// Bareiss elimination on a copy of `m`.
pub fn echelon<R: ScalarRing>(ring: &R, m: &Matrix<R::Elem>) -> Echelon<R::Elem> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = ring.one();
    let mut prev_inv = Some(ring.one());
    let mut pivots = Vec::new();
    let mut swaps_odd = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&p| !ring.is_zero(a.get(p, c))) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                a.data.swap(p * cols + k, r * cols + k);
            }
            swaps_odd = !swaps_odd;
        }
        let piv = a.get(r, c).clone();
        for i in r + 1..rows {
            let lead = a.get(i, c).clone();
            let lead_zero = ring.is_zero(&lead);
            for j in c + 1..cols {
                let mut v = ring.mul(&piv, a.get(i, j));
                if !lead_zero {
                    let t = ring.mul(&lead, a.get(r, j));
                    v = ring.sub(&v, &t);
                }
                let v = match &prev_inv {
                    Some(inv) => ring.mul(&v, inv),
                    None => ring.div_exact(&v, &prev).expect("Bareiss division is exact"),
                };
                a.set(i, j, v);
            }
            a.set(i, c, ring.zero());
        }
        pivots.push(c);
        prev = piv;
        prev_inv = if ring.is_field() { ring.inverse(&prev) } else { None };
        if !ring.is_field() && ring.is_one(&prev) {
            prev_inv = Some(ring.one());
        }
        r += 1;
    }
    let last_pivot = if r > 0 { Some(prev) } else { None };
    Echelon { rank: r, pivots, last_pivot, swaps_odd }
}

pub fn rank<R: ScalarRing>(ring: &R, m: &Matrix<R::Elem>) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    echelon(ring, m).rank
}

/// Determinant of a square matrix of dimension at most `limit`.
pub fn determinant<R: ScalarRing>(ring: &R, m: &Matrix<R::Elem>, limit: usize) -> Result<R::Elem> {
    if m.rows != m.cols {
        return Err(Error::ShapeMismatch);
    }
    if m.rows > limit {
        return Err(Error::MatrixTooLarge { dim: m.rows, limit });
    }
    if m.rows == 0 {
        return Ok(ring.one());
    }
    let e = echelon(ring, m);
    if e.rank < m.rows {
        return Ok(ring.zero());
    }
    let d = e.last_pivot.expect("nonsingular");
    Ok(if e.swaps_odd { ring.neg(&d) } else { d })
}

/// A⁻¹·B for a nonsingular square A, over a field.
pub fn solve<R: ScalarRing>(
    ring: &R,
    a: &Matrix<R::Elem>,
    b: &Matrix<R::Elem>,
) -> Result<Matrix<R::Elem>> {
    if !ring.is_field() {
        return Err(Error::NotAField);
    }
    let n = a.rows;
    if a.cols != n || b.rows != n {
        return Err(Error::ShapeMismatch);
    }
    let mut a = a.clone();
    let mut b = b.clone();
    for c in 0..n {
        let p = (c..n).find(|&p| !ring.is_zero(a.get(p, c))).ok_or(Error::DivisionByZero)?;
        if p != c {
            for k in 0..n {
                a.data.swap(p * n + k, c * n + k);
            }
            for k in 0..b.cols {
                b.data.swap(p * b.cols + k, c * b.cols + k);
            }
        }
        let inv = ring.inverse(a.get(c, c)).ok_or(Error::DivisionByZero)?;
        for k in 0..n {
            let v = ring.mul(a.get(c, k), &inv);
            a.set(c, k, v);
        }
        for k in 0..b.cols {
            let v = ring.mul(b.get(c, k), &inv);
            b.set(c, k, v);
        }
        for i in 0..n {
            if i == c || ring.is_zero(a.get(i, c)) {
                continue;
            }
            let f = a.get(i, c).clone();
            for k in 0..n {
                let t = ring.mul(&f, a.get(c, k));
                let v = ring.sub(a.get(i, k), &t);
                a.set(i, k, v);
            }
            for k in 0..b.cols {
                let t = ring.mul(&f, b.get(c, k));
                let v = ring.sub(b.get(i, k), &t);
                b.set(i, k, v);
            }
        }
    }
    Ok(b)
}
