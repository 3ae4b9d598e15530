//! The free algebra 𝔉, its twisted coproduct, the operators δ_i and the form S.
//!
//! Permutations act on positions: τ(K) = (i_{τ(1)}, …, i_{τ(N)}), so the
//! letter at output position p is the input letter at τ(p). The twisting
//! number ζ(K; τ) collects ζ^{a·b} for every pair of letters whose relative
//! order τ reverses. With this reading Δ^{(N)}(θ_K)⁺ = Σ_τ ζ(K; τ) θ_{τ(K)}
//! and the permutation sum for S agree with the algebra-map definition of Δ
//! and with the δ_i recursion.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{CartanDatum, MultiDegree};
use crate::combination::Combination;
use crate::linalg::Matrix;
use crate::scalar::ScalarRing;
use crate::word::Word;
use crate::{Error, Result};

/// Largest word length the permutation sums will enumerate.
pub const PERMUTATION_LIMIT: usize = 10;

pub type FreeElement<E> = Combination<Word, E>;

/// An element of a tensor power, keyed by tuples of words.
pub type TensorElement<E> = Combination<Vec<Word>, E>;

/// An element of 𝔉* in the basis dual to the words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DualElement<E>(pub Combination<Word, E>);

/// 𝔉 over a scalar ring, for a fixed Cartan datum.
#[derive(Clone, Debug)]
pub struct FreeAlgebra<R: ScalarRing> {
    ring: R,
    cartan: CartanDatum,
}

impl<R: ScalarRing> FreeAlgebra<R> {
    pub fn new(ring: R, cartan: CartanDatum) -> Self {
        Self { ring, cartan }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn one(&self) -> FreeElement<R::Elem> {
        Combination::basis(&self.ring, Word::empty())
    }

    pub fn generator(&self, i: usize) -> FreeElement<R::Elem> {
        Combination::basis(&self.ring, Word::letter(i))
    }

    pub fn monomial(&self, w: &Word) -> FreeElement<R::Elem> {
        Combination::basis(&self.ring, w.clone())
    }

    /// ζ^{a·b} summed over letters of `x` and `y`.
    #[inline]
    pub(crate) fn word_dot(&self, x: &Word, y: &Word) -> i64 {
        let mut acc = 0;
        for a in x.letters() {
            for b in y.letters() {
                acc += self.cartan.dot(a, b);
            }
        }
        acc
    }

    pub fn multiply(
        &self,
        x: &FreeElement<R::Elem>,
        y: &FreeElement<R::Elem>,
    ) -> FreeElement<R::Elem> {
        let mut out = Combination::new();
        for (a, ca) in x {
            for (b, cb) in y {
                out.add_term(&self.ring, a.concat(b), self.ring.mul(ca, cb));
            }
        }
        out
    }

    /// The common content of all terms; `None` for the zero element.
    pub fn degree_of(&self, x: &FreeElement<R::Elem>) -> Result<Option<MultiDegree>> {
        let mut deg: Option<MultiDegree> = None;
        for w in x.keys() {
            let c = w.content(self.rank());
            match &deg {
                None => deg = Some(c),
                Some(d) if *d != c => return Err(Error::NonHomogeneousInput),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// ζ(K; τ) for a permutation τ of 0..N (0-based).
    pub fn twisting_number(&self, k: &Word, tau: &[usize]) -> Result<R::Elem> {
        check_permutation(tau, k.len())?;
        let mut e = 0;
        for p in 0..tau.len() {
            for q in p + 1..tau.len() {
                if tau[p] > tau[q] {
                    e += self.cartan.dot(k.at(tau[p]), k.at(tau[q]));
                }
            }
        }
        Ok(self.ring.zeta_pow(e))
    }

    /// The product on 𝔉^{⊗m}:
    /// (x_1⊗…⊗x_m)(y_1⊗…⊗y_m) = ζ^{Σ_{j<i}|x_i|·|y_j|} x_1y_1⊗…⊗x_my_m.
    pub fn tensor_multiply(
        &self,
        a: &TensorElement<R::Elem>,
        b: &TensorElement<R::Elem>,
    ) -> Result<TensorElement<R::Elem>> {
        let mut out = Combination::new();
        for (xs, ca) in a {
            for (ys, cb) in b {
                if xs.len() != ys.len() {
                    return Err(Error::LengthMismatch { expected: xs.len(), found: ys.len() });
                }
                let mut e = 0;
                for i in 0..xs.len() {
                    for j in 0..i {
                        e += self.word_dot(&xs[i], &ys[j]);
                    }
                }
                let key = xs.iter().zip(ys).map(|(x, y)| x.concat(y)).collect();
                let c = self.ring.mul_zeta_pow(e, &self.ring.mul(ca, cb));
                out.add_term(&self.ring, key, c);
            }
        }
        Ok(out)
    }

    /// Δ(θ_K) = Σ_{A ⊆ [N]} ζ(K; τ_A) θ_{K_A} ⊗ θ_{K_{A'}}.
    pub fn coproduct(&self, x: &FreeElement<R::Elem>) -> TensorElement<R::Elem> {
        x.flat_map(&self.ring, |w| self.iterated_coproduct_word(w, 2))
    }

    /// Δ^{(n)}; `n = 1` is the identity, `n = 0` the counit.
    pub fn iterated_coproduct(&self, x: &FreeElement<R::Elem>, n: usize) -> TensorElement<R::Elem> {
        x.flat_map(&self.ring, |w| self.iterated_coproduct_word(w, n))
    }

    /// Sum over maps f from positions to factors, each factor keeping the
    /// letters in their original order, with ζ^{w_a·w_b} for every a < b
    /// such that f(a) > f(b).
    pub fn iterated_coproduct_word(&self, w: &Word, n: usize) -> TensorElement<R::Elem> {
        let mut out = Combination::new();
        if n == 0 {
            if w.is_empty() {
                out.add_term(&self.ring, Vec::new(), self.ring.one());
            }
            return out;
        }
        let rank = self.rank();
        // per-factor accumulated i·(content) for the letters placed so far
        let mut factors: Vec<Vec<u8>> = vec![Vec::new(); n];
        let mut dots: Vec<Vec<i64>> = vec![vec![0; rank]; n];
        self.coproduct_rec(w, 0, 0, &mut factors, &mut dots, &mut out);
        out
    }

    fn coproduct_rec(
        &self,
        w: &Word,
        pos: usize,
        exp: i64,
        factors: &mut Vec<Vec<u8>>,
        dots: &mut Vec<Vec<i64>>,
        out: &mut TensorElement<R::Elem>,
    ) {
        if pos == w.len() {
            let key = factors.iter().map(|f| Word::from_bytes(f.clone())).collect();
            out.add_term(&self.ring, key, self.ring.zeta_pow(exp));
            return;
        }
        let b = w.at(pos);
        let n = factors.len();
        // letters already sitting in factors after k contribute when b goes to k
        let mut later = 0;
        for k in (0..n).rev() {
            factors[k].push(b as u8);
            for i in 0..self.rank() {
                dots[k][i] += self.cartan.dot(i, b);
            }
            self.coproduct_rec(w, pos + 1, exp + later, factors, dots, out);
            factors[k].pop();
            for i in 0..self.rank() {
                dots[k][i] -= self.cartan.dot(i, b);
            }
            later += dots[k][b];
        }
    }

    /// δ_i, with δ_i(θ_j) = δ_{ij} and δ_i(xy) = δ_i(x)y + ζ^{|x|·i} x δ_i(y).
    pub fn delta(&self, i: usize, x: &FreeElement<R::Elem>) -> FreeElement<R::Elem> {
        x.flat_map(&self.ring, |w| self.delta_word(i, w))
    }

    pub fn delta_word(&self, i: usize, w: &Word) -> FreeElement<R::Elem> {
        let mut out = Combination::new();
        let mut e = 0;
        for p in 0..w.len() {
            let a = w.at(p);
            if a == i {
                out.add_term(&self.ring, w.remove(p), self.ring.zeta_pow(e));
            }
            e += self.cartan.dot(a, i);
        }
        out
    }

    /// S(θ_K, θ_{K'}) = Σ_{τ: τ(K) = K'} ζ(K; τ), by enumerating permutations.
    pub fn form_s_perm(&self, k: &Word, k2: &Word) -> Result<R::Elem> {
        let mut acc = self.ring.zero();
        for_each_matching_permutation(k, k2, |tau| {
            let mut e = 0;
            for p in 0..tau.len() {
                for q in p + 1..tau.len() {
                    if tau[p] > tau[q] {
                        e += self.cartan.dot(k.at(tau[p]), k.at(tau[q]));
                    }
                }
            }
            self.ring.add_assign(&mut acc, &self.ring.zeta_pow(e));
        })?;
        Ok(acc)
    }

    /// S(x, y) by peeling: S(θ_i x, y) = S(x, δ_i y), S(1, 1) = 1.
    pub fn form_s_rec(&self, x: &FreeElement<R::Elem>, y: &FreeElement<R::Elem>) -> R::Elem {
        let mut acc = self.ring.zero();
        for (w, c) in x {
            let mut cur = y.clone();
            for i in w.letters() {
                if cur.is_zero() {
                    break;
                }
                cur = self.delta(i, &cur);
            }
            let v = cur.coeff(&self.ring, &Word::empty());
            self.ring.add_assign(&mut acc, &self.ring.mul(c, &v));
        }
        acc
    }

    pub fn form_s_words(&self, x: &Word, y: &Word) -> R::Elem {
        self.form_s_rec(&self.monomial(x), &self.monomial(y))
    }

    /// Words of content ν in lexicographic order: the basis of 𝔉_ν.
    pub fn basis(&self, nu: &MultiDegree) -> Vec<Word> {
        Word::all_with_content(nu)
    }

    /// The Gram matrix of S on 𝔉_ν, by the peeling recursion on degrees.
    pub fn gram_matrix(&self, nu: &MultiDegree) -> Matrix<R::Elem> {
        let mut table = PeelingGram::new();
        table.get(&self.ring, nu, |i, w| self.delta_word(i, w)).clone()
    }

    /// The Gram matrix with every entry from the permutation sum.
    pub fn gram_matrix_perm(&self, nu: &MultiDegree) -> Result<Matrix<R::Elem>> {
        let basis = self.basis(nu);
        let mut rows = Vec::with_capacity(basis.len());
        for x in &basis {
            let row = basis.iter().map(|y| self.form_s_perm(x, y)).collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Matrix::from_rows(rows)
    }

    /// ⟨φ, x⟩ for the dual basis.
    pub fn dual_pairing(&self, phi: &DualElement<R::Elem>, x: &FreeElement<R::Elem>) -> R::Elem {
        let mut acc = self.ring.zero();
        for (w, c) in &phi.0 {
            if let Some(d) = x.get(w) {
                self.ring.add_assign(&mut acc, &self.ring.mul(c, d));
            }
        }
        acc
    }

    /// The product on 𝔉* dual to Δ: ⟨φψ, x⟩ = ⟨φ ⊗ ψ, Δ(x)⟩.
    pub fn dual_multiply(
        &self,
        phi: &DualElement<R::Elem>,
        psi: &DualElement<R::Elem>,
    ) -> DualElement<R::Elem> {
        let mut out = Combination::new();
        for (a, ca) in &phi.0 {
            for (b, cb) in &psi.0 {
                let c = self.ring.mul(ca, cb);
                let mut buf = Vec::with_capacity(a.len() + b.len());
                self.shuffle_rec(a, b, 0, 0, 0, &mut buf, &c, &mut out);
            }
        }
        DualElement(out)
    }

    /// Interleavings of `a` and `b`; a letter of `a` placed after letters of
    /// `b` picks up their dot product with it.
    #[allow(clippy::too_many_arguments)]
    fn shuffle_rec(
        &self,
        a: &Word,
        b: &Word,
        ia: usize,
        ib: usize,
        exp: i64,
        buf: &mut Vec<u8>,
        c: &R::Elem,
        out: &mut FreeElement<R::Elem>,
    ) {
        if ia == a.len() && ib == b.len() {
            out.add_term(&self.ring, Word::from_bytes(buf.clone()), self.ring.mul_zeta_pow(exp, c));
            return;
        }
        if ia < a.len() {
            let x = a.at(ia);
            let add: i64 = b.bytes()[..ib].iter().map(|&y| self.cartan.dot(x, y as usize)).sum();
            buf.push(x as u8);
            self.shuffle_rec(a, b, ia + 1, ib, exp + add, buf, c, out);
            buf.pop();
        }
        if ib < b.len() {
            buf.push(b.at(ib) as u8);
            self.shuffle_rec(a, b, ia, ib + 1, exp, buf, c, out);
            buf.pop();
        }
    }

    /// The map 𝔉 → 𝔉* induced by S.
    pub fn s_map(&self, x: &FreeElement<R::Elem>) -> DualElement<R::Elem> {
        let mut by_degree: BTreeMap<MultiDegree, FreeElement<R::Elem>> = BTreeMap::new();
        for (w, c) in x {
            by_degree
                .entry(w.content(self.rank()))
                .or_default()
                .add_term(&self.ring, w.clone(), c.clone());
        }
        let mut out = Combination::new();
        for (nu, part) in by_degree {
            for w in self.basis(&nu) {
                let v = self.form_s_rec(&part, &self.monomial(&w));
                out.add_term(&self.ring, w, v);
            }
        }
        DualElement(out)
    }

    /// ∏ S(x_i, x'_i) extended bilinearly to 𝔉^{⊗m}.
    pub fn form_s_tensor(
        &self,
        a: &TensorElement<R::Elem>,
        b: &TensorElement<R::Elem>,
    ) -> Result<R::Elem> {
        let mut acc = self.ring.zero();
        for (xs, ca) in a {
            for (ys, cb) in b {
                if xs.len() != ys.len() {
                    return Err(Error::ShapeMismatch);
                }
                let mut v = self.ring.mul(ca, cb);
                for (x, y) in xs.iter().zip(ys) {
                    if self.ring.is_zero(&v) {
                        break;
                    }
                    if x.len() != y.len() {
                        v = self.ring.zero();
                        break;
                    }
                    v = self.ring.mul(&v, &self.form_s_words(x, y));
                }
                self.ring.add_assign(&mut acc, &v);
            }
        }
        Ok(acc)
    }
}

pub(crate) fn check_permutation(tau: &[usize], n: usize) -> Result<()> {
    if tau.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: tau.len() });
    }
    let mut seen = vec![false; n];
    for &t in tau {
        if t >= n || seen[t] {
            return Err(Error::InvalidPermutation { n });
        }
        seen[t] = true;
    }
    Ok(())
}

/// Calls `f(τ)` for every τ with τ(K) = K', i.e. K'_p = K_{τ(p)}.
pub(crate) fn for_each_matching_permutation(
    k: &Word,
    k2: &Word,
    mut f: impl FnMut(&[usize]),
) -> Result<()> {
    let n = k.len();
    if n > PERMUTATION_LIMIT || k2.len() > PERMUTATION_LIMIT {
        return Err(Error::PermutationEnumerationTooLarge {
            depth: n.max(k2.len()),
            limit: PERMUTATION_LIMIT,
        });
    }
    if n != k2.len() {
        return Ok(());
    }
    let mut used = vec![false; n];
    let mut tau = Vec::with_capacity(n);
    fn rec(
        k: &Word,
        k2: &Word,
        used: &mut [bool],
        tau: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        let p = tau.len();
        if p == k.len() {
            f(tau);
            return;
        }
        for s in 0..k.len() {
            if !used[s] && k.at(s) == k2.at(p) {
                used[s] = true;
                tau.push(s);
                rec(k, k2, used, tau, f);
                tau.pop();
                used[s] = false;
            }
        }
    }
    rec(k, k2, &mut used, &mut tau, &mut f);
    Ok(())
}

/// Gram matrices built degree by degree from a peeling operator P_i with
/// B(θ_i x, y) = B(x, P_i y) and B(1, 1) = 1.
pub(crate) struct PeelingGram<E> {
    table: BTreeMap<MultiDegree, GramEntry<E>>,
}

pub(crate) struct GramEntry<E> {
    pub basis: Vec<Word>,
    pub index: BTreeMap<Word, usize>,
    pub gram: Matrix<E>,
}

impl<E: Clone + PartialEq> PeelingGram<E> {
    pub fn new() -> Self {
        Self { table: BTreeMap::new() }
    }

    pub fn entry<R: ScalarRing<Elem = E>>(
        &mut self,
        ring: &R,
        nu: &MultiDegree,
        peel: impl Fn(usize, &Word) -> Combination<Word, E>,
    ) -> &GramEntry<E> {
        if !self.table.contains_key(nu) {
            let mut todo = nu.sub_degrees();
            todo.sort_by_key(MultiDegree::depth);
            for mu in todo {
                if !self.table.contains_key(&mu) {
                    let e = self.compute(ring, &mu, &peel);
                    self.table.insert(mu, e);
                }
            }
        }
        &self.table[nu]
    }

    pub fn get<R: ScalarRing<Elem = E>>(
        &mut self,
        ring: &R,
        nu: &MultiDegree,
        peel: impl Fn(usize, &Word) -> Combination<Word, E>,
    ) -> &Matrix<E> {
        &self.entry(ring, nu, peel).gram
    }

    fn compute<R: ScalarRing<Elem = E>>(
        &self,
        ring: &R,
        nu: &MultiDegree,
        peel: &impl Fn(usize, &Word) -> Combination<Word, E>,
    ) -> GramEntry<E> {
        let basis = Word::all_with_content(nu);
        let index: BTreeMap<Word, usize> =
            basis.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let n = basis.len();
        if nu.is_zero() {
            return GramEntry { basis, index, gram: Matrix::identity(ring, 1) };
        }
        let mut gram = Matrix::zeros(ring, n, n);
        for i in 0..nu.rank() {
            let Some(sub) = nu.sub_letter(i) else { continue };
            let below = &self.table[&sub];
            // P_i(y) on the basis below, for every y
            let peeled: Vec<Vec<(usize, E)>> = basis
                .iter()
                .map(|y| peel(i, y).into_iter().map(|(z, c)| (below.index[&z], c)).collect())
                .collect();
            for (xr, x) in basis.iter().enumerate() {
                if x.at(0) != i {
                    continue;
                }
                let xs = below.index[&x.slice(1, x.len())];
                for (yc, terms) in peeled.iter().enumerate() {
                    let mut v = ring.zero();
                    for (z, c) in terms {
                        let g = below.gram.get(xs, *z);
                        if !ring.is_zero(g) {
                            ring.add_assign(&mut v, &ring.mul(c, g));
                        }
                    }
                    gram.set(xr, yc, v);
                }
            }
        }
        GramEntry { basis, index, gram }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CyclotomicField;

    fn alg(name: &str, l: u32) -> FreeAlgebra<CyclotomicField> {
        FreeAlgebra::new(CyclotomicField::new(l).unwrap(), CartanDatum::preset(name).unwrap())
    }

    fn w(v: &[usize]) -> Word {
        Word::new(v)
    }

    #[test]
    fn multiply_examples() {
        let f = alg("A2", 5);
        let k = f.ring().clone();
        assert_eq!(f.multiply(&f.generator(0), &f.generator(1)), f.monomial(&w(&[0, 1])));
        let x = f.monomial(&w(&[1, 0, 0]));
        assert_eq!(f.multiply(&f.one(), &x), x);
        let s = f.generator(0).add(&k, &f.generator(1));
        let expected = f.monomial(&w(&[0, 0])).add(&k, &f.monomial(&w(&[1, 0])));
        assert_eq!(f.multiply(&s, &f.generator(0)), expected);
    }

    #[test]
    fn twisting_examples() {
        let f = alg("A2", 5);
        let k = f.ring().clone();
        assert_eq!(f.twisting_number(&w(&[0, 1, 1]), &[0, 1, 2]).unwrap(), k.one());
        assert_eq!(f.twisting_number(&w(&[0, 1]), &[1, 0]).unwrap(), k.zeta_pow(-1));
        let a1 = alg("A1", 7);
        assert_eq!(a1.twisting_number(&w(&[0, 0, 0]), &[2, 1, 0]).unwrap(), a1.ring().zeta_pow(6));
        assert_eq!(
            f.twisting_number(&w(&[0, 1]), &[0]),
            Err(Error::SizeMismatch { expected: 2, found: 1 })
        );
        assert_eq!(f.twisting_number(&w(&[0, 1]), &[1, 1]), Err(Error::InvalidPermutation { n: 2 }));
    }

    #[test]
    fn coproduct_examples() {
        let f = alg("A2", 5);
        let k = f.ring().clone();
        let t = |a: &[usize], b: &[usize]| vec![w(a), w(b)];
        let mut d1 = Combination::new();
        d1.add_term(&k, t(&[0], &[]), k.one());
        d1.add_term(&k, t(&[], &[0]), k.one());
        assert_eq!(f.coproduct(&f.generator(0)), d1);
        assert_eq!(f.coproduct(&f.one()), Combination::basis(&k, t(&[], &[])));
        let mut d2 = Combination::new();
        d2.add_term(&k, t(&[0, 1], &[]), k.one());
        d2.add_term(&k, t(&[0], &[1]), k.one());
        d2.add_term(&k, t(&[1], &[0]), k.zeta_pow(-1));
        d2.add_term(&k, t(&[], &[0, 1]), k.one());
        assert_eq!(f.coproduct(&f.monomial(&w(&[0, 1]))), d2);
    }

    #[test]
    fn iterated_coproduct_positive_part_is_a_permutation_sum() {
        let f = alg("A3", 7);
        let k = f.ring().clone();
        let word = w(&[0, 1, 2]);
        let full = f.iterated_coproduct(&f.monomial(&word), 3);
        let plus = full.filter(|t| t.iter().all(|x| !x.is_empty()));
        assert_eq!(plus.len(), 6);
        let mut expected = Combination::new();
        for tau in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let key = tau.iter().map(|&p| Word::letter(word.at(p))).collect();
            expected.add_term(&k, key, f.twisting_number(&word, &tau).unwrap());
        }
        assert_eq!(plus, expected);
        assert_eq!(f.iterated_coproduct(&f.monomial(&word), 1), Combination::basis(&k, vec![word]));
    }

    #[test]
    fn delta_examples() {
        let f = alg("A2", 5);
        assert_eq!(f.delta(0, &f.generator(0)), f.one());
        assert!(f.delta(0, &f.generator(1)).is_zero());
        assert!(f.delta(0, &f.one()).is_zero());
        assert_eq!(f.delta(0, &f.monomial(&w(&[0, 1]))), f.generator(1));
    }

    #[test]
    fn form_examples() {
        let f = alg("A2", 5);
        let k = f.ring().clone();
        assert_eq!(f.form_s_perm(&w(&[]), &w(&[])).unwrap(), k.one());
        assert_eq!(f.form_s_perm(&w(&[0, 1]), &w(&[1, 0])).unwrap(), k.zeta_pow(-1));
        assert_eq!(f.form_s_perm(&w(&[0, 0]), &w(&[0, 0])).unwrap(), k.add(&k.one(), &k.zeta_pow(2)));
        assert_eq!(f.form_s_words(&w(&[0]), &w(&[0])), k.one());
        assert!(k.is_zero(&f.form_s_words(&w(&[0]), &w(&[1]))));
        let a1 = alg("A1", 5);
        let k1 = a1.ring().clone();
        let three = w(&[0, 0, 0]);
        let expected = k1.mul(
            &k1.add(&k1.add(&k1.one(), &k1.zeta_pow(2)), &k1.zeta_pow(4)),
            &k1.add(&k1.one(), &k1.zeta_pow(2)),
        );
        assert_eq!(a1.form_s_words(&three, &three), expected);
        assert_eq!(a1.form_s_perm(&three, &three).unwrap(), expected);
    }

    #[test]
    fn gram_examples() {
        let a1 = alg("A1", 5);
        let k = a1.ring().clone();
        assert_eq!(a1.gram_matrix(&MultiDegree::new(vec![1])), Matrix::identity(&k, 1));
        let g2 = a1.gram_matrix(&MultiDegree::new(vec![2]));
        assert_eq!(*g2.get(0, 0), k.add(&k.one(), &k.zeta_pow(2)));
        let f = alg("A2", 5);
        let k = f.ring().clone();
        let g = f.gram_matrix(&MultiDegree::new(vec![1, 1]));
        let z = k.zeta_pow(-1);
        let expected = Matrix::from_rows(vec![vec![k.one(), z.clone()], vec![z, k.one()]]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(f.gram_matrix_perm(&MultiDegree::new(vec![1, 1])).unwrap(), expected);
    }

    #[test]
    fn dual_examples() {
        let f = alg("A2", 5);
        let k = f.ring().clone();
        let th = |i| DualElement(Combination::basis(&k, Word::letter(i)));
        let one = DualElement(Combination::basis(&k, Word::empty()));
        assert_eq!(f.dual_multiply(&th(0), &one), th(0));
        let p = f.dual_multiply(&th(0), &th(1));
        assert_eq!(f.dual_pairing(&p, &f.monomial(&w(&[0, 1]))), k.one());
        assert_eq!(f.dual_pairing(&p, &f.monomial(&w(&[1, 0]))), k.zeta_pow(-1));
        assert_eq!(f.s_map(&f.generator(0)), th(0));
        assert_eq!(f.s_map(&f.one()), one);
        let a1 = alg("A1", 5);
        let k1 = a1.ring().clone();
        let sq = a1.s_map(&a1.monomial(&w(&[0, 0])));
        assert_eq!(sq.0, Combination::from_term(&k1, w(&[0, 0]), k1.add(&k1.one(), &k1.zeta_pow(2))));
    }

    #[test]
    fn permutation_guard() {
        let f = alg("A1", 5);
        let long = Word::new(&[0; 11]);
        assert!(matches!(
            f.form_s_perm(&long, &long),
            Err(Error::PermutationEnumerationTooLarge { depth: 11, .. })
        ));
    }
}
