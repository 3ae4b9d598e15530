//! Verma modules V(Λ): the operators ε_i, the form S_Λ, the coaction Δ_Λ
//! and quantum commutators.
//!
//! A module word (w_1, …, w_N) stands for θ_{w_1}⋯θ_{w_N} v_Λ. In the
//! indexing θ_{i_N}⋯θ_{i_1} v_Λ used for the coaction this means
//! i_k = w_{N+1−k}.

use alloc::vec::Vec;

use crate::cartan::{MultiDegree, Weight};
use crate::combination::Combination;
use crate::free::{for_each_matching_permutation, FreeAlgebra, FreeElement, PeelingGram, TensorElement};
use crate::linalg::Matrix;
use crate::scalar::{bracket, ScalarRing};
use crate::word::Word;
use crate::{Error, Result};

/// Elements of V(Λ), keyed by the word acting on v_Λ.
pub type VermaElement<E> = Combination<Word, E>;

#[derive(Clone, Debug)]
pub struct VermaModule<R: ScalarRing> {
    alg: FreeAlgebra<R>,
    weight: Weight,
}

impl<R: ScalarRing> VermaModule<R> {
    pub fn new(alg: FreeAlgebra<R>, weight: Weight) -> Result<Self> {
        if weight.rank() != alg.rank() {
            return Err(Error::RankMismatch { expected: alg.rank(), found: weight.rank() });
        }
        Ok(Self { alg, weight })
    }

    pub fn algebra(&self) -> &FreeAlgebra<R> {
        &self.alg
    }

    pub fn ring(&self) -> &R {
        self.alg.ring()
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn highest_weight_vector(&self) -> VermaElement<R::Elem> {
        self.alg.one()
    }

    /// ⟨X-degree of w, i⟩ = ⟨Λ, i⟩ − i·content(w).
    #[inline]
    pub fn x_pairing(&self, w: &Word, i: usize) -> i64 {
        self.weight.at(i) - self.alg.word_dot(w, &Word::letter(i))
    }

    /// The X-degree Λ − λ_{content(w)}.
    pub fn x_degree(&self, nu: &MultiDegree) -> Weight {
        self.weight.sub(&self.alg.cartan().lambda_nu(nu))
    }

    pub fn act_theta(
        &self,
        x: &FreeElement<R::Elem>,
        m: &VermaElement<R::Elem>,
    ) -> VermaElement<R::Elem> {
        self.alg.multiply(x, m)
    }

    pub fn epsilon(&self, i: usize, m: &VermaElement<R::Elem>) -> VermaElement<R::Elem> {
        m.flat_map(self.ring(), |w| self.epsilon_word(i, w))
    }

    /// ε_i(θ_j x) = [⟨β, i⟩] δ_{ij} x + ζ^{i·j} θ_j ε_i(x), unrolled.
    pub fn epsilon_word(&self, i: usize, w: &Word) -> VermaElement<R::Elem> {
        let ring = self.ring();
        let cartan = self.alg.cartan();
        let mut out = Combination::new();
        let mut prefix = 0;
        // ⟨Λ − λ_{content(w_{p+1..})}, i⟩, updated from the right
        let mut suffix = Vec::with_capacity(w.len());
        let mut acc = self.weight.at(i);
        for a in w.letters().rev() {
            suffix.push(acc);
            acc -= cartan.dot(a, i);
        }
        suffix.reverse();
        for p in 0..w.len() {
            let a = w.at(p);
            if a == i {
                let c = ring.mul_zeta_pow(prefix, &bracket(ring, suffix[p]));
                out.add_term(ring, w.remove(p), c);
            }
            prefix += cartan.dot(a, i);
        }
        out
    }

    /// S_Λ(x, y) from S_Λ(θ_i x, y) = S_Λ(x, ε_i y) and S_Λ(v_Λ, v_Λ) = 1.
    pub fn form_rec(&self, x: &VermaElement<R::Elem>, y: &VermaElement<R::Elem>) -> R::Elem {
        let ring = self.ring();
        let mut acc = ring.zero();
        for (w, c) in x {
            let mut cur = y.clone();
            for i in w.letters() {
                if cur.is_zero() {
                    break;
                }
                cur = self.epsilon(i, &cur);
            }
            ring.add_assign(&mut acc, &ring.mul(c, &cur.coeff(ring, &Word::empty())));
        }
        acc
    }

    pub fn form_words(&self, x: &Word, y: &Word) -> R::Elem {
        let ring = self.ring();
        self.form_rec(&Combination::basis(ring, x.clone()), &Combination::basis(ring, y.clone()))
    }

    /// S_Λ by the sum over permutations with the factors A(K, Λ; τ).
    ///
    /// The closed formula is written for θ_{i_N}⋯θ_{i_1} v_Λ, so both words
    /// are read right to left.
    pub fn form_perm(&self, x: &Word, y: &Word) -> Result<R::Elem> {
        let ring = self.ring();
        let cartan = self.alg.cartan();
        let k = x.reversed();
        let k2 = y.reversed();
        let n = k.len();
        let mut acc = ring.zero();
        let mut inv = alloc::vec![0usize; n];
        for_each_matching_permutation(&k, &k2, |tau| {
            let mut e = 0;
            for p in 0..n {
                inv[tau[p]] = p;
                for q in p + 1..n {
                    if tau[p] > tau[q] {
                        e += cartan.dot(k.at(tau[p]), k.at(tau[q]));
                    }
                }
            }
            let mut v = ring.zeta_pow(e);
            for a in 0..n {
                let ia = k.at(a);
                let mut pairing = self.weight.at(ia);
                for b in 0..a {
                    if inv[b] < inv[a] {
                        pairing -= cartan.dot(k.at(b), ia);
                    }
                }
                v = ring.mul(&v, &bracket(ring, pairing));
                if ring.is_zero(&v) {
                    return;
                }
            }
            ring.add_assign(&mut acc, &v);
        })?;
        Ok(acc)
    }

    /// The Gram matrix of S_Λ on V(Λ)_ν in the lexicographic word basis.
    pub fn gram_matrix(&self, nu: &MultiDegree) -> Matrix<R::Elem> {
        let mut table = PeelingGram::new();
        table.get(self.ring(), nu, |i, w| self.epsilon_word(i, w)).clone()
    }

    /// Gram matrices for every degree up to a depth, sharing the recursion.
    pub fn gram_matrices(&self, depth_max: usize) -> Vec<(MultiDegree, Matrix<R::Elem>)> {
        let mut table = PeelingGram::new();
        MultiDegree::up_to_depth(self.alg.rank(), depth_max)
            .into_iter()
            .map(|nu| {
                let g = table.get(self.ring(), &nu, |i, w| self.epsilon_word(i, w)).clone();
                (nu, g)
            })
            .collect()
    }

    pub fn gram_matrix_perm(&self, nu: &MultiDegree) -> Result<Matrix<R::Elem>> {
        let basis = Word::all_with_content(nu);
        let mut rows = Vec::with_capacity(basis.len());
        for x in &basis {
            rows.push(basis.iter().map(|y| self.form_perm(x, y)).collect::<Result<Vec<_>>>()?);
        }
        Matrix::from_rows(rows)
    }

    /// t_i(x⊗y) = θ_i x⊗y − ζ^{i·ν−2⟨λ,i⟩} xθ_i⊗y + ζ^{i·ν} x⊗θ_i y.
    fn t_op(&self, i: usize, a: &TensorElement<R::Elem>) -> TensorElement<R::Elem> {
        let ring = self.ring();
        let mut out = Combination::new();
        for (key, c) in a {
            let (x, y) = (&key[0], &key[1]);
            let inu = self.alg.word_dot(&Word::letter(i), x);
            let lam = self.x_pairing(y, i);
            out.add_term(ring, alloc::vec![x.prepend(i), y.clone()], c.clone());
            out.add_term(
                ring,
                alloc::vec![x.append(i), y.clone()],
                ring.neg(&ring.mul_zeta_pow(inu - 2 * lam, c)),
            );
            out.add_term(ring, alloc::vec![x.clone(), y.prepend(i)], ring.mul_zeta_pow(inu, c));
        }
        out
    }

    /// Δ_Λ: V(Λ) → 𝔉 ⊗ V(Λ), keyed by pairs [x, y].
    pub fn coaction(&self, m: &VermaElement<R::Elem>) -> TensorElement<R::Elem> {
        m.flat_map(self.ring(), |w| self.coaction_word(w))
    }

    pub fn coaction_word(&self, w: &Word) -> TensorElement<R::Elem> {
        let ring = self.ring();
        let n = w.len();
        let mut out = Combination::basis(ring, alloc::vec![Word::empty(), w.clone()]);
        for p in 0..n {
            let rest = w.slice(p + 1, n);
            let b = bracket(ring, self.x_pairing(&rest, w.at(p)));
            let mut term = Combination::from_term(ring, alloc::vec![Word::letter(w.at(p)), rest], b);
            for q in (0..p).rev() {
                term = self.t_op(w.at(q), &term);
            }
            out.add_scaled(ring, &term, &ring.one());
        }
        out
    }

    /// [θ_{I,Q,Λ}] for the word `w` = (i_N, …, i_1) and Q ⊆ {1, …, N}.
    ///
    /// λ_a is the X-degree of what remains of θ_{i_{j_a−1}}⋯θ_{i_1} v_Λ once
    /// every letter of Q below j_a, j_0 included, has been taken out.
    pub fn quantum_commutator(&self, w: &Word, q: &[usize]) -> Result<FreeElement<R::Elem>> {
        let ring = self.ring();
        let cartan = self.alg.cartan();
        let n = w.len();
        if q.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut js: Vec<usize> = q.to_vec();
        js.sort_unstable();
        js.dedup();
        if js.len() != q.len() || js[0] == 0 || js[js.len() - 1] > n {
            return Err(Error::InvalidSubset { n });
        }
        let letter = |k: usize| w.at(n - k);
        // τ_Q(N, …, 1) = (j_l, …, j_0) ‖ (N, …, 1 without Q), as stored positions
        let mut tau: Vec<usize> = js.iter().rev().map(|&j| n - j).collect();
        tau.extend((1..=n).rev().filter(|k| !js.contains(k)).map(|k| n - k));
        let mut x = Combination::from_term(
            ring,
            Word::letter(letter(js[0])),
            self.alg.twisting_number(w, &tau)?,
        );
        let mut deg = MultiDegree::unit(self.alg.rank(), letter(js[0]));
        for a in 1..js.len() {
            let mut lam = self.weight.clone();
            for k in 1..js[a] {
                if !js[..a].contains(&k) {
                    lam = lam.sub(&cartan.lambda_nu(&MultiDegree::unit(self.alg.rank(), letter(k))));
                }
            }
            x = self.alg.ad_theta_with_degree(letter(js[a]), &lam, &x, &deg);
            deg = deg.add_letter(letter(js[a]));
        }
        Ok(x)
    }

    /// Δ_Λ as 1⊗θ_I v + Σ_Q [⟨Λ − λ_{i_1} − … − λ_{i_{j(Q)−1}}, i_{j(Q)}⟩] [θ_{I,Q,Λ}] ⊗ θ_{I,Q} v.
    pub fn coaction_via_commutators(&self, m: &VermaElement<R::Elem>) -> Result<TensorElement<R::Elem>> {
        let mut out = Combination::new();
        for (w, c) in m {
            out.add_scaled(self.ring(), &self.coaction_via_commutators_word(w)?, c);
        }
        Ok(out)
    }

    pub fn coaction_via_commutators_word(&self, w: &Word) -> Result<TensorElement<R::Elem>> {
        let ring = self.ring();
        let n = w.len();
        let mut out = Combination::basis(ring, alloc::vec![Word::empty(), w.clone()]);
        for mask in 1u32..(1u32 << n) {
            let q: Vec<usize> = (1..=n).filter(|j| mask & (1 << (j - 1)) != 0).collect();
            let jmin = q[0];
            // i_1 … i_{j−1} are the last j−1 stored letters
            let b = bracket(ring, self.x_pairing(&w.slice(n + 1 - jmin, n), w.at(n - jmin)));
            if ring.is_zero(&b) {
                continue;
            }
            let keep: Vec<usize> = (0..n).filter(|&p| !q.contains(&(n - p))).collect();
            let rest = w.select(&keep);
            let com = self.quantum_commutator(w, &q)?;
            for (x, c) in com {
                out.add_term(ring, alloc::vec![x, rest.clone()], ring.mul(&c, &b));
            }
        }
        Ok(out)
    }
}

impl<R: ScalarRing> FreeAlgebra<R> {
    /// ad_{θ_i,λ}(x) = θ_i x − ζ^{i·ν−2⟨λ,i⟩} x θ_i for homogeneous x.
    pub fn ad_theta(&self, i: usize, lambda: &Weight, x: &FreeElement<R::Elem>) -> Result<FreeElement<R::Elem>> {
        match self.degree_of(x)? {
            None => Ok(Combination::new()),
            Some(nu) => Ok(self.ad_theta_with_degree(i, lambda, x, &nu)),
        }
    }

    pub(crate) fn ad_theta_with_degree(
        &self,
        i: usize,
        lambda: &Weight,
        x: &FreeElement<R::Elem>,
        nu: &MultiDegree,
    ) -> FreeElement<R::Elem> {
        let ring = self.ring();
        let e = self.cartan().dot_letter(i, nu) - 2 * lambda.at(i);
        let mut out = Combination::new();
        for (w, c) in x {
            out.add_term(ring, w.prepend(i), c.clone());
            out.add_term(ring, w.append(i), ring.neg(&ring.mul_zeta_pow(e, c)));
        }
        out
    }

    /// (δ_i∘ad_{θ_j,λ} − ζ^{i·j} ad_{θ_j,λ}∘δ_i)(x) − [⟨λ−λ_ν, i⟩] δ_{ij} x, which vanishes.
    pub fn adjdelta_residual(
        &self,
        i: usize,
        j: usize,
        lambda: &Weight,
        x: &FreeElement<R::Elem>,
    ) -> Result<FreeElement<R::Elem>> {
        let ring = self.ring();
        let Some(nu) = self.degree_of(x)? else {
            return Ok(Combination::new());
        };
        let lhs = self.delta(i, &self.ad_theta_with_degree(j, lambda, x, &nu));
        let mut out = lhs;
        if let Some(sub) = nu.sub_letter(i) {
            let d = self.delta(i, x);
            let rhs = self.ad_theta_with_degree(j, lambda, &d, &sub);
            out.add_scaled(ring, &rhs, &ring.neg(&ring.zeta_pow(self.cartan().dot(i, j))));
        }
        if i == j {
            let pairing = lambda.sub(&self.cartan().lambda_nu(&nu)).at(i);
            out.add_scaled(ring, x, &ring.neg(&bracket(ring, pairing)));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use crate::scalar::CyclotomicField;

    fn verma(name: &str, l: u32, lam: &[i64]) -> VermaModule<CyclotomicField> {
        let alg = FreeAlgebra::new(CyclotomicField::new(l).unwrap(), CartanDatum::preset(name).unwrap());
        VermaModule::new(alg, Weight::new(lam.to_vec())).unwrap()
    }

    fn w(v: &[usize]) -> Word {
        Word::new(v)
    }

    #[test]
    fn epsilon_examples() {
        let v = verma("A1", 7, &[3]);
        let k = v.ring().clone();
        let one = v.highest_weight_vector();
        assert!(v.epsilon(0, &one).is_zero());
        assert_eq!(v.epsilon(0, &v.algebra().generator(0)), one.scale(&k, &bracket(&k, 3)));
        let expected = k.add(&bracket(&k, 1), &k.mul_zeta_pow(2, &bracket(&k, 3)));
        assert_eq!(v.epsilon_word(0, &w(&[0, 0])), Combination::from_term(&k, w(&[0]), expected));
        let a2 = verma("A2", 5, &[1, 2]);
        assert!(a2.epsilon(0, &a2.algebra().generator(1)).is_zero());
    }

    #[test]
    fn form_examples() {
        let v = verma("A1", 7, &[3]);
        let k = v.ring().clone();
        assert_eq!(v.form_words(&w(&[]), &w(&[])), k.one());
        assert_eq!(v.form_words(&w(&[0]), &w(&[0])), bracket(&k, 3));
        let two = k.add(
            &k.mul(&bracket(&k, 3), &bracket(&k, 1)),
            &k.mul_zeta_pow(2, &k.mul(&bracket(&k, 3), &bracket(&k, 3))),
        );
        assert_eq!(v.form_words(&w(&[0, 0]), &w(&[0, 0])), two);
        assert_eq!(v.form_perm(&w(&[0, 0]), &w(&[0, 0])).unwrap(), two);
        assert_eq!(v.form_perm(&w(&[0]), &w(&[0])).unwrap(), bracket(&k, 3));
        let a2 = verma("A2", 5, &[1, 2]);
        assert!(a2.ring().is_zero(&a2.form_perm(&w(&[0]), &w(&[1])).unwrap()));
    }

    #[test]
    fn perm_matches_recursion_in_depth_three() {
        for name in ["A2", "B2"] {
            let v = verma(name, 7, &[2, -1]);
            for x in Word::all_of_length(2, 3) {
                for y in Word::all_with_content(&x.content(2)) {
                    assert_eq!(v.form_perm(&x, &y).unwrap(), v.form_words(&x, &y), "{name} {x} {y}");
                }
            }
        }
    }

    #[test]
    fn coaction_examples() {
        let v = verma("A2", 5, &[2, 1]);
        let k = v.ring().clone();
        assert_eq!(v.coaction(&v.highest_weight_vector()), Combination::basis(&k, alloc::vec![w(&[]), w(&[])]));
        let mut d1 = Combination::basis(&k, alloc::vec![w(&[]), w(&[0])]);
        d1.add_term(&k, alloc::vec![w(&[0]), w(&[])], bracket(&k, 2));
        assert_eq!(v.coaction_word(&w(&[0])), d1);
        // θ_1θ_0 v: 1⊗θ_1θ_0v + [⟨Λ−λ_0,1⟩]θ_1⊗θ_0v + [⟨Λ,0⟩] t_1(θ_0⊗v)
        let mut d2 = Combination::basis(&k, alloc::vec![w(&[]), w(&[1, 0])]);
        d2.add_term(&k, alloc::vec![w(&[1]), w(&[0])], bracket(&k, 2));
        let t = v.t_op(1, &Combination::from_term(&k, alloc::vec![w(&[0]), w(&[])], bracket(&k, 2)));
        d2.add_scaled(&k, &t, &k.one());
        assert_eq!(v.coaction_word(&w(&[1, 0])), d2);
    }

    #[test]
    fn commutator_examples() {
        let v = verma("A2", 5, &[2, 1]);
        let k = v.ring().clone();
        let word = w(&[1, 0, 1]);
        assert_eq!(v.quantum_commutator(&word, &[3]).unwrap(), v.algebra().generator(1));
        assert_eq!(
            v.quantum_commutator(&word, &[1]).unwrap(),
            Combination::from_term(&k, Word::letter(1), k.zeta_pow(2 - 1))
        );
        assert_eq!(v.quantum_commutator(&word, &[]), Err(Error::EmptySubset));
        assert_eq!(v.quantum_commutator(&word, &[4]), Err(Error::InvalidSubset { n: 3 }));
        for x in Word::all_of_length(2, 3) {
            assert_eq!(v.coaction_word(&x), v.coaction_via_commutators_word(&x).unwrap(), "{x}");
        }
    }

    #[test]
    fn ad_examples() {
        let f = FreeAlgebra::new(CyclotomicField::new(5).unwrap(), CartanDatum::preset("A2").unwrap());
        let k = f.ring().clone();
        let lam = Weight::new(alloc::vec![2, 1]);
        let expected = f.generator(0).scale(&k, &k.sub(&k.one(), &k.zeta_pow(-4)));
        assert_eq!(f.ad_theta(0, &lam, &f.one()).unwrap(), expected);
        let mut e2 = f.monomial(&w(&[0, 1]));
        e2.add_term(&k, w(&[1, 0]), k.neg(&k.zeta_pow(-1 - 4)));
        assert_eq!(f.ad_theta(0, &lam, &f.generator(1)).unwrap(), e2);
        let mixed = f.generator(0).add(&k, &f.monomial(&w(&[0, 1])));
        assert_eq!(f.ad_theta(0, &lam, &mixed), Err(Error::NonHomogeneousInput));
        assert!(f.adjdelta_residual(0, 0, &lam, &f.one()).unwrap().is_zero());
        assert!(f.adjdelta_residual(0, 1, &lam, &f.generator(1)).unwrap().is_zero());
    }
}
