//! Tensor products V(Λ_0)⊗…⊗V(Λ_{n−1}) as 𝔉-modules, and the product forms
//! on 𝔉^{⊗m} ⊗ V(Λ_0) ⊗ … ⊗ V(Λ_{n−1}).

use alloc::vec::Vec;

use crate::cartan::{MultiDegree, Weight};
use crate::combination::Combination;
use crate::free::{FreeAlgebra, FreeElement, TensorElement};
use crate::scalar::ScalarRing;
use crate::verma::VermaModule;
use crate::word::Word;
use crate::{Error, Result};

/// Elements of the tensor product, keyed by n-tuples of module words.
pub type TensorModuleElement<E> = Combination<Vec<Word>, E>;

#[derive(Clone, Debug)]
pub struct TensorModule<R: ScalarRing> {
    factors: Vec<VermaModule<R>>,
    alg: FreeAlgebra<R>,
}

impl<R: ScalarRing> TensorModule<R> {
    pub fn new(alg: FreeAlgebra<R>, weights: &[Weight]) -> Result<Self> {
        let factors = weights
            .iter()
            .map(|w| VermaModule::new(alg.clone(), w.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { factors, alg })
    }

    pub fn algebra(&self) -> &FreeAlgebra<R> {
        &self.alg
    }

    pub fn ring(&self) -> &R {
        self.alg.ring()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factor(&self, j: usize) -> &VermaModule<R> {
        &self.factors[j]
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.factors.iter().map(|f| f.weight().clone()).collect()
    }

    /// v_{Λ_0} ⊗ … ⊗ v_{Λ_{n−1}}.
    pub fn highest_weight_vector(&self) -> TensorModuleElement<R::Elem> {
        Combination::basis(self.ring(), alloc::vec![Word::empty(); self.len()])
    }

    /// ⟨X-degree of the module word y in factor j, content of u⟩.
    fn pairing(&self, j: usize, y: &Word, u: &Word) -> i64 {
        u.letters().map(|a| self.factors[j].x_pairing(y, a)).sum()
    }

    /// (u_0⊗…⊗u_{n−1})·(x_0⊗…⊗x_{n−1}) = ζ^{−Σ_{j<i}⟨λ_j,ν_i⟩} u_0x_0⊗…⊗u_{n−1}x_{n−1}.
    pub fn tensor_algebra_action(
        &self,
        u: &TensorElement<R::Elem>,
        x: &TensorModuleElement<R::Elem>,
    ) -> Result<TensorModuleElement<R::Elem>> {
        let ring = self.ring();
        let n = self.len();
        let mut out = Combination::new();
        for (us, cu) in u {
            if us.len() != n {
                return Err(Error::LengthMismatch { expected: n, found: us.len() });
            }
            for (xs, cx) in x {
                if xs.len() != n {
                    return Err(Error::LengthMismatch { expected: n, found: xs.len() });
                }
                let mut e = 0;
                for i in 0..n {
                    for j in 0..i {
                        e -= self.pairing(j, &xs[j], &us[i]);
                    }
                }
                let key = us.iter().zip(xs).map(|(a, b)| a.concat(b)).collect();
                out.add_term(ring, key, ring.mul_zeta_pow(e, &ring.mul(cu, cx)));
            }
        }
        Ok(out)
    }

    /// The 𝔉-action through Δ^{(n)}.
    pub fn f_action(
        &self,
        x: &FreeElement<R::Elem>,
        m: &TensorModuleElement<R::Elem>,
    ) -> TensorModuleElement<R::Elem> {
        let u = self.alg.iterated_coproduct(x, self.len());
        self.tensor_algebra_action(&u, m).expect("coproduct has the right length")
    }

    /// Δ_M(m) = Σ ζ^{−Σ_{j<i}⟨λ(y_j),|x_i|⟩} x_0⋯x_{n−1} ⊗ y_0⊗…⊗y_{n−1},
    /// where Δ_{Λ_j}(m_j) = Σ x_j⊗y_j. Keys are [x, y_0, …, y_{n−1}].
    pub fn coaction(&self, m: &TensorModuleElement<R::Elem>) -> TensorElement<R::Elem> {
        let ring = self.ring();
        let n = self.len();
        let mut out = Combination::new();
        for (ms, c) in m {
            let parts: Vec<Vec<(Vec<Word>, R::Elem)>> = (0..n)
                .map(|j| self.factors[j].coaction_word(&ms[j]).into_terms())
                .collect();
            let mut idx = alloc::vec![0usize; n];
            loop {
                let mut x = Word::empty();
                let mut key = Vec::with_capacity(n + 1);
                key.push(Word::empty());
                let mut v = c.clone();
                let mut e = 0;
                for i in 0..n {
                    let (k, cv) = &parts[i][idx[i]];
                    for (j, part) in parts.iter().enumerate().take(i) {
                        e -= self.pairing(j, &part[idx[j]].0[1], &k[0]);
                    }
                    x = x.concat(&k[0]);
                    key.push(k[1].clone());
                    v = ring.mul(&v, cv);
                }
                key[0] = x;
                out.add_term(ring, key, ring.mul_zeta_pow(e, &v));
                // odometer over the factor expansions
                let mut p = 0;
                while p < n {
                    idx[p] += 1;
                    if idx[p] < parts[p].len() {
                        break;
                    }
                    idx[p] = 0;
                    p += 1;
                }
                if p == n {
                    break;
                }
            }
        }
        out
    }

    /// ∏_{i<m} S(x_i, x'_i) ∏_j S_{Λ_j}(y_j, y'_j), extended bilinearly.
    pub fn form_s_tensor(
        &self,
        m: usize,
        a: &TensorElement<R::Elem>,
        b: &TensorElement<R::Elem>,
    ) -> Result<R::Elem> {
        let ring = self.ring();
        let len = m + self.len();
        let mut acc = ring.zero();
        for (xs, ca) in a {
            for (ys, cb) in b {
                if xs.len() != len || ys.len() != len {
                    return Err(Error::ShapeMismatch);
                }
                let v = self.form_key(m, xs, ys);
                if !ring.is_zero(&v) {
                    ring.add_assign(&mut acc, &ring.mul(&v, &ring.mul(ca, cb)));
                }
            }
        }
        Ok(acc)
    }

    /// The form on two basis tuples of shape m + n.
    pub fn form_key(&self, m: usize, xs: &[Word], ys: &[Word]) -> R::Elem {
        let ring = self.ring();
        let rank = self.alg.rank();
        let mut v = ring.one();
        for (k, (x, y)) in xs.iter().zip(ys).enumerate() {
            if x.content(rank) != y.content(rank) {
                return ring.zero();
            }
            let f = if k < m {
                self.alg.form_s_words(x, y)
            } else {
                self.factors[k - m].form_words(x, y)
            };
            v = ring.mul(&v, &f);
            if ring.is_zero(&v) {
                break;
            }
        }
        v
    }

    /// The X-degree Σ_j (Λ_j − λ_{ν_j}) of a tuple.
    pub fn x_degree(&self, key: &[Word]) -> Weight {
        let rank = self.alg.rank();
        let mut w = Weight::new(alloc::vec![0; rank]);
        for (f, y) in self.factors.iter().zip(key) {
            w = w.add(&f.x_degree(&y.content(rank)));
        }
        w
    }

    /// The multidegree of a tuple: the sum of factor contents.
    pub fn degree(&self, key: &[Word]) -> MultiDegree {
        let rank = self.alg.rank();
        key.iter().fold(MultiDegree::zero(rank), |d, y| d.add(&y.content(rank)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use crate::scalar::{bracket, CyclotomicField};

    fn module(lams: &[&[i64]]) -> TensorModule<CyclotomicField> {
        let alg = FreeAlgebra::new(CyclotomicField::new(5).unwrap(), CartanDatum::preset("A2").unwrap());
        let ws: Vec<Weight> = lams.iter().map(|l| Weight::new(l.to_vec())).collect();
        TensorModule::new(alg, &ws).unwrap()
    }

    fn w(v: &[usize]) -> Word {
        Word::new(v)
    }

    #[test]
    fn action_examples() {
        let t = module(&[&[1, 2], &[3, 0]]);
        let k = t.ring().clone();
        let m = Combination::basis(&k, alloc::vec![w(&[]), w(&[1])]);
        let ones = Combination::basis(&k, alloc::vec![w(&[]), w(&[])]);
        assert_eq!(t.tensor_algebra_action(&ones, &m).unwrap(), m);
        let u = Combination::basis(&k, alloc::vec![w(&[0]), w(&[])]);
        assert_eq!(
            t.tensor_algebra_action(&u, &m).unwrap(),
            Combination::basis(&k, alloc::vec![w(&[0]), w(&[1])])
        );
        let bad = Combination::basis(&k, alloc::vec![w(&[0])]);
        assert_eq!(
            t.tensor_algebra_action(&bad, &m),
            Err(Error::LengthMismatch { expected: 2, found: 1 })
        );
        // θ_0 (v⊗v) = θ_0 v⊗v + ζ^{−⟨Λ_0,0⟩} v⊗θ_0 v
        let hw = t.highest_weight_vector();
        let mut expected = Combination::basis(&k, alloc::vec![w(&[0]), w(&[])]);
        expected.add_term(&k, alloc::vec![w(&[]), w(&[0])], k.zeta_pow(-1));
        assert_eq!(t.f_action(&t.algebra().generator(0), &hw), expected);
        assert_eq!(t.f_action(&t.algebra().one(), &hw), hw);
    }

    #[test]
    fn single_factor_is_the_verma_module() {
        let t = module(&[&[1, 2]]);
        let k = t.ring().clone();
        let m = Combination::basis(&k, alloc::vec![w(&[1, 0])]);
        let x = t.algebra().monomial(&w(&[0, 1]));
        assert_eq!(t.f_action(&x, &m), Combination::basis(&k, alloc::vec![w(&[0, 1, 1, 0])]));
        let c = t.coaction(&m);
        let expected = t.factor(0).coaction_word(&w(&[1, 0]));
        assert_eq!(c, expected);
    }

    #[test]
    fn form_examples() {
        let t = module(&[&[1, 2], &[3, 0]]);
        let k = t.ring().clone();
        let hw = t.highest_weight_vector();
        assert_eq!(t.form_s_tensor(0, &hw, &hw).unwrap(), k.one());
        let a = Combination::basis(&k, alloc::vec![w(&[0]), w(&[])]);
        assert_eq!(t.form_s_tensor(0, &a, &a).unwrap(), bracket(&k, 1));
        let b = Combination::basis(&k, alloc::vec![w(&[]), w(&[0])]);
        assert!(k.is_zero(&t.form_s_tensor(0, &a, &b).unwrap()));
        assert_eq!(t.form_s_tensor(1, &a, &a), Err(Error::ShapeMismatch));
    }

    #[test]
    fn coaction_is_adjoint_to_the_action() {
        let t = module(&[&[1, 2], &[2, -1]]);
        let k = t.ring().clone();
        for z0 in Word::all_of_length(2, 2) {
            for z1 in Word::all_of_length(2, 1) {
                let z = Combination::basis(&k, alloc::vec![z0.clone(), z1.clone()]);
                let dz = t.coaction(&z);
                for x in Word::all_of_length(2, 1) {
                    for y0 in Word::all_of_length(2, 1) {
                        let y = Combination::basis(&k, alloc::vec![y0.clone(), w(&[1])]);
                        let lhs = t.form_s_tensor(0, &t.f_action(&t.algebra().monomial(&x), &y), &z).unwrap();
                        let xy = Combination::basis(&k, alloc::vec![x.clone(), y0.clone(), w(&[1])]);
                        let rhs = t.form_s_tensor(1, &xy, &dz).unwrap();
                        assert_eq!(lhs, rhs, "{x} {y0} {z0} {z1}");
                    }
                }
            }
        }
    }
}
