//! Unfoldings π: J → I of a multidegree, the averaging map ᵖa and its
//! compatibility with forms, coactions and bar complexes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::cartan::{CartanDatum, MultiDegree, Weight};
use crate::check::CheckResult;
use crate::combination::Combination;
use crate::free::FreeAlgebra;
use crate::hochschild::{homology_dims, AlgebraKind, HochschildSetup, ModuleKind};
use crate::linalg::{rank, Matrix};
use crate::scalar::ScalarRing;
use crate::tensor::TensorModule;
use crate::verma::VermaModule;
use crate::word::Word;
use crate::{Error, Result};

/// J = ⊔_i π^{−1}(i), ordered by (i, copy index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unfolding {
    nu: MultiDegree,
    pi: Vec<usize>,
    fibers: Vec<Vec<usize>>,
}

pub fn unfold(nu: &MultiDegree) -> Unfolding {
    let mut pi = Vec::new();
    let mut fibers = Vec::new();
    for (i, &c) in nu.counts().iter().enumerate() {
        let start = pi.len();
        pi.extend(core::iter::repeat_n(i, c as usize));
        fibers.push((start..pi.len()).collect());
    }
    Unfolding { nu: nu.clone(), pi, fibers }
}

impl Unfolding {
    pub fn nu(&self) -> &MultiDegree {
        &self.nu
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn j_size(&self) -> usize {
        self.pi.len()
    }

    pub fn fiber(&self, i: usize) -> &[usize] {
        &self.fibers[i]
    }

    /// |Σ_π| = ∏_i N_i!.
    pub fn group_order(&self) -> usize {
        self.fibers.iter().map(|f| (1..=f.len()).product::<usize>()).product()
    }

    /// All fiber-preserving bijections σ of J, as vectors j ↦ σ(j).
    pub fn group_elements(&self) -> Vec<Vec<usize>> {
        let mut out = alloc::vec![(0..self.j_size()).collect::<Vec<_>>()];
        for fiber in &self.fibers {
            let mut next = Vec::new();
            for perm in permutations(fiber.len()) {
                for s in &out {
                    let mut s2 = s.clone();
                    for (k, &p) in perm.iter().enumerate() {
                        s2[fiber[k]] = fiber[p];
                    }
                    next.push(s2);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// The datum on ℤ[J] with μ·μ' := π(μ)·π(μ').
    pub fn pullback_cartan(&self, cartan: &CartanDatum) -> Result<CartanDatum> {
        cartan.pullback(&self.pi)
    }

    /// ᵖΛ = Λ∘π.
    pub fn pullback_weight(&self, w: &Weight) -> Weight {
        w.pullback(&self.pi)
    }

    /// The J-degree χ_J.
    pub fn chi(&self) -> MultiDegree {
        MultiDegree::new(alloc::vec![1; self.j_size()])
    }

    /// Words over J using each element once with π(j_p) = i_p.
    pub fn lifts(&self, w: &Word) -> Result<Vec<Word>> {
        if w.content(self.nu.rank()) != self.nu {
            return Err(Error::DegreeMismatch);
        }
        let mut out = Vec::new();
        let mut used = alloc::vec![false; self.j_size()];
        let mut cur = Vec::with_capacity(w.len());
        self.lift_rec(w, &mut used, &mut cur, &mut out);
        Ok(out)
    }

    fn lift_rec(&self, w: &Word, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Word>) {
        let p = cur.len();
        if p == w.len() {
            out.push(Word::new(cur));
            return;
        }
        for &j in &self.fibers[w.at(p)] {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                self.lift_rec(w, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }

    /// Lifts of a tuple: the concatenated word is lifted, then split at the
    /// original lengths.
    pub fn lift_tuple(&self, t: &[Word]) -> Result<Vec<Vec<Word>>> {
        let joined = t.iter().fold(Word::empty(), |a, b| a.concat(b));
        Ok(self.lifts(&joined)?.into_iter().map(|l| split_like(&l, t)).collect())
    }

    /// ᵖa(θ_{i_1}⋯θ_{i_N}) = Σ θ̃_{j_1}⋯θ̃_{j_N} over lifts.
    pub fn average<R: ScalarRing>(&self, ring: &R, x: &Combination<Word, R::Elem>) -> Result<Combination<Word, R::Elem>> {
        let mut out = Combination::new();
        for (w, c) in x {
            for l in self.lifts(w)? {
                out.add_term(ring, l, c.clone());
            }
        }
        Ok(out)
    }

    pub fn average_tuple<R: ScalarRing>(
        &self,
        ring: &R,
        x: &Combination<Vec<Word>, R::Elem>,
    ) -> Result<Combination<Vec<Word>, R::Elem>> {
        let mut out = Combination::new();
        for (t, c) in x {
            for l in self.lift_tuple(t)? {
                out.add_term(ring, l, c.clone());
            }
        }
        Ok(out)
    }

    /// Letterwise relabelling j ↦ π(j).
    pub fn project<R: ScalarRing>(&self, ring: &R, y: &Combination<Word, R::Elem>) -> Combination<Word, R::Elem> {
        y.map_keys(ring, |w| w.map(|j| self.pi[j]))
    }

    pub fn project_tuple<R: ScalarRing>(
        &self,
        ring: &R,
        y: &Combination<Vec<Word>, R::Elem>,
    ) -> Combination<Vec<Word>, R::Elem> {
        y.map_keys(ring, |t| t.iter().map(|w| w.map(|j| self.pi[j])).collect())
    }

    /// σ acting letterwise.
    pub fn act(&self, sigma: &[usize], w: &Word) -> Word {
        w.map(|j| sigma[j])
    }

    /// The words spanning ᵖ𝔉_{χ_J}.
    pub fn j_words(&self) -> Vec<Word> {
        Word::all_with_content(&self.chi())
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = alloc::vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                rec(n, cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

fn split_like(w: &Word, shape: &[Word]) -> Vec<Word> {
    let mut out = Vec::with_capacity(shape.len());
    let mut at = 0;
    for s in shape {
        out.push(w.slice(at, at + s.len()));
        at += s.len();
    }
    out
}

/// All tuples with `slots` entries whose concatenation is a word of `words`.
fn tuples_from(words: &[Word], slots: usize) -> Vec<Vec<Word>> {
    let mut out = Vec::new();
    for w in words {
        let n = w.len();
        // cut points 0 ≤ c_1 ≤ … ≤ c_{slots−1} ≤ n
        let mut cuts = alloc::vec![0usize; slots.saturating_sub(1)];
        loop {
            let mut t = Vec::with_capacity(slots);
            let mut prev = 0;
            for &c in &cuts {
                t.push(w.slice(prev, c));
                prev = c;
            }
            t.push(w.slice(prev, n));
            out.push(t);
            // next nondecreasing sequence
            let mut k = cuts.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                if cuts[k] < n {
                    cuts[k] += 1;
                    let v = cuts[k];
                    for c in cuts.iter_mut().skip(k + 1) {
                        *c = v;
                    }
                    break;
                }
                if k == 0 {
                    k = usize::MAX;
                    break;
                }
            }
            if cuts.is_empty() || k == usize::MAX {
                break;
            }
        }
    }
    out
}

/// The J-side objects for one unfolding.
struct Sides<R: ScalarRing> {
    unf: Unfolding,
    alg_j: FreeAlgebra<R>,
}

impl<R: ScalarRing> Sides<R> {
    fn new(alg: &FreeAlgebra<R>, nu: &MultiDegree) -> Result<Self> {
        let unf = unfold(nu);
        let alg_j = FreeAlgebra::new(alg.ring().clone(), unf.pullback_cartan(alg.cartan())?);
        Ok(Self { unf, alg_j })
    }

    fn weights_j(&self, weights: &[Weight]) -> Vec<Weight> {
        weights.iter().map(|w| self.unf.pullback_weight(w)).collect()
    }
}

/// ᵖa and π: π∘ᵖa = |Σ_π|·id, ᵖa∘π = Σ_σ σ on ᵖ𝔉_{χ_J}, and ᵖa is injective
/// onto the Σ_π-invariants.
pub fn averaging_properties<R: ScalarRing>(alg: &FreeAlgebra<R>, nu: &MultiDegree) -> Result<Vec<CheckResult>> {
    let ring = alg.ring();
    let unf = unfold(nu);
    let order = ring.from_int(unf.group_order() as i64);
    let group = unf.group_elements();
    let i_words = alg.basis(nu);
    let j_words = unf.j_words();
    let mut out = Vec::new();

    let ok = i_words.iter().all(|w| {
        let x = alg.monomial(w);
        unf.project(ring, &unf.average(ring, &x).expect("degree")) == x.scale(ring, &order)
    });
    out.push(CheckResult::from_bool(format!("project∘average = |Σ|·id on degree {nu}"), ok, || format!("{nu}")));

    let ok = j_words.iter().all(|w| {
        let y = Combination::basis(ring, w.clone());
        let lhs = unf.average(ring, &unf.project(ring, &y)).expect("degree");
        let mut rhs = Combination::new();
        for s in &group {
            rhs.add_term(ring, unf.act(s, w), ring.one());
        }
        lhs == rhs
    });
    out.push(CheckResult::from_bool(format!("average∘project = Σσ on degree {nu}"), ok, || format!("{nu}")));

    // the averaged words are invariant, independent, and span the invariants
    let index: BTreeMap<&Word, usize> = j_words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut a = Matrix::zeros(ring, j_words.len(), i_words.len());
    let mut invariant = true;
    for (c, w) in i_words.iter().enumerate() {
        let y = unf.average(ring, &alg.monomial(w))?;
        for s in &group {
            invariant &= y.map_keys(ring, |v| unf.act(s, v)) == y;
        }
        for (v, coeff) in &y {
            a.set(index[v], c, coeff.clone());
        }
    }
    let orbits = j_words.len() / unf.group_order();
    let rk = rank(ring, &a);
    out.push(CheckResult::from_bool(
        format!("average injective onto invariants on degree {nu}"),
        invariant && rk == i_words.len() && rk == orbits,
        || format!("rank {rk}, |I-words| {}, orbits {orbits}", i_words.len()),
    ));
    Ok(out)
}

/// The squares relating I-side and J-side structures in degree ν:
/// S_J(ᵖa x, w) = S(x, π w) on 𝔉 and on every V(Λ), Δ_{ᵖΛ}∘ᵖa = ᵖa∘Δ_Λ, and
/// the product forms on 𝔉^{⊗m} ⊗ V(Λ_0) ⊗ … ⊗ V(Λ_{n−1}).
pub fn check_squares<R: ScalarRing>(
    alg: &FreeAlgebra<R>,
    nu: &MultiDegree,
    weights: &[Weight],
    m: usize,
) -> Result<Vec<CheckResult>> {
    let sides = Sides::new(alg, nu)?;
    let ring = alg.ring();
    let unf = &sides.unf;
    let i_words = alg.basis(nu);
    let j_words = unf.j_words();
    let mut out = Vec::new();

    let mut ok = true;
    for x in &i_words {
        let ax = unf.average(ring, &alg.monomial(x))?;
        for w in &j_words {
            let lhs = sides.alg_j.form_s_rec(&ax, &Combination::basis(ring, w.clone()));
            let rhs = alg.form_s_words(x, &w.map(|j| unf.pi()[j]));
            ok &= lhs == rhs;
        }
    }
    out.push(CheckResult::from_bool(format!("S square on degree {nu}"), ok, || format!("{nu}")));

    let weights_j = sides.weights_j(weights);
    for (wi, wj) in weights.iter().zip(&weights_j) {
        let vi = VermaModule::new(alg.clone(), wi.clone())?;
        let vj = VermaModule::new(sides.alg_j.clone(), wj.clone())?;
        let mut ok = true;
        for x in &i_words {
            let ax = unf.average(ring, &alg.monomial(x))?;
            for w in &j_words {
                let lhs = vj.form_rec(&ax, &Combination::basis(ring, w.clone()));
                ok &= lhs == vi.form_words(x, &w.map(|j| unf.pi()[j]));
            }
        }
        out.push(CheckResult::from_bool(format!("S_Lambda square on degree {nu}, weight {wi}"), ok, || format!("{nu}")));

        let mut ok = true;
        for y in &i_words {
            let lhs = vj.coaction(&unf.average(ring, &alg.monomial(y))?);
            let rhs = unf.average_tuple(ring, &vi.coaction_word(y))?;
            ok &= lhs == rhs;
        }
        out.push(CheckResult::from_bool(format!("coaction square on degree {nu}, weight {wi}"), ok, || format!("{nu}")));
    }

    let ti = TensorModule::new(alg.clone(), weights)?;
    let tj = TensorModule::new(sides.alg_j.clone(), &weights_j)?;
    let slots = m + weights.len();
    let i_tuples = tuples_from(&i_words, slots);
    let j_tuples = tuples_from(&j_words, slots);
    let mut ok = true;
    for t in &i_tuples {
        let lifted = unf.lift_tuple(t)?;
        for s in &j_tuples {
            let mut lhs = ring.zero();
            for l in &lifted {
                ring.add_assign(&mut lhs, &tj.form_key(m, l, s));
            }
            let ps: Vec<Word> = s.iter().map(|w| w.map(|j| unf.pi()[j])).collect();
            ok &= lhs == ti.form_key(m, t, &ps);
        }
    }
    out.push(CheckResult::from_bool(
        format!("tensor form square on degree {nu}, m={m}, n={}", weights.len()),
        ok,
        || format!("{nu}"),
    ));
    Ok(out)
}

/// For n = 1: the I-side complex C•_𝔉(V(Λ)) in degree ν and the Σ_π-invariant
/// part of the J-side complex in degree χ_J have equal homology, and ᵖa is
/// an injective chain map between them.
pub fn averaged_hochschild_check<R: ScalarRing>(
    alg: &FreeAlgebra<R>,
    weight: &Weight,
    nu: &MultiDegree,
) -> Result<Vec<CheckResult>> {
    let sides = Sides::new(alg, nu)?;
    let ring = alg.ring();
    let unf = &sides.unf;
    let depth = nu.depth();
    let si = HochschildSetup::new(alg.clone(), core::slice::from_ref(weight), AlgebraKind::Free, ModuleKind::Verma, depth)?;
    let sj = HochschildSetup::new(
        sides.alg_j.clone(),
        &[unf.pullback_weight(weight)],
        AlgebraKind::Free,
        ModuleKind::Verma,
        depth,
    )?;
    let ci = si.build_complex(nu)?;
    let cj = sj.build_complex(&unf.chi())?;
    let group = unf.group_elements();
    let mut out = Vec::new();

    // orbit representatives: the least tuple in each orbit
    let mut orbit_reps: Vec<Vec<usize>> = Vec::new();
    let mut orbit_of: Vec<Vec<usize>> = Vec::new();
    for t in &cj.terms {
        let mut reps = Vec::new();
        let mut of = alloc::vec![usize::MAX; t.dim()];
        for (k, key) in t.keys().iter().enumerate() {
            if of[k] != usize::MAX {
                continue;
            }
            let o = reps.len();
            reps.push(k);
            for s in &group {
                let img: Vec<Word> = key.iter().map(|w| unf.act(s, w)).collect();
                of[t.position(&img).ok_or(Error::DegreeMismatch)?] = o;
            }
        }
        orbit_reps.push(reps);
        orbit_of.push(of);
    }
    let mut inv_ranks = alloc::vec![0usize; cj.terms.len() + 1];
    let mut chain_ok = true;
    let mut injective = true;
    for r in 0..cj.terms.len() {
        // the averaging map on C^{−r}
        let mut a = Matrix::zeros(ring, cj.terms[r].dim(), ci.terms[r].dim());
        for (c, key) in ci.terms[r].keys().iter().enumerate() {
            for l in unf.lift_tuple(key)? {
                let row = cj.terms[r].position(&l).ok_or(Error::DegreeMismatch)?;
                a.set(row, c, ring.one());
            }
        }
        injective &= rank(ring, &a) == ci.terms[r].dim();
        if r >= 1 {
            let mut a_prev = Matrix::zeros(ring, cj.terms[r - 1].dim(), ci.terms[r - 1].dim());
            for (c, key) in ci.terms[r - 1].keys().iter().enumerate() {
                for l in unf.lift_tuple(key)? {
                    let row = cj.terms[r - 1].position(&l).ok_or(Error::DegreeMismatch)?;
                    a_prev.set(row, c, ring.one());
                }
            }
            chain_ok &= cj.differentials[r].mul(ring, &a)? == a_prev.mul(ring, &ci.differentials[r])?;
            // D on orbit sums, read off at orbit representatives
            let d = &cj.differentials[r];
            let rows = &orbit_reps[r - 1];
            let mut dinv = Matrix::zeros(ring, rows.len(), orbit_reps[r].len());
            for (col_src, &o) in orbit_of[r].iter().enumerate() {
                for (ro, &rrow) in rows.iter().enumerate() {
                    let v = d.get(rrow, col_src);
                    if !ring.is_zero(v) {
                        let cur = ring.add(dinv.get(ro, o), v);
                        dinv.set(ro, o, cur);
                    }
                }
            }
            inv_ranks[r] = rank(ring, &dinv);
        }
    }
    let hi = homology_dims(ring, &ci);
    let mut same = true;
    for r in 0..cj.terms.len() {
        let h_inv = orbit_reps[r].len() - inv_ranks[r] - inv_ranks[r + 1];
        same &= h_inv == hi[r].homology_dim;
    }
    out.push(CheckResult::from_bool(format!("averaged homology on degree {nu}"), same, || format!("{nu}")));
    out.push(CheckResult::from_bool(format!("averaging is a chain map on degree {nu}"), chain_ok, || format!("{nu}")));
    out.push(CheckResult::from_bool(format!("averaging injective on chains of degree {nu}"), injective, || format!("{nu}")));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_passed;
    use crate::scalar::CyclotomicField;

    fn alg(name: &str) -> FreeAlgebra<CyclotomicField> {
        FreeAlgebra::new(CyclotomicField::new(5).unwrap(), CartanDatum::preset(name).unwrap())
    }

    fn md(v: &[u32]) -> MultiDegree {
        MultiDegree::new(v.to_vec())
    }

    #[test]
    fn unfold_examples() {
        let u = unfold(&md(&[2]));
        assert_eq!(u.pi(), [0, 0]);
        assert_eq!(u.group_order(), 2);
        assert_eq!(u.group_elements(), [alloc::vec![0, 1], alloc::vec![1, 0]]);
        let u = unfold(&md(&[1, 1]));
        assert_eq!((u.j_size(), u.group_order()), (2, 1));
        let u = unfold(&md(&[0, 0]));
        assert_eq!((u.j_size(), u.group_order()), (0, 1));
        assert_eq!(unfold(&md(&[2, 3])).group_elements().len(), 12);
    }

    #[test]
    fn average_and_project_examples() {
        let f = alg("A1");
        let k = f.ring().clone();
        let u = unfold(&md(&[2]));
        let a = u.average(&k, &f.monomial(&Word::new(&[0, 0]))).unwrap();
        let mut expected = Combination::basis(&k, Word::new(&[0, 1]));
        expected.add_term(&k, Word::new(&[1, 0]), k.one());
        assert_eq!(a, expected);
        assert_eq!(u.project(&k, &Combination::basis(&k, Word::new(&[0, 1]))), f.monomial(&Word::new(&[0, 0])));
        let skew = Combination::basis(&k, Word::new(&[0, 1])).sub(&k, &Combination::basis(&k, Word::new(&[1, 0])));
        assert!(u.project(&k, &skew).is_zero());
        let g = alg("A2");
        let u2 = unfold(&md(&[1, 1]));
        assert_eq!(u2.average(&k, &g.monomial(&Word::new(&[1, 0]))).unwrap().len(), 1);
        assert_eq!(u.average(&k, &f.generator(0)), Err(Error::DegreeMismatch));
        assert!(all_passed(&averaging_properties(&f, &md(&[2])).unwrap()));
        assert!(all_passed(&averaging_properties(&g, &md(&[2, 1])).unwrap()));
    }

    #[test]
    fn tuples_are_enumerated_once() {
        let words = [Word::new(&[0, 1])];
        let t = tuples_from(&words, 2);
        assert_eq!(t.len(), 3);
        assert_eq!(tuples_from(&words, 1).len(), 1);
        assert_eq!(tuples_from(&words, 3).len(), 6);
        assert_eq!(tuples_from(&[Word::empty()], 2).len(), 1);
    }

    #[test]
    fn squares_small() {
        let lam = [Weight::new(alloc::vec![2, -1])];
        let a2 = alg("A2");
        assert!(all_passed(&check_squares(&a2, &md(&[1, 1]), &lam, 1).unwrap()));
        assert!(all_passed(&check_squares(&a2, &md(&[2, 1]), &lam, 1).unwrap()));
        let a1 = alg("A1");
        assert!(all_passed(&check_squares(&a1, &md(&[2]), &[Weight::new(alloc::vec![3])], 1).unwrap()));
    }

    #[test]
    fn averaged_hochschild_small() {
        let a2 = alg("A2");
        let r = averaged_hochschild_check(&a2, &Weight::new(alloc::vec![1, 0]), &md(&[2, 1])).unwrap();
        assert!(all_passed(&r), "{r:?}");
        let a1 = alg("A1");
        let r = averaged_hochschild_check(&a1, &Weight::new(alloc::vec![2]), &md(&[3])).unwrap();
        assert!(all_passed(&r), "{r:?}");
    }
}
