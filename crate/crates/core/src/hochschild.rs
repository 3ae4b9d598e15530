//! Bar complexes C•_A(M) for A ∈ {𝔉, 𝔣} and M a tensor product of Verma or
//! irreducible modules, their homology, the combinatorial monomials θ_{ρ≤τ},
//! and the morphism of complexes induced by the forms.
//!
//! A chain a_r|…|a_1|m_0⊗…⊗m_{n−1} is stored as the tuple
//! (a_r, …, a_1, m_0, …, m_{n−1}), so a_p sits at index r − p.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::cartan::{MultiDegree, Weight};
use crate::check::CheckResult;
use crate::combination::Combination;
use crate::free::FreeAlgebra;
use crate::linalg::{rank, Matrix};
use crate::quotient::{FreeQuotient, IrreducibleModule};
use crate::scalar::ScalarRing;
use crate::tensor::TensorModule;
use crate::verma::VermaModule;
use crate::word::Word;
use crate::{Error, Result};

/// Default cap on the dimension of a single chain space.
pub const DEFAULT_MAX_DIM: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// The free algebra 𝔉.
    Free,
    /// The quotient 𝔣 = 𝔉/Ker(S).
    Quotient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Verma,
    Irreducible,
}

/// The basis of one chain space C^{−r} in total degree ν.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainBasis {
    pub r: usize,
    pub nu: MultiDegree,
    keys: Vec<Vec<Word>>,
    index: BTreeMap<Vec<Word>, usize>,
}

impl ChainBasis {
    fn new(r: usize, nu: MultiDegree, mut keys: Vec<Vec<Word>>) -> Self {
        keys.sort();
        let index = keys.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        Self { r, nu, keys, index }
    }

    pub fn dim(&self) -> usize {
        self.keys.len()
    }

    pub fn keys(&self) -> &[Vec<Word>] {
        &self.keys
    }

    pub fn position(&self, key: &[Word]) -> Option<usize> {
        self.index.get(key).copied()
    }
}

/// The complex in one total degree: terms C^0, …, C^{−depth(ν)} and
/// differentials D_r: C^{−r} → C^{−r+1} for r ≥ 1.
#[derive(Clone, Debug)]
pub struct GradedComplex<E> {
    pub nu: MultiDegree,
    pub terms: Vec<ChainBasis>,
    /// `differentials[r]` is D_r; index 0 holds the zero map out of C^0.
    pub differentials: Vec<Matrix<E>>,
}

impl<E: Clone + PartialEq> GradedComplex<E> {
    pub fn max_r(&self) -> usize {
        self.terms.len() - 1
    }

    /// D_{r}∘D_{r+1} = 0 for every r.
    pub fn d_squared_is_zero<R: ScalarRing<Elem = E>>(&self, ring: &R) -> Result<bool> {
        for r in 1..self.max_r() {
            if !self.differentials[r].mul(ring, &self.differentials[r + 1])?.is_zero(ring) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One row of a homology table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRow {
    pub r: usize,
    pub nu: MultiDegree,
    pub chain_dim: usize,
    pub homology_dim: usize,
}

/// dim H^{−r} = dim C^{−r} − rank D_r − rank D_{r+1}. Assumes d² = 0.
pub fn homology_dims<R: ScalarRing>(ring: &R, c: &GradedComplex<R::Elem>) -> Vec<HomologyRow> {
    let ranks: Vec<usize> = c.differentials.iter().map(|d| rank(ring, d)).collect();
    (0..=c.max_r())
        .map(|r| {
            let out = ranks[r];
            let inc = ranks.get(r + 1).copied().unwrap_or(0);
            HomologyRow { r, nu: c.nu.clone(), chain_dim: c.terms[r].dim(), homology_dim: c.terms[r].dim() - out - inc }
        })
        .collect()
}

/// Σ_r (−1)^r dim C^{−r} = Σ_r (−1)^r dim H^{−r}.
pub fn euler_characteristic_matches(rows: &[HomologyRow]) -> bool {
    let sign = |r: usize| if r.is_multiple_of(2) { 1i64 } else { -1 };
    let c: i64 = rows.iter().map(|h| sign(h.r) * h.chain_dim as i64).sum();
    let h: i64 = rows.iter().map(|h| sign(h.r) * h.homology_dim as i64).sum();
    c == h
}

/// Everything needed to build C•_A(M) for one choice of A and M.
#[derive(Clone, Debug)]
pub struct HochschildSetup<R: ScalarRing> {
    tensor: TensorModule<R>,
    algebra: AlgebraKind,
    module: ModuleKind,
    free_quotient: Option<FreeQuotient<R>>,
    irreducibles: Vec<IrreducibleModule<R>>,
    depth_max: usize,
    max_dim: usize,
}

impl<R: ScalarRing> HochschildSetup<R> {
    pub fn new(
        alg: FreeAlgebra<R>,
        weights: &[Weight],
        algebra: AlgebraKind,
        module: ModuleKind,
        depth_max: usize,
    ) -> Result<Self> {
        if (algebra, module) == (AlgebraKind::Quotient, ModuleKind::Verma) {
            return Err(Error::NotAQuotientModule);
        }
        let tensor = TensorModule::new(alg.clone(), weights)?;
        let free_quotient = match algebra {
            AlgebraKind::Free => None,
            AlgebraKind::Quotient => Some(FreeQuotient::new(alg.clone(), depth_max)?),
        };
        let irreducibles = match module {
            ModuleKind::Verma => Vec::new(),
            ModuleKind::Irreducible => weights
                .iter()
                .map(|w| IrreducibleModule::new(VermaModule::new(alg.clone(), w.clone())?, depth_max))
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(Self { tensor, algebra, module, free_quotient, irreducibles, depth_max, max_dim: DEFAULT_MAX_DIM })
    }

    pub fn with_max_dim(mut self, max_dim: usize) -> Self {
        self.max_dim = max_dim;
        self
    }

    pub fn tensor(&self) -> &TensorModule<R> {
        &self.tensor
    }

    pub fn algebra_kind(&self) -> AlgebraKind {
        self.algebra
    }

    pub fn module_kind(&self) -> ModuleKind {
        self.module
    }

    pub fn depth_max(&self) -> usize {
        self.depth_max
    }

    fn ring(&self) -> &R {
        self.tensor.ring()
    }

    fn rank(&self) -> usize {
        self.tensor.algebra().rank()
    }

    fn algebra_basis(&self, nu: &MultiDegree) -> Result<Vec<Word>> {
        match &self.free_quotient {
            None => Ok(Word::all_with_content(nu)),
            Some(q) => Ok(q.basis(nu)?.representatives()),
        }
    }

    fn module_basis(&self, j: usize, nu: &MultiDegree) -> Result<Vec<Word>> {
        match self.irreducibles.get(j) {
            None => Ok(Word::all_with_content(nu)),
            Some(l) => Ok(l.basis(nu)?.representatives()),
        }
    }

    /// Rewrites a homogeneous word combination in the chosen basis of A.
    fn algebra_reduce(&self, w: &Word) -> Result<Vec<(Word, R::Elem)>> {
        match &self.free_quotient {
            None => Ok(alloc::vec![(w.clone(), self.ring().one())]),
            Some(q) => reduce(self.ring(), q.basis(&w.content(self.rank()))?, w),
        }
    }

    fn module_reduce(&self, j: usize, w: &Word) -> Result<Vec<(Word, R::Elem)>> {
        match self.irreducibles.get(j) {
            None => Ok(alloc::vec![(w.clone(), self.ring().one())]),
            Some(l) => reduce(self.ring(), l.basis(&w.content(self.rank()))?, w),
        }
    }

    /// Rewrites every slot of a tuple; slots below `r` are algebra slots.
    pub fn reduce_tuple(&self, r: usize, key: &[Word]) -> Result<Vec<(Vec<Word>, R::Elem)>> {
        let ring = self.ring();
        let mut acc: Vec<(Vec<Word>, R::Elem)> = alloc::vec![(Vec::new(), ring.one())];
        for (s, w) in key.iter().enumerate() {
            let parts = if s < r { self.algebra_reduce(w)? } else { self.module_reduce(s - r, w)? };
            let mut next = Vec::with_capacity(acc.len() * parts.len());
            for (k, c) in &acc {
                for (p, d) in &parts {
                    let mut k2 = k.clone();
                    k2.push(p.clone());
                    next.push((k2, ring.mul(c, d)));
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    fn check_window(&self, nu: &MultiDegree) -> Result<()> {
        if nu.depth() > self.depth_max {
            return Err(Error::WindowExceeded { requested: nu.depth(), window: self.depth_max });
        }
        Ok(())
    }

    /// The basis of C^{−r} in degree ν.
    pub fn chain_basis(&self, r: usize, nu: &MultiDegree) -> Result<ChainBasis> {
        self.check_window(nu)?;
        let slots = r + self.tensor.len();
        let mut keys = Vec::new();
        if slots == 0 {
            if nu.is_zero() {
                keys.push(Vec::new());
            }
            return Ok(ChainBasis::new(r, nu.clone(), keys));
        }
        let mut cur = Vec::with_capacity(slots);
        self.enumerate(r, slots, nu, &mut cur, &mut keys)?;
        if keys.len() > self.max_dim {
            return Err(Error::MatrixTooLarge { dim: keys.len(), limit: self.max_dim });
        }
        Ok(ChainBasis::new(r, nu.clone(), keys))
    }

    fn enumerate(
        &self,
        r: usize,
        slots: usize,
        left: &MultiDegree,
        cur: &mut Vec<Word>,
        out: &mut Vec<Vec<Word>>,
    ) -> Result<()> {
        let s = cur.len();
        let pieces = if s + 1 == slots { alloc::vec![left.clone()] } else { left.sub_degrees() };
        for mu in pieces {
            if s < r && mu.is_zero() {
                continue;
            }
            let words = if s < r { self.algebra_basis(&mu)? } else { self.module_basis(s - r, &mu)? };
            if words.is_empty() {
                continue;
            }
            let rest = left.checked_sub(&mu).expect("sub-degree");
            for w in words {
                cur.push(w);
                if s + 1 == slots {
                    out.push(cur.clone());
                } else {
                    self.enumerate(r, slots, &rest, cur, out)?;
                }
                cur.pop();
                if out.len() > self.max_dim {
                    return Err(Error::MatrixTooLarge { dim: out.len(), limit: self.max_dim });
                }
            }
        }
        Ok(())
    }

    /// d(a_r|…|a_1|m) = Σ_{p=1}^{r−1} (−1)^p a_r|…|a_{p+1}a_p|…|m + a_r|…|a_2|a_1·m.
    pub fn differential_of(&self, r: usize, key: &[Word]) -> Result<Combination<Vec<Word>, R::Elem>> {
        let ring = self.ring();
        let mut out = Combination::new();
        if r == 0 {
            return Ok(out);
        }
        for p in 1..r {
            let hi = r - p - 1;
            let mut merged = Vec::with_capacity(key.len() - 1);
            merged.extend_from_slice(&key[..hi]);
            merged.push(key[hi].concat(&key[hi + 1]));
            merged.extend_from_slice(&key[hi + 2..]);
            let sign = if p % 2 == 1 { ring.from_int(-1) } else { ring.one() };
            for (k, c) in self.reduce_tuple(r - 1, &merged)? {
                out.add_term(ring, k, ring.mul(&c, &sign));
            }
        }
        let a1 = self.tensor.algebra().monomial(&key[r - 1]);
        let m = Combination::basis(ring, key[r..].to_vec());
        for (mk, c) in self.tensor.f_action(&a1, &m) {
            for (tail, d) in self.reduce_tuple(0, &mk)? {
                let mut k = key[..r - 1].to_vec();
                k.extend(tail);
                out.add_term(ring, k, ring.mul(&c, &d));
            }
        }
        Ok(out)
    }

    /// D_r as a matrix from `src` = C^{−r} to `dst` = C^{−r+1}.
    pub fn differential(&self, src: &ChainBasis, dst: &ChainBasis) -> Result<Matrix<R::Elem>> {
        let ring = self.ring();
        let mut m = Matrix::zeros(ring, dst.dim(), src.dim());
        for (c, key) in src.keys().iter().enumerate() {
            for (k, v) in self.differential_of(src.r, key)? {
                let row = dst.position(&k).ok_or(Error::DegreeMismatch)?;
                m.set(row, c, v);
            }
        }
        Ok(m)
    }

    pub fn build_complex(&self, nu: &MultiDegree) -> Result<GradedComplex<R::Elem>> {
        self.check_window(nu)?;
        let terms: Vec<ChainBasis> =
            (0..=nu.depth()).map(|r| self.chain_basis(r, nu)).collect::<Result<_>>()?;
        let mut differentials = alloc::vec![Matrix::zeros(self.ring(), 0, terms[0].dim())];
        for r in 1..terms.len() {
            differentials.push(self.differential(&terms[r], &terms[r - 1])?);
        }
        Ok(GradedComplex { nu: nu.clone(), terms, differentials })
    }

    /// Homology rows for every degree up to the window.
    pub fn homology_table(&self) -> Result<Vec<HomologyRow>> {
        let mut rows = Vec::new();
        for nu in MultiDegree::up_to_depth(self.rank(), self.depth_max) {
            rows.extend(homology_dims(self.ring(), &self.build_complex(&nu)?));
        }
        Ok(rows)
    }
}

fn reduce<R: ScalarRing>(
    ring: &R,
    basis: &crate::quotient::QuotientBasis<R::Elem>,
    w: &Word,
) -> Result<Vec<(Word, R::Elem)>> {
    let coords = basis.project(ring, &Combination::basis(ring, w.clone()))?;
    Ok(coords
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !ring.is_zero(c))
        .map(|(s, c)| (basis.representative(s).clone(), c))
        .collect())
}

/// The form on C^{−r}: ∏_p S(a_p, a'_p) ∏_j S_{Λ_j}(m_j, m'_j), as a Gram matrix.
pub fn chain_gram<R: ScalarRing>(tensor: &TensorModule<R>, basis: &ChainBasis) -> Matrix<R::Elem> {
    let ring = tensor.ring();
    let mut cache: BTreeMap<(usize, Word, Word), R::Elem> = BTreeMap::new();
    let r = basis.r;
    let n = basis.dim();
    let rank = tensor.algebra().rank();
    let mut g = Matrix::zeros(ring, n, n);
    for a in 0..n {
        for b in a..n {
            let (xs, ys) = (&basis.keys()[a], &basis.keys()[b]);
            if xs.iter().zip(ys).any(|(x, y)| x.content(rank) != y.content(rank)) {
                continue;
            }
            let mut v = ring.one();
            for (s, (x, y)) in xs.iter().zip(ys).enumerate() {
                let slot = if s < r { 0 } else { 1 + s - r };
                let f = cache.entry((slot, x.clone(), y.clone())).or_insert_with(|| {
                    if s < r {
                        tensor.algebra().form_s_words(x, y)
                    } else {
                        tensor.factor(s - r).form_words(x, y)
                    }
                });
                v = ring.mul(&v, f);
                if ring.is_zero(&v) {
                    break;
                }
            }
            g.set(a, b, v.clone());
            g.set(b, a, v);
        }
    }
    g
}

/// The adjoint of D_r under the chain forms, ∂_r: C^{−r+1} → C^{−r}: each
/// a'_p is split by Δ into two nonempty factors with sign (−1)^p, and the
/// module part is split by Δ_M with a nonempty algebra factor.
pub fn codifferential<R: ScalarRing>(
    tensor: &TensorModule<R>,
    src: &ChainBasis,
    dst: &ChainBasis,
) -> Result<Matrix<R::Elem>> {
    let ring = tensor.ring();
    let alg = tensor.algebra();
    let r = dst.r;
    let mut m = Matrix::zeros(ring, dst.dim(), src.dim());
    for (c, key) in src.keys().iter().enumerate() {
        let mut image: Combination<Vec<Word>, R::Elem> = Combination::new();
        for p in 1..r {
            let at = (r - 1) - p;
            let sign = if p % 2 == 1 { ring.from_int(-1) } else { ring.one() };
            for (pair, v) in alg.coproduct(&alg.monomial(&key[at])) {
                if pair[0].is_empty() || pair[1].is_empty() {
                    continue;
                }
                let mut k = key[..at].to_vec();
                k.push(pair[0].clone());
                k.push(pair[1].clone());
                k.extend_from_slice(&key[at + 1..]);
                image.add_term(ring, k, ring.mul(&v, &sign));
            }
        }
        let module = Combination::basis(ring, key[r - 1..].to_vec());
        for (parts, v) in tensor.coaction(&module) {
            if parts[0].is_empty() {
                continue;
            }
            let mut k = key[..r - 1].to_vec();
            k.extend(parts);
            image.add_term(ring, k, v);
        }
        for (k, v) in image {
            let row = dst.position(&k).ok_or(Error::DegreeMismatch)?;
            m.set(row, c, v);
        }
    }
    Ok(m)
}

/// The outcome of comparing the form-induced map with the 𝔣-side complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMorphismRow {
    pub r: usize,
    pub nu: MultiDegree,
    /// G_{r−1} D_r = ∂_r^T G_r.
    pub commutes: bool,
    /// The projection onto the 𝔣-side chains commutes with the differentials.
    pub projection_is_chain_map: bool,
    /// G_r and the projection have the same kernel.
    pub same_kernel: bool,
    pub image_rank: usize,
    pub quotient_dim: usize,
    pub image_homology: usize,
    pub quotient_homology: usize,
}

impl SMorphismRow {
    pub fn passed(&self) -> bool {
        self.commutes
            && self.projection_is_chain_map
            && self.same_kernel
            && self.image_rank == self.quotient_dim
            && self.image_homology == self.quotient_homology
    }
}

/// Builds C•_𝔉(V(Λ_0)⊗…) and C•_𝔣(L(Λ_0)⊗…) in degree ν and compares the
/// image of the form-induced morphism with the 𝔣-side complex.
pub fn s_morphism<R: ScalarRing>(
    free: &HochschildSetup<R>,
    quotient: &HochschildSetup<R>,
    nu: &MultiDegree,
) -> Result<Vec<SMorphismRow>> {
    if free.algebra_kind() != AlgebraKind::Free || free.module_kind() != ModuleKind::Verma {
        return Err(Error::ShapeMismatch);
    }
    if quotient.algebra_kind() != AlgebraKind::Quotient || quotient.module_kind() != ModuleKind::Irreducible {
        return Err(Error::ShapeMismatch);
    }
    let ring = free.ring();
    let tensor = free.tensor();
    let c = free.build_complex(nu)?;
    let q = quotient.build_complex(nu)?;
    let grams: Vec<Matrix<R::Elem>> = c.terms.iter().map(|t| chain_gram(tensor, t)).collect();
    let projections: Vec<Matrix<R::Elem>> = c
        .terms
        .iter()
        .zip(&q.terms)
        .map(|(src, dst)| {
            let mut p = Matrix::zeros(ring, dst.dim(), src.dim());
            for (col, key) in src.keys().iter().enumerate() {
                for (k, v) in quotient.reduce_tuple(src.r, key)? {
                    let row = dst.position(&k).ok_or(Error::DegreeMismatch)?;
                    let cur = ring.add(p.get(row, col), &v);
                    p.set(row, col, cur);
                }
            }
            Ok(p)
        })
        .collect::<Result<_>>()?;
    let q_rows = homology_dims(ring, &q);
    let g_ranks: Vec<usize> = grams.iter().map(|g| rank(ring, g)).collect();
    // rank(G_{r−1} D_r) for r ≥ 1
    let mut gd_ranks = alloc::vec![0usize; c.terms.len() + 1];
    let mut rows = Vec::new();
    let mut commutes = alloc::vec![true; c.terms.len()];
    let mut chain_map = alloc::vec![true; c.terms.len()];
    for r in 1..c.terms.len() {
        let gd = grams[r - 1].mul(ring, &c.differentials[r])?;
        let del = codifferential(tensor, &c.terms[r - 1], &c.terms[r])?;
        let dg = del.transpose().mul(ring, &grams[r])?;
        commutes[r] = gd == dg;
        gd_ranks[r] = rank(ring, &gd);
        let pd = projections[r - 1].mul(ring, &c.differentials[r])?;
        let dp = q.differentials[r].mul(ring, &projections[r])?;
        chain_map[r] = pd == dp;
    }
    for r in 0..c.terms.len() {
        let stacked = grams[r].vstack(&projections[r])?;
        let same_kernel = c.terms[r].dim() == 0
            || (rank(ring, &stacked) == g_ranks[r] && rank(ring, &projections[r]) == g_ranks[r]);
        rows.push(SMorphismRow {
            r,
            nu: nu.clone(),
            commutes: commutes[r],
            projection_is_chain_map: chain_map[r],
            same_kernel,
            image_rank: g_ranks[r],
            quotient_dim: q.terms[r].dim(),
            image_homology: g_ranks[r] - gd_ranks[r] - gd_ranks[r + 1],
            quotient_homology: q_rows[r].homology_dim,
        });
    }
    Ok(rows)
}

/// Summarises s_morphism rows as checks.
pub fn s_morphism_checks(rows: &[SMorphismRow]) -> Vec<CheckResult> {
    rows.iter()
        .map(|row| {
            CheckResult::from_bool(format!("form morphism r={} degree {}", row.r, row.nu), row.passed(), || {
                format!("{row:?}")
            })
        })
        .collect()
}

/// All maps ρ: J → [−n+1, r] with every a ∈ [1, r] in the image, as
/// vectors of values indexed by J.
pub fn enumerate_rho(r: i64, n: usize, ground: usize) -> Vec<Vec<i64>> {
    if r < 0 || r as usize > ground || (n == 0 && ground > 0 && r == 0) {
        return Vec::new();
    }
    let low = 1 - n as i64;
    let values: Vec<i64> = (low..=r).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(ground);
    fn rec(values: &[i64], ground: usize, r: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == ground {
            if (1..=r).all(|a| cur.contains(&a)) {
                out.push(cur.clone());
            }
            return;
        }
        for &v in values {
            cur.push(v);
            rec(values, ground, r, cur, out);
            cur.pop();
        }
    }
    rec(&values, ground, r, &mut cur, &mut out);
    out
}

/// Total orders τ: J → {1, …, N} with ρ(i) < ρ(j) ⟹ τ(i) < τ(j).
pub fn refinements(rho: &[i64]) -> Vec<Vec<usize>> {
    let n = rho.len();
    let mut out = Vec::new();
    let mut tau = alloc::vec![0usize; n];
    let mut used = alloc::vec![false; n];
    // assign ranks 1..N in order; the element at each rank must have minimal
    // ρ among the unused ones
    fn rec(rho: &[i64], next: usize, tau: &mut [usize], used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if next > rho.len() {
            out.push(tau.to_vec());
            return;
        }
        let min = (0..rho.len()).filter(|&j| !used[j]).map(|j| rho[j]).min().expect("unused element");
        for j in 0..rho.len() {
            if !used[j] && rho[j] == min {
                used[j] = true;
                tau[j] = next;
                rec(rho, next + 1, tau, used, out);
                used[j] = false;
            }
        }
    }
    rec(rho, 1, &mut tau, &mut used, &mut out);
    out
}

/// θ_{ρ≤τ}: one word per slot r, r−1, …, −n+1, holding the letters of the
/// block ρ^{−1}(slot) in decreasing τ order. Letters are elements of J.
pub fn refinement_basis(rho: &[i64], tau: &[usize], r: i64, n: usize) -> Result<Vec<Word>> {
    crate::free::check_permutation(&tau.iter().map(|t| t.wrapping_sub(1)).collect::<Vec<_>>(), rho.len())?;
    for i in 0..rho.len() {
        for j in 0..rho.len() {
            if rho[i] < rho[j] && tau[i] > tau[j] {
                return Err(Error::NotARefinement);
            }
        }
    }
    let low = 1 - n as i64;
    let mut out = Vec::new();
    let mut slot = r;
    while slot >= low {
        let mut block: Vec<usize> = (0..rho.len()).filter(|&j| rho[j] == slot).collect();
        block.sort_by(|a, b| tau[*b].cmp(&tau[*a]));
        out.push(Word::new(&block));
        slot -= 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use crate::scalar::CyclotomicField;

    fn alg(name: &str) -> FreeAlgebra<CyclotomicField> {
        FreeAlgebra::new(CyclotomicField::new(5).unwrap(), CartanDatum::preset(name).unwrap())
    }

    fn md(v: &[u32]) -> MultiDegree {
        MultiDegree::new(v.to_vec())
    }

    #[test]
    fn single_letter_complex() {
        let s = HochschildSetup::new(alg("A2"), &[Weight::new(alloc::vec![1, 2])], AlgebraKind::Free, ModuleKind::Verma, 4)
            .unwrap();
        let c = s.build_complex(&md(&[1, 0])).unwrap();
        assert_eq!(c.terms[1].keys(), [alloc::vec![Word::letter(0), Word::empty()]]);
        assert_eq!(c.terms[0].dim(), 1);
        assert_eq!(c.differentials[1], Matrix::identity(s.ring(), 1));
        assert_eq!(s.chain_basis(5, &md(&[1, 1])).unwrap().dim(), 0);
        let c2 = s.build_complex(&md(&[1, 1])).unwrap();
        assert!(c2.d_squared_is_zero(s.ring()).unwrap());
        assert_eq!(s.build_complex(&md(&[3, 2])).unwrap_err(), Error::WindowExceeded { requested: 5, window: 4 });
    }

    #[test]
    fn bar_resolution_of_free_module_is_acyclic() {
        let s = HochschildSetup::new(alg("A2"), &[Weight::new(alloc::vec![1, 0])], AlgebraKind::Free, ModuleKind::Verma, 3)
            .unwrap();
        for row in s.homology_table().unwrap() {
            if row.r >= 1 {
                assert_eq!(row.homology_dim, 0, "{row:?}");
            }
        }
    }

    #[test]
    fn truncated_polynomial_oracle() {
        let s = HochschildSetup::new(
            alg("A1"),
            &[Weight::new(alloc::vec![0])],
            AlgebraKind::Quotient,
            ModuleKind::Irreducible,
            10,
        )
        .unwrap();
        let mut nonzero = Vec::new();
        for row in s.homology_table().unwrap() {
            if row.homology_dim > 0 {
                nonzero.push((row.r, row.nu.get(0), row.homology_dim));
            }
        }
        assert_eq!(nonzero, [(0, 0, 1), (1, 1, 1), (2, 5, 1), (3, 6, 1), (4, 10, 1)]);
    }

    #[test]
    fn s_morphism_a1() {
        let a = alg("A1");
        let ws = [Weight::new(alloc::vec![2]), Weight::new(alloc::vec![-1])];
        let f = HochschildSetup::new(a.clone(), &ws, AlgebraKind::Free, ModuleKind::Verma, 4).unwrap();
        let q = HochschildSetup::new(a, &ws, AlgebraKind::Quotient, ModuleKind::Irreducible, 4).unwrap();
        for d in 0..=4 {
            let rows = s_morphism(&f, &q, &md(&[d])).unwrap();
            for row in rows {
                assert!(row.passed(), "{row:?}");
            }
        }
    }

    #[test]
    fn s_morphism_a2() {
        let a = alg("A2");
        let ws = [Weight::new(alloc::vec![1, 1])];
        let f = HochschildSetup::new(a.clone(), &ws, AlgebraKind::Free, ModuleKind::Verma, 3).unwrap();
        let q = HochschildSetup::new(a, &ws, AlgebraKind::Quotient, ModuleKind::Irreducible, 3).unwrap();
        for nu in [md(&[1, 1]), md(&[2, 1])] {
            for row in s_morphism(&f, &q, &nu).unwrap() {
                assert!(row.passed(), "{row:?}");
            }
        }
    }

    #[test]
    fn rho_enumeration() {
        assert_eq!(enumerate_rho(1, 1, 2).len(), 3);
        assert_eq!(enumerate_rho(2, 1, 2).len(), 2);
        assert_eq!(enumerate_rho(0, 2, 2).len(), 4);
        assert_eq!(enumerate_rho(0, 1, 3).len(), 1);
        assert!(enumerate_rho(3, 1, 2).is_empty());
        assert!(enumerate_rho(-1, 1, 2).is_empty());
    }

    #[test]
    fn refinement_examples() {
        let rho = [0, 0, 0];
        let tau = [2, 3, 1];
        assert_eq!(refinement_basis(&rho, &tau, 0, 1).unwrap(), [Word::new(&[1, 0, 2])]);
        let rho = [2, 1];
        assert_eq!(refinements(&rho), [alloc::vec![2, 1]]);
        assert_eq!(
            refinement_basis(&rho, &[2, 1], 2, 1).unwrap(),
            [Word::letter(0), Word::letter(1), Word::empty()]
        );
        let both = [1, 1];
        let ords = refinements(&both);
        assert_eq!(ords.len(), 2);
        let monos: Vec<Vec<Word>> = ords.iter().map(|t| refinement_basis(&both, t, 1, 1).unwrap()).collect();
        assert!(monos.contains(&alloc::vec![Word::new(&[0, 1]), Word::empty()]));
        assert!(monos.contains(&alloc::vec![Word::new(&[1, 0]), Word::empty()]));
        assert_eq!(refinement_basis(&[1, 0], &[1, 2], 1, 1), Err(Error::NotARefinement));
    }

    #[test]
    fn refinement_monomials_span_the_multiplicity_free_component() {
        // J with four elements over a rank-4 datum where every letter is distinct
        for n in 1..=2usize {
            for r in 0..=4i64 {
                let mut monos = Vec::new();
                for rho in enumerate_rho(r, n, 4) {
                    for tau in refinements(&rho) {
                        monos.push(refinement_basis(&rho, &tau, r, n).unwrap());
                    }
                }
                monos.sort();
                let before = monos.len();
                monos.dedup();
                assert_eq!(before, monos.len());
                let f = FreeAlgebra::new(CyclotomicField::new(5).unwrap(), CartanDatum::new(alloc::vec![alloc::vec![2, 0, 0, 0], alloc::vec![0, 2, 0, 0], alloc::vec![0, 0, 2, 0], alloc::vec![0, 0, 0, 2]]).unwrap());
                let ws = alloc::vec![Weight::new(alloc::vec![0; 4]); n];
                let s = HochschildSetup::new(f, &ws, AlgebraKind::Free, ModuleKind::Verma, 4).unwrap();
                let basis = s.chain_basis(r as usize, &md(&[1, 1, 1, 1])).unwrap();
                assert_eq!(basis.keys(), &monos[..], "r={r} n={n}");
            }
        }
    }
}
