//! Radicals of S and S_Λ, the quotients 𝔣 = 𝔉/Ker(S) and L(Λ) = V(Λ)/Ker(S_Λ),
//! the action of the small quantum group on L(Λ), and relation checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::cartan::{CartanDatum, MultiDegree, Weight};
use crate::check::CheckResult;
use crate::combination::Combination;
use crate::free::{FreeAlgebra, FreeElement, PeelingGram};
use crate::linalg::{determinant, echelon, rank, solve, Matrix};
use crate::scalar::{q_factorial_i, LaurentRing, LaurentScalar, ScalarRing};
use crate::verma::VermaModule;
use crate::word::Word;
use crate::{Error, Result};

/// One graded component modulo the radical of a symmetric form.
///
/// Representatives are the lexicographically first words whose Gram
/// columns are independent; `projection` sends each ambient word to its
/// class written in the representatives.
#[derive(Clone, Debug)]
pub struct QuotientBasis<E> {
    nu: MultiDegree,
    ambient: Vec<Word>,
    index: BTreeMap<Word, usize>,
    selected: Vec<usize>,
    projection: Matrix<E>,
}

impl<E: Clone + PartialEq> QuotientBasis<E> {
    pub fn from_gram<R: ScalarRing<Elem = E>>(
        ring: &R,
        nu: MultiDegree,
        ambient: Vec<Word>,
        gram: &Matrix<E>,
    ) -> Result<Self> {
        if !ring.is_field() {
            return Err(Error::NotAField);
        }
        let n = ambient.len();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::ShapeMismatch);
        }
        let selected = if n == 0 { Vec::new() } else { echelon(ring, gram).pivots };
        let all: Vec<usize> = (0..n).collect();
        let projection = solve(
            ring,
            &gram.submatrix(&selected, &selected),
            &gram.submatrix(&selected, &all),
        )?;
        let index = ambient.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        Ok(Self { nu, ambient, index, selected, projection })
    }

    pub fn degree(&self) -> &MultiDegree {
        &self.nu
    }

    pub fn dim(&self) -> usize {
        self.selected.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.ambient.len() - self.selected.len()
    }

    pub fn ambient(&self) -> &[Word] {
        &self.ambient
    }

    pub fn representatives(&self) -> Vec<Word> {
        self.selected.iter().map(|&k| self.ambient[k].clone()).collect()
    }

    pub fn representative(&self, s: usize) -> &Word {
        &self.ambient[self.selected[s]]
    }

    pub fn projection(&self) -> &Matrix<E> {
        &self.projection
    }

    pub fn word_index(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coordinates of the class of `v` in the representatives.
    pub fn project<R: ScalarRing<Elem = E>>(&self, ring: &R, v: &Combination<Word, E>) -> Result<Vec<E>> {
        let mut out = alloc::vec![ring.zero(); self.dim()];
        for (w, c) in v {
            let k = self.word_index(w).ok_or(Error::DegreeMismatch)?;
            for (s, o) in out.iter_mut().enumerate() {
                let p = self.projection.get(s, k);
                if !ring.is_zero(p) {
                    ring.add_assign(o, &ring.mul(p, c));
                }
            }
        }
        Ok(out)
    }

    /// A basis of the radical: e_c minus its projection, for every
    /// non-representative word c.
    pub fn kernel_vectors<R: ScalarRing<Elem = E>>(&self, ring: &R) -> Vec<Combination<Word, E>> {
        let mut out = Vec::new();
        for c in 0..self.ambient.len() {
            if self.selected.contains(&c) {
                continue;
            }
            let mut v = Combination::basis(ring, self.ambient[c].clone());
            for (s, &k) in self.selected.iter().enumerate() {
                v.add_term(ring, self.ambient[k].clone(), ring.neg(self.projection.get(s, c)));
            }
            out.push(v);
        }
        out
    }
}

/// Quotient data for every degree of depth at most `depth_max`.
#[derive(Clone, Debug)]
pub struct QuotientWindow<E> {
    depth_max: usize,
    bases: BTreeMap<MultiDegree, QuotientBasis<E>>,
}

impl<E: Clone + PartialEq> QuotientWindow<E> {
    fn build<R: ScalarRing<Elem = E>>(
        ring: &R,
        rank: usize,
        depth_max: usize,
        peel: impl Fn(usize, &Word) -> Combination<Word, E>,
    ) -> Result<Self> {
        let mut table = PeelingGram::new();
        let mut bases = BTreeMap::new();
        for nu in MultiDegree::up_to_depth(rank, depth_max) {
            let e = table.entry(ring, &nu, &peel);
            let b = QuotientBasis::from_gram(ring, nu.clone(), e.basis.clone(), &e.gram)?;
            bases.insert(nu, b);
        }
        Ok(Self { depth_max, bases })
    }

    pub fn depth_max(&self) -> usize {
        self.depth_max
    }

    pub fn basis(&self, nu: &MultiDegree) -> Result<&QuotientBasis<E>> {
        self.bases
            .get(nu)
            .ok_or(Error::WindowExceeded { requested: nu.depth(), window: self.depth_max })
    }

    pub fn dim(&self, nu: &MultiDegree) -> Result<usize> {
        Ok(self.basis(nu)?.dim())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiDegree, &QuotientBasis<E>)> {
        self.bases.iter()
    }

    /// The matrix of a word-level operator between two components.
    fn operator<R: ScalarRing<Elem = E>>(
        &self,
        ring: &R,
        src: &MultiDegree,
        dst: &MultiDegree,
        f: impl Fn(&Word) -> Combination<Word, E>,
    ) -> Result<Matrix<E>> {
        let a = self.basis(src)?;
        let b = self.basis(dst)?;
        let mut m = Matrix::zeros(ring, b.dim(), a.dim());
        for s in 0..a.dim() {
            let col = b.project(ring, &f(a.representative(s)))?;
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, s, v);
            }
        }
        Ok(m)
    }
}

/// The algebra 𝔣 = 𝔉/Ker(S) up to a depth.
#[derive(Clone, Debug)]
pub struct FreeQuotient<R: ScalarRing> {
    alg: FreeAlgebra<R>,
    window: QuotientWindow<R::Elem>,
}

impl<R: ScalarRing> FreeQuotient<R> {
    pub fn new(alg: FreeAlgebra<R>, depth_max: usize) -> Result<Self> {
        let window = QuotientWindow::build(alg.ring(), alg.rank(), depth_max, |i, w| alg.delta_word(i, w))?;
        Ok(Self { alg, window })
    }

    pub fn algebra(&self) -> &FreeAlgebra<R> {
        &self.alg
    }

    pub fn window(&self) -> &QuotientWindow<R::Elem> {
        &self.window
    }

    pub fn basis(&self, nu: &MultiDegree) -> Result<&QuotientBasis<R::Elem>> {
        self.window.basis(nu)
    }

    /// Coordinates of the class of x in 𝔣.
    pub fn project(&self, x: &FreeElement<R::Elem>) -> Result<Vec<R::Elem>> {
        let nu = self.alg.degree_of(x)?.ok_or(Error::DegreeMismatch)?;
        self.basis(&nu)?.project(self.alg.ring(), x)
    }
}

/// The module L(Λ) = V(Λ)/Ker(S_Λ) up to a depth, with the operators θ_i,
/// ε_i and K̃_i.
#[derive(Clone, Debug)]
pub struct IrreducibleModule<R: ScalarRing> {
    verma: VermaModule<R>,
    window: QuotientWindow<R::Elem>,
}

/// The generators acting on L(Λ). `E` and `F` are the images
/// E_i = ζ_i²/(ζ_i−ζ_i⁻¹) ε_i K̃_i and F_i = θ_i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Theta(usize),
    Epsilon(usize),
    E(usize),
    F(usize),
}

impl Generator {
    fn shift(self, nu: &MultiDegree) -> Option<MultiDegree> {
        match self {
            Self::Theta(i) | Self::F(i) => Some(nu.add_letter(i)),
            Self::Epsilon(i) | Self::E(i) => nu.sub_letter(i),
        }
    }
}

impl<R: ScalarRing> IrreducibleModule<R> {
    pub fn new(verma: VermaModule<R>, depth_max: usize) -> Result<Self> {
        let window = QuotientWindow::build(verma.ring(), verma.algebra().rank(), depth_max, |i, w| {
            verma.epsilon_word(i, w)
        })?;
        Ok(Self { verma, window })
    }

    pub fn verma(&self) -> &VermaModule<R> {
        &self.verma
    }

    pub fn window(&self) -> &QuotientWindow<R::Elem> {
        &self.window
    }

    pub fn basis(&self, nu: &MultiDegree) -> Result<&QuotientBasis<R::Elem>> {
        self.window.basis(nu)
    }

    fn ring(&self) -> &R {
        self.verma.ring()
    }

    fn rank(&self) -> usize {
        self.verma.algebra().rank()
    }

    /// K̃_i on L(Λ)_{Λ−λ_ν}: the scalar ζ^{⟨Λ−λ_ν, i⟩}.
    pub fn k_tilde(&self, i: usize, nu: &MultiDegree) -> R::Elem {
        self.ring().zeta_pow(self.verma.x_degree(nu).at(i))
    }

    pub fn theta_matrix(&self, i: usize, nu: &MultiDegree) -> Result<Matrix<R::Elem>> {
        self.generator_matrix(Generator::Theta(i), nu)
    }

    pub fn epsilon_matrix(&self, i: usize, nu: &MultiDegree) -> Result<Matrix<R::Elem>> {
        self.generator_matrix(Generator::Epsilon(i), nu)
    }

    /// ζ_i²/(ζ_i − ζ_i⁻¹).
    fn e_constant(&self, i: usize) -> Result<R::Elem> {
        let ring = self.ring();
        let d = self.verma.algebra().cartan().symmetrizer(i)?;
        let denom = ring.sub(&ring.zeta_pow(d), &ring.zeta_pow(-d));
        let inv = ring.inverse(&denom).ok_or(if ring.is_field() { Error::DivisionByZero } else { Error::NotAField })?;
        Ok(ring.mul(&ring.zeta_pow(2 * d), &inv))
    }

    /// The matrix of a generator from L_ν; a generator leaving ℕ[I] gives a
    /// map to the zero space.
    pub fn generator_matrix(&self, g: Generator, nu: &MultiDegree) -> Result<Matrix<R::Elem>> {
        let ring = self.ring();
        let src = self.basis(nu)?;
        let Some(dst) = g.shift(nu) else {
            return Ok(Matrix::zeros(ring, 0, src.dim()));
        };
        match g {
            Generator::Theta(i) | Generator::F(i) => {
                self.window.operator(ring, nu, &dst, |w| Combination::basis(ring, w.prepend(i)))
            }
            Generator::Epsilon(i) => self.window.operator(ring, nu, &dst, |w| self.verma.epsilon_word(i, w)),
            Generator::E(i) => {
                let c = ring.mul(&self.e_constant(i)?, &self.k_tilde(i, nu));
                let m = self.window.operator(ring, nu, &dst, |w| self.verma.epsilon_word(i, w))?;
                Ok(m.scale(ring, &c))
            }
        }
    }

    /// The composite g_1∘…∘g_k (rightmost first) on L_ν, or `None` when
    /// the target degree leaves ℕ[I].
    pub fn composite(&self, gens: &[Generator], nu: &MultiDegree) -> Result<Option<Matrix<R::Elem>>> {
        let ring = self.ring();
        let mut target = nu.clone();
        for g in gens.iter().rev() {
            match g.shift(&target) {
                Some(t) => target = t,
                None => return Ok(None),
            }
        }
        let dim_dst = self.basis(&target)?.dim();
        let mut cur = Matrix::identity(ring, self.basis(nu)?.dim());
        let mut deg = nu.clone();
        for g in gens.iter().rev() {
            match g.shift(&deg) {
                Some(t) => {
                    cur = self.generator_matrix(*g, &deg)?.mul(ring, &cur)?;
                    deg = t;
                }
                None => return Ok(Some(Matrix::zeros(ring, dim_dst, cur.cols()))),
            }
        }
        Ok(Some(cur))
    }

    fn scalar(&self, c: &R::Elem, nu: &MultiDegree) -> Result<Matrix<R::Elem>> {
        Ok(Matrix::identity(self.ring(), self.basis(nu)?.dim()).scale(self.ring(), c))
    }

    /// Σ_k c_k·(composite_k) − rhs on L_ν, all terms sharing a target.
    fn residual(
        &self,
        terms: &[(R::Elem, Vec<Generator>)],
        rhs: Option<Matrix<R::Elem>>,
        nu: &MultiDegree,
    ) -> Result<Option<Matrix<R::Elem>>> {
        let ring = self.ring();
        let mut acc: Option<Matrix<R::Elem>> = rhs.map(|m| m.scale(ring, &ring.from_int(-1)));
        for (c, gens) in terms {
            let Some(m) = self.composite(gens, nu)? else { continue };
            let m = m.scale(ring, c);
            acc = Some(match acc {
                None => m,
                Some(a) => a.add(ring, &m)?,
            });
        }
        Ok(acc)
    }

    fn record(
        &self,
        out: &mut Vec<CheckResult>,
        label: &str,
        nu: &MultiDegree,
        residual: Option<Matrix<R::Elem>>,
    ) {
        let ok = residual.is_none_or(|m| m.is_zero(self.ring()));
        out.push(CheckResult::from_bool(format!("{label} on degree {nu}"), ok, || {
            format!("nonzero residual on degree {nu}")
        }));
    }

    /// Relations of 𝔲 on every component where both sides stay in the window:
    /// K̃_jε_i = ζ^{i·j}ε_iK̃_j, K̃_jθ_i = ζ^{−i·j}θ_iK̃_j and
    /// ε_iθ_j − ζ^{i·j}θ_jε_i = δ_{ij}(1 − K̃_i^{−2}).
    pub fn u_relation_checks(&self) -> Result<Vec<CheckResult>> {
        let ring = self.ring();
        let cartan = self.verma.algebra().cartan();
        let rank = self.rank();
        let mut out = Vec::new();
        for nu in MultiDegree::up_to_depth(rank, self.window.depth_max().saturating_sub(1)) {
            for i in 0..rank {
                for j in 0..rank {
                    let ij = cartan.dot(i, j);
                    if let Some(down) = nu.sub_letter(i) {
                        let lhs = self.generator_matrix(Generator::Epsilon(i), &nu)?.scale(ring, &self.k_tilde(j, &down));
                        let rhs = self
                            .generator_matrix(Generator::Epsilon(i), &nu)?
                            .scale(ring, &ring.mul_zeta_pow(ij, &self.k_tilde(j, &nu)));
                        self.record(&mut out, &format!("K{j} e{i}"), &nu, Some(lhs.sub(ring, &rhs)?));
                    }
                    let up = nu.add_letter(i);
                    let lhs = self.generator_matrix(Generator::Theta(i), &nu)?.scale(ring, &self.k_tilde(j, &up));
                    let rhs = self
                        .generator_matrix(Generator::Theta(i), &nu)?
                        .scale(ring, &ring.mul_zeta_pow(-ij, &self.k_tilde(j, &nu)));
                    self.record(&mut out, &format!("K{j} theta{i}"), &nu, Some(lhs.sub(ring, &rhs)?));
                    let rhs = if i == j {
                        let k = self.k_tilde(i, &nu);
                        let kinv2 = ring.inverse(&ring.mul(&k, &k)).ok_or(Error::DivisionByZero)?;
                        Some(self.scalar(&ring.sub(&ring.one(), &kinv2), &nu)?)
                    } else {
                        None
                    };
                    let terms = [
                        (ring.one(), alloc::vec![Generator::Epsilon(i), Generator::Theta(j)]),
                        (ring.neg(&ring.zeta_pow(ij)), alloc::vec![Generator::Theta(j), Generator::Epsilon(i)]),
                    ];
                    let res = self.residual(&terms, rhs, &nu)?;
                    self.record(&mut out, &format!("e{i} theta{j}"), &nu, res);
                }
            }
        }
        Ok(out)
    }

    /// The images E_i, F_i satisfy [E_i, F_j] = δ_{ij}(K̃_i − K̃_i⁻¹)/(ζ_i − ζ_i⁻¹),
    /// E_i^l = F_i^l = 0 and both Serre relations, wherever the window allows.
    pub fn r_relation_checks(&self, l: u32) -> Result<Vec<CheckResult>> {
        let ring = self.ring();
        let cartan = self.verma.algebra().cartan();
        let rank = self.rank();
        let depth = self.window.depth_max();
        let mut out = Vec::new();
        for nu in MultiDegree::up_to_depth(rank, depth) {
            for i in 0..rank {
                let d = cartan.symmetrizer(i)?;
                for j in 0..rank {
                    if nu.depth() < depth {
                        let rhs = if i == j {
                            let k = self.k_tilde(i, &nu);
                            let kinv = ring.inverse(&k).ok_or(Error::DivisionByZero)?;
                            let denom = ring.sub(&ring.zeta_pow(d), &ring.zeta_pow(-d));
                            let dinv = ring.inverse(&denom).ok_or(Error::DivisionByZero)?;
                            Some(self.scalar(&ring.mul(&ring.sub(&k, &kinv), &dinv), &nu)?)
                        } else {
                            None
                        };
                        let terms = [
                            (ring.one(), alloc::vec![Generator::E(i), Generator::F(j)]),
                            (ring.from_int(-1), alloc::vec![Generator::F(j), Generator::E(i)]),
                        ];
                        let res = self.residual(&terms, rhs, &nu)?;
                        self.record(&mut out, &format!("[E{i},F{j}]"), &nu, res);
                    }
                    if i == j {
                        continue;
                    }
                    let m = (1 - cartan.cartan_integer(i, j)?) as usize;
                    if nu.depth() + m < depth {
                        let terms = self.serre_terms(i, j, m, d, Generator::F)?;
                        let res = self.residual(&terms, None, &nu)?;
                        self.record(&mut out, &format!("F Serre ({i},{j})"), &nu, res);
                    }
                    let terms = self.serre_terms(i, j, m, d, Generator::E)?;
                    let res = self.residual(&terms, None, &nu)?;
                    self.record(&mut out, &format!("E Serre ({i},{j})"), &nu, res);
                }
                if nu.depth() + l as usize <= depth {
                    let res = self.composite(&alloc::vec![Generator::F(i); l as usize], &nu)?;
                    self.record(&mut out, &format!("F{i}^l"), &nu, res);
                }
                let res = self.composite(&alloc::vec![Generator::E(i); l as usize], &nu)?;
                self.record(&mut out, &format!("E{i}^l"), &nu, res);
            }
        }
        Ok(out)
    }

    /// Σ_p (−1)^p g_i^{(p)} g_j g_i^{(m−p)} as weighted generator words.
    fn serre_terms(
        &self,
        i: usize,
        j: usize,
        m: usize,
        d: i64,
        g: fn(usize) -> Generator,
    ) -> Result<Vec<(R::Elem, Vec<Generator>)>> {
        let ring = self.ring();
        let mut terms = Vec::new();
        for p in 0..=m {
            let denom = ring.mul(&q_factorial_i(ring, p as u32, d)?, &q_factorial_i(ring, (m - p) as u32, d)?);
            let mut c = ring.inverse(&denom).ok_or(Error::DivisionByZero)?;
            if p % 2 == 1 {
                c = ring.neg(&c);
            }
            let mut word = alloc::vec![g(i); p];
            word.push(g(j));
            word.extend(core::iter::repeat_n(g(i), m - p));
            terms.push((c, word));
        }
        Ok(terms)
    }

    /// For every ν ≠ 0 in the window, no nonzero vector of L_ν is killed by
    /// all ε_i.
    pub fn singular_vector_check(&self) -> Result<Vec<CheckResult>> {
        let ring = self.ring();
        let mut out = Vec::new();
        for (nu, b) in self.window.iter() {
            if nu.is_zero() || b.dim() == 0 {
                continue;
            }
            let mut stacked = Matrix::zeros(ring, 0, b.dim());
            for i in 0..self.rank() {
                stacked = stacked.vstack(&self.epsilon_matrix(i, nu)?)?;
            }
            let ok = rank(ring, &stacked) == b.dim();
            out.push(CheckResult::from_bool(format!("no singular vector in degree {nu}"), ok, || {
                format!("common kernel of the e_i on degree {nu} is nonzero")
            }));
        }
        Ok(out)
    }
}

/// A row of a dimension table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimRow {
    pub nu: MultiDegree,
    pub ambient: usize,
    pub quotient: usize,
}

impl DimRow {
    pub fn kernel(&self) -> usize {
        self.ambient - self.quotient
    }
}

/// dim 𝔉_ν and dim 𝔣_ν = rank of the Gram matrix, for every ν up to a depth.
pub fn free_dims<R: ScalarRing>(alg: &FreeAlgebra<R>, depth_max: usize) -> Vec<DimRow> {
    let mut table = PeelingGram::new();
    MultiDegree::up_to_depth(alg.rank(), depth_max)
        .into_iter()
        .map(|nu| {
            let g = table.get(alg.ring(), &nu, |i, w| alg.delta_word(i, w));
            DimRow { ambient: g.rows(), quotient: rank(alg.ring(), g), nu }
        })
        .collect()
}

/// dim V(Λ)_ν and dim L(Λ)_ν, for every ν up to a depth.
pub fn verma_dims<R: ScalarRing>(verma: &VermaModule<R>, depth_max: usize) -> Vec<DimRow> {
    verma
        .gram_matrices(depth_max)
        .into_iter()
        .map(|(nu, g)| DimRow { ambient: g.rows(), quotient: rank(verma.ring(), &g), nu })
        .collect()
}

/// det of the Gram matrix of S on 𝔉_ν.
pub fn shapovalov_det_free<R: ScalarRing>(alg: &FreeAlgebra<R>, nu: &MultiDegree, limit: usize) -> Result<R::Elem> {
    let n = Word::all_with_content(nu).len();
    if n > limit {
        return Err(Error::MatrixTooLarge { dim: n, limit });
    }
    determinant(alg.ring(), &alg.gram_matrix(nu), limit)
}

/// det of the Gram matrix of S_Λ on V(Λ)_ν.
pub fn shapovalov_det_verma<R: ScalarRing>(
    verma: &VermaModule<R>,
    nu: &MultiDegree,
    limit: usize,
) -> Result<R::Elem> {
    let n = Word::all_with_content(nu).len();
    if n > limit {
        return Err(Error::MatrixTooLarge { dim: n, limit });
    }
    determinant(verma.ring(), &verma.gram_matrix(nu), limit)
}

/// Whether a homogeneous x pairs to zero with every word of its degree.
pub fn in_kernel<R: ScalarRing>(alg: &FreeAlgebra<R>, x: &FreeElement<R::Elem>) -> Result<bool> {
    let Some(nu) = alg.degree_of(x)? else { return Ok(true) };
    Ok(alg.basis(&nu).iter().all(|w| alg.ring().is_zero(&alg.form_s_rec(x, &alg.monomial(w)))))
}

/// Σ_{p=0}^m (−1)^p θ_i^{(p)} θ_j θ_i^{(m−p)} with m = 1 − ⟨i, j'⟩.
pub fn serre_element<R: ScalarRing>(alg: &FreeAlgebra<R>, i: usize, j: usize) -> Result<FreeElement<R::Elem>> {
    let ring = alg.ring();
    let cartan = alg.cartan();
    let d = cartan.symmetrizer(i)?;
    let m = (1 - cartan.cartan_integer(i, j)?) as usize;
    let mut out = Combination::new();
    for p in 0..=m {
        let denom = ring.mul(&q_factorial_i(ring, p as u32, d)?, &q_factorial_i(ring, (m - p) as u32, d)?);
        let mut c = ring.inverse(&denom).ok_or(Error::DivisionByZero)?;
        if p % 2 == 1 {
            c = ring.neg(&c);
        }
        let mut letters = alloc::vec![i; p];
        letters.push(j);
        letters.extend(core::iter::repeat_n(i, m - p));
        out.add_term(ring, Word::new(&letters), c);
    }
    Ok(out)
}

/// The simply laced relations θ_iθ_j − θ_jθ_i (i·j = 0) and
/// θ_i²θ_j − (ζ+ζ⁻¹)θ_iθ_jθ_i + θ_jθ_i² (i·j = −1) lie in Ker(S), while
/// θ_iθ_jθ_i − θ_jθ_i² does not.
pub fn serre_membership_check<R: ScalarRing>(alg: &FreeAlgebra<R>) -> Result<Vec<CheckResult>> {
    if !alg.cartan().is_simply_laced() {
        return Err(Error::InvalidCartan("simply laced datum required"));
    }
    let ring = alg.ring();
    let mut out = Vec::new();
    for i in 0..alg.rank() {
        for j in 0..alg.rank() {
            if i == j {
                continue;
            }
            let m = |v: &[usize]| alg.monomial(&Word::new(v));
            match alg.cartan().dot(i, j) {
                0 => {
                    let x = m(&[i, j]).sub(ring, &m(&[j, i]));
                    out.push(CheckResult::from_bool(format!("commutator ({i},{j}) in Ker S"), in_kernel(alg, &x)?, || {
                        format!("theta{i} theta{j} - theta{j} theta{i} pairs nontrivially")
                    }));
                }
                -1 => {
                    let z = ring.add(&ring.zeta_pow(1), &ring.zeta_pow(-1));
                    let x = m(&[i, i, j]).sub(ring, &m(&[i, j, i]).scale(ring, &z)).add(ring, &m(&[j, i, i]));
                    out.push(CheckResult::from_bool(format!("quantum Serre ({i},{j}) in Ker S"), in_kernel(alg, &x)?, || {
                        format!("Serre element for ({i},{j}) pairs nontrivially")
                    }));
                    let y = m(&[i, j, i]).sub(ring, &m(&[j, i, i]));
                    out.push(CheckResult::from_bool(
                        format!("non-relation ({i},{j}) outside Ker S"),
                        !in_kernel(alg, &y)?,
                        || format!("theta{i} theta{j} theta{i} - theta{j} theta{i}^2 lies in the kernel"),
                    ));
                }
                _ => {}
            }
        }
    }
    Ok(out)
}

/// The same index set with q_ij ↦ q^{e_ij}, e_ii = i·i and e_ij = 1 for i ≠ j.
/// At q = 0 every off-diagonal Gram entry of S vanishes and every diagonal
/// one is 1.
pub fn positive_exponent_datum(cartan: &CartanDatum) -> Result<CartanDatum> {
    let n = cartan.rank();
    CartanDatum::new((0..n).map(|i| (0..n).map(|j| if i == j { cartan.dot(i, i) } else { 1 }).collect()).collect())
}

/// det S_ν (or det S_{Λ,ν}) over ℚ[q, q⁻¹] along q_ij = q^{i·j} and along the
/// positive-exponent curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericDetRow {
    pub nu: MultiDegree,
    pub specialized: LaurentScalar,
    pub positive: LaurentScalar,
}

pub fn generic_determinants(
    cartan: &CartanDatum,
    weight: Option<&Weight>,
    depth_max: usize,
    limit: usize,
) -> Result<Vec<GenericDetRow>> {
    let special = FreeAlgebra::new(LaurentRing, cartan.clone());
    let positive = FreeAlgebra::new(LaurentRing, positive_exponent_datum(cartan)?);
    let det = |alg: &FreeAlgebra<LaurentRing>, nu: &MultiDegree| match weight {
        None => shapovalov_det_free(alg, nu, limit),
        Some(w) => shapovalov_det_verma(&VermaModule::new(alg.clone(), w.clone())?, nu, limit),
    };
    MultiDegree::up_to_depth(cartan.rank(), depth_max)
        .into_iter()
        .map(|nu| Ok(GenericDetRow { specialized: det(&special, &nu)?, positive: det(&positive, &nu)?, nu }))
        .collect()
}

/// The divided-power Serre elements lie in Ker(S) for every ordered pair.
pub fn nsl_serre_check<R: ScalarRing>(alg: &FreeAlgebra<R>) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for i in 0..alg.rank() {
        for j in 0..alg.rank() {
            if i == j {
                continue;
            }
            let x = serre_element(alg, i, j)?;
            out.push(CheckResult::from_bool(format!("divided-power Serre ({i},{j}) in Ker S"), in_kernel(alg, &x)?, || {
                format!("Serre element for ({i},{j}) pairs nontrivially")
            }));
        }
    }
    Ok(out)
}

/// (S(θ_i^a, θ_i^a), ∏_{p=1}^a (1 − ζ^{p·i·i})/(1 − ζ^{i·i})) for a = 1..=a_max.
pub fn theta_power_values<R: ScalarRing>(
    alg: &FreeAlgebra<R>,
    i: usize,
    a_max: usize,
) -> Result<Vec<(R::Elem, R::Elem)>> {
    let ring = alg.ring();
    let ii = alg.cartan().dot(i, i);
    let denom = ring.sub(&ring.one(), &ring.zeta_pow(ii));
    let mut product = ring.one();
    let mut out = Vec::with_capacity(a_max);
    for a in 1..=a_max {
        let num = ring.sub(&ring.one(), &ring.zeta_pow(ii * a as i64));
        let f = ring.div_exact(&num, &denom).ok_or(Error::DivisionByZero)?;
        product = ring.mul(&product, &f);
        let w = Word::new(&alloc::vec![i; a]);
        out.push((alg.form_s_words(&w, &w), product.clone()));
    }
    Ok(out)
}

/// Ker(S) is a two-sided ideal: θ_i k and k θ_i pair to zero with every
/// word, for every radical vector k up to the given depth.
pub fn ideal_property_check<R: ScalarRing>(quot: &FreeQuotient<R>) -> Result<Vec<CheckResult>> {
    let alg = quot.algebra();
    let ring = alg.ring();
    let mut out = Vec::new();
    for (nu, b) in quot.window().iter() {
        if nu.depth() >= quot.window().depth_max() {
            continue;
        }
        let mut ok = true;
        for k in b.kernel_vectors(ring) {
            for i in 0..alg.rank() {
                let left = alg.multiply(&alg.generator(i), &k);
                let right = alg.multiply(&k, &alg.generator(i));
                ok &= in_kernel(alg, &left)? && in_kernel(alg, &right)?;
            }
        }
        out.push(CheckResult::from_bool(format!("Ker S ideal in degree {nu}"), ok, || {
            format!("a kernel vector of degree {nu} leaves the kernel under multiplication")
        }));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanDatum, Weight};
    use crate::check::all_passed;
    use crate::scalar::{bracket, CyclotomicField, LaurentRing};

    fn alg(name: &str, l: u32) -> FreeAlgebra<CyclotomicField> {
        FreeAlgebra::new(CyclotomicField::new(l).unwrap(), CartanDatum::preset(name).unwrap())
    }

    fn md(v: &[u32]) -> MultiDegree {
        MultiDegree::new(v.to_vec())
    }

    #[test]
    fn free_dims_examples() {
        let a1 = alg("A1", 5);
        let dims: Vec<usize> = free_dims(&a1, 6).iter().map(|r| r.quotient).collect();
        assert_eq!(dims, [1, 1, 1, 1, 1, 0, 0]);
        let a2 = alg("A2", 5);
        let row = free_dims(&a2, 2).into_iter().find(|r| r.nu == md(&[1, 1])).unwrap();
        assert_eq!((row.ambient, row.quotient, row.kernel()), (2, 2, 0));
    }

    #[test]
    fn verma_dims_examples() {
        let a1 = alg("A1", 5);
        let v = VermaModule::new(a1.clone(), Weight::new(alloc::vec![2])).unwrap();
        let dims: Vec<usize> = verma_dims(&v, 4).iter().map(|r| r.quotient).collect();
        assert_eq!(dims, [1, 1, 1, 0, 0]);
        let st = VermaModule::new(a1, Weight::new(alloc::vec![-1])).unwrap();
        let dims: Vec<usize> = verma_dims(&st, 7).iter().map(|r| r.quotient).collect();
        assert_eq!(dims, [1, 1, 1, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn quotient_basis_projects_kernel_to_zero() {
        let a1 = alg("A1", 5);
        let q = FreeQuotient::new(a1.clone(), 6).unwrap();
        let k = a1.ring().clone();
        assert_eq!(q.basis(&md(&[5])).unwrap().dim(), 0);
        assert_eq!(q.basis(&md(&[4])).unwrap().representatives(), [Word::new(&[0, 0, 0, 0])]);
        assert_eq!(q.basis(&md(&[7])).unwrap_err(), Error::WindowExceeded { requested: 7, window: 6 });
        let a2 = alg("A2", 5);
        let q2 = FreeQuotient::new(a2.clone(), 3).unwrap();
        for (_, b) in q2.window().iter() {
            assert_eq!(b.dim() + b.kernel_dim(), b.ambient_dim());
            for v in b.kernel_vectors(a2.ring()) {
                assert!(in_kernel(&a2, &v).unwrap());
                assert!(b.project(a2.ring(), &v).unwrap().iter().all(|c| a2.ring().is_zero(c)));
            }
        }
        assert_eq!(q.project(&a1.monomial(&Word::new(&[0, 0]))).unwrap(), [k.one()]);
        assert!(all_passed(&ideal_property_check(&q2).unwrap()));
    }

    #[test]
    fn small_quantum_group_relations() {
        for (name, lam) in [("A1", alloc::vec![2]), ("A1", alloc::vec![-1]), ("A2", alloc::vec![1, 0]), ("B2", alloc::vec![2, 2])] {
            let v = VermaModule::new(alg(name, 5), Weight::new(lam)).unwrap();
            let l = IrreducibleModule::new(v, 4).unwrap();
            let u = l.u_relation_checks().unwrap();
            assert!(all_passed(&u), "{name} {:?}", crate::check::failures(&u));
            let r = l.r_relation_checks(5).unwrap();
            assert!(all_passed(&r), "{name} {:?}", crate::check::failures(&r));
            assert!(all_passed(&l.singular_vector_check().unwrap()));
        }
    }

    #[test]
    fn steinberg_module() {
        let v = VermaModule::new(alg("A1", 5), Weight::new(alloc::vec![-1])).unwrap();
        let l = IrreducibleModule::new(v, 6).unwrap();
        let e = l.generator_matrix(Generator::E(0), &md(&[4])).unwrap();
        assert!(!e.is_zero(&CyclotomicField::new(5).unwrap()));
        assert!(l.epsilon_matrix(0, &md(&[0])).unwrap().rows() == 0);
        let k = CyclotomicField::new(5).unwrap();
        assert_eq!(l.k_tilde(0, &md(&[0])), k.zeta_pow(-1));
        let r = l.r_relation_checks(5).unwrap();
        assert!(r.iter().any(|c| c.label.starts_with("F0^l")));
        assert!(all_passed(&r));
    }

    #[test]
    fn serre_checks() {
        assert!(all_passed(&serre_membership_check(&alg("A1xA1", 5)).unwrap()));
        let a2 = serre_membership_check(&alg("A2", 5)).unwrap();
        assert!(a2.iter().any(|c| c.label.starts_with("non-relation")));
        assert!(all_passed(&a2));
        assert!(all_passed(&nsl_serre_check(&alg("B2", 5)).unwrap()));
        assert!(all_passed(&nsl_serre_check(&alg("A2", 7)).unwrap()));
        assert!(serre_membership_check(&alg("B2", 5)).is_err());
        // the divided-power path on A2 is the quantum Serre element over [2]!
        let f = alg("A2", 5);
        let k = f.ring().clone();
        let s = serre_element(&f, 0, 1).unwrap();
        let two = k.add(&k.zeta_pow(1), &k.zeta_pow(-1));
        let m = |v: &[usize]| f.monomial(&Word::new(v));
        let expected = m(&[0, 0, 1]).sub(&k, &m(&[0, 1, 0]).scale(&k, &two)).add(&k, &m(&[1, 0, 0]));
        assert_eq!(s.scale(&k, &two), expected);
    }

    #[test]
    fn theta_powers() {
        let a1 = alg("A1", 5);
        let k = a1.ring().clone();
        let vals = theta_power_values(&a1, 0, 7).unwrap();
        for (a, (rec, prod)) in vals.iter().enumerate() {
            assert_eq!(rec, prod);
            assert_eq!(k.is_zero(rec), a + 1 >= 5);
        }
        assert_eq!(vals[0].0, k.one());
        assert_eq!(vals[1].0, k.add(&k.one(), &k.zeta_pow(2)));
    }

    #[test]
    fn determinants() {
        let a1 = alg("A1", 5);
        let k = a1.ring().clone();
        assert_eq!(shapovalov_det_free(&a1, &md(&[2]), 10).unwrap(), k.add(&k.one(), &k.zeta_pow(2)));
        let v = VermaModule::new(a1, Weight::new(alloc::vec![3])).unwrap();
        assert_eq!(shapovalov_det_verma(&v, &md(&[1]), 10).unwrap(), bracket(&k, 3));
        let gen = FreeAlgebra::new(LaurentRing, CartanDatum::preset("A2").unwrap());
        let d = shapovalov_det_free(&gen, &md(&[1, 1]), 10).unwrap();
        assert_eq!(d, LaurentRing.sub(&LaurentRing.one(), &LaurentRing.zeta_pow(-2)));
        assert!(matches!(shapovalov_det_free(&gen, &md(&[2, 2]), 3), Err(Error::MatrixTooLarge { dim: 6, limit: 3 })));
        // the Serre element kills det S_{i+2j} on the q^{i·j} curve but not off it
        let a2 = CartanDatum::preset("A2").unwrap();
        let rows = generic_determinants(&a2, None, 3, 64).unwrap();
        let serre = rows.iter().find(|r| r.nu == md(&[1, 2])).unwrap();
        assert!(LaurentRing.is_zero(&serre.specialized));
        assert!(rows.iter().all(|r| !LaurentRing.is_zero(&r.positive)));
    }
}
