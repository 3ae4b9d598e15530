//! Verification suites behind `qshap verify`.

use anyhow::Result;
use qshap_core::check::CheckResult;
use qshap_core::hochschild::{
    euler_characteristic_matches, homology_dims, s_morphism, s_morphism_checks, AlgebraKind, HochschildSetup,
    ModuleKind,
};
use qshap_core::quotient::{ideal_property_check, nsl_serre_check, serre_membership_check, theta_power_values, FreeQuotient};
use qshap_core::symmetrize::{averaged_hochschild_check, averaging_properties, check_squares};
use qshap_core::tensor::TensorModule;
use qshap_core::{Combination, FreeAlgebra, MultiDegree, ScalarRing, TensorElement, VermaModule, Word};
use rayon::prelude::*;

use crate::config::{Fault, RunConfig, Scalars};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Forms,
    Coaction,
    Serre,
    Hochschild,
    Symmetrize,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Forms => "forms",
            Suite::Coaction => "coaction",
            Suite::Serre => "serre",
            Suite::Hochschild => "hochschild",
            Suite::Symmetrize => "symmetrize",
            Suite::All => "all",
        }
    }

    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Forms, Suite::Coaction, Suite::Serre, Suite::Hochschild, Suite::Symmetrize],
            s => vec![s],
        }
    }
}

pub fn run<R: ScalarRing>(suite: Suite, cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Vec<(Suite, CheckResult)>> {
    let mut out = Vec::new();
    for s in suite.members() {
        let results = match s {
            Suite::Forms => forms(cfg, alg)?,
            Suite::Coaction => coaction(cfg, alg)?,
            Suite::Serre => serre(cfg, alg)?,
            Suite::Hochschild => hochschild(cfg, alg)?,
            Suite::Symmetrize => symmetrize(cfg, alg)?,
            Suite::All => unreachable!(),
        };
        out.extend(results.into_iter().map(|r| (s, r)));
    }
    Ok(out)
}

fn nonzero_degrees(cfg: &RunConfig) -> Vec<MultiDegree> {
    cfg.degrees().into_iter().filter(|n| !n.is_zero()).collect()
}

fn per_degree<F>(cfg: &RunConfig, f: F) -> Result<Vec<CheckResult>>
where
    F: Fn(&MultiDegree) -> Result<Vec<CheckResult>> + Sync + Send,
{
    let nested = nonzero_degrees(cfg).par_iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn vermas<R: ScalarRing>(cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Vec<VermaModule<R>>> {
    cfg.weights_or_zero().into_iter().map(|w| Ok(VermaModule::new(alg.clone(), w)?)).collect()
}

/// Permutation sums against recursions, for S and every S_Λ.
fn forms<R: ScalarRing>(cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Vec<CheckResult>> {
    let vs = vermas(cfg, alg)?;
    per_degree(cfg, |nu| {
        let words = Word::all_with_content(nu);
        let mut bad_s = None;
        let mut bad_v = None;
        for x in &words {
            for y in &words {
                if bad_s.is_none() && alg.form_s_perm(x, y)? != alg.form_s_words(x, y) {
                    bad_s = Some(format!("x={x} y={y}"));
                }
                for v in &vs {
                    if bad_v.is_none() && v.form_perm(x, y)? != v.form_words(x, y) {
                        bad_v = Some(format!("weight={} x={x} y={y}", v.weight()));
                    }
                }
            }
        }
        Ok(vec![
            CheckResult::from_bool(format!("S perm = rec on {nu}"), bad_s.is_none(), || bad_s.clone().unwrap()),
            CheckResult::from_bool(format!("S_Lambda perm = rec on {nu}"), bad_v.is_none(), || bad_v.clone().unwrap()),
        ])
    })
}

/// Δ_Λ, with the sign of its one-letter terms flipped when the fault hook is set.
fn coaction_word<R: ScalarRing>(cfg: &RunConfig, v: &VermaModule<R>, w: &Word) -> TensorElement<R::Elem> {
    let d = v.coaction_word(w);
    match cfg.fault {
        Some(Fault::CoactionSign) => {
            let ring = v.ring();
            let mut out = Combination::new();
            for (k, c) in &d {
                let c = if k[0].len() == 1 { ring.neg(c) } else { c.clone() };
                out.add_term(ring, k.clone(), c);
            }
            out
        }
        None => d,
    }
}

/// S_Λ(xy, z) = S_{1;Λ}(x⊗y, Δ_Λ z), coassociativity, and the commutator formula.
fn coaction<R: ScalarRing>(cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Vec<CheckResult>> {
    let ring = alg.ring();
    let vs = vermas(cfg, alg)?;
    per_degree(cfg, |nu| {
        let mut out = Vec::new();
        for v in &vs {
            let t = TensorModule::new(alg.clone(), std::slice::from_ref(v.weight()))?;
            let mut shap = None;
            let mut coassoc = None;
            let mut commutator = None;
            for z in Word::all_with_content(nu) {
                let dz = coaction_word(cfg, v, &z);
                'split: for u in Word::all_with_content(nu) {
                    for n in 0..=u.len() {
                        let (x, y) = (u.slice(0, n), u.slice(n, u.len()));
                        let lhs = v.form_words(&u, &z);
                        let rhs = t.form_s_tensor(1, &Combination::basis(ring, vec![x.clone(), y.clone()]), &dz)?;
                        if lhs != rhs {
                            shap = Some(format!(
                                "weight={} x={x} y={y} z={z} residual={}",
                                v.weight(),
                                ring.render(&ring.sub(&lhs, &rhs))
                            ));
                            break 'split;
                        }
                    }
                }
                let mut left = Combination::new();
                let mut right = Combination::new();
                for (key, c) in &dz {
                    for (xs, c2) in &alg.coproduct(&alg.monomial(&key[0])) {
                        left.add_term(ring, vec![xs[0].clone(), xs[1].clone(), key[1].clone()], ring.mul(c, c2));
                    }
                    for (ys, c2) in &coaction_word(cfg, v, &key[1]) {
                        right.add_term(ring, vec![key[0].clone(), ys[0].clone(), ys[1].clone()], ring.mul(c, c2));
                    }
                }
                if coassoc.is_none() && left != right {
                    coassoc = Some(format!("weight={} z={z}", v.weight()));
                }
                if commutator.is_none() && dz != v.coaction_via_commutators_word(&z)? {
                    commutator = Some(format!("weight={} z={z}", v.weight()));
                }
                if shap.is_some() {
                    break;
                }
            }
            let w = v.weight();
            out.push(CheckResult::from_bool(format!("S_Lambda(xy,z) = S_1;Lambda(x*y, coaction z) on {nu}, weight {w}"), shap.is_none(), || {
                shap.clone().unwrap()
            }));
            out.push(CheckResult::from_bool(format!("coassociativity on {nu}, weight {w}"), coassoc.is_none(), || {
                coassoc.clone().unwrap()
            }));
            out.push(CheckResult::from_bool(format!("commutator formula on {nu}, weight {w}"), commutator.is_none(), || {
                commutator.clone().unwrap()
            }));
        }
        Ok(out)
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Serre elements in Ker S, θ_i^a against the product formula, and the ideal property.
fn serre<R: ScalarRing>(cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Vec<CheckResult>> {
    let ring = alg.ring();
    let mut out = if alg.cartan().is_simply_laced() { serre_membership_check(alg)? } else { nsl_serre_check(alg)? };
    if let Scalars::Root(l) = cfg.scalars {
        for i in 0..alg.rank() {
            let ii = alg.cartan().dot(i, i).unsigned_abs();
            let order = (l as u64 / gcd(l as u64, ii)) as usize;
            let mut bad = None;
            for (k, (rec, product)) in theta_power_values(alg, i, l as usize + 2)?.iter().enumerate() {
                let a = k + 1;
                if bad.is_none() && (rec != product || ring.is_zero(rec) != (a >= order)) {
                    bad = Some(format!("i={i} a={a} rec={} product={}", ring.render(rec), ring.render(product)));
                }
            }
            out.push(CheckResult::from_bool(format!("theta_{i}^a product formula"), bad.is_none(), || bad.clone().unwrap()));
        }
        cfg.require_quotient_root()?;
        out.extend(ideal_property_check(&FreeQuotient::new(alg.clone(), cfg.window_depth())?)?);
    }
    Ok(out)
}

/// d² = 0 and the Euler characteristic for the chosen pair, and at a root of
/// unity the form morphism into the quotient complex. Generic scalars use 𝔉 and
/// Verma modules.
fn hochschild<R: ScalarRing>(cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Vec<CheckResult>> {
    let ring = alg.ring();
    let weights = cfg.weights_or_zero();
    let (algebra, module) = match cfg.scalars {
        Scalars::Generic => (AlgebraKind::Free, ModuleKind::Verma),
        Scalars::Root(_) => {
            if cfg.uses_quotient() {
                cfg.require_quotient_root()?;
            }
            (cfg.algebra, cfg.module)
        }
    };
    let depth = cfg.window_depth();
    let setup = HochschildSetup::new(alg.clone(), &weights, algebra, module, depth)?;
    let pair = match cfg.scalars {
        Scalars::Root(_) if cfg.require_quotient_root().is_ok() => Some((
            HochschildSetup::new(alg.clone(), &weights, AlgebraKind::Free, ModuleKind::Verma, depth)?,
            HochschildSetup::new(alg.clone(), &weights, AlgebraKind::Quotient, ModuleKind::Irreducible, depth)?,
        )),
        _ => None,
    };
    let mut all = Vec::new();
    for nu in cfg.degrees() {
        let c = setup.build_complex(&nu)?;
        let closed = c.d_squared_is_zero(ring)?;
        all.push(CheckResult::from_bool(format!("d^2 = 0 on {nu}"), closed, || format!("{nu}")));
        all.push(CheckResult::from_bool(
            format!("Euler characteristic on {nu}"),
            closed && euler_characteristic_matches(&homology_dims(ring, &c)),
            || format!("{nu}"),
        ));
        if let Some((free, quot)) = &pair {
            all.extend(s_morphism_checks(&s_morphism(free, quot, &nu)?));
        }
    }
    Ok(all)
}

/// The averaging squares and the averaged bar complex, one weight at a time.
fn symmetrize<R: ScalarRing>(cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Vec<CheckResult>> {
    let weights = cfg.weights_or_zero();
    per_degree(cfg, |nu| {
        let mut out = averaging_properties(alg, nu)?;
        out.extend(check_squares(alg, nu, &weights, 1)?);
        for w in &weights {
            out.extend(averaged_hochschild_check(alg, w, nu)?);
        }
        Ok(out)
    })
}
