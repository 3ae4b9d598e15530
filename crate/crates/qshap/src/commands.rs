//! The `dims`, `gram`, `shapovalov` and `hochschild` commands.

use anyhow::Result;
use qshap_core::hochschild::{homology_dims, HochschildSetup};
use qshap_core::linalg::rank;
use qshap_core::quotient::{shapovalov_det_free, shapovalov_det_verma};
use qshap_core::{FreeAlgebra, Matrix, MultiDegree, ScalarRing, VermaModule, Word};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{config_error, RunConfig};
use crate::output::Table;

/// Largest Gram matrix whose determinant is expanded.
pub const DET_LIMIT: usize = 120;

/// Largest Gram matrix built by `dims` and `gram`.
pub const GRAM_LIMIT: usize = 500;

fn check_size(nus: &[MultiDegree]) -> Result<()> {
    for nu in nus {
        match nu.word_count() {
            Some(n) if n <= GRAM_LIMIT => {}
            n => return Err(qshap_core::Error::MatrixTooLarge { dim: n.unwrap_or(usize::MAX), limit: GRAM_LIMIT }.into()),
        }
    }
    Ok(())
}

fn nu_json(nu: &MultiDegree) -> Value {
    json!(nu.counts())
}

/// The Gram matrix of S (no weight) or of S_Λ on degree ν.
fn gram<R: ScalarRing>(alg: &FreeAlgebra<R>, verma: Option<&VermaModule<R>>, nu: &MultiDegree) -> Matrix<R::Elem> {
    match verma {
        None => alg.gram_matrix(nu),
        Some(v) => v.gram_matrix(nu),
    }
}

fn vermas<R: ScalarRing>(cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Vec<VermaModule<R>>> {
    cfg.weights.iter().map(|w| Ok(VermaModule::new(alg.clone(), w.clone())?)).collect()
}

pub fn dims<R: ScalarRing>(cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Table> {
    let ring = alg.ring();
    let nus = cfg.degrees();
    check_size(&nus)?;
    let mut table = Table::new(&["weight", "nu", "ambient", "kernel", "dim"]);
    let mut targets: Vec<(Value, Option<VermaModule<R>>)> = vec![];
    if cfg.weights.is_empty() {
        targets.push((Value::Null, None));
    } else {
        for v in vermas(cfg, alg)? {
            targets.push((json!(v.weight().values()), Some(v)));
        }
    }
    for (label, verma) in &targets {
        let rows: Vec<(usize, usize)> = nus
            .par_iter()
            .map(|nu| {
                let g = gram(alg, verma.as_ref(), nu);
                (g.rows(), rank(ring, &g))
            })
            .collect();
        for (nu, (ambient, q)) in nus.iter().zip(rows) {
            table.push(vec![label.clone(), nu_json(nu), json!(ambient), json!(ambient - q), json!(q)]);
        }
    }
    Ok(table)
}

pub fn gram_table<R: ScalarRing>(cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Table> {
    let nu = cfg.nu.clone().ok_or_else(|| config_error("gram needs --nu"))?;
    check_size(std::slice::from_ref(&nu))?;
    let ring = alg.ring();
    let verma = vermas(cfg, alg)?.into_iter().next();
    let words = Word::all_with_content(&nu);
    let g = gram(alg, verma.as_ref(), &nu);
    let mut table = Table::new(&["row", "word", "entries"]);
    for (r, w) in words.iter().enumerate() {
        let entries: Vec<String> = g.row(r).iter().map(|e| ring.render(e)).collect();
        table.push(vec![json!(r), json!(w.to_string()), json!(entries)]);
    }
    Ok(table)
}

pub fn shapovalov<R: ScalarRing>(cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Table> {
    let ring = alg.ring();
    let verma = vermas(cfg, alg)?.into_iter().next();
    let nus = cfg.degrees();
    let dets = nus
        .par_iter()
        .map(|nu| match &verma {
            None => shapovalov_det_free(alg, nu, DET_LIMIT),
            Some(v) => shapovalov_det_verma(v, nu, DET_LIMIT),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(&["nu", "dim", "det"]);
    for (nu, d) in nus.iter().zip(dets) {
        table.push(vec![nu_json(nu), json!(Word::all_with_content(nu).len()), json!(ring.render(&d))]);
    }
    Ok(table)
}

pub fn hochschild<R: ScalarRing>(cfg: &RunConfig, alg: &FreeAlgebra<R>) -> Result<Table> {
    if cfg.uses_quotient() {
        cfg.require_quotient_root()?;
    }
    let setup = HochschildSetup::new(alg.clone(), &cfg.weights_or_zero(), cfg.algebra, cfg.module, cfg.window_depth())?;
    let nus = cfg.degrees();
    let ring = alg.ring();
    let per_nu = nus
        .par_iter()
        .map(|nu| Ok(homology_dims(ring, &setup.build_complex(nu)?)))
        .collect::<Result<Vec<_>, qshap_core::Error>>()?;
    let mut table = Table::new(&["r", "nu", "chain_dim", "dim"]);
    for rows in per_nu {
        for h in rows {
            table.push(vec![json!(h.r), nu_json(&h.nu), json!(h.chain_dim), json!(h.homology_dim)]);
        }
    }
    Ok(table)
}
