//! Run configuration: Cartan data, scalar ring, weights and degrees.

use std::fmt;
use std::path::Path;

use qshap_core::hochschild::{AlgebraKind, ModuleKind};
use qshap_core::{CartanDatum, MultiDegree, RootOfUnitySpec, Weight};
use serde::Deserialize;
use serde_json::{json, Value};

/// A malformed or inconsistent configuration (exit code 2).
#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

pub fn config_error(msg: impl Into<String>) -> anyhow::Error {
    ConfigError(msg.into()).into()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scalars {
    Root(u32),
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    CoactionSign,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub cartan: CartanDatum,
    pub cartan_label: String,
    pub scalars: Scalars,
    pub weights: Vec<Weight>,
    pub nu: Option<MultiDegree>,
    pub depth_max: usize,
    pub algebra: AlgebraKind,
    pub module: ModuleKind,
    pub fault: Option<Fault>,
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum CartanFile {
    Preset { preset: String },
    Matrix { rank: usize, dot: Vec<Vec<i64>> },
}

/// A preset name, or a path to a JSON file `{"preset": ..}` or `{"rank": n, "dot": [[..]]}`.
pub fn load_cartan(source: &str) -> anyhow::Result<(CartanDatum, String)> {
    if let Ok(c) = CartanDatum::preset(source) {
        let name = c.name().unwrap_or(source).to_string();
        return Ok((c, name));
    }
    let path = Path::new(source);
    if !path.exists() {
        return Err(config_error(format!("unknown Cartan preset or missing file: {source}")));
    }
    let text = std::fs::read_to_string(path).map_err(|e| config_error(format!("{source}: {e}")))?;
    let parsed: CartanFile = serde_json::from_str(&text).map_err(|e| config_error(format!("{source}: {e}")))?;
    match parsed {
        CartanFile::Preset { preset } => {
            let c = CartanDatum::preset(&preset).map_err(|e| config_error(format!("{source}: {e}")))?;
            Ok((c, preset))
        }
        CartanFile::Matrix { rank, dot } => {
            if dot.len() != rank {
                return Err(config_error(format!("{source}: rank {rank} but {} rows", dot.len())));
            }
            let c = CartanDatum::new(dot).map_err(|e| config_error(format!("{source}: {e}")))?;
            Ok((c, source.to_string()))
        }
    }
}

pub fn parse_ints(s: &str) -> anyhow::Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| config_error(format!("not an integer list: {s}"))))
        .collect()
}

pub fn parse_weight(s: &str, rank: usize) -> anyhow::Result<Weight> {
    let v = parse_ints(s)?;
    if v.len() != rank {
        return Err(config_error(format!("weight {s} has {} entries, rank is {rank}", v.len())));
    }
    Ok(Weight::new(v))
}

pub fn parse_nu(s: &str, rank: usize) -> anyhow::Result<MultiDegree> {
    let v = parse_ints(s)?;
    if v.len() != rank {
        return Err(config_error(format!("degree {s} has {} entries, rank is {rank}", v.len())));
    }
    let counts = v
        .into_iter()
        .map(|c| u32::try_from(c).map_err(|_| config_error(format!("negative degree: {s}"))))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(MultiDegree::new(counts))
}

impl RunConfig {
    /// Quotients and the 𝔲 checks need l > 3 prime to 6.
    pub fn require_quotient_root(&self) -> anyhow::Result<()> {
        match self.scalars {
            Scalars::Root(l) => RootOfUnitySpec::new(l)
                .and_then(|s| s.require_small_quantum())
                .map_err(|e| config_error(e.to_string())),
            Scalars::Generic => Err(config_error("radical quotients need a root of unity; drop --generic")),
        }
    }

    pub fn uses_quotient(&self) -> bool {
        self.algebra == AlgebraKind::Quotient || self.module == ModuleKind::Irreducible
    }

    /// The weights, or the single zero weight when none were given.
    pub fn weights_or_zero(&self) -> Vec<Weight> {
        if self.weights.is_empty() {
            vec![self.cartan.zero_weight()]
        } else {
            self.weights.clone()
        }
    }

    pub fn degrees(&self) -> Vec<MultiDegree> {
        match &self.nu {
            Some(nu) => vec![nu.clone()],
            None => MultiDegree::up_to_depth(self.cartan.rank(), self.depth_max),
        }
    }

    /// The depth window: --depth-max, widened to cover --nu.
    pub fn window_depth(&self) -> usize {
        self.nu.as_ref().map_or(self.depth_max, |n| n.depth().max(self.depth_max))
    }

    pub fn meta(&self, command: &str) -> Value {
        json!({
            "command": command,
            "cartan": self.cartan_label,
            "dot": self.cartan.dot_matrix(),
            "l": match self.scalars { Scalars::Root(l) => json!(l), Scalars::Generic => json!("generic") },
            "weights": self.weights.iter().map(|w| w.values().to_vec()).collect::<Vec<_>>(),
            "nu": self.nu.as_ref().map(|n| n.counts().to_vec()),
            "depth_max": self.depth_max,
            "algebra": match self.algebra { AlgebraKind::Free => "F", AlgebraKind::Quotient => "f" },
            "module": match self.module { ModuleKind::Verma => "verma", ModuleKind::Irreducible => "irreducible" },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_lists() {
        assert_eq!(parse_ints("1,-2, 3").unwrap(), [1, -2, 3]);
        assert!(parse_ints("1,x").is_err());
        assert_eq!(parse_nu("2,0", 2).unwrap(), MultiDegree::new(vec![2, 0]));
        assert!(parse_nu("-1,0", 2).is_err());
        assert!(parse_weight("1", 2).is_err());
    }

    #[test]
    fn presets_resolve_without_files() {
        let (c, name) = load_cartan("a1xa1").unwrap();
        assert_eq!((c.rank(), name.as_str()), (2, "A1xA1"));
        assert!(load_cartan("E8").is_err());
    }
}
