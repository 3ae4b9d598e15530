//! `qshap`: dimension tables, Gram matrices, determinants, bar complex
//! homology and verification suites.

mod commands;
mod config;
mod output;
mod suites;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qshap_core::hochschild::{AlgebraKind, ModuleKind};
use qshap_core::{CyclotomicField, FreeAlgebra, LaurentRing, ScalarRing};
use serde_json::json;

use config::{config_error, load_cartan, parse_nu, parse_weight, ConfigError, Fault, RunConfig, Scalars};
use output::{Format, Table};
use suites::Suite;

#[derive(Parser, Debug)]
#[command(name = "qshap", version, about = "Exact contravariant forms, radical quotients and bar complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions of 𝔉_ν, Ker S and 𝔣_ν (or of V(Λ)_ν and L(Λ)_ν with --weight).
    Dims,
    /// The Gram matrix of S (or S_Λ) on degree --nu.
    Gram,
    /// Determinants of the Gram matrices.
    Shapovalov,
    /// Chain and homology dimensions of the bar complex.
    Hochschild,
    /// Run a verification suite; exits with 1 on any failed check.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgebraArg {
    #[value(name = "f")]
    Quotient,
    #[value(name = "F")]
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModuleArg {
    Verma,
    Irreducible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FaultArg {
    CoactionSign,
}

#[derive(Args, Debug)]
struct Opts {
    /// Preset name (A1, A1xA1, A2, A3, B2, G2) or path to a JSON Cartan file.
    #[arg(long, global = true, default_value = "A1")]
    cartan: String,
    /// Order of the root of unity ζ.
    #[arg(long, global = true, default_value_t = 5, conflicts_with = "generic")]
    l: u32,
    /// Work over ℚ[q, q⁻¹] instead of ℚ(ζ_l).
    #[arg(long, global = true)]
    generic: bool,
    /// Highest weight a,b,... (repeatable).
    #[arg(long = "weight", global = true, allow_hyphen_values = true)]
    weights: Vec<String>,
    /// A single multidegree a,b,...
    #[arg(long, global = true)]
    nu: Option<String>,
    #[arg(long, global = true, default_value_t = 4)]
    depth_max: usize,
    #[arg(long, global = true, value_enum, default_value = "f")]
    algebra: AlgebraArg,
    /// Module factors; `verma` only pairs with `--algebra F`.
    #[arg(long, global = true, value_enum, default_value = "irreducible")]
    module: ModuleArg,
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, hide = true)]
    inject_fault: Option<FaultArg>,
}

fn build_config(opts: &Opts) -> Result<RunConfig> {
    let (cartan, cartan_label) = load_cartan(&opts.cartan)?;
    let rank = cartan.rank();
    let scalars = if opts.generic { Scalars::Generic } else { Scalars::Root(opts.l) };
    if opts.l == 0 {
        return Err(config_error("--l must be positive"));
    }
    let weights = opts.weights.iter().map(|w| parse_weight(w, rank)).collect::<Result<Vec<_>>>()?;
    let nu = opts.nu.as_deref().map(|s| parse_nu(s, rank)).transpose()?;
    Ok(RunConfig {
        cartan,
        cartan_label,
        scalars,
        weights,
        nu,
        depth_max: opts.depth_max,
        algebra: match opts.algebra {
            AlgebraArg::Free => AlgebraKind::Free,
            AlgebraArg::Quotient => AlgebraKind::Quotient,
        },
        module: match opts.module {
            ModuleArg::Verma => ModuleKind::Verma,
            ModuleArg::Irreducible => ModuleKind::Irreducible,
        },
        fault: opts.inject_fault.map(|FaultArg::CoactionSign| Fault::CoactionSign),
    })
}

/// The table and whether every check in it passed.
fn execute<R: ScalarRing>(command: &Command, cfg: &RunConfig, ring: R) -> Result<(Table, bool)> {
    let alg = FreeAlgebra::new(ring, cfg.cartan.clone());
    match command {
        Command::Dims => {
            if let Scalars::Root(_) = cfg.scalars {
                cfg.require_quotient_root()?;
            }
            Ok((commands::dims(cfg, &alg)?, true))
        }
        Command::Gram => Ok((commands::gram_table(cfg, &alg)?, true)),
        Command::Shapovalov => Ok((commands::shapovalov(cfg, &alg)?, true)),
        Command::Hochschild => Ok((commands::hochschild(cfg, &alg)?, true)),
        Command::Verify { suite } => {
            let results = suites::run(*suite, cfg, &alg)?;
            let mut table = Table::new(&["suite", "check", "passed", "counterexample"]);
            let ok = results.iter().all(|(_, r)| r.passed);
            for (s, r) in results {
                table.push(vec![json!(s.name()), json!(r.label), json!(r.passed), json!(r.counterexample)]);
            }
            Ok((table, ok))
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Dims => "dims",
        Command::Gram => "gram",
        Command::Shapovalov => "shapovalov",
        Command::Hochschild => "hochschild",
        Command::Verify { .. } => "verify",
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<ConfigError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<qshap_core::Error>() {
        Some(
            qshap_core::Error::MatrixTooLarge { .. }
            | qshap_core::Error::WindowExceeded { .. }
            | qshap_core::Error::PermutationEnumerationTooLarge { .. },
        ) => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let cfg = build_config(&cli.opts)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.opts.jobs {
        if j == 0 {
            return Err(config_error("--jobs must be positive"));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool.build()?;
    let (table, ok) = pool.install(|| match cfg.scalars {
        Scalars::Root(l) => {
            let ring = CyclotomicField::new(l).map_err(|e| config_error(e.to_string()))?;
            execute(&cli.command, &cfg, ring)
        }
        Scalars::Generic => execute(&cli.command, &cfg, LaurentRing),
    })?;
    let mut meta = cfg.meta(command_name(&cli.command));
    if let Command::Verify { suite } = &cli.command {
        meta["suite"] = json!(suite.name());
    }
    print!("{}", table.render(cli.opts.format, meta)?);
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("qshap: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
