use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use coxlab::error::Error;
use coxlab::rootdata::{parse_label, Isogeny, Series};
use coxlab_cli::commands;
use coxlab_cli::report::RunReport;

#[derive(Parser)]
#[command(name = "coxlab", version, about = "root data, Weyl groups, and their finite models")]
struct Cli {
    /// write the JSON report to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// seed shared by every randomized check
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// print elapsed wall-clock time to stderr; never part of the report
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct TypeArgs {
    /// full label ("A2", "g2") or a series letter combined with --rank
    #[arg(long = "type")]
    ty: String,
    #[arg(long)]
    rank: Option<usize>,
    /// lattice convention: "sc" or "ad"
    #[arg(long, default_value = "sc")]
    isogeny: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root counts, double duality, and the coinvariant order of a Coxeter element
    Rootdata {
        #[command(flatten)]
        ty: TypeArgs,
        /// also report whether this characteristic is very good
        #[arg(long)]
        l: Option<u64>,
    },
    /// Weyl group enumeration, longest element, Coxeter order, torsion eigenspaces
    Weyl {
        #[command(flatten)]
        ty: TypeArgs,
        /// torsion order for the eigenspace computation (needs --q)
        #[arg(long)]
        t: Option<u64>,
        /// eigenvalue for the eigenspace computation (needs --t)
        #[arg(long)]
        q: Option<u64>,
    },
    /// Integral Lie algebra basis: dimension, antisymmetry, the Jacobi identity
    Chevalley {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Cohomology of SL2 over F_{l^m} acting on its adjoint module
    Cohomology {
        #[arg(long)]
        l: u64,
        /// extension degree of the coefficient field
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// The torus-normalizer homomorphism: definition, adjoint decomposition, abundance
    Coxeter {
        #[command(flatten)]
        ty: TypeArgs,
        /// size parameter whose order mod t is the Coxeter number
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// coefficient characteristic
        #[arg(long)]
        l: u64,
        /// torsion prime; chosen automatically when omitted
        #[arg(long)]
        t: Option<u64>,
    },
    /// Trace-table bucketing versus conjugacy for small groups in SL2
    Pseudochar {
        #[arg(long, default_value_t = 13)]
        l: u64,
    },
    /// Irreducible character data for a highest weight
    Char {
        #[command(flatten)]
        ty: TypeArgs,
        /// comma-separated coordinates in the fundamental-weight basis
        #[arg(long)]
        weight: String,
        /// comma-separated simple nodes to restrict to
        #[arg(long)]
        levi: Option<String>,
    },
    /// Bernstein-presented Hecke algebra: mul, assoc, center, degenerate, projector
    Hecke {
        /// one of: mul, assoc, center, degenerate, projector
        action: String,
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// element pair {"a":{"terms":[...]},"b":{"terms":[...]}} for mul
        #[arg(long)]
        json: Option<String>,
        /// coefficient characteristic for the projector model
        #[arg(long)]
        l: Option<u64>,
        /// torsion order for the projector model
        #[arg(long)]
        t: Option<u64>,
        /// lattice weight: orbit sum for center, character exponent for projector
        #[arg(long)]
        weight: Option<String>,
    },
    /// Run the named acceptance suite, or all of them
    Acceptance {
        #[arg(long)]
        suite: Option<String>,
    },
}

fn parse_type(ty: &str, rank: Option<usize>) -> Result<(Series, usize), Error> {
    if let Ok((s, r)) = parse_label(ty) {
        if let Some(rk) = rank {
            if rk != r {
                return Err(Error::usage(format!("--rank {rk} conflicts with type {ty:?}")));
            }
        }
        return Ok((s, r));
    }
    match rank {
        Some(r) => parse_label(&format!("{ty}{r}")),
        None => Err(Error::usage(format!("type {ty:?} needs --rank"))),
    }
}

fn resolve(ta: &TypeArgs) -> Result<(Series, usize, Isogeny), Error> {
    let iso = match ta.isogeny.as_str() {
        "sc" => Isogeny::Sc,
        "ad" => Isogeny::Ad,
        other => {
            return Err(Error::usage(format!(
                "unknown isogeny {other:?}; expected sc or ad"
            )))
        }
    };
    let (s, r) = parse_type(&ta.ty, ta.rank)?;
    Ok((s, r, iso))
}

fn parse_i64s(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::usage(format!("bad integer {p:?}")))
        })
        .collect()
}

fn parse_usizes(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::usage(format!("bad index {p:?}")))
        })
        .collect()
}

fn run(cli: &Cli) -> Result<RunReport, Error> {
    match &cli.cmd {
        Cmd::Rootdata { ty, l } => {
            let (s, r, iso) = resolve(ty)?;
            commands::cmd_rootdata(s, r, iso, *l)
        }
        Cmd::Weyl { ty, t, q } => {
            let (s, r, iso) = resolve(ty)?;
            commands::cmd_weyl(s, r, iso, *t, *q)
        }
        Cmd::Chevalley { ty } => {
            let (s, r, iso) = resolve(ty)?;
            commands::cmd_chevalley(s, r, iso)
        }
        Cmd::Cohomology { l, m } => commands::cmd_cohomology(*l, *m),
        Cmd::Coxeter { ty, q, l, t } => {
            let (s, r, _) = resolve(ty)?;
            commands::cmd_coxeter(s, r, *q, *l, *t, cli.seed)
        }
        Cmd::Pseudochar { l } => commands::cmd_pseudochar(*l, cli.seed),
        Cmd::Char { ty, weight, levi } => {
            let (s, r, _) = resolve(ty)?;
            let w = parse_i64s(weight)?;
            let nodes = levi.as_deref().map(parse_usizes).transpose()?;
            commands::cmd_char(s, r, &w, nodes.as_deref())
        }
        Cmd::Hecke {
            action,
            ty,
            samples,
            json,
            l,
            t,
            weight,
        } => {
            let (s, r, _) = resolve(ty)?;
            let w = weight.as_deref().map(parse_i64s).transpose()?;
            commands::cmd_hecke(
                action,
                s,
                r,
                *samples,
                cli.seed,
                json.as_deref(),
                *l,
                *t,
                w.as_deref(),
            )
        }
        Cmd::Acceptance { suite } => commands::cmd_acceptance(suite.as_deref(), cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(report) => {
            let json = report.to_json();
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &json) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(3);
                }
            } else {
                print!("{json}");
            }
            if cli.timing {
                eprintln!("elapsed: {:?}", start.elapsed());
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
