use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qtwist::twist::{
    build_f1, build_f2, build_f3, build_full, r_esoteric, r_standard_direct, r_standard_factorized, RootOrder,
};
use qtwist::verify::{reports_to_json, run_checks, CheckKind, RunOptions};
use qtwist::{Assignment, FieldElem, Rep, Symbolic, TwistParams};

#[derive(Parser)]
#[command(
    name = "qtwist",
    version,
    about = "Exact twisted gl(2N+1) R-matrices and their identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a matrix or twist as JSON.
    #[command(subcommand)]
    Gen(Gen),
    /// Run identity checks; exit 0 iff all pass.
    Check(CheckArgs),
}

#[derive(Subcommand)]
enum Gen {
    /// Standard R-matrix of gl(n).
    Rs {
        #[arg(long = "n")]
        n: usize,
        /// Build as the ordered root product (verified against the direct form).
        #[arg(long)]
        factorized: bool,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Twisted R-matrix of gl(2N+1).
    Rfg {
        #[arg(long = "N", value_name = "N")]
        big_n: usize,
        /// JSON object of parameter values to substitute (any subset).
        #[arg(long)]
        params: Option<PathBuf>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// A stage of the twist, or the full product.
    Twist {
        #[arg(long = "N", value_name = "N")]
        big_n: usize,
        #[arg(long, value_enum)]
        stage: Stage,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Ybe,
    Cocycle,
    Factorization,
    Hecke,
    Intertwine,
    CompareCg,
    ParamCount,
    Rll,
    All,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum, required = true)]
    which: Vec<Which>,
    #[arg(long = "N", value_name = "N")]
    big_n: usize,
    /// Evaluate at this point (JSON object of rational strings).
    #[arg(long, conflicts_with = "symbolic")]
    numeric: Option<PathBuf>,
    /// Evaluate symbolically even where the default is numeric.
    #[arg(long)]
    symbolic: bool,
    /// Write the reports as a JSON array.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Root order of the second twist stage (reverse-lex is a negative control).
    #[arg(long = "f2-order", value_enum, default_value = "lex")]
    f2_order: Order,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    ReverseLex,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Gen(g) => generate(g).map(|()| true),
        Command::Check(c) => check(c),
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(text: String, output: Option<PathBuf>) -> Result<(), String> {
    match output {
        Some(path) => fs::write(&path, text + "\n").map_err(|e| format!("{}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn generate(g: Gen) -> Result<(), String> {
    let err = |e: qtwist::Error| e.to_string();
    match g {
        Gen::Rs { n, factorized, output } => {
            let rep = Rep::new(n, Symbolic).map_err(err)?;
            let r = if factorized {
                r_standard_factorized(&rep)
            } else {
                r_standard_direct(&rep)
            }
            .map_err(err)?;
            emit(r.to_json_string(), output)
        }
        Gen::Rfg { big_n, params, output } => {
            let p = TwistParams::new(big_n).map_err(err)?;
            let rep = Rep::new(p.n(), Symbolic).map_err(err)?;
            let mut r = r_esoteric(&rep, &p).map_err(err)?;
            if let Some(path) = params {
                let point = Assignment::from_json(&read(&path)?).map_err(err)?;
                let map: BTreeMap<_, _> = point
                    .iter()
                    .map(|(v, x)| {
                        (
                            *v,
                            FieldElem::from_poly(qtwist::field::LaurentPoly::constant(x.clone())),
                        )
                    })
                    .collect();
                r = r.map(|x| x.compose(&map)).map_err(err)?;
            }
            emit(r.to_json_string(), output)
        }
        Gen::Twist { big_n, stage, output } => {
            let p = TwistParams::new(big_n).map_err(err)?;
            let f = match stage {
                Stage::One => build_f1(&p),
                Stage::Two => build_f2(&p, RootOrder::Lex),
                Stage::Three => build_f3(&p),
                Stage::All => build_full(&p),
            };
            emit(f.to_json_string(), output)
        }
    }
}

fn check(c: CheckArgs) -> Result<bool, String> {
    let mut kinds: Vec<CheckKind> = Vec::new();
    for w in &c.which {
        let add: Vec<CheckKind> = match w {
            Which::All => CheckKind::ALL
                .into_iter()
                .filter(|k| c.big_n == 1 || *k != CheckKind::CompareCg)
                .collect(),
            Which::Ybe => vec![CheckKind::Ybe],
            Which::Cocycle => vec![CheckKind::Cocycle],
            Which::Factorization => vec![CheckKind::Factorization],
            Which::Hecke => vec![CheckKind::Hecke],
            Which::Intertwine => vec![CheckKind::Intertwine],
            Which::CompareCg => vec![CheckKind::CompareCg],
            Which::ParamCount => vec![CheckKind::ParamCount],
            Which::Rll => vec![CheckKind::Rll],
        };
        kinds.extend(add);
    }
    kinds.sort();
    kinds.dedup();

    let mut opts = RunOptions::new(c.big_n);
    opts.symbolic = c.symbolic;
    opts.order = match c.f2_order {
        Order::Lex => RootOrder::Lex,
        Order::ReverseLex => RootOrder::ReverseLex,
    };
    if let Some(path) = &c.numeric {
        opts.numeric = Some(Assignment::from_json(&read(path)?).map_err(|e| e.to_string())?);
    }
    let reports = run_checks(&kinds, &opts).map_err(|e| e.to_string())?;
    for r in &reports {
        println!("{r}");
    }
    if let Some(path) = c.report {
        fs::write(&path, reports_to_json(&reports) + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(reports.iter().all(|r| r.pass()))
}
