use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use projinv::campaign::{run_campaign, CampaignConfig, RingChoice};
use projinv::commands::{
    compute_inverse, counterexample_evidence, enumerate_listing, EnumerateWhat, InverseKind, InverseOutcome,
};
use projinv::{AnyMatrix, TheoremId};

#[derive(Parser)]
#[command(name = "projinv", version, about = "Exact generalized inverses of projection expressions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone)]
struct TheoremList(Vec<TheoremId>);

impl FromStr for TheoremList {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        TheoremId::parse_list(s).map(TheoremList)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run theorem batteries over generated projection pairs.
    Verify {
        /// q, qi, gf:<p> or example26
        #[arg(long, default_value = "q")]
        ring: RingChoice,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `all` or a comma-separated list such as thm24,cor25
        #[arg(long, default_value = "all")]
        theorems: TheoremList,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Compute an MP, Drazin or group inverse of a matrix file.
    Inverse {
        /// mp, drazin or group
        #[arg(long)]
        kind: InverseKind,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the non-star-reducing counterexample.
    Counterexample {
        #[arg(long)]
        json: bool,
    },
    /// List the projections or MP-invertible elements of a finite ring.
    Enumerate {
        /// example26 or gf:<p>
        #[arg(long)]
        ring: RingChoice,
        /// matrix size for gf:<p>
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// projections or mp-invertible
        #[arg(long)]
        what: EnumerateWhat,
    },
}

const USAGE: u8 = 2;

fn emit(out: Option<&Path>, text: &str) -> Result<(), ExitCode> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            ExitCode::from(USAGE)
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(cfg: CampaignConfig, out: Option<&Path>, format: ReportFormat) -> Result<ExitCode, ExitCode> {
    let report = run_campaign(&cfg).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(USAGE)
    })?;
    let text = match format {
        ReportFormat::Json => report.to_json() + "\n",
        ReportFormat::Csv => report.to_csv().map_err(|e| {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        })?,
    };
    emit(out, &text)?;
    for (id, a) in &report.aggregates {
        eprintln!(
            "{id:<9} checked {:>6}  passed {:>6}  failed {:>6}  not applicable {:>6}",
            a.checked, a.passed, a.failed, a.not_applicable
        );
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}

fn inverse(kind: InverseKind, input: &Path, out: Option<&Path>) -> Result<ExitCode, ExitCode> {
    let text = fs::read_to_string(input).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", input.display());
        ExitCode::from(USAGE)
    })?;
    let m = AnyMatrix::parse(&text).map_err(|e| {
        eprintln!("{}: {e}", input.display());
        ExitCode::from(USAGE)
    })?;
    match compute_inverse(kind, &m) {
        Ok(InverseOutcome::Found { inverse, index }) => {
            if let Some(k) = index {
                eprintln!("index {k}");
            }
            emit(out, &inverse.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Ok(InverseOutcome::NotInvertible(reason)) => {
            println!("{}", serde_json::to_string(&reason).expect("reason serializes"));
            Ok(ExitCode::from(1))
        }
        Err(e) => {
            eprintln!("error: {e}");
            Err(ExitCode::from(USAGE))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { ring, n, trials, seed, theorems, out, format } => {
            let cfg = CampaignConfig { ring, n, trials, seed, theorems: theorems.0 };
            verify(cfg, out.as_deref(), format)
        }
        Command::Inverse { kind, input, out } => inverse(kind, &input, out.as_deref()),
        Command::Counterexample { json } => {
            let evidence = counterexample_evidence();
            if json {
                println!("{}", serde_json::to_string_pretty(&evidence).expect("evidence serializes"));
            } else {
                print!("{}", evidence.to_text());
            }
            Ok(if evidence.reproduced { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Enumerate { ring, n, what } => match enumerate_listing(&ring, n, what) {
            Ok(items) => {
                for item in items {
                    println!("{item}");
                }
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => {
                eprintln!("error: {e}");
                Err(ExitCode::from(USAGE))
            }
        },
    };
    result.unwrap_or_else(|code| code)
}
