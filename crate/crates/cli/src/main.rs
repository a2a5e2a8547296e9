mod commands;
mod json;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::{digest, Failure, RunReport, EXIT_OK};

#[derive(Parser)]
#[command(name = "hyperinv", version, about = "Dihedral invariants and automorphism groups of hyperelliptic curves")]
struct Cli {
    /// Emit JSON (the only output format).
    #[arg(long, global = true, default_value_t = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Automorphism group label, invariants and flags of a curve.
    Classify { file: PathBuf },
    /// Dihedral invariants of a curve and the two locus factors.
    Invariants { file: PathBuf },
    /// The even model `Y^2 = Σ b_i X^{2i}` attached to the selected involution.
    NormalForm { file: PathBuf },
    /// A model over the field of moduli for a point on the locus.
    RationalModel {
        #[arg(long)]
        genus: usize,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
    },
    /// Whether a Möbius map is an automorphism of the curve.
    CheckMap {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        map: String,
    },
    /// Numerical reduced automorphism group.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Possible orders of reduced automorphisms in genus `g`.
    Candidates {
        #[arg(long)]
        genus: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Invariants { .. } => "invariants",
            Command::NormalForm { .. } => "normal-form",
            Command::RationalModel { .. } => "rational-model",
            Command::CheckMap { .. } => "check-map",
            Command::Oracle { .. } => "oracle",
            Command::Candidates { .. } => "candidates",
        }
    }

    fn file(&self) -> Option<&PathBuf> {
        match self {
            Command::Classify { file }
            | Command::Invariants { file }
            | Command::NormalForm { file }
            | Command::CheckMap { file, .. }
            | Command::Oracle { file, .. } => Some(file),
            Command::RationalModel { .. } | Command::Candidates { .. } => None,
        }
    }
}

fn emit(value: serde_json::Value, code: i32) -> ExitCode {
    println!("{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
            let failure = Failure::invalid_argument(message);
            let args: Vec<String> = std::env::args().skip(1).collect();
            return emit(failure.to_json("", &digest(args.join(" ").as_bytes())), failure.code);
        }
    };
    let name = cli.command.name();

    let (input, input_digest) = match cli.command.file() {
        Some(path) => match std::fs::read(path) {
            Ok(bytes) => {
                let d = digest(&bytes);
                match String::from_utf8(bytes) {
                    Ok(text) => (Some(text), d),
                    Err(_) => {
                        let f = Failure::malformed("input is not UTF-8".into());
                        return emit(f.to_json(name, &d), f.code);
                    }
                }
            }
            Err(e) => {
                let f = Failure::unreadable(format!("{}: {e}", path.display()));
                return emit(f.to_json(name, ""), f.code);
            }
        },
        None => {
            let args: Vec<String> = std::env::args().skip(1).collect();
            (None, digest(args.join(" ").as_bytes()))
        }
    };

    match commands::run(&cli.command, input.as_deref()) {
        Ok((result, flags)) => {
            let report = RunReport { command: name.into(), input_digest, result, flags };
            emit(report.to_json(), EXIT_OK)
        }
        Err(f) => emit(f.to_json(name, &input_digest), f.code),
    }
}
