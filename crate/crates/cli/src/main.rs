//! `interval-complex`: build, check and recognize interval-type complexes from graph files.
//!
//! Exit codes: 0 = answer true / suite passed, 1 = answer false / suite failed,
//! 2 = input error, 3 = size guard refused, 4 = internal theorem violation.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use interval_complex::Error;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "interval-complex", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for verification suites (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build Δ_d(G), the facets of Ind_d(G), or its faces of one size.
    Build(BuildArgs),
    /// Evaluate a predicate on a complex under a labeling.
    Check(CheckArgs),
    /// Search for a labeling or representation of a graph class.
    Recognize(RecognizeArgs),
    /// Look for long induced cycles, d-claws and d-paws.
    Forbidden(ForbiddenArgs),
    /// Test whether Ind_d(G) is sortable.
    Sortable(SortableArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BuildTarget {
    Delta,
    IndFacets,
    IndFaces,
}

#[derive(Args, Debug)]
struct BuildArgs {
    /// Graph file (`n <count>` then one `u v` edge per line).
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, short)]
    d: usize,
    #[arg(long, value_enum, default_value_t = BuildTarget::Delta)]
    target: BuildTarget,
    /// Face size for `ind-faces`.
    #[arg(long, short)]
    t: Option<usize>,
    /// Write the text output here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Complex file (`n <count> d <dim>` then one facet per line).
    #[arg(long)]
    complex: PathBuf,
    /// One of under-closed-def, under-closed, unit-interval, cond2, cond3,
    /// condition-star, chordal-complex.
    #[arg(long)]
    predicate: String,
    /// Labeling as `L(1),L(2),...`; identity when omitted.
    #[arg(long, conflicts_with = "certificate")]
    labeling: Option<String>,
    /// JSON output of `recognize`; its labeling (and representation, if any) are checked.
    #[arg(long)]
    certificate: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RecognizeArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, short)]
    d: usize,
    /// One of under_closed, unit_interval, strong_interval, strong_unit,
    /// strong_proper, condition_star.
    #[arg(long)]
    class: String,
    /// Largest vertex count for labeling search.
    #[arg(long, default_value_t = 9)]
    max_n: usize,
    /// Largest vertex count for the endpoint-order search.
    #[arg(long, default_value_t = 5)]
    max_strong_n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Cycle,
    Claw,
    Paw,
}

#[derive(Args, Debug)]
struct ForbiddenArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, short)]
    d: usize,
    /// Patterns to look for; all when omitted.
    #[arg(long, value_enum, value_delimiter = ',')]
    kinds: Vec<Kind>,
}

#[derive(Args, Debug)]
struct SortableArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, short)]
    d: usize,
    /// Labeling as `L(1),L(2),...`; identity when omitted.
    #[arg(long, conflicts_with = "search")]
    labeling: Option<String>,
    /// Try every labeling and report the first that works.
    #[arg(long)]
    search: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long)]
    suite: String,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    d_min: Option<usize>,
    #[arg(long)]
    d_max: Option<usize>,
    /// Enumerate labeled graphs up to this size, isomorphism classes above.
    #[arg(long)]
    labeled_up_to: Option<usize>,
    /// Seed for sampled suites (required by CORONA).
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Swap in a deliberately broken under-closed predicate.
    #[arg(long)]
    mutate: bool,
    /// Stored failures to print per suite in text mode.
    #[arg(long, default_value_t = 3)]
    show: usize,
}

/// Rendered result of one command.
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Guard { .. } => 3,
        Error::TheoremViolation(_) => 4,
        Error::InvalidInput(_) | Error::Parse { .. } | Error::UnknownSuite(_) => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid_input",
        Error::Parse { .. } => "parse",
        Error::Guard { .. } => "guard",
        Error::TheoremViolation(_) => "theorem_violation",
        Error::UnknownSuite(_) => "unknown_suite",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let result = match &cli.command {
        Command::Build(a) => commands::build(a),
        Command::Check(a) => commands::check(a),
        Command::Recognize(a) => commands::recognize(a),
        Command::Forbidden(a) => commands::forbidden(a),
        Command::Sortable(a) => commands::sortable(a),
        Command::Verify(a) => commands::verify(a),
    };
    match result {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => {
                    let mut v = out.json;
                    if let Value::Object(m) = &mut v {
                        m.insert("schema".into(), json!(1));
                    }
                    println!("{}", serde_json::to_string_pretty(&v).expect("json"));
                }
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if cli.format == Format::Json {
                let v = json!({"schema": 1, "error": {"kind": error_kind(&e), "message": e.to_string()}});
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
