//! `bdl`: braid dilatation lower bounds from exact representation matrices.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bdl_core::report::render;
use bdl_core::report::zeta_summary;
use bdl_core::{
    analyze, rep_matrix, run_suite, zeta1_trace_data, AnalyzeOptions, BraidWord, Error, RepKind,
    Suite, DEFAULT_TERM_CAP,
};

const EXIT_OK: u8 = 0;
const EXIT_PARSE: u8 = 2;
const EXIT_NOT_APPLICABLE: u8 = 3;
const EXIT_RESOURCE: u8 = 4;
const EXIT_CHECK_FAILED: u8 = 5;

#[derive(Parser)]
#[command(
    name = "bdl",
    about = "Exact braid representation matrices and pseudo-Anosov dilatation lower bounds",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct WordArgs {
    /// Strand count n >= 2.
    #[arg(long)]
    n: usize,
    /// Braid word as comma-separated signed generator indices, e.g. "1,-2".
    /// The empty string is the identity braid.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the representation matrix of a braid (optionally of its k-th
    /// power).
    Rep {
        /// Representation: burau | lkb | fox.
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        word: WordArgs,
        /// Power of the braid to represent.
        #[arg(long, default_value_t = 1)]
        k: i64,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
    },
    /// Dilatation lower bounds with sharpness diagnostics (JSON report).
    Bound {
        #[command(flatten)]
        word: WordArgs,
        /// Base torus grid per variable.
        #[arg(long, default_value_t = 256)]
        grid: u32,
        /// Local refinement rounds around the incumbent.
        #[arg(long, default_value_t = 3)]
        refine: u32,
        /// Largest power for the trace-growth stage.
        #[arg(long, default_value_t = 10)]
        kmax: u64,
        /// Include the group-ring trace-growth stage.
        #[arg(long)]
        zeta1: bool,
        /// Include the two-variable representation bound.
        #[arg(long)]
        lkb: bool,
        /// Include wall-clock timings (breaks byte-reproducibility).
        #[arg(long)]
        timings: bool,
    },
    /// Trace-growth sequences of iterated powers.
    Growth {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        kmax: u64,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
    },
    /// Run a deterministic invariant suite: relations | lemmas | theorem1 |
    /// all.
    Check {
        #[arg(long)]
        suite: String,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::GeneratorRange { .. } => EXIT_PARSE,
        Error::NotApplicable(_) => EXIT_NOT_APPLICABLE,
        Error::ResourceGuard { .. } => EXIT_RESOURCE,
        _ => 1,
    }
}

/// `BDL_THREADS` caps worker threads; results do not depend on it.
fn init_thread_pool() {
    if let Ok(v) = std::env::var("BDL_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Rep { kind, word, k, out } => {
            let kind = RepKind::parse(&kind)?;
            let b = BraidWord::parse(&word.word, word.n)?.power(k);
            let bundle = rep_matrix(kind, &b)?;
            match out {
                OutFormat::Json => print!("{}", render::rep_json(&bundle, k)),
                OutFormat::Csv => print!("{}", render::rep_csv(&bundle)),
            }
            Ok(EXIT_OK)
        }
        Command::Bound {
            word,
            grid,
            refine,
            kmax,
            zeta1,
            lkb,
            timings,
        } => {
            let b = BraidWord::parse(&word.word, word.n)?;
            let opts = AnalyzeOptions {
                grid,
                refine,
                kmax,
                with_zeta1: zeta1,
                with_lkb: lkb,
                with_timings: timings,
                term_cap: DEFAULT_TERM_CAP,
            };
            let report = analyze(&b, &opts)?;
            print!("{}", render::bound_report_json(&report));
            Ok(if report.guard_tripped {
                EXIT_RESOURCE
            } else {
                EXIT_OK
            })
        }
        Command::Growth { word, kmax, out } => {
            let b = BraidWord::parse(&word.word, word.n)?;
            match out {
                OutFormat::Json => {
                    let summary = zeta_summary(&b, kmax, DEFAULT_TERM_CAP)?;
                    print!("{}", render::growth_json(&b.to_text(), b.n(), &summary)?);
                }
                OutFormat::Csv => {
                    let points = zeta1_trace_data(&b, kmax, DEFAULT_TERM_CAP)?;
                    print!("{}", render::growth_csv(&points));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check { suite } => {
            let suite = Suite::parse(&suite)?;
            let report = run_suite(suite);
            for c in &report.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                println!("[{tag}] {}: {}", c.name, c.detail);
            }
            println!(
                "suite {}: {} ({} checks)",
                report.suite,
                if report.passed { "PASS" } else { "FAIL" },
                report.checks.len()
            );
            Ok(if report.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
    }
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
