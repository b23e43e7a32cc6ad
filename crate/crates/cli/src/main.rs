//! `divgraph`: classify elements, enumerate factorizations, draw divisor
//! graphs, report ring properties and verify the theorems over a corpus.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use divgraph_core::harness::{run_suite, Corpus, SuiteConfig};
use divgraph_core::report::{self, to_pretty, with_schema};
use divgraph_core::{
    AssocKind, AtomKind, BuildOptions, ElementScope, EnumOptions, Error, Lab, PropertyReport,
};
use serde_json::json;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "divgraph",
    version,
    about = "Irreducible divisor graphs of finite commutative rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify elements as prime / irreducible / strongly / m- / very strongly irreducible.
    Classify {
        #[command(flatten)]
        ring: RingArgs,
        /// Only this element (default: every element).
        #[arg(long)]
        x: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Enumerate the factorizations of an element up to rearrangement and beta.
    Factor {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        x: String,
        #[command(flatten)]
        kinds: KindArgs,
        /// Longest factorization listed.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        cap: u64,
        /// Stop after this many factorizations.
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build the alpha-beta divisor graph of an element.
    Graph {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        x: String,
        #[command(flatten)]
        kinds: KindArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Ring-level factorization properties with witnesses.
    Props {
        #[command(flatten)]
        ring: RingArgs,
        /// Also report every verdict with zero in scope.
        #[arg(long)]
        include_zero: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check every theorem over a corpus of rings; exits 0 iff all pass.
    Verify {
        /// Corpus file, one ring spec per line (default: $DIVGRAPH_CORPUS, else the built-in corpus).
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Run only these theorem ids (repeatable or comma separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Put zero in scope; failures caused only by zero are reported as scope breaks.
        #[arg(long)]
        include_zero: bool,
        /// Worker threads (0 = one per CPU).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Largest ring the corpus may contain.
        #[arg(long, default_value_t = BuildOptions::default().max_size)]
        max_size: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct RingArgs {
    /// Ring spec, e.g. "Zmod(12)", "Prod(Zmod(2),Zmod(4))", "PolyQ(Zmod(2),x^3)" or "Table(path.json)".
    #[arg(long)]
    ring: String,
    /// Largest ring size accepted.
    #[arg(long, default_value_t = BuildOptions::default().max_size)]
    max_size: usize,
}

#[derive(Args, Debug)]
struct KindArgs {
    /// Atom notion: none, prime, irr, s-irr, m-irr, vs-irr.
    #[arg(long, default_value = "irr")]
    alpha: AtomKind,
    /// Associate relation: none, assoc, s-assoc, vs-assoc.
    #[arg(long, default_value = "assoc")]
    beta: AssocKind,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

/// A failed invocation and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) => EXIT_DOMAIN,
            Error::Parse { .. }
            | Error::NonMonic(_)
            | Error::SizeOverflow { .. }
            | Error::InvalidArgument(_)
            | Error::UnknownVertex(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn lab(args: &RingArgs) -> Result<Lab, Failure> {
    let opts = BuildOptions {
        max_size: args.max_size,
        ..BuildOptions::default()
    };
    Ok(Lab::build(&args.ring, &opts)?)
}

fn no_dot(out: &OutputArgs, command: &str) -> Result<(), Failure> {
    if out.format == Format::Dot {
        return Err(usage(format!(
            "--format dot is only available for graph, not {command}"
        )));
    }
    Ok(())
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure {
            code: EXIT_FAILURE,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs one command; `Ok(false)` means it ran but something failed to verify.
fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Classify { ring, x, out } => {
            no_dot(&out, "classify")?;
            let lab = lab(&ring)?;
            let elements = match x {
                Some(x) => vec![lab.element(&x)?],
                None => Vec::new(),
            };
            let text = match out.format {
                Format::Json => to_pretty(&report::classify_json(&lab, &elements)?),
                _ => report::classify_text(&lab, &elements)?,
            };
            emit(&out, &text)?;
        }
        Command::Factor {
            ring,
            x,
            kinds,
            cap,
            limit,
            out,
        } => {
            no_dot(&out, "factor")?;
            let lab = lab(&ring)?;
            let x = lab.element(&x)?;
            let cap = usize::try_from(cap).map_err(|_| usage("--cap is too large"))?;
            let e = lab.enumerate(x, kinds.alpha, kinds.beta, EnumOptions { cap, limit })?;
            let text = match out.format {
                Format::Json => to_pretty(&report::factor_json(&lab, x, cap, &e)),
                _ => report::factor_text(&lab, x, cap, &e),
            };
            emit(&out, &text)?;
        }
        Command::Graph {
            ring,
            x,
            kinds,
            out,
        } => {
            let lab = lab(&ring)?;
            let x = lab.element(&x)?;
            let g = lab.graph(x, kinds.alpha, kinds.beta)?;
            let text = match out.format {
                Format::Dot => g.to_dot(),
                Format::Json => to_pretty(&report::graph_json(&g)),
                Format::Text => report::graph_text(&g),
            };
            emit(&out, &text)?;
        }
        Command::Props {
            ring,
            include_zero,
            out,
        } => {
            no_dot(&out, "props")?;
            let lab = lab(&ring)?;
            let mut reports = vec![PropertyReport::compute(&lab, ElementScope::Nonzero)?];
            if include_zero {
                reports.push(PropertyReport::compute(&lab, ElementScope::All)?);
            }
            let text = match out.format {
                Format::Json if reports.len() == 1 => to_pretty(&report::props_json(&reports[0])),
                Format::Json => to_pretty(&with_schema(
                    "props",
                    json!({ "scopes": reports.iter().map(PropertyReport::to_json).collect::<Vec<_>>() }),
                )),
                _ => reports
                    .iter()
                    .map(PropertyReport::render_text)
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(&out, &text)?;
        }
        Command::Verify {
            corpus,
            only,
            include_zero,
            jobs,
            max_size,
            out,
        } => {
            no_dot(&out, "verify")?;
            let corpus = match corpus {
                Some(path) => Corpus::from_file(&path)?,
                None => Corpus::from_env()?,
            };
            let config = SuiteConfig {
                include_zero,
                jobs,
                only: (!only.is_empty()).then_some(only),
                build: BuildOptions {
                    max_size,
                    ..BuildOptions::default()
                },
            };
            let suite = run_suite(&corpus, &config)?;
            let text = match out.format {
                Format::Json => to_pretty(&suite.to_json()),
                _ => suite.render_text(),
            };
            emit(&out, &text)?;
            return Ok(suite.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILURE),
        Err(f) => {
            eprintln!("divgraph: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
