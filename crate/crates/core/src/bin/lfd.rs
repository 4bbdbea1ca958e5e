//! Command-line entry point: prove an agent network's query via lemma
//! flow, emit its diagram as DOT, or check and plan it without proving.
//!
//! Exit codes: 0 on success (and overall proved for `prove`), 1 on input
//! or validation errors, 2 when proving ran but did not succeed.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use lemmaflow::diagram::{build_diagram, emit_dot};
use lemmaflow::flow::{discharge, plan};
use lemmaflow::parse::parse_network;
use lemmaflow::prover::ResourceLimits;

#[derive(Parser)]
#[command(name = "lfd", version, about = "lemma-flow theorem proving over agent networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum TraceMode {
    #[default]
    Summary,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Prove the query: discharge every lemma at its provider, then the goal
    Prove {
        /// Agent network file
        input: PathBuf,
        /// Maximum kept clauses per proof task
        #[arg(long)]
        max_clauses: Option<usize>,
        /// Maximum inference depth per proof task
        #[arg(long)]
        max_depth: Option<usize>,
        /// Wall-clock budget per proof task, in milliseconds
        #[arg(long)]
        timeout_ms: Option<u64>,
        /// Report verbosity
        #[arg(long, value_enum, default_value_t = TraceMode::Summary)]
        trace: TraceMode,
        /// Write the report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// Concurrent prover tasks
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Emit the lemma flow diagram in DOT format
    Diagram {
        /// Agent network file
        input: PathBuf,
        /// Write the DOT text here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parse, validate and plan without proving
    Check {
        /// Agent network file
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    ExitCode::from(run(cli))
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Prove {
            input,
            max_clauses,
            max_depth,
            timeout_ms,
            trace,
            out,
            jobs,
        } => cmd_prove(input, max_clauses, max_depth, timeout_ms, trace, out, jobs),
        Command::Diagram { input, out } => cmd_diagram(input, out),
        Command::Check { input } => cmd_check(input),
    }
}

fn load_network(input: &PathBuf) -> Result<lemmaflow::network::AgentNetwork, u8> {
    let text = match std::fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}: {e}", input.display());
            return Err(1);
        }
    };
    match parse_network(&text) {
        Ok(net) => Ok(net),
        Err(e) => {
            eprintln!("{}: {e}", input.display());
            Err(1)
        }
    }
}

fn write_output(out: Option<PathBuf>, text: &str) -> u8 {
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("{}: {e}", path.display());
                return 1;
            }
            0
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_prove(
    input: PathBuf,
    max_clauses: Option<usize>,
    max_depth: Option<usize>,
    timeout_ms: Option<u64>,
    trace: TraceMode,
    out: Option<PathBuf>,
    jobs: usize,
) -> u8 {
    let net = match load_network(&input) {
        Ok(n) => n,
        Err(code) => return code,
    };
    let defaults = ResourceLimits::default();
    let limits = ResourceLimits {
        max_clauses: max_clauses.unwrap_or(defaults.max_clauses),
        max_depth: max_depth.unwrap_or(defaults.max_depth),
        max_millis: timeout_ms.unwrap_or(defaults.max_millis),
    };
    if limits.max_clauses == 0 || limits.max_depth == 0 || limits.max_millis == 0 || jobs == 0 {
        eprintln!("limits and --jobs must be positive");
        return 1;
    }
    let the_plan = match plan(&net) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{}: {e}", input.display());
            return 1;
        }
    };
    let proof = discharge(&net, &the_plan, &limits, jobs);
    let report = proof.render_report(trace == TraceMode::Full);
    let code = write_output(out, &report);
    if code != 0 {
        return code;
    }
    if proof.proved() {
        0
    } else {
        2
    }
}

fn cmd_diagram(input: PathBuf, out: Option<PathBuf>) -> u8 {
    let net = match load_network(&input) {
        Ok(n) => n,
        Err(code) => return code,
    };
    let diagram = match build_diagram(&net) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{}: {e}", input.display());
            return 1;
        }
    };
    write_output(out, &emit_dot(&diagram))
}

fn cmd_check(input: PathBuf) -> u8 {
    let net = match load_network(&input) {
        Ok(n) => n,
        Err(code) => return code,
    };
    let the_plan = match plan(&net) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{}: {e}", input.display());
            return 1;
        }
    };
    let agents = net.agents.len();
    let entries: usize = net.agents.iter().map(|a| a.entries.len()).sum();
    println!(
        "{} agents, {} entries, {} lemma tasks, order: [{}]",
        agents,
        entries,
        the_plan.tasks.len(),
        the_plan.order().join(", ")
    );
    0
}
