//! Command-line front end: scenario runs, the aggregate regression suite,
//! subgroup folding queries, and Γₙ arithmetic.
//!
//! Exit codes follow the report contract: 0 when the outcome matches the
//! expectation (or none was declared), 1 when a witness fails verification
//! or a group check fails, 2 when a search comes back INCONCLUSIVE against
//! an expected refutation, 3 on input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use conecert_core::gamma::{gamma_alphabet, GammaElement};
use conecert_core::runner::{exit_code, run_scenario, RunOptions};
use conecert_core::scenario::parse_scenario;
use conecert_core::stallings::SubgroupGraph;
use conecert_core::suite::{verify_paper, SuiteOptions};
use conecert_core::{Alphabet, Report, Word};

#[derive(Parser)]
#[command(
    name = "conecert",
    about = "Left-orderability certificates for HNN extensions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct OutputFlags {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Commands {
    /// Run a scenario file: group checks, then cone search or witness
    /// verification over every sign assignment.
    Run {
        /// Scenario file.
        file: PathBuf,
        /// Override the scenario's search depth (maximum product length).
        #[arg(long)]
        depth: Option<usize>,
        /// Worker threads for the assignment table.
        #[arg(long)]
        threads: Option<usize>,
        /// Seed recorded in the report; scenario runs are deterministic.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Run the aggregate regression suite: family ranks, canonical forms,
    /// order axioms, square identities, Britton answers, all three shipped
    /// certificate scenarios, and the tampered-pairing negative control.
    VerifyPaper {
        /// Modulus for the shift-lattice constructions (n >= 12).
        #[arg(long, default_value_t = 12)]
        n: usize,
        /// Search depth for the list certificates.
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Seed for the randomized property checks.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Fold a subgroup of a free group, print its rank, and answer
    /// membership queries read from a file (one word per line).
    Fold {
        /// Alphabet letters, comma separated (e.g. `a,b`).
        #[arg(long, value_delimiter = ',', required = true)]
        letters: Vec<String>,
        /// Subgroup generator word (repeat the flag for each generator).
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        /// Query file; blank lines and `#` comments are skipped.
        queries: PathBuf,
    },
    /// Arithmetic in the shift-lattice group on generators s, x.
    #[command(subcommand)]
    Gamma(GammaCmd),
}

#[derive(Subcommand)]
enum GammaCmd {
    /// Print the canonical form `(shift; p_0,...,p_(n-1))` of a word.
    Canon { n: usize, word: String },
    /// Compare two words in the explicit left order.
    Cmp { n: usize, w1: String, w2: String },
}

fn print_report(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
}

fn cmd_run(
    file: &PathBuf,
    depth: Option<usize>,
    threads: Option<usize>,
    seed: Option<u64>,
    format: Format,
) -> Result<u8> {
    let text = fs::read_to_string(file)
        .with_context(|| format!("cannot read scenario file `{}`", file.display()))?;
    let scenario = parse_scenario(&text)?;
    let report = run_scenario(&scenario, &RunOptions { depth, threads, seed })?;
    print_report(&report, format);
    Ok(exit_code(&report, scenario.expect))
}

fn cmd_verify_paper(opts: &SuiteOptions, format: Format) -> Result<u8> {
    let report = verify_paper(opts)?;
    print_report(&report, format);
    Ok(exit_code(&report, None))
}

fn cmd_fold(letters: &[String], gens: &[String], queries: &PathBuf) -> Result<u8> {
    let alphabet = Alphabet::new(letters)?;
    let mut words = Vec::with_capacity(gens.len());
    for g in gens {
        words.push(Word::parse(&alphabet, g)?);
    }
    let graph = SubgroupGraph::build(&alphabet, &words)?;
    println!("rank {}", graph.rank());

    let text = fs::read_to_string(queries)
        .with_context(|| format!("cannot read query file `{}`", queries.display()))?;
    for line in text.lines() {
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let word = Word::parse(&alphabet, line)?;
        if graph.contains(&word)? {
            let coords = graph.express(&word)?;
            println!("{line}: member = {coords}");
        } else {
            println!("{line}: not a member");
        }
    }
    Ok(0)
}

fn cmd_gamma(cmd: &GammaCmd) -> Result<u8> {
    let ab = gamma_alphabet();
    match cmd {
        GammaCmd::Canon { n, word } => {
            let elem = GammaElement::eval(*n, &Word::parse(&ab, word)?)?;
            println!("{elem}");
        }
        GammaCmd::Cmp { n, w1, w2 } => {
            let e1 = GammaElement::eval(*n, &Word::parse(&ab, w1)?)?;
            let e2 = GammaElement::eval(*n, &Word::parse(&ab, w2)?)?;
            let sym = match e1.compare(&e2)? {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            println!("{e1} {sym} {e2}");
        }
    }
    Ok(0)
}

fn dispatch(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Commands::Run { file, depth, threads, seed, output } => {
            cmd_run(file, *depth, *threads, *seed, output.format)
        }
        Commands::VerifyPaper { n, depth, threads, seed, output } => cmd_verify_paper(
            &SuiteOptions { n: *n, depth: *depth, threads: *threads, seed: *seed },
            output.format,
        ),
        Commands::Fold { letters, gens, queries } => cmd_fold(letters, gens, queries),
        Commands::Gamma(cmd) => cmd_gamma(cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(3)
        }
    }
}
