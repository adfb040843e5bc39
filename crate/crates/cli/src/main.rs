//! `posdep` — stable, supported and pointwise-stable models of propositional
//! theories, their dependency graphs, loop formulas and splitting checks.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use posdep::fuzz::{Property, MAX_FUZZ_ATOMS, MAX_FUZZ_DEPTH};
use posdep::semantics::DEFAULT_CAP;
use posdep::{Error, Exec, GraphKind};

/// Exit status of a completed analysis; errors map through [`error_code`].
pub(crate) struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

#[derive(Parser)]
#[command(name = "posdep", version, about, long_about = None)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
pub(crate) struct Global {
    /// Dependency graph to use
    #[arg(long, global = true, value_enum, default_value_t = GraphArg::Pnn)]
    graph: GraphArg,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Largest number of atoms to enumerate interpretations over
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Seed for the random generator
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Evaluate on one thread
    #[arg(long, global = true)]
    sequential: bool,
}

impl Global {
    pub fn kind(&self) -> GraphKind {
        match self.graph {
            GraphArg::Sp => GraphKind::Sp,
            GraphArg::Pnn => GraphKind::Pnn,
        }
    }

    pub fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    Sp,
    Pnn,
}

#[derive(Clone, Copy, ValueEnum)]
pub(crate) enum GraphFormat {
    Dot,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Classical, stable, supported and pointwise-stable models
    Models {
        /// Theory files; standard input when absent or `-`
        files: Vec<PathBuf>,
    },
    /// Print the dependency graph
    Graph {
        files: Vec<PathBuf>,
        /// `dot`, or `edges` for one `head body` line per edge in the order
        /// the rules produce them
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Check the graph for cycles; exits 3 when it has one
    Tight { files: Vec<PathBuf> },
    /// Loops of a formula with their loop formulas
    Loops {
        /// Formula files; several members are read as their conjunction
        files: Vec<PathBuf>,
        /// Interpretation to evaluate the loop formulas under, e.g. `p,q`
        #[arg(long)]
        interp: Option<String>,
    },
    /// External support formula of a set of atoms
    Nes {
        files: Vec<PathBuf>,
        /// The set of atoms, e.g. `p,q`
        #[arg(long)]
        set: String,
    },
    /// Check whether F & G splits along P and the remaining atoms
    Split {
        /// Formula F
        f: String,
        /// Formula G
        g: String,
        /// Atoms on F's side; the rest of the atoms of F & G go to G
        #[arg(long)]
        p: String,
    },
    /// Check a property on seeded random theories; exits 5 on a violation
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = MAX_FUZZ_ATOMS)]
        max_atoms: usize,
        #[arg(long, default_value_t = MAX_FUZZ_DEPTH)]
        max_depth: usize,
        /// theorem1, theorem2, loop-oracle, splitting, reduct-lemma,
        /// lemma1, sp-subgraph, chain, or the loop-oracle-sp control
        #[arg(long, default_value = "theorem1")]
        property: String,
    },
}

/// 1 for malformed input or arguments, 2 when a cap is exceeded.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let g = cli.global;
    match cli.command {
        Command::Models { files } => commands::models(&g, &input::read(&files)?),
        Command::Graph { files, format } => commands::graph(&g, &input::read(&files)?, format),
        Command::Tight { files } => commands::tight(&g, &input::read(&files)?),
        Command::Loops { files, interp } => {
            commands::loops(&g, &input::read(&files)?, interp.as_deref())
        }
        Command::Nes { files, set } => commands::nes(&g, &input::read(&files)?, &set),
        Command::Split { f, g: g_text, p } => commands::split(&g, &f, &g_text, &p),
        Command::Fuzz {
            count,
            max_atoms,
            max_depth,
            property,
        } => {
            let property: Property = property.parse()?;
            commands::fuzz(&g, property, count, max_atoms, max_depth)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if out
                .write_all(outcome.text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
