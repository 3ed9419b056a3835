use std::path::PathBuf;
use std::process::ExitCode;

use ccmap::cc::{Profile, SearchMode};
use ccmap_cli::cache::Cache;
use ccmap_cli::commands::{self, CheckFlags, GenSpec, SearchArgs};
use ccmap_cli::experiment::{self, Experiment};
use ccmap_cli::{CliError, Outcome, EXIT_INPUT};
use clap::{ArgAction, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "ccmap", version, about = "Cycle-continuous mappings between graphs")]
struct Cli {
    /// Recorded with experiment results; the engine itself is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a built-in or constructed graph as Graph JSON.
    Gen {
        #[command(subcommand)]
        what: Gen,
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Report structural properties of a graph (a name or a file).
    Check {
        graph: String,
        #[arg(long)]
        snark: bool,
        #[arg(long)]
        critical: bool,
        #[arg(long)]
        bridgeless: bool,
        #[arg(long)]
        girth: bool,
        #[arg(long)]
        cyclic_connectivity: bool,
        #[arg(long)]
        edge_transitive: bool,
        /// Exit with code 2 if a reported property is false.
        #[arg(long)]
        assert: bool,
    },
    Cc {
        #[command(subcommand)]
        op: Cc,
    },
    Experiment {
        #[command(subcommand)]
        which: Exp,
        /// Ignore and do not write the result cache.
        #[arg(long, global = true)]
        no_cache: bool,
    },
}

#[derive(Subcommand)]
enum Gen {
    Petersen,
    #[command(name = "k2_3")]
    K23,
    Blanusa {
        #[arg(long)]
        which: u8,
    },
    Antichain {
        #[arg(long)]
        n: usize,
    },
    PosetPath {
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum Cc {
    /// Check a mapping file (certificate or bare array).
    #[command(disable_help_flag = true)]
    Verify {
        #[arg(long, action = ArgAction::Help)]
        help: Option<bool>,
        #[arg(short = 'g', long)]
        source: String,
        #[arg(short = 'h', long = "target")]
        target: String,
        #[arg(short, long)]
        map: PathBuf,
    },
    #[command(disable_help_flag = true)]
    Search {
        #[arg(long, action = ArgAction::Help)]
        help: Option<bool>,
        #[arg(short = 'g', long)]
        source: String,
        #[arg(short = 'h', long = "target")]
        target: String,
        #[arg(long, value_enum, default_value = "first")]
        mode: ModeArg,
        #[arg(long)]
        budget_secs: Option<f64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value = "general")]
        profile: ProfileArg,
        /// Directory for one certificate file per mapping found.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Exp {
    BlanusaRigidity {
        #[arg(long, default_value_t = 600.0)]
        budget_secs: f64,
    },
    Antichain {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 3600.0)]
        budget_secs: f64,
    },
    Poset {
        #[arg(long)]
        max_edges: usize,
        #[arg(long, default_value_t = 60.0)]
        budget_secs: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    First,
    All,
    Count,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    General,
    StarLocal,
}

fn dispatch(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Gen { what, out } => {
            let spec = match what {
                Gen::Petersen => GenSpec::Named("petersen".into()),
                Gen::K23 => GenSpec::Named("k2_3".into()),
                Gen::Blanusa { which } => GenSpec::Blanusa(which),
                Gen::Antichain { n } => GenSpec::Antichain(n),
                Gen::PosetPath { word } => GenSpec::PosetPath(word),
            };
            commands::gen(&spec, out.as_deref())
        }
        Command::Check {
            graph,
            snark,
            critical,
            bridgeless,
            girth,
            cyclic_connectivity,
            edge_transitive,
            assert,
        } => commands::check(
            &graph,
            &CheckFlags { snark, critical, bridgeless, girth, cyclic_connectivity, edge_transitive, assert },
        ),
        Command::Cc { op: Cc::Verify { source, target, map, .. } } => commands::cc_verify(&source, &target, &map),
        Command::Cc {
            op: Cc::Search { source, target, mode, budget_secs, workers, profile, out_dir, .. },
        } => {
            let args = SearchArgs {
                mode: match mode {
                    ModeArg::First => SearchMode::First,
                    ModeArg::All => SearchMode::All,
                    ModeArg::Count => SearchMode::Count,
                },
                budget_secs,
                workers,
                profile: match profile {
                    ProfileArg::General => Profile::General,
                    ProfileArg::StarLocal => Profile::StarLocal,
                },
                out_dir,
            };
            commands::cc_search(&source, &target, &args)
        }
        Command::Experiment { which, no_cache } => {
            let exp = match which {
                Exp::BlanusaRigidity { budget_secs } => Experiment::BlanusaRigidity { budget_secs },
                Exp::Antichain { max_n, budget_secs } => Experiment::Antichain { max_n, budget_secs },
                Exp::Poset { max_edges, budget_secs } => Experiment::Poset { max_edges, budget_secs },
            };
            let cache = if no_cache {
                None
            } else {
                Some(Cache::from_env().map_err(|e| CliError::input(format!("cache: {e}")))?)
            };
            experiment::run(&exp, cache.as_ref(), cli.seed)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match dispatch(cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
