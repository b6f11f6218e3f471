mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::parser::ValueSource;
use clap::{ArgMatches, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};

use cga_core::comgraph::SliceKind;
use cga_core::groups::GroupSpec;
use config::{Config, Given, Overrides};
use report::{now, Invocation, ReportDocument, SCHEMA_VERSION};

/// Exact commuting-graph computations in symmetric and alternating groups.
#[derive(Debug, Parser)]
#[command(name = "cga", version)]
struct Cli {
    /// Largest group closed explicitly, in elements.
    #[arg(long, global = true, env = "CGA_CAP")]
    cap: Option<usize>,
    /// Claims run concurrently.
    #[arg(long, global = true, env = "CGA_JOBS")]
    jobs: Option<usize>,
    /// Node budget for each branch-and-bound search.
    #[arg(long, global = true, env = "CGA_BUDGET")]
    budget: Option<u64>,
    /// Where component element lists are cached.
    #[arg(long, global = true, env = "CGA_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// TOML file with any of cap, jobs, budget, cache_dir.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Print one JSON document.
    #[arg(long, global = true, conflicts_with = "jsonl")]
    json: bool,
    /// Print JSON lines: a header, one line per report, a closing line.
    #[arg(long, global = true)]
    jsonl: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Group {
    Sym,
    Alt,
}

impl Group {
    pub fn spec(self, n: usize) -> GroupSpec {
        match self {
            Group::Sym => GroupSpec::sym(n),
            Group::Alt => GroupSpec::alt(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Group::Sym => "sym",
            Group::Alt => "alt",
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Even,
    Odd,
}

impl From<Kind> for SliceKind {
    fn from(k: Kind) -> SliceKind {
        match k {
            Kind::Even => SliceKind::Even,
            Kind::Odd => SliceKind::Odd,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify every class by whether it meets an abelian centralizer.
    Classes {
        #[arg(long)]
        group: Group,
        #[arg(long)]
        n: usize,
    },
    /// Generators, order and commutativity of a centralizer.
    Centralizer {
        #[arg(long)]
        group: Group,
        #[arg(long)]
        n: usize,
        /// Element in cycle notation, 1-based.
        #[arg(long)]
        perm: String,
    },
    /// The component of a class commuting graph through a seed, with δ and Δ.
    Component {
        #[arg(long)]
        group: Group,
        #[arg(long)]
        n: usize,
        /// Class label such as 4-4-3 or 5-3-1+.
        #[arg(long)]
        class: String,
        #[arg(long)]
        seed: String,
        /// Neither read nor write the element cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// The structural abelian cover of a slice and how it meets the slice.
    Cover {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kind: Kind,
    },
    /// Search for pairwise non-commuting representatives of the obstruction groups.
    RepsSearch {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kind: Kind,
        /// How many groups of the fixed order to use.
        #[arg(long, default_value_t = 9)]
        groups: usize,
        /// Search every candidate instead of one per orbit.
        #[arg(long)]
        no_symmetry_reduction: bool,
        /// Try every first representative rather than the fixed one.
        #[arg(long)]
        every_first: bool,
    },
    /// Run registered claims: `all`, an id, or an id prefix.
    Verify {
        pattern: String,
        /// Degrees to run at, instead of each claim's defaults.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
    },
}

fn given<T: Clone + Send + Sync + 'static>(m: &ArgMatches, id: &str) -> Given<T> {
    Given {
        value: m.get_one::<T>(id).cloned(),
        from_env: m.value_source(id) == Some(ValueSource::EnvVariable),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let matches = Cli::command().get_matches_from(&argv);
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let config = Config::resolve(Overrides {
        cap: given(&matches, "cap"),
        jobs: given(&matches, "jobs"),
        budget: given(&matches, "budget"),
        cache_dir: given(&matches, "cache_dir"),
        config_file: cli.config.clone(),
    });
    let config = match config {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(commands::EXIT_USAGE);
        }
    };
    let started = now();
    let out = match commands::run(&cli.command, &config) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {}", e.message);
            return ExitCode::from(e.code);
        }
    };
    let doc = ReportDocument {
        schema_version: SCHEMA_VERSION.into(),
        command: commands::name(&cli.command).into(),
        invocation: Invocation { argv, config },
        reports: out.reports,
        exit_status: out.status as i32,
        timestamps: report::Timestamps {
            started,
            finished: now(),
        },
    };
    if cli.json {
        println!("{}", doc.to_json());
    } else if cli.jsonl {
        print!("{}", doc.to_jsonl());
    } else {
        print!("{}", out.text);
    }
    ExitCode::from(out.status)
}
