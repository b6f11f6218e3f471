//! Settings resolved from flags, `CGA_*` variables, a TOML file and
//! defaults, in that order.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use cga_core::comgraph::DEFAULT_BUDGET;
use cga_core::groups::DEFAULT_CAP;

pub const DEFAULT_CACHE_DIR: &str = "cga-cache";

/// The keys a config file may set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub cap: Option<usize>,
    pub jobs: Option<usize>,
    pub budget: Option<u64>,
    pub cache_dir: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Flag,
    Env,
    File,
    Default,
}

/// A value given on the command line, from the environment, or neither.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Given<T> {
    pub value: Option<T>,
    pub from_env: bool,
}

#[cfg(test)]
impl<T> Given<T> {
    pub fn none() -> Given<T> {
        Given { value: None, from_env: false }
    }

    pub fn flag(value: T) -> Given<T> {
        Given { value: Some(value), from_env: false }
    }
}

fn pick<T>(given: Given<T>, file: Option<T>, default: T) -> (T, Source) {
    match (given.value, file) {
        (Some(v), _) if given.from_env => (v, Source::Env),
        (Some(v), _) => (v, Source::Flag),
        (None, Some(v)) => (v, Source::File),
        (None, None) => (default, Source::Default),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sources {
    pub cap: Source,
    pub jobs: Source,
    pub budget: Source,
    pub cache_dir: Source,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Config {
    pub cap: usize,
    pub jobs: usize,
    pub budget: u64,
    pub cache_dir: PathBuf,
    pub config_file: Option<PathBuf>,
    pub sources: Sources,
}

pub struct Overrides {
    pub cap: Given<usize>,
    pub jobs: Given<usize>,
    pub budget: Given<u64>,
    pub cache_dir: Given<PathBuf>,
    pub config_file: Option<PathBuf>,
}

impl Config {
    pub fn resolve(o: Overrides) -> Result<Config, String> {
        let file = match &o.config_file {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        let cores = std::thread::available_parallelism().map_or(1, |n| n.get());
        let (cap, cap_src) = pick(o.cap, file.cap, DEFAULT_CAP);
        let (jobs, jobs_src) = pick(o.jobs, file.jobs, cores);
        let (budget, budget_src) = pick(o.budget, file.budget, DEFAULT_BUDGET);
        let (cache_dir, cache_src) = pick(o.cache_dir, file.cache_dir, DEFAULT_CACHE_DIR.into());
        if cap == 0 || jobs == 0 {
            return Err("cap and jobs must be positive".into());
        }
        Ok(Config {
            cap,
            jobs,
            budget,
            cache_dir,
            config_file: o.config_file,
            sources: Sources {
                cap: cap_src,
                jobs: jobs_src,
                budget: budget_src,
                cache_dir: cache_src,
            },
        })
    }
}
