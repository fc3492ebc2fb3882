use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::suites::{suite_ids, SUITES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Tsv,
}

/// Where a report goes; `None` is standard output.
pub type Output = Option<PathBuf>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_degree: usize,
    pub max_dim: usize,
    pub rng_seed: u64,
    pub suites: Vec<String>,
    pub output: Output,
    pub format: Format,
    /// Enables the slow cases (degree-six constituent tables).
    pub extended: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_degree: 6,
            max_dim: 5,
            rng_seed: 1,
            suites: vec!["all".into()],
            output: None,
            format: Format::Json,
            extended: false,
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("unknown suite {id:?}; valid suites: all, {}", valid.join(", "))]
    UnknownSuite { id: String, valid: Vec<String> },
    #[error("max_dim must be at least 1")]
    MaxDim,
    #[error("{0}")]
    Params(String),
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.max_dim == 0 {
            return Err(ConfigError::MaxDim);
        }
        for id in &self.suites {
            if id != "all" && !SUITES.iter().any(|s| s.id == id) {
                return Err(ConfigError::UnknownSuite { id: id.clone(), valid: suite_ids().map(String::from).collect() });
            }
        }
        Ok(())
    }

    /// The suite IDs to run, in registry order, without duplicates.
    pub fn selected(&self) -> Vec<&'static str> {
        let all = self.suites.iter().any(|s| s == "all");
        suite_ids().filter(|id| all || self.suites.iter().any(|s| s == id)).collect()
    }

    /// Degree bound for the checks on `Λ^i ⊗ Λ^j`, which run two degrees
    /// past `max_degree` so the defaults reach `i + j = 8`.
    pub fn bidegree(&self) -> usize {
        self.max_degree + 2
    }
}
