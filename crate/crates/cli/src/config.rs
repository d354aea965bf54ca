use std::path::{Path, PathBuf};

use panelsur::diagnostics::DiagnosticsOptions;
use panelsur::egls::EglsOptions;
use panelsur::unitroot::UnitRootOptions;
use panelsur::{CsvLayout, ModelSpec};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Emit {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct UnitRootConfig {
    pub max_lag: Option<usize>,
    pub vote_threshold: usize,
    /// Variables to test; the model's dependent and regressors when absent.
    pub variables: Option<Vec<String>>,
}

impl Default for UnitRootConfig {
    fn default() -> Self {
        let o = UnitRootOptions::default();
        Self { max_lag: o.max_lag, vote_threshold: o.vote_threshold, variables: None }
    }
}

impl UnitRootConfig {
    pub fn options(&self) -> UnitRootOptions {
        UnitRootOptions { max_lag: self.max_lag, vote_threshold: self.vote_threshold }
    }
}

/// One run: where the data lives, how to read it, what to fit and how.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Relative paths are taken from the config file's directory.
    pub data_path: PathBuf,
    #[serde(default)]
    pub schema: CsvLayout,
    pub model: ModelSpec,
    #[serde(default)]
    pub unit_root: UnitRootConfig,
    #[serde(default)]
    pub egls: EglsOptions,
    #[serde(default)]
    pub diagnostics: DiagnosticsOptions,
    #[serde(default)]
    pub output: Emit,
    /// Unit holding the EU-wide aggregate, reported apart in delta tables.
    #[serde(default = "default_aggregate")]
    pub aggregate_unit: Option<String>,
}

fn default_aggregate() -> Option<String> {
    Some("EU28".into())
}

impl RunConfig {
    pub fn from_json(text: &str, base: &Path) -> Result<Self, CliError> {
        let mut cfg: RunConfig = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        if cfg.data_path.is_relative() {
            cfg.data_path = base.join(&cfg.data_path);
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        Self::from_json(&text, path.parent().unwrap_or(Path::new(".")))
    }

    fn validate(&self) -> Result<(), CliError> {
        if !(1..=12).contains(&self.unit_root.vote_threshold) {
            return Err(CliError::Config(format!(
                "vote_threshold must be between 1 and 12, got {}",
                self.unit_root.vote_threshold
            )));
        }
        if self.model.regressors.is_empty() {
            return Err(CliError::Config("model needs at least one regressor".into()));
        }
        if let Some((a, b)) = self.model.sample {
            if a > b {
                return Err(CliError::Config(format!("sample window {a}..{b} is reversed")));
            }
        }
        Ok(())
    }

    pub fn unit_root_variables(&self) -> Vec<String> {
        self.unit_root.variables.clone().unwrap_or_else(|| {
            let mut v = vec![self.model.dependent.clone()];
            v.extend(self.model.regressors.iter().cloned());
            v
        })
    }
}
