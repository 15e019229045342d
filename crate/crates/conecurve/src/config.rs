//! Runtime configuration shared by the library entry points and the CLI.

use serde::{Deserialize, Serialize};

use crate::surface::shortest::SearchBudget;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct Config {
    /// Absolute tolerance for lengths and angles.
    pub tolerance: f64,
    /// Shortest-path search: maximum face-sequence depth.
    pub path_max_depth: usize,
    /// Shortest-path search: maximum window expansions.
    pub path_max_expansions: usize,
    /// Sample count for development sweeps.
    pub develop_samples: usize,
    /// Pixels per development unit in SVG output.
    pub svg_scale: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            tolerance: 1e-9,
            path_max_depth: 32,
            path_max_expansions: 1_000_000,
            develop_samples: 64,
            svg_scale: 100.0,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("tolerance must be positive and below 1e-3, got {0}")]
    Tolerance(f64),
    #[error("budgets and sample counts must be positive")]
    NonPositive,
}

impl Config {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.tolerance > 0.0 && self.tolerance < 1e-3) {
            return Err(ConfigError::Tolerance(self.tolerance));
        }
        if self.path_max_depth == 0
            || self.path_max_expansions == 0
            || self.develop_samples == 0
            || self.svg_scale <= 0.0
        {
            return Err(ConfigError::NonPositive);
        }
        Ok(())
    }

    pub fn budget(&self) -> SearchBudget {
        SearchBudget { max_depth: self.path_max_depth, max_expansions: self.path_max_expansions }
    }

    /// Apply the CONECURVE_TOL environment override, if set.
    pub fn with_env(mut self) -> Self {
        if let Ok(v) = std::env::var("CONECURVE_TOL") {
            if let Ok(t) = v.parse::<f64>() {
                self.tolerance = t;
            }
        }
        self
    }
}
