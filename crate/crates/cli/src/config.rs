use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::args::{Cli, Format};
use crate::error::CliError;

pub const MIN_NODES: usize = 16;

/// Tolerance names understood by the commands.
pub const TOLERANCES: [(&str, f64); 4] =
    [("prop1", 1e-5), ("prop1_derivative", 1e-6), ("witness", 1e-8), ("invariance", 1e-9)];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub quadrature_nodes: usize,
    pub tolerances: BTreeMap<String, f64>,
    pub output_format: Format,
    pub output_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            quadrature_nodes: 128,
            tolerances: TOLERANCES.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            output_format: Format::Csv,
            output_path: None,
        }
    }
}

impl RunConfig {
    /// Defaults, then the config file, then flags.
    pub fn resolve(cli: &Cli) -> Result<Self, CliError> {
        let mut cfg = match &cli.config {
            Some(path) => Self::load(path)?,
            None => Self::default(),
        };
        if let Some(n) = cli.nodes {
            if n < MIN_NODES {
                return Err(CliError::usage(format!("--nodes must be at least {MIN_NODES}, got {n}")));
            }
            cfg.quadrature_nodes = n;
        }
        if let Some(f) = cli.format {
            cfg.output_format = f;
        }
        if let Some(p) = &cli.out {
            cfg.output_path = Some(p.clone());
        }
        Ok(cfg)
    }

    fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read config {}: {e}", path.display())))?;
        let mut cfg: Self = serde_json::from_str(&text)
            .map_err(|e| CliError::input(format!("malformed config {}: {e}", path.display())))?;
        for (k, v) in TOLERANCES {
            cfg.tolerances.entry(k.to_string()).or_insert(v);
        }
        if cfg.quadrature_nodes < MIN_NODES {
            return Err(CliError::input(format!("quadrature_nodes must be at least {MIN_NODES}")));
        }
        if let Some((k, v)) = cfg.tolerances.iter().find(|(_, v)| v.is_nan() || **v <= 0.0) {
            return Err(CliError::input(format!("tolerance {k} must be positive, got {v}")));
        }
        Ok(cfg)
    }

    pub fn tolerance(&self, name: &str) -> f64 {
        self.tolerances[name]
    }
}
