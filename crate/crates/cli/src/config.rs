//! Optional `key = value` configuration file supplying defaults that flags
//! override.

use crate::report::OutputFormat;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct FileConfig {
    pub format: Option<OutputFormat>,
    pub output_dir: Option<PathBuf>,
    pub nodes: Option<usize>,
    pub truncation: Option<usize>,
    pub tolerance: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("config {}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut config = FileConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value, got {raw:?}", lineno + 1))?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "format" => config.format = Some(value.parse()?),
                "output_dir" => config.output_dir = Some(PathBuf::from(value)),
                "nodes" => {
                    config.nodes = Some(value.parse().map_err(|e| format!("nodes: {e}"))?)
                }
                "truncation" => {
                    config.truncation =
                        Some(value.parse().map_err(|e| format!("truncation: {e}"))?)
                }
                "tolerance" => {
                    config.tolerance = Some(value.parse().map_err(|e| format!("tolerance: {e}"))?)
                }
                other => return Err(format!("line {}: unknown key {other:?}", lineno + 1)),
            }
        }
        Ok(config)
    }
}
