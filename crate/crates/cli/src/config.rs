//! Suite configuration files: a small line-oriented `key = value` format.
//!
//! - `#` starts a comment; blank lines are ignored.
//! - `identity = <name>` opens a new check.
//! - Keys after an `identity` line configure the most recent check.
//! - A `seed = <u64>` before the first identity sets the default seed for
//!   every check in the file.
//!
//! Example:
//!
//! ```text
//! seed = 42
//!
//! identity = normalization
//! n = 0..10
//!
//! identity = k1-skew
//! mu = 3,1
//! n = 0..8
//! ```

use std::fmt;
use std::path::Path;

use crate::identity::{IdentityCheck, IdentityKind};

#[derive(Debug)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ConfigError {}

/// Reads and parses a suite configuration file.
pub fn load(path: &Path) -> anyhow::Result<Vec<IdentityCheck>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    let checks = parse(&text)?;
    Ok(checks)
}

/// Parses configuration text into a list of checks, in file order.
pub fn parse(text: &str) -> Result<Vec<IdentityCheck>, ConfigError> {
    let mut checks: Vec<IdentityCheck> = Vec::new();
    let mut global_seed: Option<u64> = None;

    for (index, raw_line) in text.lines().enumerate() {
        let line_number = index + 1;
        let line = match raw_line.find('#') {
            Some(position) => &raw_line[..position],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }

        let (key, value) = line.split_once('=').ok_or_else(|| ConfigError {
            line: line_number,
            message: format!("expected `key = value`, found `{line}`"),
        })?;
        let key = key.trim();
        let value = value.trim();
        if value.is_empty() {
            return Err(ConfigError {
                line: line_number,
                message: format!("empty value for `{key}`"),
            });
        }

        if key == "identity" {
            let kind = IdentityKind::from_name(value).ok_or_else(|| ConfigError {
                line: line_number,
                message: format!(
                    "unknown identity `{value}` (registered: {})",
                    IdentityKind::registered_names()
                ),
            })?;
            let mut check = IdentityCheck::new(kind);
            if let Some(seed) = global_seed {
                check.seed = seed;
            }
            checks.push(check);
            continue;
        }

        match checks.last_mut() {
            Some(check) => check.set(key, value).map_err(|message| ConfigError {
                line: line_number,
                message,
            })?,
            None => {
                if key == "seed" {
                    global_seed = Some(value.parse().map_err(|_| ConfigError {
                        line: line_number,
                        message: format!("invalid seed `{value}`"),
                    })?);
                } else {
                    return Err(ConfigError {
                        line: line_number,
                        message: format!("`{key}` appears before the first `identity` line"),
                    });
                }
            }
        }
    }

    if checks.is_empty() {
        return Err(ConfigError {
            line: text.lines().count().max(1),
            message: "no `identity = ...` lines found".to_string(),
        });
    }
    Ok(checks)
}
