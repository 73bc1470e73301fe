//! Sweep configuration files: flat `key: value` lines, `#` starts a comment.
//!
//! ```text
//! bound_q: 12
//! bound_mult: 3
//! knot_count: 2
//! output: sweep.json
//! ```

use std::path::PathBuf;
use std::str::FromStr;

use lspace_core::obstruction::{enumerate_sums, explore_sums, run_sweep, SweepMode};
use lspace_core::torus::torus_knots_up_to;
use lspace_core::{theorem_1_1_sweep, SweepSummary};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing key '{0}'")]
    Missing(&'static str),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub bound_q: u64,
    pub bound_mult: i64,
    /// 1: singletons, 2: singletons and pairs (both checked), 3: triples (report only).
    pub knot_count: usize,
    pub output: Option<PathBuf>,
}

impl FromStr for SweepConfig {
    type Err = ConfigError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (mut bound_q, mut bound_mult, mut knot_count, mut output) = (None, None, None, None);
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| ConfigError::Line {
                line: i + 1,
                message,
            };
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| err(format!("expected 'key: value', got '{line}'")))?;
            let (key, value) = (key.trim(), value.trim());
            let int = |v: &str| {
                v.parse::<u64>()
                    .map_err(|_| err(format!("'{v}' is not a non-negative integer")))
            };
            let slot_taken = match key {
                "bound_q" => bound_q.replace(int(value)?).is_some(),
                "bound_mult" => bound_mult.replace(int(value)?).is_some(),
                "knot_count" => knot_count.replace(int(value)?).is_some(),
                "output" => output.replace(PathBuf::from(value)).is_some(),
                other => return Err(err(format!("unknown key '{other}'"))),
            };
            if slot_taken {
                return Err(err(format!("duplicate key '{key}'")));
            }
        }
        let bound_q = bound_q.ok_or(ConfigError::Missing("bound_q"))?;
        let bound_mult = bound_mult.ok_or(ConfigError::Missing("bound_mult"))?;
        let knot_count = knot_count.ok_or(ConfigError::Missing("knot_count"))?;
        if bound_q < 3 {
            return Err(ConfigError::Invalid(format!(
                "bound_q must be at least 3, got {bound_q}"
            )));
        }
        let bound_mult = i64::try_from(bound_mult)
            .ok()
            .filter(|&m| m >= 1)
            .ok_or_else(|| {
                ConfigError::Invalid(format!("bound_mult must be at least 1, got {bound_mult}"))
            })?;
        if !(1..=3).contains(&knot_count) {
            return Err(ConfigError::Invalid(format!(
                "knot_count must be 1, 2 or 3, got {knot_count}"
            )));
        }
        Ok(Self {
            bound_q,
            bound_mult,
            knot_count: knot_count as usize,
            output,
        })
    }
}

impl SweepConfig {
    pub fn mode(&self) -> SweepMode {
        if self.knot_count == 3 {
            SweepMode::Explore
        } else {
            SweepMode::Assert
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "bound_q": self.bound_q,
            "bound_mult": self.bound_mult,
            "knot_count": self.knot_count,
        })
    }

    pub fn run(&self) -> SweepSummary {
        let bounds = "bounds are validated on parse";
        match self.knot_count {
            1 => {
                let knots = torus_knots_up_to(self.bound_q);
                run_sweep(
                    enumerate_sums(&knots, 1, self.bound_mult),
                    SweepMode::Assert,
                )
            }
            2 => theorem_1_1_sweep(self.bound_q, self.bound_mult).expect(bounds),
            _ => explore_sums(self.bound_q, self.bound_mult, 3).expect(bounds),
        }
    }
}
