//! Size caps for field construction, oracles and exhaustive searches.
//!
//! Caps can be overridden by a `key = value` file whose path is taken from the
//! `ZETTERBERG_CONFIG` environment variable. Lines starting with `#` are ignored.

use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

pub const CONFIG_ENV: &str = "ZETTERBERG_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest ambient field order accepted when building a context.
    pub max_ambient_order: u64,
    /// Log/antilog tables are built only for fields at most this large.
    pub table_cap: u64,
    /// Largest syndrome space (q²) the breadth-first oracle will walk.
    pub oracle_cap: u64,
    /// Budget of character or trace evaluations for criterion scans.
    pub scan_cap: u64,
    /// Exhaustive minimum-distance search beyond weight 3 needs length at most this.
    pub exhaustive_len_cap: usize,
    /// Weight-3 scans need q at most this.
    pub weight3_q_cap: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_ambient_order: 1 << 32,
            table_cap: 1 << 24,
            oracle_cap: 1 << 20,
            scan_cap: 1 << 28,
            exhaustive_len_cap: 64,
            weight3_q_cap: 1 << 16,
        }
    }
}

impl Caps {
    /// Parses `key = value` lines on top of the defaults.
    pub fn parse(text: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidParameter(format!("config line {}: expected key = value", lineno + 1))
            })?;
            let key = key.trim();
            let value = parse_number(value.trim()).ok_or_else(|| {
                Error::InvalidParameter(format!("config line {}: bad number {:?}", lineno + 1, value.trim()))
            })?;
            match key {
                "max_ambient_order" => caps.max_ambient_order = value,
                "table_cap" => caps.table_cap = value,
                "oracle_cap" => caps.oracle_cap = value,
                "scan_cap" => caps.scan_cap = value,
                "exhaustive_len_cap" => caps.exhaustive_len_cap = value as usize,
                "weight3_q_cap" => caps.weight3_q_cap = value,
                other => {
                    return Err(Error::InvalidParameter(format!("unknown config key {other:?}")));
                }
            }
        }
        Ok(caps)
    }

    pub fn from_file(path: &Path) -> Result<Caps> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
        Caps::parse(&text)
    }

    /// Defaults, overridden by the file named in `ZETTERBERG_CONFIG` if set.
    pub fn from_env() -> Result<Caps> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) => Caps::from_file(Path::new(&path)),
            None => Ok(Caps::default()),
        }
    }
}

// Accepts plain integers and powers of two written as `2^k`.
fn parse_number(s: &str) -> Option<u64> {
    if let Some(exp) = s.strip_prefix("2^") {
        let k: u32 = exp.trim().parse().ok()?;
        return 1u64.checked_shl(k);
    }
    s.replace('_', "").parse().ok()
}
