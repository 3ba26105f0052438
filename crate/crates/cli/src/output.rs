//! Report emission: JSON documents (schema-versioned, deterministic
//! field order) and two-column CSV series.

use std::path::{Path, PathBuf};

use serde::Serialize;

/// Exit status carried back to `main`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailure,
    Inconclusive,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::VerificationFailure => 2,
            Outcome::Inconclusive => 3,
        }
    }
}

/// Serialize a report document; field order follows struct declaration,
/// so identical inputs produce byte-identical output.
pub fn emit_json<T: Serialize>(doc: &T, out: Option<&PathBuf>) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(doc).map_err(|e| e.to_string())?;
    text.push('\n');
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Two-column CSV series (abscissa, value), no header.
pub fn write_csv(path: &Path, series: &[(f64, f64)]) -> Result<(), String> {
    let mut text = String::new();
    for (x, v) in series {
        text.push_str(&format!("{x},{v}\n"));
    }
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Sibling path with an extra suffix before the extension:
/// `out.csv` + `v1` → `out.v1.csv`.
pub fn suffixed(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("series");
    let ext = path.extension().and_then(|s| s.to_str()).unwrap_or("csv");
    path.with_file_name(format!("{stem}.{suffix}.{ext}"))
}
