//! OEIS b-file parsing and cross-checking of generated sequences against
//! reference files.
//!
//! A b-file is plain text, one "index value" pair per line; blank lines and
//! lines starting with '#' are ignored. Indices must be strictly
//! increasing. Alignment against our 0-based sequences is user-supplied as
//! a shift: our index n maps to reference index n + shift.

use thiserror::Error;

use crate::error::Error as CrateError;
use crate::sequence::{Engine, Int};

/// One parsed b-file line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: i64,
    pub value: Int,
}

#[derive(Debug, Error)]
pub enum BFileError {
    #[error("line {line}: malformed entry `{content}`")]
    Malformed { line: usize, content: String },
    #[error("line {line}: index {index} does not increase over {previous}")]
    NonIncreasing {
        line: usize,
        index: i64,
        previous: i64,
    },
}

/// Parses b-file text into entries, rejecting malformed lines with their
/// line number.
pub fn parse_bfile(text: &str) -> Result<Vec<BFileEntry>, BFileError> {
    let mut entries: Vec<BFileEntry> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let entry = (|| {
            let index: i64 = fields.next()?.parse().ok()?;
            let value: Int = fields.next()?.parse().ok()?;
            if fields.next().is_some() {
                return None;
            }
            Some(BFileEntry { index, value })
        })()
        .ok_or_else(|| BFileError::Malformed {
            line,
            content: trimmed.to_string(),
        })?;
        if let Some(last) = entries.last() {
            if entry.index <= last.index {
                return Err(BFileError::NonIncreasing {
                    line,
                    index: entry.index,
                    previous: last.index,
                });
            }
        }
        entries.push(entry);
    }
    Ok(entries)
}

/// Which base sequence family to compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    Fib,
    Lucas,
}

/// Result of comparing our sequence against a reference file.
#[derive(Debug, Clone)]
pub struct CompareReport {
    pub matched: u64,
    pub first_mismatch: Option<Mismatch>,
    /// Inclusive range of our indices n that were compared.
    pub range: (u64, u64),
}

#[derive(Debug, Clone)]
pub struct Mismatch {
    /// Our index n of the first disagreement.
    pub n: u64,
    pub expected: Int,
    pub actual: Int,
}

impl CompareReport {
    pub fn full_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares generation r of the chosen family against reference entries.
/// Our value at n is checked against the reference value at index n + shift
/// over the whole overlap.
pub fn compare_with_reference(
    engine: &Engine,
    kind: SequenceKind,
    r: u32,
    shift: i64,
    entries: &[BFileEntry],
) -> Result<CompareReport, CrateError> {
    let overlap: Vec<&BFileEntry> = entries
        .iter()
        .filter(|e| matches!(e.index.checked_sub(shift), Some(n) if n >= 0))
        .collect();
    if overlap.is_empty() {
        return Err(CrateError::domain(
            "no overlap between the reference file and our index range",
        ));
    }
    let n_lo = (overlap.first().unwrap().index - shift) as u64;
    let n_hi = (overlap.last().unwrap().index - shift) as u64;
    let row = match kind {
        SequenceKind::Fib => engine.hyper_fib_cumsum(r, n_hi)?,
        SequenceKind::Lucas => engine.hyper_lucas_cumsum(r, n_hi)?,
    };
    let mut matched = 0u64;
    let mut first_mismatch = None;
    for e in &overlap {
        let n = (e.index - shift) as u64;
        let ours = Int::from(row[n as usize].clone());
        if ours == e.value {
            matched += 1;
        } else if first_mismatch.is_none() {
            first_mismatch = Some(Mismatch {
                n,
                expected: e.value.clone(),
                actual: ours,
            });
        }
    }
    Ok(CompareReport {
        matched,
        first_mismatch,
        range: (n_lo, n_hi),
    })
}
