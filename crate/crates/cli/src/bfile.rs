//! Reader for OEIS-style b-files: one `<index> <value>` pair per line,
//! `#` comment lines and blank lines ignored.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: i64,
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: malformed b-file entry {content:?}")]
    Malformed { line: usize, content: String },

    #[error("line {line}: index {index} does not follow previous index {previous}")]
    NonIncreasing {
        line: usize,
        index: i64,
        previous: i64,
    },
}

/// Parses b-file text. Line numbers in errors are 1-based and count
/// comment and blank lines.
pub fn parse_bfile(content: &str) -> Result<Vec<BFileEntry>, BFileError> {
    let mut entries: Vec<BFileEntry> = Vec::new();
    for (k, raw) in content.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || BFileError::Malformed {
            line,
            content: raw.to_string(),
        };
        let mut fields = trimmed.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let index: i64 = index.parse().map_err(|_| malformed())?;
        let value: BigInt = value.parse().map_err(|_| malformed())?;
        if let Some(prev) = entries.last() {
            if index <= prev.index {
                return Err(BFileError::NonIncreasing {
                    line,
                    index,
                    previous: prev.index,
                });
            }
        }
        entries.push(BFileEntry { index, value });
    }
    Ok(entries)
}
