//! Plain-text matrix files.
//!
//! One matrix row per line, whitespace-separated decimal values; the
//! dimension is inferred from the number of lines and every row must have
//! that many values. Values are written with Rust's shortest round-trip
//! float formatting, so save → load reproduces every entry bit for bit.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Write a matrix in the text format.
pub fn save_matrix(a: &SymmetricMatrix, path: &Path) -> Result<()> {
    let n = a.n();
    let mut out = String::new();
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&a.get(i, j).to_string());
        }
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

/// Read a matrix from the text format.
///
/// Input that is square but not symmetric is rejected (the error reports
/// the worst `|a[i][j] - a[j][i]|`) unless `symmetrize` is set, in which
/// case `(R + Rᵀ)/2` is loaded instead.
pub fn load_matrix(path: &Path, symmetrize: bool) -> Result<SymmetricMatrix> {
    let text = fs::read_to_string(path)?;
    parse_matrix(&text, symmetrize)
}

fn parse_matrix(text: &str, symmetrize: bool) -> Result<SymmetricMatrix> {
    // Trailing blank lines are tolerated; anything else must be a row.
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .collect();
    let last_content = lines
        .iter()
        .rposition(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| Error::Parse {
            line: 1,
            message: "file contains no matrix rows".into(),
        })?;
    let lines = &lines[..=last_content];

    let n = lines.len();
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n);
    for &(line_no, line) in lines {
        let mut row = Vec::with_capacity(n);
        for token in line.split_whitespace() {
            let value: f64 = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid number '{token}'"),
            })?;
            if !value.is_finite() {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("non-finite value '{token}'"),
                });
            }
            row.push(value);
        }
        if row.len() != n {
            return Err(Error::Parse {
                line: line_no,
                message: format!(
                    "expected {n} values (matrix has {n} rows), found {}",
                    row.len()
                ),
            });
        }
        rows.push(row);
    }

    if symmetrize {
        SymmetricMatrix::symmetrize(&rows)
    } else {
        SymmetricMatrix::from_rows(&rows)
    }
}
