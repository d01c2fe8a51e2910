//! The `QMAT v1` text format.
//!
//! ```text
//! QMAT 2 2
//! # comment lines start with '#'
//! 1 1k
//! -j 0.5+2i
//! ```

use crate::error::{Error, Result};
use crate::qmat::QuatMatrix;
use crate::text::{format_quaternion, parse_quaternion};

/// Parses a `QMAT v1` document. Error line numbers are 1-based.
pub fn read_qmat(src: &str) -> Result<QuatMatrix> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing QMAT header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "QMAT" {
        return Err(Error::parse(hline, "expected 'QMAT <rows> <cols>'"));
    }
    let dim = |s: &str| -> Result<usize> {
        match s.parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(Error::parse(hline, format!("bad dimension '{s}'"))),
        }
    };
    let (rows, cols) = (dim(fields[1])?, dim(fields[2])?);

    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(hline, format!("expected {rows} rows, found {r}")))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != cols {
            return Err(Error::parse(ln, format!("expected {cols} entries, found {}", tokens.len())));
        }
        for t in tokens {
            let q = parse_quaternion(t).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::parse(ln, msg),
                other => other,
            })?;
            data.push(q);
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(ln, "trailing content after matrix rows"));
    }
    QuatMatrix::new(rows, cols, data)
}

pub fn write_qmat(a: &QuatMatrix) -> String {
    let mut out = format!("QMAT {} {}\n", a.rows(), a.cols());
    for r in 0..a.rows() {
        let row: Vec<String> = (0..a.cols()).map(|c| format_quaternion(&a[(r, c)])).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
