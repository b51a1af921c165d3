//! The `.ring` text format.
//!
//! ```text
//! order 2
//! unital yes
//! name Z2
//! 0 1
//! 1 0
//!
//! 0 0
//! 0 1
//! ```
//!
//! Addition table rows, one blank line, multiplication table rows. Nothing
//! but trailing blank lines may follow the multiplication table.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ring::FiniteRing;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn header<'a>(lines: &[&'a str], idx: usize, key: &str) -> Result<&'a str> {
    let line = lines
        .get(idx)
        .ok_or_else(|| parse_err(idx + 1, format!("missing `{key}` line")))?;
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(v), None) if k == key => Ok(v),
        _ => Err(parse_err(idx + 1, format!("expected `{key} <value>`"))),
    }
}

fn table_row(line: &str, lineno: usize, order: usize) -> Result<Vec<usize>> {
    let row = line
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(lineno, format!("invalid integer {tok:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if row.len() != order {
        return Err(parse_err(
            lineno,
            format!("expected {order} entries, found {}", row.len()),
        ));
    }
    Ok(row)
}

/// Parses and validates a ring in `.ring` format.
pub fn parse_ring(text: &str) -> Result<FiniteRing> {
    let lines: Vec<&str> = text.lines().collect();
    let order: usize = header(&lines, 0, "order")?
        .parse()
        .map_err(|_| parse_err(1, "order must be a positive integer"))?;
    if order == 0 {
        return Err(parse_err(1, "order must be a positive integer"));
    }
    let unital = match header(&lines, 1, "unital")? {
        "yes" => true,
        "no" => false,
        other => {
            return Err(parse_err(
                2,
                format!("unital must be yes or no, found {other:?}"),
            ))
        }
    };
    let name = header(&lines, 2, "name")?.to_string();

    let mut idx = 3;
    let read_table = |idx: &mut usize| -> Result<Vec<Vec<usize>>> {
        let mut rows = Vec::with_capacity(order);
        for _ in 0..order {
            let line = lines
                .get(*idx)
                .ok_or_else(|| parse_err(*idx + 1, "table ended early"))?;
            if line.trim().is_empty() {
                return Err(parse_err(*idx + 1, "table ended early"));
            }
            rows.push(table_row(line, *idx + 1, order)?);
            *idx += 1;
        }
        Ok(rows)
    };
    let add = read_table(&mut idx)?;
    match lines.get(idx) {
        Some(l) if l.trim().is_empty() => idx += 1,
        Some(_) => {
            return Err(parse_err(
                idx + 1,
                "expected a blank line after the addition table",
            ))
        }
        None => return Err(parse_err(idx + 1, "missing multiplication table")),
    }
    let mul = read_table(&mut idx)?;
    if let Some(pos) = lines[idx..].iter().position(|l| !l.trim().is_empty()) {
        return Err(parse_err(
            idx + pos + 1,
            "trailing content after multiplication table",
        ));
    }
    FiniteRing::from_tables(name, &add, &mul, unital)
}

/// Serializes a ring; `parse_ring(&format_ring(r)) == r`.
pub fn format_ring(ring: &FiniteRing) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "order {}", ring.order());
    let _ = writeln!(
        out,
        "unital {}",
        if ring.is_unital() { "yes" } else { "no" }
    );
    let _ = writeln!(out, "name {}", ring.name());
    let write_table = |out: &mut String, rows: Vec<Vec<usize>>| {
        for row in rows {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
    };
    write_table(&mut out, ring.add_table());
    out.push('\n');
    write_table(&mut out, ring.mul_table());
    out
}

pub fn load_ring(path: &Path) -> Result<FiniteRing> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_ring(&text)
}

pub fn save_ring(ring: &FiniteRing, path: &Path) -> Result<()> {
    fs::write(path, format_ring(ring)).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}
