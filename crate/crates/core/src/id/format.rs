//! Plain-text ID catalogs.
//!
//! ```text
//! ID N=3 M=4 sign=-1
//! -1 YXY
//! +1 YYZ
//! +1 ZXZ
//! +1 ZYY
//! ```
//!
//! Blocks are separated by blank lines. Lines starting with `#` are ignored
//! on input.

use std::fmt::Write as _;

use super::IdTable;
use crate::error::{Error, Result};
use crate::pauli::PauliString;

fn fmt_pm(v: i8) -> &'static str {
    if v < 0 {
        "-1"
    } else {
        "+1"
    }
}

fn parse_pm(s: &str, line: usize) -> Result<i8> {
    match s {
        "+1" | "1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(Error::parse(
            line,
            format!("expected +1 or -1, found {s:?}"),
        )),
    }
}

pub fn write_catalog(tables: &[IdTable]) -> String {
    let mut out = String::new();
    for (k, t) in tables.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "ID N={} M={} sign={}",
            t.n_qubits(),
            t.n_rows(),
            fmt_pm(t.sign())
        );
        for (row, &l) in t.rows().iter().zip(t.eigenvalues()) {
            let _ = writeln!(out, "{} {}", fmt_pm(l), row.to_letters());
        }
    }
    out
}

struct Header {
    line: usize,
    n: usize,
    m: usize,
    sign: i8,
}

fn parse_header(text: &str, line: usize) -> Result<Header> {
    let mut parts = text.split_whitespace();
    if parts.next() != Some("ID") {
        return Err(Error::parse(line, "expected a header starting with \"ID\""));
    }
    let (mut n, mut m, mut sign) = (None, None, None);
    for kv in parts {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::parse(line, format!("malformed header field {kv:?}")))?;
        let bad = |_| Error::parse(line, format!("bad value in {kv:?}"));
        match k {
            "N" => n = Some(v.parse::<usize>().map_err(bad)?),
            "M" => m = Some(v.parse::<usize>().map_err(bad)?),
            "sign" => sign = Some(parse_pm(v, line)?),
            _ => return Err(Error::parse(line, format!("unknown header field {k:?}"))),
        }
    }
    match (n, m, sign) {
        (Some(n), Some(m), Some(sign)) if n > 0 && m > 0 => Ok(Header { line, n, m, sign }),
        _ => Err(Error::parse(line, "header needs positive N, M and a sign")),
    }
}

/// Parses every block. Tables are shape-checked but not validated as IDs.
pub fn parse_catalog(text: &str) -> Result<Vec<IdTable>> {
    let mut tables = Vec::new();
    let mut current: Option<(Header, Vec<PauliString>, Vec<i8>)> = None;

    let finish = |cur: (Header, Vec<PauliString>, Vec<i8>)| -> Result<IdTable> {
        let (h, rows, eig) = cur;
        if rows.len() != h.m {
            return Err(Error::parse(
                h.line,
                format!("header says M={} but {} rows follow", h.m, rows.len()),
            ));
        }
        IdTable::new(rows, eig, h.sign)
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.starts_with('#') {
            continue;
        }
        if s.is_empty() {
            if let Some(cur) = current.take() {
                tables.push(finish(cur)?);
            }
            continue;
        }
        if s.starts_with("ID") {
            if let Some(cur) = current.take() {
                tables.push(finish(cur)?);
            }
            current = Some((parse_header(s, line)?, Vec::new(), Vec::new()));
            continue;
        }
        let Some((h, rows, eig)) = current.as_mut() else {
            return Err(Error::parse(line, "row outside of an ID block"));
        };
        let (l, letters) = s
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::parse(line, "expected \"<eigenvalue> <letters>\""))?;
        let row = PauliString::from_letter_str(letters.trim())
            .map_err(|e| Error::parse(line, e.to_string()))?;
        if row.n_qubits() != h.n {
            return Err(Error::parse(
                line,
                format!("row has {} letters, header says N={}", row.n_qubits(), h.n),
            ));
        }
        if rows.len() == h.m {
            return Err(Error::parse(line, format!("more than M={} rows", h.m)));
        }
        eig.push(parse_pm(l, line)?);
        rows.push(row);
    }
    if let Some(cur) = current.take() {
        tables.push(finish(cur)?);
    }
    Ok(tables)
}
