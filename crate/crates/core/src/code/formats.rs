//! Text formats: alist for parity-check matrices and Pauli strings for
//! stabilizer generators.
//!
//! alist layout:
//!
//! ```text
//! n r
//! max_col_degree max_row_degree
//! <n column degrees>
//! <r row degrees>
//! <n lines of 1-based row indices, zero-padded to max_col_degree>
//! <r lines of 1-based column indices, zero-padded to max_row_degree>
//! ```
//!
//! Over GF(q) with q > 2 every index may be followed by its coefficient
//! (padding then comes in `0 0` pairs). Lines without coefficients mean 1.

use std::fmt::Write as _;

use crate::code::stabilizer::StabilizerCode;
use crate::code::ParityCheckMatrix;
use crate::error::{Error, Result};
use crate::quaternary::QuaternaryVector;

/// Either kind of code a file can describe.
#[derive(Clone, Debug)]
pub enum CodeFile {
    Classical(ParityCheckMatrix),
    Stabilizer(StabilizerCode),
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found {t:?}")))
        })
        .collect()
}

/// Parses one adjacency line holding `deg` entries. Returns 0-based
/// `(index, coefficient)` pairs.
fn adjacency(line: usize, toks: &[usize], deg: usize, max_deg: usize) -> Result<Vec<(usize, usize)>> {
    let plain_ok = (toks.len() == deg || toks.len() == max_deg)
        && toks[..deg.min(toks.len())].iter().all(|&x| x != 0)
        && toks.iter().skip(deg).all(|&x| x == 0);
    if plain_ok && toks.len() >= deg {
        return Ok(toks[..deg].iter().map(|&x| (x - 1, 1)).collect());
    }
    let pairs_ok = toks.len().is_multiple_of(2)
        && (toks.len() == 2 * deg || toks.len() == 2 * max_deg)
        && toks.chunks(2).take(deg).all(|p| p[0] != 0)
        && toks.iter().skip(2 * deg).all(|&x| x == 0);
    if pairs_ok {
        return Ok(toks.chunks(2).take(deg).map(|p| (p[0] - 1, p[1])).collect());
    }
    Err(Error::parse(
        line,
        format!(
            "expected {deg} indices (optionally with coefficients), found {} tokens",
            toks.len()
        ),
    ))
}

/// Reads an alist file over GF(q).
pub fn read_alist(text: &str, q: usize) -> Result<ParityCheckMatrix> {
    let mut lines = content_lines(text);
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("unexpected end of file, expected {what}")))
    };
    let (l, s) = next("\"n r\"")?;
    let head = numbers(l, s)?;
    let [n, r] = head[..] else {
        return Err(Error::parse(l, "first line must be \"n r\""));
    };
    let (l, s) = next("maximum degrees")?;
    let maxes = numbers(l, s)?;
    let [max_col, max_row] = maxes[..] else {
        return Err(Error::parse(l, "second line must hold two maximum degrees"));
    };
    let (l, s) = next("column degrees")?;
    let col_deg = numbers(l, s)?;
    if col_deg.len() != n || col_deg.iter().any(|&d| d > max_col) {
        return Err(Error::parse(l, format!("expected {n} column degrees ≤ {max_col}")));
    }
    let (l, s) = next("row degrees")?;
    let row_deg = numbers(l, s)?;
    if row_deg.len() != r || row_deg.iter().any(|&d| d > max_row) {
        return Err(Error::parse(l, format!("expected {r} row degrees ≤ {max_row}")));
    }

    let mut from_cols: Vec<Vec<(usize, u8)>> = vec![Vec::new(); r];
    for (j, &deg) in col_deg.iter().enumerate() {
        let (l, s) = next("a column adjacency line")?;
        for (i, a) in adjacency(l, &numbers(l, s)?, deg, max_col)? {
            if i >= r {
                return Err(Error::parse(l, format!("row index {} exceeds r = {r}", i + 1)));
            }
            if a == 0 || a >= q {
                return Err(Error::parse(
                    l,
                    format!("coefficient {a} is not a nonzero element of GF({q})"),
                ));
            }
            from_cols[i].push((j, a as u8));
        }
    }
    let mut rows: Vec<Vec<(usize, u8)>> = Vec::with_capacity(r);
    for &deg in &row_deg {
        let (l, s) = next("a row adjacency line")?;
        let mut row = Vec::with_capacity(deg);
        for (j, a) in adjacency(l, &numbers(l, s)?, deg, max_row)? {
            if j >= n {
                return Err(Error::parse(l, format!("column index {} exceeds n = {n}", j + 1)));
            }
            if a == 0 || a >= q {
                return Err(Error::parse(
                    l,
                    format!("coefficient {a} is not a nonzero element of GF({q})"),
                ));
            }
            row.push((j, a as u8));
        }
        row.sort_unstable();
        if row.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::parse(l, "repeated column index"));
        }
        rows.push(row);
    }
    if let Some((l, _)) = lines.next() {
        return Err(Error::parse(l, "trailing content after the row lists"));
    }
    for (i, row) in rows.iter().enumerate() {
        let mut c = from_cols[i].clone();
        c.sort_unstable();
        if &c != row {
            return Err(Error::parse(
                0,
                format!("column and row lists disagree on row {}", i + 1),
            ));
        }
    }
    ParityCheckMatrix::from_sparse(q, n, rows)
}

/// Writes an alist file; coefficients are included when `q > 2`.
pub fn write_alist(h: &ParityCheckMatrix) -> String {
    let pairs = h.q() > 2;
    let cols = h.columns();
    let col_deg: Vec<usize> = cols.iter().map(Vec::len).collect();
    let row_deg: Vec<usize> = h.rows().iter().map(Vec::len).collect();
    let max_col = col_deg.iter().copied().max().unwrap_or(0);
    let max_row = row_deg.iter().copied().max().unwrap_or(0);
    let join = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let entries = |list: &[(usize, u8)], width: usize| {
        let mut toks = Vec::new();
        for &(i, a) in list {
            toks.push((i + 1).to_string());
            if pairs {
                toks.push(a.to_string());
            }
        }
        for _ in list.len()..width {
            toks.push("0".into());
            if pairs {
                toks.push("0".into());
            }
        }
        toks.join(" ")
    };
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", h.n(), h.r());
    let _ = writeln!(out, "{max_col} {max_row}");
    let _ = writeln!(out, "{}", join(&col_deg));
    let _ = writeln!(out, "{}", join(&row_deg));
    for c in &cols {
        let _ = writeln!(out, "{}", entries(c, max_col));
    }
    for row in h.rows() {
        let _ = writeln!(out, "{}", entries(row, max_row));
    }
    out
}

/// Parses a single Pauli string such as `XZZXI`. A leading phase (`+`, `-`,
/// `i`, `-i`, `+i`) is accepted and ignored; whitespace is ignored.
pub fn parse_pauli_string(s: &str, line: usize) -> Result<QuaternaryVector> {
    let mut body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    for phase in ["+i", "-i", "+", "-", "i"] {
        if let Some(rest) = body.strip_prefix(phase) {
            body = rest.to_string();
            break;
        }
    }
    let vals = body
        .chars()
        .map(|c| match c.to_ascii_uppercase() {
            'I' => Ok(0u8),
            'Z' => Ok(1),
            'X' => Ok(2),
            'Y' => Ok(3),
            other => Err(Error::parse(line, format!("unexpected Pauli symbol {other:?}"))),
        })
        .collect::<Result<Vec<u8>>>()?;
    if vals.is_empty() {
        return Err(Error::parse(line, "empty Pauli string"));
    }
    QuaternaryVector::from_gf4(&vals)
}

/// Reads a Pauli text file: one generator per line, `#` comments.
pub fn read_pauli(text: &str) -> Result<StabilizerCode> {
    let mut gens = Vec::new();
    let mut n = None;
    for (l, s) in content_lines(text) {
        let g = parse_pauli_string(s, l)?;
        match n {
            None => n = Some(g.len()),
            Some(n) if n != g.len() => {
                return Err(Error::parse(
                    l,
                    format!("generator of length {} in a file of length {n}", g.len()),
                ))
            }
            _ => {}
        }
        gens.push(g);
    }
    let n = n.ok_or_else(|| Error::parse(0, "no generators"))?;
    StabilizerCode::new(n, gens)
}

pub fn write_pauli(code: &StabilizerCode) -> String {
    let mut out = format!("# [[{}, {}]] stabilizer code\n", code.n(), code.k());
    for g in code.generators() {
        out.push_str(&g.to_pauli());
        out.push('\n');
    }
    out
}

/// Detects the format: alist files start with digits, Pauli files with a
/// Pauli symbol or phase.
pub fn read_code(text: &str, q: usize) -> Result<CodeFile> {
    let first = content_lines(text)
        .next()
        .ok_or_else(|| Error::parse(0, "empty code file"))?;
    if first.1.starts_with(|c: char| c.is_ascii_digit()) {
        read_alist(text, q).map(CodeFile::Classical)
    } else {
        read_pauli(text).map(CodeFile::Stabilizer)
    }
}
