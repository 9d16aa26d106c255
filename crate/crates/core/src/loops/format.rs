//! Plain-text loop tables.
//!
//! ```text
//! # comments run to the end of the line
//! order 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! The first non-comment line is `order N`, followed by `N` rows of `N`
//! whitespace-separated integers in `0..N`. Row `r`, column `c` holds `r·c`.

use std::fmt::Write as _;

use thiserror::Error;

use super::{LoopTable, MAX_ORDER};
use crate::error::{LoopError, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Loop(#[from] LoopError),
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

/// Non-comment tokens grouped by line, with 1-based positions.
fn tokenize(input: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content
            .char_indices()
            .chain(std::iter::once((content.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &content[s..pos],
                        line: idx + 1,
                        column: content[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            lines.push(tokens);
        }
    }
    lines
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a loop table. Latin violations are reported at the offending
/// cell; a missing unit is a [`LoopError`].
pub fn parse_loop(input: &str, normalize: bool) -> Result<LoopTable, ReadError> {
    let lines = tokenize(input);
    let last_line = input.lines().count().max(1);
    let Some((header, body)) = lines.split_first() else {
        return Err(err(last_line, 1, "missing `order N` header").into());
    };
    if header[0].text != "order" {
        return Err(err(header[0].line, header[0].column, "expected `order N`").into());
    }
    if header.len() != 2 {
        let (line, column) = header
            .get(2)
            .map_or((header[0].line, header[0].column), |t| (t.line, t.column));
        return Err(err(line, column, "expected exactly one integer after `order`").into());
    }
    let n: usize = header[1].text.parse().map_err(|_| {
        err(
            header[1].line,
            header[1].column,
            format!("invalid order {:?}", header[1].text),
        )
    })?;
    if n == 0 || n > MAX_ORDER {
        return Err(err(
            header[1].line,
            header[1].column,
            format!("order must be in 1..={MAX_ORDER}"),
        )
        .into());
    }
    if body.len() < n {
        return Err(err(
            last_line,
            1,
            format!("expected {n} rows, found {}", body.len()),
        )
        .into());
    }
    if let Some(extra) = body.get(n) {
        return Err(err(
            extra[0].line,
            extra[0].column,
            "unexpected content after the last row",
        )
        .into());
    }
    let mut rows = Vec::with_capacity(n);
    let mut column_seen: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for tokens in body {
        if tokens.len() != n {
            let t = tokens.get(n).unwrap_or(&tokens[tokens.len() - 1]);
            return Err(err(
                t.line,
                t.column,
                format!("expected {n} entries, found {}", tokens.len()),
            )
            .into());
        }
        let mut row = Vec::with_capacity(n);
        let mut row_seen = vec![false; n];
        for (c, t) in tokens.iter().enumerate() {
            let v: usize = t
                .text
                .parse()
                .map_err(|_| err(t.line, t.column, format!("invalid entry {:?}", t.text)))?;
            if v >= n {
                return Err(err(t.line, t.column, format!("entry {v} out of range 0..{n}")).into());
            }
            if row_seen[v] {
                return Err(err(
                    t.line,
                    t.column,
                    format!("{v} repeats in row {}", rows.len()),
                )
                .into());
            }
            if column_seen[c][v] {
                return Err(err(t.line, t.column, format!("{v} repeats in column {c}")).into());
            }
            row_seen[v] = true;
            column_seen[c][v] = true;
            row.push(v);
        }
        rows.push(row);
    }
    Ok(LoopTable::from_rows(&rows, normalize)?)
}

/// Renders a table in the text format accepted by [`parse_loop`].
pub fn to_text(l: &LoopTable) -> String {
    let n = l.order();
    let width = (n - 1).to_string().len();
    let mut out = format!("order {n}\n");
    for row in l.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}
