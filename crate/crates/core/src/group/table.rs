//! Cayley table text format.
//!
//! ```text
//! 4
//! 0 1 2 3
//! 1 0 3 2
//! 2 3 0 1
//! 3 2 1 0
//! #labels e a b ab
//! ```
//!
//! Row `i`, column `j` holds the 0-based index of `x_i * x_j`. Blank lines are
//! ignored; the `#labels` line is optional.

use super::{FiniteGroup, DEFAULT_ASSOCIATIVITY_BOUND};
use crate::error::{Error, Result};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// 1-based column of each whitespace-separated token in `line`.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (line[..offset].chars().count() + 1, tok)
    })
}

pub fn parse_table(text: &str) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (first_no, first) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "empty table file"))?;
    let mut head = tokens(first);
    let (col, tok) = head
        .next()
        .ok_or_else(|| parse_err(first_no, 1, "missing element count"))?;
    let n: usize = tok.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        parse_err(
            first_no,
            col,
            format!("expected a positive count, found {tok:?}"),
        )
    })?;
    if let Some((col, tok)) = head.next() {
        return Err(parse_err(
            first_no,
            col,
            format!("unexpected token {tok:?} after count"),
        ));
    }

    let mut rows = Vec::with_capacity(n);
    let mut labels = None;
    let mut last_line = first_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if let Some(rest) = line.trim_start().strip_prefix("#labels") {
            if rows.len() != n {
                return Err(parse_err(line_no, 1, "#labels must follow all table rows"));
            }
            let l: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if l.len() != n {
                return Err(parse_err(
                    line_no,
                    1,
                    format!("expected {n} labels, found {}", l.len()),
                ));
            }
            labels = Some(l);
            continue;
        }
        if rows.len() == n {
            return Err(parse_err(line_no, 1, format!("more than {n} table rows")));
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in tokens(line) {
            let x: usize = tok
                .parse()
                .map_err(|_| parse_err(line_no, col, format!("{tok:?} is not an element index")))?;
            if x >= n {
                return Err(parse_err(
                    line_no,
                    col,
                    format!("index {x} out of range 0..{n}"),
                ));
            }
            row.push(x);
        }
        if row.len() != n {
            return Err(parse_err(
                line_no,
                line.len() + 1,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_err(
            last_line + 1,
            1,
            format!("expected {n} table rows, found {}", rows.len()),
        ));
    }
    FiniteGroup::from_table(rows, labels, DEFAULT_ASSOCIATIVITY_BOUND)
}
