//! Line-oriented Cayley-table files.
//!
//! ```text
//! # two-element chain
//! elements e f
//! row e: e f
//! row f: f f
//! ```
//!
//! Entry `j` of `row a:` is `a` times the `j`-th element of the `elements`
//! line. `#` starts a comment. Rows may appear in any order but each element
//! needs exactly one.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{FiniteInverseSemigroup, SemigroupError};

/// Largest table the parser accepts; validation is cubic in the order.
pub const MAX_FILE_ORDER: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] SemigroupError),
}

fn syntax(line: usize, message: impl Into<String>) -> TableParseError {
    TableParseError::Syntax { line, message: message.into() }
}

pub fn parse_table(text: &str) -> Result<FiniteInverseSemigroup, TableParseError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        (!content.is_empty()).then_some((i + 1, content))
    });

    let (header_line, header) = lines.next().ok_or_else(|| syntax(1, "missing `elements` line"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("elements") {
        return Err(syntax(header_line, "first line must start with `elements`"));
    }
    let names: Vec<String> = tokens.map(String::from).collect();
    if names.is_empty() {
        return Err(syntax(header_line, "`elements` lists no names"));
    }
    if names.len() > MAX_FILE_ORDER {
        return Err(syntax(header_line, format!("more than {MAX_FILE_ORDER} elements")));
    }
    let mut index = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(TableParseError::Invalid(SemigroupError::DuplicateName(name.clone())));
        }
    }

    let n = names.len();
    let mut rows: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line, content) in lines {
        let (head, body) =
            content.split_once(':').ok_or_else(|| syntax(line, "expected `row <name>: ...`"))?;
        let head: Vec<&str> = head.split_whitespace().collect();
        let row_name = match head.as_slice() {
            ["row", name] => *name,
            _ => return Err(syntax(line, "expected `row <name>:`")),
        };
        let r = *index.get(row_name).ok_or_else(|| syntax(line, format!("unknown element {row_name:?}")))?;
        if rows[r].is_some() {
            return Err(syntax(line, format!("duplicate row for {row_name:?}")));
        }
        let entries = body
            .split_whitespace()
            .map(|tok| index.get(tok).copied().ok_or_else(|| syntax(line, format!("unknown element {tok:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if entries.len() != n {
            return Err(syntax(line, format!("row {row_name:?} has {} entries, expected {n}", entries.len())));
        }
        rows[r] = Some(entries);
    }
    let table = rows
        .into_iter()
        .enumerate()
        .map(|(i, row)| row.ok_or_else(|| syntax(0, format!("missing row for {:?}", names[i]))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteInverseSemigroup::validate(names, table)?)
}

pub fn render_table(s: &FiniteInverseSemigroup) -> String {
    let mut out = String::from("elements");
    for name in s.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for a in 0..s.order() {
        write!(out, "row {}:", s.name(a)).unwrap();
        for b in 0..s.order() {
            out.push(' ');
            out.push_str(s.name(s.mul(a, b)));
        }
        out.push('\n');
    }
    out
}
