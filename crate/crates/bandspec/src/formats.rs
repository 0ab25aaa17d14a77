//! Text formats for graph literals and group multiplication tables.
//!
//! Edge lists:
//!
//! ```text
//! n 4
//! 0 1
//! 1 2
//! 2 3
//! 3 0
//! ```
//!
//! The first line declares the vertex count, then one 0-based `u v` pair per
//! line. Blank lines and lines starting with `#` are skipped.
//!
//! Multiplication tables are square integer matrices, one row per line,
//! entries separated by whitespace. Row `g`, column `h` holds `g·h`; element
//! `0` is the identity.

use std::fs;
use std::path::Path;

use bandspec_core::graph::{FiniteGraph, MultTable};
use bandspec_core::LiteralLoader;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] bandspec_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>, FormatError> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| FormatError::Syntax {
                line,
                msg: format!("expected a nonnegative integer, found {tok:?}"),
            })
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<FiniteGraph, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let count = header
        .strip_prefix('n')
        .filter(|rest| rest.starts_with(char::is_whitespace))
        .ok_or(FormatError::MissingHeader)?;
    let n = match numbers(line, count)?.as_slice() {
        [n] => *n,
        _ => return Err(FormatError::Syntax { line, msg: "header must be `n <count>`".into() }),
    };
    let mut edges = Vec::new();
    for (line, l) in lines {
        match numbers(line, l)?.as_slice() {
            [u, v] if u != v && *u < n && *v < n => edges.push((*u, *v)),
            [u, v] => return Err(FormatError::Syntax { line, msg: format!("invalid edge {u} {v} for {n} vertices") }),
            _ => return Err(FormatError::Syntax { line, msg: "expected `u v`".into() }),
        }
    }
    Ok(FiniteGraph::new(n, edges)?)
}

pub fn write_edge_list(g: &FiniteGraph) -> String {
    let mut out = format!("n {}\n", g.n_vertices());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_mult_table(text: &str) -> Result<MultTable, FormatError> {
    let rows = content_lines(text).map(|(line, l)| numbers(line, l)).collect::<Result<Vec<_>, _>>()?;
    Ok(MultTable::new(rows)?)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<FiniteGraph, FormatError> {
    parse_edge_list(&fs::read_to_string(path)?)
}

/// Resolves `lit:<path>` atoms by reading edge-list files from disk.
#[derive(Debug, Clone, Copy, Default)]
pub struct FileLoader;

impl LiteralLoader for FileLoader {
    fn load(&self, path: &str) -> Result<FiniteGraph, String> {
        read_edge_list(path).map_err(|e| e.to_string())
    }
}
