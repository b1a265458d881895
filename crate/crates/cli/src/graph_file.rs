//! The plain-text multigraph format.
//!
//! ```text
//! # comment lines start with '#'
//! n 3
//! 0 1 3
//! 0 2 1
//! 1 2 1
//! ```
//!
//! The first non-comment line is `n <count>`. Every following line is
//! `u v m` with `0 <= u < v < n` and `m >= 1`; each pair appears at most once.
//! Blank lines are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use multispec::Multigraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed line: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate pair ({u}, {v})")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("missing 'n <count>' header")]
    MissingHeader,
}

impl ParseError {
    /// 1-based line number, if the error is tied to a line.
    pub fn line(&self) -> Option<usize> {
        match *self {
            ParseError::Malformed { line, .. }
            | ParseError::Loop { line, .. }
            | ParseError::OutOfRange { line, .. }
            | ParseError::Duplicate { line, .. } => Some(line),
            ParseError::MissingHeader => None,
        }
    }
}

fn malformed(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        reason: reason.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| malformed(line, format!("{what} '{token}' is not a non-negative integer")))
}

pub fn parse_graph(text: &str) -> Result<Multigraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let n: usize = match tokens.as_slice() {
        ["n", count] => number(header_line, count, "vertex count")?,
        _ => return Err(malformed(header_line, "expected 'n <count>'")),
    };

    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [u, v, m] = tokens.as_slice() else {
            return Err(malformed(line, format!("expected 'u v m', got {} fields", tokens.len())));
        };
        let u: usize = number(line, u, "vertex")?;
        let v: usize = number(line, v, "vertex")?;
        let m: u64 = number(line, m, "multiplicity")?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::OutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(ParseError::Loop { line, vertex: u });
        }
        if u > v {
            return Err(malformed(line, format!("pair ({u}, {v}) must be written with u < v")));
        }
        if m == 0 {
            return Err(malformed(line, "multiplicity must be at least 1"));
        }
        if !seen.insert((u, v)) {
            return Err(ParseError::Duplicate { line, u, v });
        }
        edges.push((u, v, m));
    }
    // pairs are distinct and in range, so construction cannot fail
    Ok(Multigraph::from_edges(n, edges).expect("validated edge list"))
}

/// Canonical text: header, then pairs in lexicographic order.
pub fn render_graph(g: &Multigraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v, m) in g.edges() {
        writeln!(out, "{u} {v} {m}").expect("writing to a String");
    }
    out
}
