//! Text encodings: graph6 and a plain edge list.
//!
//! graph6 stores `n` followed by the upper triangle of the adjacency matrix in
//! column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per
//! printable character offset by 63. The edge-list format is a `n m` header
//! followed by `m` lines of `u v`.

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: byte {offset}: character {byte:#04x} outside 63..=126")]
    BadChar { offset: usize, byte: u8 },
    #[error("graph6: expected {expected} bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("graph6: byte {offset}: nonzero padding bits")]
    TrailingBits { offset: usize },
    #[error("graph6: empty input")]
    Empty,
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Column-major upper-triangle bit order shared by encoder and decoder.
fn upper_triangle(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for (i, j) in upper_triangle(n) {
        chunk = (chunk << 1) | g.has_edge(i, j) as u8;
        filled += 1;
        if filled == 6 {
            out.push(chunk + 63);
            chunk = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::BadChar { offset, byte });
        }
    }
    let six = |k: usize| (bytes[k] - 63) as usize;
    let (n, start) = match bytes {
        [] => return Err(FormatError::Empty),
        [126, 126, ..] => {
            if bytes.len() < 8 {
                return Err(FormatError::BadLength {
                    expected: 8,
                    found: bytes.len(),
                });
            }
            ((2..8).fold(0, |acc, k| (acc << 6) | six(k)), 8)
        }
        [126, ..] => {
            if bytes.len() < 4 {
                return Err(FormatError::BadLength {
                    expected: 4,
                    found: bytes.len(),
                });
            }
            ((1..4).fold(0, |acc, k| (acc << 6) | six(k)), 4)
        }
        _ => (six(0), 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = start + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(FormatError::BadLength {
            expected,
            found: bytes.len(),
        });
    }
    let mut rows = vec![VertexSet::new(); Graph::empty(n)?.n()];
    for (k, (i, j)) in upper_triangle(n).enumerate() {
        let byte = six(start + k / 6);
        if byte >> (5 - k % 6) & 1 == 1 {
            rows[i].insert(j);
            rows[j].insert(i);
        }
    }
    if bits % 6 != 0 {
        let last = expected - 1;
        let pad = 6 - bits % 6;
        if six(last) & ((1 << pad) - 1) != 0 {
            return Err(FormatError::TrailingBits { offset: last });
        }
    }
    Ok(Graph::from_rows(rows)?)
}

/// Parses every non-empty line as graph6, tolerating a leading header.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(from_graph6)
        .collect()
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let pair = |line: usize, l: &str| -> Result<(usize, usize), FormatError> {
        let err = |message: &str| FormatError::EdgeList {
            line,
            message: message.to_string(),
        };
        let mut it = l.split_whitespace();
        let a = it.next().ok_or_else(|| err("missing field"))?;
        let b = it.next().ok_or_else(|| err("missing field"))?;
        if it.next().is_some() {
            return Err(err("expected two integers"));
        }
        let parse = |s: &str| s.parse::<usize>().map_err(|_| err("not an integer"));
        Ok((parse(a)?, parse(b)?))
    };
    let (line, header) = lines.next().ok_or(FormatError::EdgeList {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = pair(line, header)?;
    let edges = lines
        .map(|(line, l)| pair(line, l))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(FormatError::EdgeList {
            line,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Accepts graph6 (one or more lines) or the edge-list format, detected by content.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>, FormatError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Err(FormatError::Empty),
        Some(l)
            if l.split_whitespace().count() == 2
                && l.bytes()
                    .all(|b| b.is_ascii_digit() || b == b' ' || b == b'\t') =>
        {
            Ok(vec![from_edge_list(text)?])
        }
        Some(_) => parse_graph6_lines(text),
    }
}
