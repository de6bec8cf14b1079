//! Graph file formats: edge-list text, graph6 and DOT export.
//!
//! Edge-list format: first line `n m`, then `m` lines `u v` with `0 <= u < v < n`.
//! graph6 is the standard printable-ASCII encoding, supported for n <= 62.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parse the `n m` / `u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge-list file".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), "vertex count", 1)?;
    let m: usize = parse_field(parts.next(), "edge count", 1)?;
    if parts.next().is_some() {
        return Err(Error::Parse("header has trailing fields".into()));
    }

    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines.by_ref().take(m) {
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), "u", lineno + 1)?;
        let v: usize = parse_field(parts.next(), "v", lineno + 1)?;
        if parts.next().is_some() {
            return Err(Error::Parse(format!("line {}: trailing fields", lineno + 1)));
        }
        if u >= v {
            return Err(Error::Parse(format!(
                "line {}: edges must satisfy u < v, got {u} {v}",
                lineno + 1
            )));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(Error::Parse(format!(
            "expected {m} edges, found only {}",
            edges.len()
        )));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse(format!(
            "line {}: more than the declared {m} edges",
            lineno + 1
        )));
    }

    let mut seen = std::collections::HashSet::new();
    for &e in &edges {
        if !seen.insert(e) {
            return Err(Error::Parse(format!("duplicate edge {} {}", e.0, e.1)));
        }
    }
    Graph::from_edges(n, &edges)
}

fn parse_field(field: Option<&str>, what: &str, lineno: usize) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("line {lineno}: missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("line {lineno}: {what} is not a number")))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encode to graph6 (n <= 62 only, single-byte order).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Graph6TooLarge { n });
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    // upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    Ok(out)
}

/// Decode graph6 (optionally prefixed with the `>>graph6<<` header).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Parse("empty graph6 input".into()))?;
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 line".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("invalid graph6 byte {b:#x}")));
        }
    }
    if bytes[0] == 126 {
        return Err(Error::Parse(
            "multi-byte graph6 orders (n > 62) are not supported".into(),
        ));
    }
    let n = (bytes[0] - 63) as usize;
    let pair_count = n * (n - 1) / 2;
    let need = pair_count.div_ceil(6);
    if bytes.len() != 1 + need {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {need}",
            bytes.len() - 1
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + idx / 6] - 63;
            let bit = (byte >> (5 - idx % 6)) & 1;
            if bit == 1 {
                edges.push((u, v));
            }
            idx += 1;
            if idx == pair_count {
                break 'outer;
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Parse a graph file, auto-detecting the format when `format` is `Auto`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Auto,
    EdgeList,
    Graph6,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::Auto => {
            let first = text.lines().map(str::trim).find(|l| !l.is_empty());
            let looks_like_edge_list = first.is_some_and(|l| {
                let mut parts = l.split_whitespace();
                let a = parts.next().is_some_and(|t| t.parse::<usize>().is_ok());
                let b = parts.next().is_some_and(|t| t.parse::<usize>().is_ok());
                a && b && parts.next().is_none()
            });
            if looks_like_edge_list {
                parse_edge_list(text)
            } else {
                parse_graph6(text)
            }
        }
    }
}

pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
