//! Reading graphs from text: graph6 lines, edge lists, and named fixtures.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// Parses the edge-list format: first line `n`, then one `u v` pair per line,
/// 0-indexed. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first_line, header) = lines.next().ok_or(Error::EdgeList { line: 1, message: "missing vertex count".into() })?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::EdgeList { line: first_line, message: format!("bad vertex count {header:?}") })?;
    let mut g = Graph::new(n)?;
    for (line, l) in lines {
        let mut parts = l.split_whitespace();
        let mut next = || -> Result<usize> {
            let tok = parts.next().ok_or(Error::EdgeList { line, message: "expected two vertices".into() })?;
            tok.parse().map_err(|_| Error::EdgeList { line, message: format!("bad vertex {tok:?}") })
        };
        let (u, v) = (next()?, next()?);
        if parts.next().is_some() {
            return Err(Error::EdgeList { line, message: "trailing tokens".into() });
        }
        g.insert_edge(u, v).map_err(|e| Error::EdgeList { line, message: e.to_string() })?;
    }
    Ok(g)
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.bytes().all(|b| b.is_ascii_digit()))
}

/// Parses file contents as an edge list or a single graph6 line.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    if looks_like_edge_list(text) {
        parse_edge_list(text)
    } else {
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        parse_graph6(line.trim())
    }
}

/// Resolves a graph argument: `fixture:NAME`, a path to an edge-list or
/// graph6 file, or an inline graph6 string.
pub fn load_graph(arg: &str) -> Result<Graph> {
    if let Some(name) = arg.strip_prefix("fixture:") {
        return fixtures::by_name(name)
            .map(|f| f.graph)
            .ok_or_else(|| Error::Argument(format!("unknown fixture {name:?}; known: {}", fixtures::NAMES.join(", "))));
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.into(), source })?;
        return parse_graph_text(&text);
    }
    parse_graph6(arg)
}

/// Reads every non-empty line of a graph6 file.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.into(), source })?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l.trim()))
        .collect()
}
