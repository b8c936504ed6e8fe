//! graph6 encoding (one graph per line).
//!
//! Only the 1-byte and 4-byte vertex-count prefixes are needed since the
//! engine is capped at 64 vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminators are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };

    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(parse_err(skip + i, format!("byte 0x{b:02x} outside the graph6 range")));
        }
    }

    let (n, mut pos) = match body.first() {
        None => return Err(parse_err(skip, "empty input")),
        Some(&126) => {
            if body.get(1) == Some(&126) {
                return Err(parse_err(skip + 1, "8-byte vertex count exceeds the 64-vertex limit"));
            }
            if body.len() < 4 {
                return Err(parse_err(skip + body.len(), "truncated vertex count"));
            }
            let n = body[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
            if n < 63 {
                return Err(parse_err(skip, format!("non-minimal 4-byte vertex count {n}")));
            }
            (n, 4)
        }
        Some(&b) => ((b - BIAS) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(parse_err(skip, format!("vertex count {n} exceeds the 64-vertex limit")));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = body.len() - pos;
    if have < need {
        return Err(parse_err(skip + body.len(), format!("truncated: expected {need} adjacency bytes, found {have}")));
    }
    if have > need {
        return Err(parse_err(skip + pos + need, "trailing garbage after adjacency data"));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if need > 0 {
        let pad = need * 6 - bits;
        let last = body[pos + need - 1] - BIAS;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(parse_err(skip + pos + need - 1, "non-zero padding bits"));
        }
    }
    pos += need;
    debug_assert_eq!(pos, body.len());
    Ok(Graph::from_adjacency(adj))
}

/// Encodes `g` without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
