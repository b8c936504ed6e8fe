//! Isomorph-free exhaustive generation of small graphs by canonical
//! augmentation: a graph on m vertices is accepted from its parent on m − 1
//! vertices only when the added vertex lies in the orbit of a canonically
//! chosen vertex, so every isomorphism class arises from exactly one parent.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, canonical_labeling_with, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub const MAX_GENERATED_ORDER: usize = 10;

/// One graph per isomorphism class on exactly `n` vertices, canonically
/// labelled, in a deterministic order.
pub fn generate_small_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_GENERATED_ORDER).contains(&n) {
        return Err(Error::Argument(format!("builtin generation supports 1..={MAX_GENERATED_ORDER} vertices, got {n}")));
    }
    let mut level = vec![Graph::new(1)?];
    for _ in 1..n {
        level = level.par_iter().map(children).collect::<Vec<_>>().into_iter().flatten().collect();
    }
    Ok(level)
}

/// Every isomorphism class on `1..=max_n` vertices, smallest order first.
pub fn generate_up_to(max_n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_GENERATED_ORDER).contains(&max_n) {
        return Err(Error::Argument(format!("builtin generation supports 1..={MAX_GENERATED_ORDER} vertices, got {max_n}")));
    }
    let mut all = Vec::new();
    let mut level = vec![Graph::new(1)?];
    all.extend(level.iter().cloned());
    for _ in 1..max_n {
        level = level.par_iter().map(children).collect::<Vec<_>>().into_iter().flatten().collect();
        all.extend(level.iter().cloned());
    }
    Ok(all)
}

/// Invariant used to pick the canonical deletion vertex cheaply.
fn vertex_invariant(g: &Graph, v: Vertex) -> (usize, usize) {
    let nb = g.neighbors(v);
    (nb.len(), nb.iter().map(|w| g.degree(w)).sum())
}

fn children(parent: &Graph) -> Vec<Graph> {
    let m = parent.order();
    let w = m;
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out = Vec::new();
    for bits in 0..1u64 << m {
        let mut adj: Vec<VertexSet> = (0..m).map(|v| parent.neighbors(v)).collect();
        let s = VertexSet::from_bits(bits);
        for v in s {
            adj[v].insert(w);
        }
        adj.push(s);
        let h = Graph::from_adjacency(adj);

        let inv: Vec<_> = (0..=m).map(|v| vertex_invariant(&h, v)).collect();
        let best = *inv.iter().max().unwrap();
        if inv[w] != best {
            continue;
        }
        let candidates: VertexSet = (0..=m).filter(|&v| inv[v] == best).collect();
        let lab = canonical_labeling(&h);
        if candidates.len() > 1 {
            let c = candidates.iter().min_by_key(|&v| lab.perm[v]).unwrap();
            if c != w && !same_orbit(&h, w, c) {
                continue;
            }
        }
        if seen.insert(lab.form.clone()) {
            out.push(lab.form.to_graph());
        }
    }
    out
}

fn same_orbit(g: &Graph, a: Vertex, b: Vertex) -> bool {
    let rest = |x: Vertex| g.vertices() - VertexSet::singleton(x);
    let fa = canonical_labeling_with(g, &[VertexSet::singleton(a), rest(a)]).form;
    let fb = canonical_labeling_with(g, &[VertexSet::singleton(b), rest(b)]).form;
    fa == fb
}
