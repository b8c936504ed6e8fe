//! Canonical labelling by individualization-refinement.
//!
//! A small nauty-style search: partitions are refined to equitable ones,
//! the first non-singleton cell is branched on, and leaves are compared by
//! their relabelled adjacency rows. Automorphisms discovered at leaves prune
//! the first path (orbit pruning) and let equivalent subtrees be abandoned.

use crate::graph::{Graph, Vertex, VertexSet};

/// Relabelled adjacency rows of the canonical leaf. Two graphs are
/// isomorphic iff their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(self.rows.iter().map(|&r| VertexSet::from_bits(r)).collect())
    }
}

#[derive(Clone, Debug)]
pub struct Labeling {
    /// `perm[v]` is the canonical label of vertex `v`.
    pub perm: Vec<Vertex>,
    pub form: CanonicalForm,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_with(g, &[g.vertices()])
}

/// Canonical labelling relative to an ordered initial partition (a vertex
/// colouring). Cells must partition the vertex set; empty cells are dropped.
pub fn canonical_labeling_with(g: &Graph, cells: &[VertexSet]) -> Labeling {
    let n = g.order();
    let mut cells: Vec<VertexSet> = cells.iter().copied().filter(|c| !c.is_empty()).collect();
    debug_assert_eq!(cells.iter().map(|c| c.len()).sum::<usize>(), n);
    if n == 0 {
        return Labeling { perm: Vec::new(), form: CanonicalForm { rows: Vec::new() } };
    }
    refine(g, &mut cells);
    let mut search = Search {
        g,
        first: None,
        best: None,
        first_path: Vec::new(),
        path: Vec::new(),
        autos: Vec::new(),
    };
    search.run(cells, 0, true);
    let (perm, rows) = search.best.expect("search visits at least one leaf");
    Labeling { perm, form: CanonicalForm { rows } }
}

/// Refines `cells` to the coarsest equitable partition finer than it.
/// Splits are ordered by neighbour-count signature, so the result depends only
/// on the isomorphism class of (graph, ordered partition).
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    loop {
        let snapshot = cells.clone();
        let mut next = Vec::with_capacity(g.order());
        let mut split = false;
        for &cell in &snapshot {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, Vertex)> = cell
                .iter()
                .map(|v| {
                    let nb = g.neighbors(v);
                    (snapshot.iter().map(|&c| (nb & c).len() as u8).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut current = VertexSet::EMPTY;
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(current);
                    current = VertexSet::EMPTY;
                    split = true;
                }
                current.insert(keyed[i].1);
            }
            next.push(current);
        }
        *cells = next;
        if !split {
            return;
        }
    }
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<(Vec<Vertex>, Vec<u64>)>,
    best: Option<(Vec<Vertex>, Vec<u64>)>,
    first_path: Vec<Vertex>,
    path: Vec<Vertex>,
    autos: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    /// Returns `Some(level)` when the caller chain should unwind to `level`.
    fn run(&mut self, cells: Vec<VertexSet>, depth: usize, on_first: bool) -> Option<usize> {
        if cells.len() == self.g.order() {
            return self.leaf(&cells);
        }
        let idx = cells.iter().position(|c| c.len() > 1).unwrap();
        let cell = cells[idx];
        let mut tried = VertexSet::EMPTY;
        for v in cell {
            if on_first && !tried.is_empty() && self.in_tried_orbit(v, tried, depth) {
                continue;
            }
            tried.insert(v);
            let mut child = cells.clone();
            child[idx] = VertexSet::singleton(v);
            child.insert(idx + 1, cell - VertexSet::singleton(v));
            refine(self.g, &mut child);
            let child_first = on_first && tried.len() == 1;
            if child_first {
                self.first_path.push(v);
            }
            self.path.push(v);
            let unwind = self.run(child, depth + 1, child_first);
            self.path.pop();
            if let Some(level) = unwind {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[VertexSet]) -> Option<usize> {
        let n = self.g.order();
        let mut perm = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            perm[c.first().unwrap()] = i;
        }
        let mut rows = vec![0u64; n];
        for u in 0..n {
            rows[perm[u]] = self.g.neighbors(u).iter().fold(0u64, |acc, w| acc | 1 << perm[w]);
        }
        let Some((first_perm, first_rows)) = &self.first else {
            self.first = Some((perm.clone(), rows.clone()));
            self.best = Some((perm, rows));
            return None;
        };
        if rows == *first_rows {
            let aut = automorphism(first_perm, &perm);
            self.autos.push(aut);
            let common = self.path.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count();
            return Some(common);
        }
        let (best_perm, best_rows) = self.best.as_ref().unwrap();
        match rows.cmp(best_rows) {
            std::cmp::Ordering::Equal => {
                let aut = automorphism(best_perm, &perm);
                self.autos.push(aut);
            }
            std::cmp::Ordering::Greater => self.best = Some((perm, rows)),
            std::cmp::Ordering::Less => {}
        }
        None
    }

    /// Is `v` in the orbit of some already-tried vertex under the known
    /// automorphisms that fix the first `depth` first-path vertices?
    fn in_tried_orbit(&self, v: Vertex, tried: VertexSet, depth: usize) -> bool {
        let prefix = &self.first_path[..depth];
        let gens: Vec<&Vec<Vertex>> =
            self.autos.iter().filter(|a| prefix.iter().all(|&p| a[p] == p)).collect();
        if gens.is_empty() {
            return false;
        }
        let mut orbit = VertexSet::singleton(v);
        let mut frontier = orbit;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for x in frontier {
                for a in &gens {
                    next.insert(a[x]);
                }
            }
            frontier = next - orbit;
            orbit |= frontier;
            if !orbit.is_disjoint(tried) {
                return true;
            }
        }
        false
    }
}

/// Automorphism mapping leaf `other` onto leaf `base` (equal forms).
fn automorphism(base: &[Vertex], other: &[Vertex]) -> Vec<Vertex> {
    let mut base_inv = vec![0; base.len()];
    for (v, &l) in base.iter().enumerate() {
        base_inv[l] = v;
    }
    other.iter().map(|&l| base_inv[l]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn graph_from_bits(n: usize, bits: u64) -> Graph {
        let mut g = Graph::new(n).unwrap();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits >> k & 1 == 1 {
                    g.insert_edge(i, j).unwrap();
                }
                k += 1;
            }
        }
        g
    }

    #[test]
    fn form_is_isomorphic_to_input() {
        let g = Graph::cycle(5).join(&Graph::complete(2)).unwrap();
        let lab = canonical_labeling(&g);
        assert_eq!(g.relabel(&lab.perm), lab.form.to_graph());
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        for n in [10, 20, 40, 64] {
            let e = Graph::new(n).unwrap();
            assert_eq!(canonical_form(&e).to_graph(), e);
            let k = Graph::complete(n);
            assert_eq!(canonical_form(&k).to_graph(), k);
        }
        let _ = canonical_form(&Graph::cycle(30));
        let _ = canonical_form(&Graph::complete_bipartite(8, 8));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        // C6 vs two triangles: both 2-regular on 6 vertices
        let c6 = Graph::cycle(6);
        let two = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&two));
    }

    #[test]
    fn coloured_partition_matters() {
        let p3 = Graph::path(3);
        let mid = canonical_labeling_with(&p3, &[VertexSet::singleton(1), p3.vertices() - VertexSet::singleton(1)]);
        let end = canonical_labeling_with(&p3, &[VertexSet::singleton(0), p3.vertices() - VertexSet::singleton(0)]);
        let other_end = canonical_labeling_with(&p3, &[VertexSet::singleton(2), p3.vertices() - VertexSet::singleton(2)]);
        assert_ne!(mid.form, end.form);
        assert_eq!(end.form, other_end.form);
    }

    proptest! {
        #[test]
        fn invariant_under_relabelling(n in 1usize..10, bits in any::<u64>(), seed in any::<u64>()) {
            let g = graph_from_bits(n, bits);
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm);
            prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        }
    }
}
