//! Planarity testing by path addition (Demoucron–Malgrange–Pertuiset) on
//! biconnected blocks, and the joinability predicate built on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// `true` iff `g` has a planar embedding.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return false;
    }
    blocks(g).into_iter().all(|block| block_is_planar(&block))
}

/// Biconnected blocks with at least one cycle, as adjacency restricted to
/// the block's edges.
fn blocks(g: &Graph) -> Vec<Vec<VertexSet>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &Graph,
        u: Vertex,
        parent: Option<Vertex>,
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        stack: &mut Vec<(Vertex, Vertex)>,
        out: &mut Vec<Vec<VertexSet>>,
    ) {
        disc[u] = *time;
        low[u] = *time;
        *time += 1;
        for w in g.neighbors(u) {
            if disc[w] == usize::MAX {
                stack.push((u, w));
                dfs(g, w, Some(u), disc, low, time, stack, out);
                low[u] = low[u].min(low[w]);
                if low[w] >= disc[u] {
                    let mut adj = vec![VertexSet::EMPTY; g.order()];
                    let mut edges = 0;
                    while let Some((a, b)) = stack.pop() {
                        adj[a].insert(b);
                        adj[b].insert(a);
                        edges += 1;
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    if edges > 1 {
                        out.push(adj);
                    }
                }
            } else if Some(w) != parent && disc[w] < disc[u] {
                stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
        }
    }

    for v in 0..n {
        if disc[v] == usize::MAX {
            dfs(g, v, None, &mut disc, &mut low, &mut time, &mut stack, &mut out);
        }
    }
    out
}

struct Fragment {
    attachments: VertexSet,
    /// `Some((a, b))` for a single unembedded edge between embedded vertices.
    chord: Option<(Vertex, Vertex)>,
    /// Unembedded vertices of a component fragment.
    inner: VertexSet,
}

fn block_is_planar(adj: &[VertexSet]) -> bool {
    let verts: VertexSet = adj.iter().enumerate().filter(|(_, s)| !s.is_empty()).map(|(v, _)| v).collect();
    let nv = verts.len();
    let ne = adj.iter().map(|s| s.len()).sum::<usize>() / 2;
    if nv >= 3 && ne > 3 * nv - 6 {
        return false;
    }

    // initial cycle: an edge (u, w) plus a shortest w-u path avoiding it
    let u = verts.first().unwrap();
    let w = adj[u].first().unwrap();
    let cycle = {
        let mut prev = vec![usize::MAX; adj.len()];
        let mut seen = VertexSet::singleton(w);
        let mut queue = std::collections::VecDeque::from([w]);
        while let Some(x) = queue.pop_front() {
            for y in adj[x] - seen {
                if x == w && y == u {
                    continue;
                }
                seen.insert(y);
                prev[y] = x;
                queue.push_back(y);
            }
        }
        debug_assert!(seen.contains(u), "block is 2-connected");
        let mut path = vec![u];
        let mut at = u;
        while at != w {
            at = prev[at];
            path.push(at);
        }
        path
    };

    let mut embedded_v: VertexSet = cycle.iter().copied().collect();
    let mut embedded_e = vec![VertexSet::EMPTY; adj.len()];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded_e[a].insert(b);
        embedded_e[b].insert(a);
    }
    let mut faces: Vec<Vec<Vertex>> = vec![cycle.clone(), cycle.into_iter().rev().collect()];

    loop {
        let fragments = fragments(adj, verts, embedded_v, &embedded_e);
        if fragments.is_empty() {
            return true;
        }
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.is_subset(f.iter().copied().collect()))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = chosen.unwrap();
        let path = fragment_path(adj, &fragments[fi]);
        for win in path.windows(2) {
            embedded_e[win[0]].insert(win[1]);
            embedded_e[win[1]].insert(win[0]);
        }
        embedded_v |= path.iter().copied().collect();
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
}

fn fragments(adj: &[VertexSet], verts: VertexSet, embedded_v: VertexSet, embedded_e: &[VertexSet]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for a in embedded_v {
        for b in (adj[a] & embedded_v) - embedded_e[a] - VertexSet::full(a + 1) {
            out.push(Fragment { attachments: [a, b].into_iter().collect(), chord: Some((a, b)), inner: VertexSet::EMPTY });
        }
    }
    let mut left = verts - embedded_v;
    while let Some(start) = left.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for x in frontier {
                next |= adj[x] & left;
            }
            frontier = next - comp;
            comp |= frontier;
        }
        left = left - comp;
        let attachments = comp.iter().fold(VertexSet::EMPTY, |acc, x| acc | (adj[x] & embedded_v));
        out.push(Fragment { attachments, chord: None, inner: comp });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[VertexSet], frag: &Fragment) -> Vec<Vertex> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let a = frag.attachments.first().unwrap();
    let mut prev = vec![usize::MAX; adj.len()];
    let starts = adj[a] & frag.inner;
    let mut seen = starts;
    let mut queue: std::collections::VecDeque<Vertex> = starts.iter().collect();
    for s in starts {
        prev[s] = a;
    }
    while let Some(x) = queue.pop_front() {
        if let Some(b) = (adj[x] & (frag.attachments - VertexSet::singleton(a))).first() {
            let mut path = vec![b, x];
            let mut at = x;
            while prev[at] != a {
                at = prev[at];
                path.push(at);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for y in adj[x] & (frag.inner - seen) {
            seen.insert(y);
            prev[y] = x;
            queue.push_back(y);
        }
    }
    unreachable!("fragments of a 2-connected block have two attachments")
}

/// Splits cyclic `face` along `path`, whose endpoints lie on the face.
fn split_face(face: &[Vertex], path: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let (a, b) = (path[0], *path.last().unwrap());
    let len = face.len();
    let i = face.iter().position(|&v| v == a).unwrap();
    let j = face.iter().position(|&v| v == b).unwrap();
    let walk = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % len;
            out.push(face[k]);
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut f1 = walk(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = walk(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinReason {
    Adjacent,
    NonplanarAfterJoin,
    Joinable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JoinabilityResult {
    pub joinable: bool,
    pub reason: JoinReason,
}

impl JoinabilityResult {
    fn of(reason: JoinReason) -> Self {
        JoinabilityResult { joinable: reason == JoinReason::Joinable, reason }
    }

    pub fn verdict(&self) -> &'static str {
        match self.reason {
            JoinReason::Adjacent => "adjacent",
            JoinReason::NonplanarAfterJoin => "not-joinable",
            JoinReason::Joinable => "joinable",
        }
    }
}

/// Non-adjacent `u`, `v` of a planar graph are joinable iff `G + uv` is planar.
pub fn joinable(g: &Graph, u: Vertex, v: Vertex) -> Result<JoinabilityResult> {
    if u == v {
        return Err(Error::Argument("joinability needs two distinct vertices".into()));
    }
    if u >= g.order() || v >= g.order() {
        return Err(Error::Argument(format!("vertex out of range for a graph on {} vertices", g.order())));
    }
    if !is_planar(g) {
        return Err(Error::NotPlanar);
    }
    Ok(joinable_unchecked(g, u, v))
}

/// [`joinable`] without the planarity precondition check.
pub(crate) fn joinable_unchecked(g: &Graph, u: Vertex, v: Vertex) -> JoinabilityResult {
    if g.has_edge(u, v) {
        return JoinabilityResult::of(JoinReason::Adjacent);
    }
    let h = g.add_edge(u, v).expect("distinct in-range vertices");
    if is_planar(&h) {
        JoinabilityResult::of(JoinReason::Joinable)
    } else {
        JoinabilityResult::of(JoinReason::NonplanarAfterJoin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn small_cases() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        assert!(is_planar(&Graph::new(0).unwrap()));
        assert!(is_planar(&Graph::path(7)));
        assert!(is_planar(&fixtures::octahedron().graph));
        assert!(!is_planar(&fixtures::grotzsch().graph));
    }

    #[test]
    fn petersen_is_nonplanar() {
        let mut g = Graph::new(10).unwrap();
        for i in 0..5 {
            g.insert_edge(i, (i + 1) % 5).unwrap();
            g.insert_edge(i, i + 5).unwrap();
            g.insert_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        }
        assert_eq!(g.size(), 15);
        assert!(!is_planar(&g));
        // the Petersen graph is not apex
        for v in 0..10 {
            assert!(!is_planar(&g.without_vertex(v)));
        }
    }

    #[test]
    fn subdivided_k5_and_blocks() {
        // K5 with one edge subdivided is still nonplanar
        let mut g = Graph::new(6).unwrap();
        for (u, v) in Graph::complete(5).edges() {
            if (u, v) != (0, 1) {
                g.insert_edge(u, v).unwrap();
            }
        }
        g.insert_edge(0, 5).unwrap();
        g.insert_edge(5, 1).unwrap();
        assert!(!is_planar(&g));
        // two K4 glued at a cut vertex
        let two = Graph::complete(4).disjoint_union(&Graph::complete(4)).unwrap();
        let glued = two.add_edge(3, 4).unwrap();
        assert!(is_planar(&glued));
    }

    #[test]
    fn joinability_examples() {
        let p3 = Graph::path(3);
        assert_eq!(joinable(&p3, 0, 2).unwrap(), JoinabilityResult { joinable: true, reason: JoinReason::Joinable });
        assert_eq!(joinable(&p3, 0, 1).unwrap().reason, JoinReason::Adjacent);
        let oct = fixtures::octahedron();
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            let r = joinable(&oct.graph, u, v).unwrap();
            assert!(!oct.graph.has_edge(u, v));
            assert_eq!(r.reason, JoinReason::NonplanarAfterJoin);
        }
        let f = fixtures::fig1();
        assert_eq!(joinable(&f.graph, f.vertex("u"), f.vertex("v")).unwrap().verdict(), "not-joinable");
        assert!(matches!(joinable(&Graph::complete(5), 0, 1), Err(Error::NotPlanar)));
        assert!(joinable(&p3, 1, 1).is_err());
    }
}
