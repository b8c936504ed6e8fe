//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Serialize, Serializer};

use crate::deadline::{unbounded, Deadline, Timeout};
use crate::error::{Error, Result};

/// Largest vertex count the engine accepts.
pub const MAX_VERTICES: usize = 64;

pub type Vertex = usize;

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: Vertex) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: Vertex) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<Vertex> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = Vertex;

    #[inline]
    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        Graph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n).expect("complete graph too large");
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all - VertexSet::singleton(v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle too large")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path too large")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b).expect("complete bipartite graph too large");
        for u in 0..a {
            for v in a..a + b {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1)).iter().map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            Err(Error::Argument(format!("vertex {v} out of range for a graph on {} vertices", self.n)))
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::Argument(format!("vertex set {s} not contained in 0..{}", self.n)))
        }
    }

    pub fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Argument(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        if u < self.n && v < self.n {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    /// `G + uv`. Idempotent when the edge is already present.
    pub fn add_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// `G - uv`.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// Subgraph induced by `s`, relabelled to `0..|s|` in increasing order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let s = s & self.vertices();
        let verts = s.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| index[w]).collect())
            .collect();
        Graph::from_adjacency(adj)
    }

    /// `G - v`, relabelled.
    pub fn without_vertex(&self, v: Vertex) -> Graph {
        self.induced(self.vertices() - VertexSet::singleton(v))
    }

    /// Applies a relabelling `perm[old] = new`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            adj[perm[u]] = self.adj[u].iter().map(|w| perm[w]).collect();
        }
        Graph::from_adjacency(adj)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.insert_edge(u, self.n + v)?;
            }
        }
        Ok(g)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - VertexSet::singleton(v)).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Vertices adjacent to every member of `s`.
    pub fn common_neighbors(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(self.vertices(), |acc, v| acc & self.adj[v])
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_within(&self, start: Vertex, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v] & within;
            }
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.component_within(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u].is_disjoint(self.adj[v]))
    }

    /// All triangles `{a, b, c}` with `a < b < c`.
    pub fn triangles(&self) -> Vec<[Vertex; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for c in self.adj[a] & (self.adj[b] - VertexSet::full(b + 1)) {
                out.push([a, b, c]);
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// `true` iff every vertex of `s` is adjacent to every vertex of `t`.
///
/// The sets must be non-empty and disjoint.
pub fn complete_join_exists(g: &Graph, s: VertexSet, t: VertexSet) -> Result<bool> {
    g.check_set(s)?;
    g.check_set(t)?;
    if s.is_empty() || t.is_empty() {
        return Err(Error::Argument("complete join needs two non-empty sets".into()));
    }
    if !s.is_disjoint(t) {
        return Err(Error::Argument(format!("sets {s} and {t} overlap")));
    }
    Ok(s.iter().all(|v| t.is_subset(g.neighbors(v))))
}

/// A simple cycle of odd length, stored in canonical orientation: the lowest
/// vertex first, followed by the smaller of its two cycle neighbours.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct OddCycle(Vec<Vertex>);

impl OddCycle {
    /// Validates a cyclic vertex sequence against `g` and normalizes it.
    pub fn new(g: &Graph, seq: Vec<Vertex>) -> Result<Self> {
        if seq.len() < 3 || seq.len().is_multiple_of(2) {
            return Err(Error::Argument(format!("cycle length {} is not odd and at least 3", seq.len())));
        }
        let set: VertexSet = seq.iter().copied().collect();
        if set.len() != seq.len() {
            return Err(Error::Argument("cycle repeats a vertex".into()));
        }
        g.check_set(set)?;
        for i in 0..seq.len() {
            let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
            if !g.has_edge(a, b) {
                return Err(Error::Argument(format!("cycle uses non-edge {a}-{b}")));
            }
        }
        Ok(OddCycle(canonical_rotation(seq)))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for OddCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OddCycle{:?}", self.0)
    }
}

impl fmt::Display for OddCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join("-"))
    }
}

fn canonical_rotation(mut seq: Vec<Vertex>) -> Vec<Vertex> {
    let (lo, _) = seq.iter().enumerate().min_by_key(|&(_, v)| *v).unwrap();
    seq.rotate_left(lo);
    if seq[1] > seq[seq.len() - 1] {
        seq[1..].reverse();
    }
    seq
}

/// Simple odd cycles whose vertices all lie in `allowed`, each once, in
/// canonical form. `max_len` caps the cycle length.
pub fn odd_cycles_within(
    g: &Graph,
    allowed: VertexSet,
    max_len: Option<usize>,
    deadline: &Deadline,
) -> Result<Vec<OddCycle>, Timeout> {
    let allowed = allowed & g.vertices();
    let cap = max_len.unwrap_or(usize::MAX).min(allowed.len());
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(cap);
    for start in allowed {
        // cycles whose lowest vertex is `start`
        let pool = allowed - VertexSet::full(start + 1);
        path.clear();
        path.push(start);
        extend_cycles(g, start, pool, VertexSet::singleton(start), cap, &mut path, &mut out, deadline)?;
    }
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend_cycles(
    g: &Graph,
    start: Vertex,
    pool: VertexSet,
    used: VertexSet,
    cap: usize,
    path: &mut Vec<Vertex>,
    out: &mut Vec<OddCycle>,
    deadline: &Deadline,
) -> Result<(), Timeout> {
    deadline.tick()?;
    let last = *path.last().unwrap();
    let len = path.len();
    if len >= 3 && len % 2 == 1 && g.has_edge(last, start) && path[1] < last {
        out.push(OddCycle(path.clone()));
    }
    if len >= cap {
        return Ok(());
    }
    for next in g.neighbors(last) & (pool - used) {
        path.push(next);
        extend_cycles(g, start, pool, used | VertexSet::singleton(next), cap, path, out, deadline)?;
        path.pop();
    }
    Ok(())
}

/// Odd cycles all of whose vertices are adjacent to `v`.
pub fn odd_cycles_dominated_by(g: &Graph, v: Vertex) -> Result<Vec<OddCycle>> {
    g.check_vertex(v)?;
    Ok(unbounded(odd_cycles_within(g, g.neighbors(v), None, &Deadline::none())))
}
