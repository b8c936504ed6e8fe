//! Color fixation: fixation pairs and embraces, fixed-as-a-whole tests,
//! direct-fixator shapes, and fixation chains.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::{
    canonical_colorings_within, chromatic_number_within, color_profile_within, is_critical_within, ColorProfile,
    Colorings, CriticalityMode, ReferenceClique,
};
use crate::deadline::{unbounded, Deadline, Timeout};
use crate::error::{Error, Result};
use crate::graph::{complete_join_exists, odd_cycles_within, Graph, OddCycle, Vertex, VertexSet};

/// Which reading of "S and T together require k colors" to apply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixationReading {
    /// In every k-coloring, `|colors(S)| + |colors(T)| = k`.
    #[default]
    ColoringQuantified,
    /// `χ(G[S]) + χ(G[T]) = k`.
    Structural,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixationOptions {
    pub max_side: usize,
    pub reading: FixationReading,
}

impl Default for FixationOptions {
    fn default() -> Self {
        FixationOptions { max_side: 4, reading: FixationReading::ColoringQuantified }
    }
}

/// A color fixation pair `(fixator, fixee)` with complete join between the
/// sides. The larger side is reported as fixator (ties: lower bitmask).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixationPair {
    pub fixator: VertexSet,
    pub fixee: VertexSet,
    /// χ of the subgraph induced by the fixator.
    pub j: usize,
    /// χ of the subgraph induced by the fixee.
    pub fixee_chromatic: usize,
    pub fixator_critical: bool,
    pub fixee_critical: bool,
    /// Fixator j-critical and fixee (k − j)-critical with j < k.
    pub embrace: bool,
}

impl FixationPair {
    /// The same pair seen from the other side.
    pub fn reversed(&self) -> FixationPair {
        FixationPair {
            fixator: self.fixee,
            fixee: self.fixator,
            j: self.fixee_chromatic,
            fixee_chromatic: self.j,
            fixator_critical: self.fixee_critical,
            fixee_critical: self.fixator_critical,
            embrace: self.embrace,
        }
    }
}

fn orientation_first(s: VertexSet, t: VertexSet) -> bool {
    (s.len(), std::cmp::Reverse(s.bits())) > (t.len(), std::cmp::Reverse(t.bits()))
}

/// Subsets of `pool` with between 1 and `max` elements, in colex order of
/// size then bitmask.
fn subsets_up_to(pool: VertexSet, max: usize) -> Vec<VertexSet> {
    let items = pool.to_vec();
    let mut out = Vec::new();
    fn rec(items: &[Vertex], start: usize, cur: VertexSet, left: usize, out: &mut Vec<VertexSet>) {
        for i in start..items.len() {
            let next = cur | VertexSet::singleton(items[i]);
            out.push(next);
            if left > 1 {
                rec(items, i + 1, next, left - 1, out);
            }
        }
    }
    if max > 0 {
        rec(&items, 0, VertexSet::EMPTY, max, &mut out);
    }
    out.sort_by_key(|s| (s.len(), s.bits()));
    out
}

pub fn fixation_pairs_within(g: &Graph, k: usize, opts: &FixationOptions, deadline: &Deadline) -> Result<Vec<FixationPair>> {
    let colorings = canonical_colorings_within(g, k, deadline)?;
    let mut chi_cache: BTreeMap<u64, (usize, bool)> = BTreeMap::new();
    let mut classify = |s: VertexSet| -> Result<(usize, bool), Timeout> {
        if let Some(&hit) = chi_cache.get(&s.bits()) {
            return Ok(hit);
        }
        let h = g.induced(s);
        let chi = chromatic_number_within(&h, deadline)?;
        let crit = is_critical_within(&h, chi, CriticalityMode::Vertex, deadline)?;
        chi_cache.insert(s.bits(), (chi, crit));
        Ok((chi, crit))
    };

    let mut out = Vec::new();
    for s in subsets_up_to(g.vertices(), opts.max_side) {
        let common = g.common_neighbors(s);
        if common.is_empty() {
            continue;
        }
        for t in subsets_up_to(common, opts.max_side) {
            if !orientation_first(s, t) {
                continue;
            }
            deadline.tick()?;
            let holds = match opts.reading {
                FixationReading::ColoringQuantified => colorings.iter().all(|cols| {
                    let used = |set: VertexSet| set.iter().fold(0u64, |acc, v| acc | 1 << cols[v]).count_ones();
                    (used(s) + used(t)) as usize == k
                }),
                FixationReading::Structural => classify(s)?.0 + classify(t)?.0 == k,
            };
            if !holds {
                continue;
            }
            let (j, s_crit) = classify(s)?;
            let (jt, t_crit) = classify(t)?;
            out.push(FixationPair {
                fixator: s,
                fixee: t,
                j,
                fixee_chromatic: jt,
                fixator_critical: s_crit,
                fixee_critical: t_crit,
                embrace: j < k && j + jt == k && s_crit && t_crit,
            });
        }
    }
    Ok(out)
}

/// Re-checks the pair condition of `pair` over every proper k-coloring, with
/// no symmetry reduction.
pub fn audit_pair(g: &Graph, k: usize, pair: &FixationPair) -> Result<bool> {
    let (s, t) = (pair.fixator, pair.fixee);
    if s.is_empty() || t.is_empty() || !s.is_disjoint(t) || !complete_join_exists(g, s, t)? {
        return Ok(false);
    }
    let mut it = Colorings::new(g, k, None)?;
    let mut any = false;
    while it.advance() {
        any = true;
        let cols = it.current();
        let used = |set: VertexSet| set.iter().fold(0u64, |acc, v| acc | 1 << cols[v]).count_ones() as usize;
        if used(s) + used(t) != k {
            return Ok(false);
        }
    }
    Ok(any)
}

/// All color fixation pairs with both sides of size at most `max_side`.
/// Each unordered pair appears once. Errors when `g` is not k-colorable.
pub fn fixation_pairs(g: &Graph, k: usize, max_side: usize) -> Result<Vec<FixationPair>> {
    fixation_pairs_within(g, k, &FixationOptions { max_side, ..Default::default() }, &Deadline::none())
}

pub fn fixation_pairs_with(g: &Graph, k: usize, opts: &FixationOptions) -> Result<Vec<FixationPair>> {
    fixation_pairs_within(g, k, opts, &Deadline::none())
}

/// Fixed-as-a-whole test against an already computed reference profile.
pub fn fixed_as_whole_in(g: &Graph, s: VertexSet, profile: &ColorProfile, deadline: &Deadline) -> Result<bool, Timeout> {
    if s.is_empty() || !g.is_connected_set(s) {
        return Ok(false);
    }
    let h = g.induced(s);
    let j = chromatic_number_within(&h, deadline)?;
    if !is_critical_within(&h, j, CriticalityMode::Vertex, deadline)? {
        return Ok(false);
    }
    let union = profile.union_over(s);
    Ok(union.len() == j && s.iter().any(|v| profile.colors(v) == union))
}

/// Whether `s` is color fixed as a whole relative to `reference`: G[s] is
/// j-critical for j = χ(G[s]), the profiles over `s` span exactly j colors,
/// and some vertex of `s` attains all of them. A disconnected `s` is never
/// fixed as a whole.
pub fn is_fixed_as_whole(g: &Graph, k: usize, s: VertexSet, reference: &ReferenceClique) -> Result<bool> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::Argument("empty vertex set".into()));
    }
    let profile = color_profile_within(g, k, Some(reference), &Deadline::none())?;
    Ok(unbounded(fixed_as_whole_in(g, s, &profile, &Deadline::none())))
}

/// Shape of a fixation pair in the 4-chromatic taxonomy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixatorClass {
    OddCycleToVertex,
    EdgeToEdge,
    VertexToOddCycle,
    Other,
}

impl FixatorClass {
    pub fn as_str(self) -> &'static str {
        match self {
            FixatorClass::OddCycleToVertex => "odd_cycle->vertex",
            FixatorClass::EdgeToEdge => "edge->edge",
            FixatorClass::VertexToOddCycle => "vertex->odd_cycle",
            FixatorClass::Other => "other",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetShape {
    Vertex,
    Edge,
    OddCycle,
    Other,
}

/// Vertex, edge, odd cycle (odd order with a spanning cycle) or other.
pub fn set_shape(g: &Graph, s: VertexSet) -> SetShape {
    match s.len() {
        1 => SetShape::Vertex,
        2 => {
            let v = s.to_vec();
            if g.has_edge(v[0], v[1]) {
                SetShape::Edge
            } else {
                SetShape::Other
            }
        }
        l if l >= 3 && l % 2 == 1 && has_spanning_cycle(g, s) => SetShape::OddCycle,
        _ => SetShape::Other,
    }
}

fn has_spanning_cycle(g: &Graph, s: VertexSet) -> bool {
    let start = s.first().unwrap();
    fn rec(g: &Graph, s: VertexSet, start: Vertex, at: Vertex, used: VertexSet) -> bool {
        if used == s {
            return g.has_edge(at, start);
        }
        (g.neighbors(at) & (s - used)).iter().any(|w| rec(g, s, start, w, used | VertexSet::singleton(w)))
    }
    rec(g, s, start, start, VertexSet::singleton(start))
}

/// Classifies the fixator shape against the fixee shape.
pub fn direct_fixator_class(g: &Graph, pair: &FixationPair) -> FixatorClass {
    match (set_shape(g, pair.fixator), set_shape(g, pair.fixee)) {
        (SetShape::OddCycle, SetShape::Vertex) => FixatorClass::OddCycleToVertex,
        (SetShape::Edge, SetShape::Edge) => FixatorClass::EdgeToEdge,
        (SetShape::Vertex, SetShape::OddCycle) => FixatorClass::VertexToOddCycle,
        _ => FixatorClass::Other,
    }
}

/// An odd cycle together with every vertex adjacent to all of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleNode {
    pub cycle: OddCycle,
    pub dominators: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "id", rename_all = "lowercase")]
pub enum ChainNode {
    Vertex(Vertex),
    /// Index into [`FixationChain::cycle_nodes`].
    Cycle(usize),
}

/// A connected component of the vertex/dominated-cycle incidence structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixationChain {
    pub vertex_nodes: VertexSet,
    pub cycle_nodes: Vec<CycleNode>,
}

impl FixationChain {
    pub fn contains_vertex_node(&self, v: Vertex) -> bool {
        self.vertex_nodes.contains(v)
    }

    /// Alternating vertex/cycle sequence from `u` to `v`, shortest first.
    pub fn path(&self, u: Vertex, v: Vertex) -> Option<Vec<ChainNode>> {
        if !self.vertex_nodes.contains(u) || !self.vertex_nodes.contains(v) {
            return None;
        }
        // BFS over vertices, remembering the cycle used to step
        let mut prev: BTreeMap<Vertex, (Vertex, usize)> = BTreeMap::new();
        let mut seen = VertexSet::singleton(u);
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for (ci, node) in self.cycle_nodes.iter().enumerate() {
                if !node.dominators.contains(x) {
                    continue;
                }
                for y in node.dominators - seen {
                    seen.insert(y);
                    prev.insert(y, (x, ci));
                    queue.push_back(y);
                }
            }
        }
        if !seen.contains(v) {
            return None;
        }
        let mut out = vec![ChainNode::Vertex(v)];
        let mut at = v;
        while at != u {
            let (p, ci) = prev[&at];
            out.push(ChainNode::Cycle(ci));
            out.push(ChainNode::Vertex(p));
            at = p;
        }
        out.reverse();
        Some(out)
    }

    /// Unordered vertex-node pairs `(u, v)`, `u < v`.
    pub fn vertex_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let vs = self.vertex_nodes.to_vec();
        let mut out = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                out.push((a, b));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ChainOptions {
    /// Longest odd cycle considered as a cycle node.
    pub cycle_cap: Option<usize>,
    /// Keep only chordless cycle nodes (those whose induced subgraph is
    /// 3-critical, i.e. fixed as a whole once dominated).
    pub critical_cycles_only: bool,
}

pub fn build_fixation_chains_within(g: &Graph, opts: &ChainOptions, deadline: &Deadline) -> Result<Vec<FixationChain>, Timeout> {
    let mut cycles: BTreeMap<OddCycle, VertexSet> = BTreeMap::new();
    for v in 0..g.order() {
        for c in odd_cycles_within(g, g.neighbors(v), opts.cycle_cap, deadline)? {
            if cycles.contains_key(&c) {
                continue;
            }
            if opts.critical_cycles_only {
                let s = c.vertex_set();
                if g.induced(s).size() != s.len() {
                    continue;
                }
            }
            let dominators = g.common_neighbors(c.vertex_set());
            cycles.insert(c, dominators);
        }
    }

    // union-find over vertices through shared cycles
    let mut parent: Vec<Vertex> = (0..g.order()).collect();
    fn find(parent: &mut [Vertex], x: Vertex) -> Vertex {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut x = x;
        while parent[x] != r {
            let next = parent[x];
            parent[x] = r;
            x = next;
        }
        r
    }
    for dom in cycles.values() {
        let mut it = dom.iter();
        if let Some(first) = it.next() {
            for other in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }

    let mut groups: BTreeMap<Vertex, FixationChain> = BTreeMap::new();
    for (cycle, dom) in cycles {
        let root = find(&mut parent, dom.first().expect("dominated cycle has a dominator"));
        let chain = groups
            .entry(root)
            .or_insert_with(|| FixationChain { vertex_nodes: VertexSet::EMPTY, cycle_nodes: Vec::new() });
        chain.vertex_nodes |= dom;
        chain.cycle_nodes.push(CycleNode { cycle, dominators: dom });
    }
    Ok(groups.into_values().filter(|c| c.vertex_nodes.len() >= 2).collect())
}

/// Fixation chains: components of the incidence between vertices and the odd
/// cycles they dominate, keeping those with at least two vertex nodes.
pub fn build_fixation_chains(g: &Graph) -> Vec<FixationChain> {
    unbounded(build_fixation_chains_within(g, &ChainOptions::default(), &Deadline::none()))
}

pub fn build_fixation_chains_with(g: &Graph, opts: &ChainOptions) -> Vec<FixationChain> {
    unbounded(build_fixation_chains_within(g, opts, &Deadline::none()))
}

/// `true` iff `u` and `v` are vertex nodes of one fixation chain.
pub fn same_chain(g: &Graph, u: Vertex, v: Vertex) -> Result<bool> {
    if u == v {
        return Err(Error::Argument("same_chain needs two distinct vertices".into()));
    }
    if u >= g.order() || v >= g.order() {
        return Err(Error::Argument(format!("vertex out of range for a graph on {} vertices", g.order())));
    }
    Ok(build_fixation_chains(g).iter().any(|c| c.vertex_nodes.contains(u) && c.vertex_nodes.contains(v)))
}
