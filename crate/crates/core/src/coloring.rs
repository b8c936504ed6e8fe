//! Exhaustive proper-coloring enumeration and the predicates defined over
//! "every k-coloring": chromatic number, color identity, color profiles
//! relative to a reference clique, criticality, unique colorability.

use std::fmt;

use serde::Serialize;

use crate::deadline::{unbounded, Deadline, Timeout};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Largest palette the engine handles (colors are tracked in a `u64`).
pub const MAX_PALETTE: usize = 64;

/// A proper coloring, `colors[v] < k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    pub k: usize,
    pub colors: Vec<u8>,
}

impl Coloring {
    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v] as usize
    }

    /// Colors used on `s`.
    pub fn colors_of(&self, s: VertexSet) -> ColorSet {
        s.iter().fold(ColorSet::EMPTY, |acc, v| acc.with(self.color(v)))
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| (c as usize) < self.k)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// The color classes as vertex sets, canonically ordered by lowest member.
    pub fn partition(&self) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::EMPTY; self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c as usize].insert(v);
        }
        let mut classes: Vec<_> = classes.into_iter().filter(|c| !c.is_empty()).collect();
        classes.sort_by_key(|c| c.first());
        classes
    }
}

/// A set of colors drawn from `0..64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn with(self, c: usize) -> ColorSet {
        ColorSet(self.0 | 1 << c)
    }

    pub fn contains(self, c: usize) -> bool {
        c < MAX_PALETTE && self.0 >> c & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        VertexSet::from_bits(self.0).iter()
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ColorSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// An ordered clique whose i-th vertex is pinned to color i during
/// enumeration, selecting one representative per color permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ReferenceClique(Vec<Vertex>);

impl ReferenceClique {
    /// Validates that `vertices` are distinct, in range and pairwise adjacent.
    pub fn new(g: &Graph, vertices: Vec<Vertex>) -> Result<Self> {
        let set: VertexSet = vertices.iter().copied().filter(|&v| v < g.order()).collect();
        if set.len() != vertices.len() {
            return Err(Error::Argument(format!("reference {vertices:?} has repeated or out-of-range vertices")));
        }
        if !g.is_clique(set) {
            return Err(Error::Argument(format!("reference {vertices:?} is not a clique")));
        }
        Ok(ReferenceClique(vertices))
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

    fn check_palette(&self, k: usize) -> Result<()> {
        if self.0.len() + 1 != k {
            return Err(Error::Argument(format!(
                "reference clique has {} vertices, a {k}-coloring needs {}",
                self.0.len(),
                k.saturating_sub(1)
            )));
        }
        Ok(())
    }
}

/// Lazy backtracking enumeration of proper colorings.
///
/// Vertices are colored in descending-degree order (ties by index) after any
/// reference vertices; output order is deterministic. In canonical mode each
/// color is introduced only after all smaller ones, yielding exactly one
/// coloring per partition into at most `k` independent sets.
pub struct Colorings {
    k: usize,
    order: Vec<Vertex>,
    earlier: Vec<Vec<usize>>,
    fixed: usize,
    canonical: bool,
    by_pos: Vec<u8>,
    next_color: Vec<u8>,
    prefix_max: Vec<i16>,
    by_vertex: Vec<u8>,
    depth: usize,
    started: bool,
    done: bool,
    timed_out: bool,
    deadline: Deadline,
}

impl Colorings {
    fn build(g: &Graph, k: usize, reference: Option<&ReferenceClique>, canonical: bool, deadline: &Deadline) -> Result<Self> {
        if k == 0 {
            return Err(Error::Argument("palette size must be at least 1".into()));
        }
        if k > MAX_PALETTE {
            return Err(Error::Argument(format!("palette size {k} exceeds {MAX_PALETTE}")));
        }
        let n = g.order();
        let mut order: Vec<Vertex> = Vec::with_capacity(n);
        let mut fixed_colors = Vec::new();
        if let Some(r) = reference {
            r.check_palette(k)?;
            let again = ReferenceClique::new(g, r.vertices().to_vec())?;
            order.extend_from_slice(again.vertices());
            fixed_colors.extend((0..again.len()).map(|c| c as u8));
        }
        let pinned: VertexSet = order.iter().copied().collect();
        let mut rest: Vec<Vertex> = (g.vertices() - pinned).to_vec();
        rest.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        order.extend(rest);

        let mut pos_of = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos_of[v] = p;
        }
        let earlier = order
            .iter()
            .enumerate()
            .map(|(p, &v)| g.neighbors(v).iter().map(|w| pos_of[w]).filter(|&q| q < p).collect())
            .collect();

        let fixed = fixed_colors.len();
        let mut by_pos = vec![0u8; n];
        let mut by_vertex = vec![0u8; n];
        let mut prefix_max = vec![-1i16; n + 1];
        for (p, &c) in fixed_colors.iter().enumerate() {
            by_pos[p] = c;
            by_vertex[order[p]] = c;
            prefix_max[p + 1] = prefix_max[p].max(c as i16);
        }
        Ok(Colorings {
            k,
            order,
            earlier,
            fixed,
            canonical: canonical && reference.is_none(),
            by_pos,
            next_color: vec![0; n + 1],
            prefix_max,
            by_vertex,
            depth: fixed,
            started: false,
            done: false,
            timed_out: false,
            deadline: deadline.clone(),
        })
    }

    /// Every proper k-coloring, pinned to the reference clique if given.
    pub fn new(g: &Graph, k: usize, reference: Option<&ReferenceClique>) -> Result<Colorings> {
        Colorings::build(g, k, reference, false, &Deadline::none())
    }

    /// One coloring per color-class partition.
    pub fn canonical(g: &Graph, k: usize) -> Result<Colorings> {
        Colorings::build(g, k, None, true, &Deadline::none())
    }

    pub fn with_deadline(g: &Graph, k: usize, reference: Option<&ReferenceClique>, canonical: bool, deadline: &Deadline) -> Result<Colorings> {
        Colorings::build(g, k, reference, canonical, deadline)
    }

    pub fn palette(&self) -> usize {
        self.k
    }

    /// Whether the enumeration stopped because its deadline expired.
    pub fn timed_out(&self) -> bool {
        self.timed_out
    }

    /// Colors of the current coloring, indexed by vertex. Valid after
    /// [`advance`](Self::advance) returned `true`.
    pub fn current(&self) -> &[u8] {
        &self.by_vertex
    }

    /// Moves to the next coloring; `false` when exhausted or timed out.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let n = self.order.len();
        if !self.started {
            self.started = true;
            self.depth = self.fixed;
            if self.depth < n {
                self.next_color[self.depth] = 0;
            }
        } else {
            // resume from the deepest position
            if n == self.fixed {
                self.done = true;
                return false;
            }
            self.depth = n - 1;
        }
        loop {
            if self.depth == n {
                return true;
            }
            if self.deadline.tick().is_err() {
                self.timed_out = true;
                self.done = true;
                return false;
            }
            let d = self.depth;
            let forbidden = self.earlier[d].iter().fold(0u64, |acc, &q| acc | 1 << self.by_pos[q]);
            let limit = if self.canonical {
                (self.prefix_max[d] + 2).min(self.k as i16) as usize
            } else {
                self.k
            };
            let mut c = self.next_color[d] as usize;
            while c < limit && forbidden >> c & 1 == 1 {
                c += 1;
            }
            if c < limit {
                self.by_pos[d] = c as u8;
                self.by_vertex[self.order[d]] = c as u8;
                self.next_color[d] = c as u8 + 1;
                self.prefix_max[d + 1] = self.prefix_max[d].max(c as i16);
                self.depth += 1;
                if self.depth < n {
                    self.next_color[self.depth] = 0;
                }
            } else if d == self.fixed {
                self.done = true;
                return false;
            } else {
                self.depth -= 1;
            }
        }
    }
}

impl Iterator for Colorings {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        self.advance().then(|| Coloring { k: self.k, colors: self.by_vertex.clone() })
    }
}

/// Lazily enumerates every proper k-coloring of `g`. With a reference clique,
/// only colorings giving its i-th vertex color i are produced.
pub fn enumerate_colorings(g: &Graph, k: usize, reference: Option<&ReferenceClique>) -> Result<Colorings> {
    Colorings::new(g, k, reference)
}

pub fn is_k_colorable_within(g: &Graph, k: usize, deadline: &Deadline) -> Result<bool, Timeout> {
    if g.order() == 0 {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    if k >= g.order() {
        return Ok(true);
    }
    let mut it = Colorings::with_deadline(g, k, None, true, deadline).expect("palette validated");
    let found = it.advance();
    if it.timed_out() {
        Err(Timeout)
    } else {
        Ok(found)
    }
}

pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    unbounded(is_k_colorable_within(g, k, &Deadline::none()))
}

pub fn chromatic_number_within(g: &Graph, deadline: &Deadline) -> Result<usize, Timeout> {
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    if g.size() == 0 {
        return Ok(1);
    }
    // a triangle-free graph may still need many colors; start from 2 or 3
    let mut k = if g.is_triangle_free() { 2 } else { 3 };
    while !is_k_colorable_within(g, k, deadline)? {
        k += 1;
    }
    Ok(k)
}

/// Least k admitting a proper k-coloring (0 for the empty graph).
pub fn chromatic_number(g: &Graph) -> usize {
    unbounded(chromatic_number_within(g, &Deadline::none()))
}

/// Canonical colorings collected eagerly; errors if there are none.
pub(crate) fn canonical_colorings_within(g: &Graph, k: usize, deadline: &Deadline) -> Result<Vec<Vec<u8>>> {
    let mut it = Colorings::with_deadline(g, k, None, true, deadline)?;
    let mut out = Vec::new();
    while it.advance() {
        out.push(it.current().to_vec());
    }
    if it.timed_out() {
        return Err(Error::Timeout);
    }
    if out.is_empty() {
        return Err(Error::NotColorable { k });
    }
    Ok(out)
}

pub fn color_identical_pairs_within(g: &Graph, k: usize, deadline: &Deadline) -> Result<Vec<(Vertex, Vertex)>> {
    let n = g.order();
    let mut it = Colorings::with_deadline(g, k, None, true, deadline)?;
    let mut same = vec![g.vertices(); n];
    let mut any = false;
    while it.advance() {
        any = true;
        let cols = it.current();
        let mut classes = [VertexSet::EMPTY; MAX_PALETTE];
        for (v, &c) in cols.iter().enumerate() {
            classes[c as usize].insert(v);
        }
        for (v, s) in same.iter_mut().enumerate() {
            *s &= classes[cols[v] as usize];
        }
    }
    if it.timed_out() {
        return Err(Error::Timeout);
    }
    if !any {
        return Err(Error::NotColorable { k });
    }
    let mut pairs = Vec::new();
    for (u, &row) in same.iter().enumerate() {
        for v in row - VertexSet::full(u + 1) {
            pairs.push((u, v));
        }
    }
    Ok(pairs)
}

/// Non-adjacent pairs `(u, v)`, `u < v`, colored alike in every proper
/// k-coloring. Errors when no k-coloring exists.
pub fn color_identical_pairs(g: &Graph, k: usize) -> Result<Vec<(Vertex, Vertex)>> {
    color_identical_pairs_within(g, k, &Deadline::none())
}

/// Per-vertex set of colors attained over the enumerated colorings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorProfile {
    pub k: usize,
    pub reference: Option<ReferenceClique>,
    sets: Vec<ColorSet>,
}

impl ColorProfile {
    pub fn colors(&self, v: Vertex) -> ColorSet {
        self.sets[v]
    }

    /// Singleton profile: the vertex is fixed relative to the reference.
    pub fn is_fixed(&self, v: Vertex) -> bool {
        self.sets[v].len() == 1
    }

    pub fn sets(&self) -> &[ColorSet] {
        &self.sets
    }

    pub fn union_over(&self, s: VertexSet) -> ColorSet {
        s.iter().fold(ColorSet::EMPTY, |acc, v| acc.union(self.sets[v]))
    }
}

pub fn color_profile_within(g: &Graph, k: usize, reference: Option<&ReferenceClique>, deadline: &Deadline) -> Result<ColorProfile> {
    let mut it = Colorings::with_deadline(g, k, reference, false, deadline)?;
    let mut sets = vec![ColorSet::EMPTY; g.order()];
    let mut any = false;
    while it.advance() {
        any = true;
        for (s, &c) in sets.iter_mut().zip(it.current()) {
            *s = s.with(c as usize);
        }
        // a vertex cannot attain more than k colors
        if reference.is_none() && sets.iter().all(|s| s.len() == k) {
            break;
        }
    }
    if it.timed_out() {
        return Err(Error::Timeout);
    }
    if !any {
        return Err(Error::NotColorable { k });
    }
    Ok(ColorProfile { k, reference: reference.cloned(), sets })
}

pub fn color_profile(g: &Graph, k: usize, reference: Option<&ReferenceClique>) -> Result<ColorProfile> {
    color_profile_within(g, k, reference, &Deadline::none())
}

/// Which single deletions must lower the chromatic number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CriticalityMode {
    Vertex,
    Edge,
}

pub fn is_critical_within(g: &Graph, j: usize, mode: CriticalityMode, deadline: &Deadline) -> Result<bool, Timeout> {
    if j == 0 || chromatic_number_within(g, deadline)? != j {
        return Ok(false);
    }
    match mode {
        CriticalityMode::Vertex => {
            for v in 0..g.order() {
                if !is_k_colorable_within(&g.without_vertex(v), j - 1, deadline)? {
                    return Ok(false);
                }
            }
        }
        CriticalityMode::Edge => {
            for (u, v) in g.edges() {
                if !is_k_colorable_within(&g.without_edge(u, v), j - 1, deadline)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `true` iff χ(g) = j and every single vertex (or edge) deletion lowers it.
pub fn is_critical(g: &Graph, j: usize, mode: CriticalityMode) -> bool {
    unbounded(is_critical_within(g, j, mode, &Deadline::none()))
}

/// `true` iff all proper k-colorings induce the same partition into classes.
pub fn is_uniquely_k_colorable(g: &Graph, k: usize) -> Result<bool> {
    let mut it = Colorings::canonical(g, k)?;
    if !it.advance() {
        return Err(Error::NotColorable { k });
    }
    Ok(!it.advance())
}
