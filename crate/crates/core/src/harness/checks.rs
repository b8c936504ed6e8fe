use std::collections::HashSet;
use std::str::FromStr;

use serde::Serialize;

use super::{load_corpus, scan, CheckReport, CorpusSpec, Entry, Filter, GraphOutcome, RunConfig};
use crate::coloring::{chromatic_number, chromatic_number_within, color_identical_pairs_within, color_profile_within, ColorProfile, ReferenceClique};
use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::fixation::{
    build_fixation_chains_within, direct_fixator_class, fixation_pairs_within, fixed_as_whole_in, set_shape, ChainOptions,
    FixationOptions, FixationPair, FixatorClass, SetShape,
};
use crate::fixtures;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::graph6::to_graph6;
use crate::planarity::{is_planar, joinable_unchecked};

pub const LEMMA1_PROXY: &str = "lemma1 proxy: for each direct fixation (F, E), F inclusion-minimal among fixators \
    of E, and the first triangle R (in lexicographic order) relative to which every vertex of F and E has a single \
    attainable color, if F is not fixed as a whole relative to R, every non-adjacent pair of vertices in F is reported";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    Theorem1,
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    Lemma5,
    Corollary1,
    Grotzsch,
}

impl CheckName {
    pub const ALL: [CheckName; 8] = [
        CheckName::Theorem1,
        CheckName::Lemma1,
        CheckName::Lemma2,
        CheckName::Lemma3,
        CheckName::Lemma4,
        CheckName::Lemma5,
        CheckName::Corollary1,
        CheckName::Grotzsch,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Theorem1 => "theorem1",
            CheckName::Lemma1 => "lemma1",
            CheckName::Lemma2 => "lemma2",
            CheckName::Lemma3 => "lemma3",
            CheckName::Lemma4 => "lemma4",
            CheckName::Lemma5 => "lemma5",
            CheckName::Corollary1 => "corollary1",
            CheckName::Grotzsch => "grotzsch",
        }
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| {
            let names: Vec<_> = CheckName::ALL.iter().map(|c| c.as_str()).collect();
            Error::Argument(format!("unknown check {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Converse,
    #[default]
    Both,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forward" => Ok(Direction::Forward),
            "converse" => Ok(Direction::Converse),
            "both" => Ok(Direction::Both),
            _ => Err(Error::Argument(format!("unknown direction {s:?}; expected forward, converse or both"))),
        }
    }
}

/// Dispatches a named check. `direction` only matters for lemma4; the
/// corpus is ignored by grotzsch.
pub fn run_check(name: CheckName, corpus: CorpusSpec, direction: Direction, config: &RunConfig) -> Result<CheckReport> {
    match name {
        CheckName::Theorem1 => check_theorem1(corpus, config),
        CheckName::Lemma1 => check_lemma1(corpus, config),
        CheckName::Lemma2 | CheckName::Lemma3 => {
            let mut r = check_lemma2_lemma3(corpus, config)?;
            let prefix = format!("{}:", name.as_str());
            r.findings.retain(|e| e.detail.starts_with(&prefix));
            r.check = name.as_str().to_string();
            Ok(r)
        }
        CheckName::Lemma4 => check_lemma4(corpus, direction, config),
        CheckName::Lemma5 => check_lemma5(corpus, config),
        CheckName::Corollary1 => check_corollary1(corpus, config),
        CheckName::Grotzsch => check_grotzsch(config),
    }
}

fn fmt_set(s: VertexSet) -> String {
    s.to_string()
}

fn chain_options(config: &RunConfig) -> ChainOptions {
    ChainOptions { cycle_cap: config.cycle_cap, ..Default::default() }
}

fn fixation_options(config: &RunConfig) -> FixationOptions {
    FixationOptions { max_side: config.max_side, ..Default::default() }
}

/// Flags any color identical pair that is joinable.
pub fn check_theorem1(corpus: CorpusSpec, config: &RunConfig) -> Result<CheckReport> {
    let corpus = load_corpus(&corpus.with_required(&[Filter::Planar, Filter::Chromatic(4)])?, config)?;
    scan("theorem1", corpus, config, Vec::new(), |g, dl| {
        let mut out = GraphOutcome::default();
        let pairs = color_identical_pairs_within(g, 4, dl)?;
        out.count("color_identical_pairs", pairs.len() as u64);
        for (u, v) in pairs {
            if joinable_unchecked(g, u, v).joinable {
                out.violations.push(format!("color identical pair {u},{v} is joinable"));
            }
        }
        Ok(out)
    })
}

/// Operational reading of the independent-vertices claim; see [`LEMMA1_PROXY`].
pub fn check_lemma1(corpus: CorpusSpec, config: &RunConfig) -> Result<CheckReport> {
    let corpus = load_corpus(&corpus.with_required(&[Filter::Chromatic(4)])?, config)?;
    let opts = fixation_options(config);
    scan("lemma1", corpus, config, vec![LEMMA1_PROXY.to_string()], |g, dl| {
        let mut out = GraphOutcome::default();
        let pairs = fixation_pairs_within(g, 4, &opts, dl)?;
        let oriented = oriented_keys(&pairs);
        let triangles = g.triangles();
        let mut profiles: Vec<Option<ColorProfile>> = vec![None; triangles.len()];
        for pair in &pairs {
            for (f, e) in [(pair.fixator, pair.fixee), (pair.fixee, pair.fixator)] {
                if f.len() < 2 || !is_minimal_fixator(&oriented, f, e) {
                    continue;
                }
                out.count("fixators_examined", 1);
                for (ti, t) in triangles.iter().enumerate() {
                    if profiles[ti].is_none() {
                        let r = ReferenceClique::new(g, t.to_vec())?;
                        profiles[ti] = Some(color_profile_within(g, 4, Some(&r), dl)?);
                    }
                    let profile = profiles[ti].as_ref().unwrap();
                    if !(f | e).iter().all(|v| profile.is_fixed(v)) {
                        continue;
                    }
                    out.count("fixators_with_reference", 1);
                    if !fixed_as_whole_in(g, f, profile, dl)? {
                        out.count("fixators_fixed_independently", 1);
                        for (u, v) in non_adjacent_pairs(g, f) {
                            out.findings.push(format!(
                                "F={} E={} R=({},{},{}): {u},{v} independently fixed and non-adjacent",
                                fmt_set(f),
                                fmt_set(e),
                                t[0],
                                t[1],
                                t[2]
                            ));
                        }
                    }
                    break;
                }
            }
        }
        Ok(out)
    })
}

fn non_adjacent_pairs(g: &Graph, s: VertexSet) -> Vec<(Vertex, Vertex)> {
    let vs = s.to_vec();
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if !g.has_edge(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

fn shape_name(s: SetShape) -> &'static str {
    match s {
        SetShape::Vertex => "vertex",
        SetShape::Edge => "edge",
        SetShape::OddCycle => "odd_cycle",
        SetShape::Other => "other",
    }
}

fn oriented_keys(pairs: &[FixationPair]) -> HashSet<(u64, u64)> {
    pairs.iter().flat_map(|p| [(p.fixator.bits(), p.fixee.bits()), (p.fixee.bits(), p.fixator.bits())]).collect()
}

/// No proper subset of `f` fixes `e` (only sets of the listed pairs count).
fn is_minimal_fixator(oriented: &HashSet<(u64, u64)>, f: VertexSet, e: VertexSet) -> bool {
    let bits = f.bits();
    let mut sub = (bits - 1) & bits;
    while sub != 0 {
        if oriented.contains(&(sub, e.bits())) {
            return false;
        }
        sub = (sub - 1) & bits;
    }
    true
}

/// Classifies every direct fixation in both orientations. A fixator is
/// direct when no proper subset of it fixes the same fixee. Vertex fixees
/// with a non-odd-cycle fixator (lemma2) and odd-cycle fixees with a
/// non-vertex fixator (lemma3) are findings.
pub fn check_lemma2_lemma3(corpus: CorpusSpec, config: &RunConfig) -> Result<CheckReport> {
    let corpus = load_corpus(&corpus.with_required(&[Filter::Chromatic(4)])?, config)?;
    let opts = fixation_options(config);
    scan("lemma2_lemma3", corpus, config, Vec::new(), |g, dl| {
        let mut out = GraphOutcome::default();
        let pairs = fixation_pairs_within(g, 4, &opts, dl)?;
        let oriented = oriented_keys(&pairs);
        for pair in pairs {
            for p in [pair.clone(), pair.reversed()] {
                if !is_minimal_fixator(&oriented, p.fixator, p.fixee) {
                    out.count("non_minimal", 1);
                    continue;
                }
                let class = direct_fixator_class(g, &p);
                out.count(class.as_str(), 1);
                let fixee_shape = set_shape(g, p.fixee);
                let anomaly = match fixee_shape {
                    SetShape::Vertex if class != FixatorClass::OddCycleToVertex => Some("lemma2"),
                    SetShape::OddCycle if class != FixatorClass::VertexToOddCycle => Some("lemma3"),
                    _ => None,
                };
                if let Some(tag) = anomaly {
                    out.findings.push(format!(
                        "{tag}: fixator {} ({}) fixes {} {}",
                        fmt_set(p.fixator),
                        shape_name(set_shape(g, p.fixator)),
                        shape_name(fixee_shape),
                        fmt_set(p.fixee)
                    ));
                }
            }
        }
        Ok(out)
    })
}

/// Forward: vertex nodes of one chain are color identical (violations).
/// Converse: color identical pairs share a chain (findings).
pub fn check_lemma4(corpus: CorpusSpec, direction: Direction, config: &RunConfig) -> Result<CheckReport> {
    let corpus = load_corpus(&corpus.with_required(&[Filter::Chromatic(4)])?, config)?;
    let opts = chain_options(config);
    let name = match direction {
        Direction::Forward => "lemma4_forward",
        Direction::Converse => "lemma4_converse",
        Direction::Both => "lemma4",
    };
    scan(name, corpus, config, Vec::new(), |g, dl| {
        let mut out = GraphOutcome::default();
        let ci = color_identical_pairs_within(g, 4, dl)?;
        let chains = build_fixation_chains_within(g, &opts, dl)?;
        out.count("color_identical_pairs", ci.len() as u64);
        out.count("chains", chains.len() as u64);
        if direction != Direction::Converse {
            for chain in &chains {
                for (u, v) in chain.vertex_pairs() {
                    out.count("same_chain_pairs", 1);
                    if ci.binary_search(&(u, v)).is_err() {
                        out.violations.push(format!("vertex nodes {u},{v} share a chain but are not color identical"));
                    }
                }
            }
        }
        if direction != Direction::Forward {
            for &(u, v) in &ci {
                if !chains.iter().any(|c| c.contains_vertex_node(u) && c.contains_vertex_node(v)) {
                    out.findings.push(format!("color identical pair {u},{v} shares no fixation chain"));
                }
            }
        }
        Ok(out)
    })
}

/// Reports joinable vertex-node pairs within a chain.
pub fn check_lemma5(corpus: CorpusSpec, config: &RunConfig) -> Result<CheckReport> {
    let corpus = load_corpus(&corpus.with_required(&[Filter::Planar, Filter::Chromatic(4)])?, config)?;
    let opts = chain_options(config);
    scan("lemma5", corpus, config, Vec::new(), |g, dl| {
        let mut out = GraphOutcome::default();
        for chain in build_fixation_chains_within(g, &opts, dl)? {
            out.count("chains", 1);
            for (u, v) in chain.vertex_pairs() {
                out.count("vertex_node_pairs", 1);
                dl.tick()?;
                if joinable_unchecked(g, u, v).joinable {
                    out.findings.push(format!("vertex nodes {u},{v} of chain {} are joinable", fmt_set(chain.vertex_nodes)));
                }
            }
        }
        Ok(out)
    })
}

/// Result of deleting one edge of a 5-chromatic graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeOutcome {
    pub u: Vertex,
    pub v: Vertex,
    pub chromatic_after: usize,
    /// Whether u, v are color identical in the edge-deleted graph; `None`
    /// when deletion does not drop χ to 4.
    pub color_identical: Option<bool>,
}

impl EdgeOutcome {
    pub fn violates(&self) -> bool {
        self.color_identical == Some(false)
    }
}

fn corollary_edges(g: &Graph, dl: &Deadline) -> Result<Vec<EdgeOutcome>> {
    let chi = chromatic_number_within(g, dl)?;
    if chi != 5 {
        return Err(Error::Precondition(format!("corollary experiment needs a 5-chromatic graph, got chromatic number {chi}")));
    }
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let h = g.without_edge(u, v);
        let after = chromatic_number_within(&h, dl)?;
        let color_identical = if after == 4 { Some(color_identical_pairs_within(&h, 4, dl)?.contains(&(u, v))) } else { None };
        out.push(EdgeOutcome { u, v, chromatic_after: after, color_identical });
    }
    Ok(out)
}

/// Deletes each edge of a 5-chromatic graph and records whether the
/// endpoints become color identical when χ drops to 4.
pub fn corollary_experiment(g: &Graph) -> Result<Vec<EdgeOutcome>> {
    corollary_edges(g, &Deadline::none())
}

pub fn check_corollary1(corpus: CorpusSpec, config: &RunConfig) -> Result<CheckReport> {
    let corpus = load_corpus(&corpus.with_required(&[Filter::Chromatic(5)])?, config)?;
    scan("corollary1", corpus, config, Vec::new(), |g, dl| {
        let mut out = GraphOutcome::default();
        for e in corollary_edges(g, dl)? {
            out.count("edges", 1);
            if e.color_identical.is_some() {
                out.count("edges_dropping_to_4", 1);
            }
            if e.violates() {
                out.violations.push(format!("deleting {},{} leaves a 4-chromatic graph where they are not color identical", e.u, e.v));
            }
        }
        Ok(out)
    })
}

/// Facts about the Grötzsch graph: χ = 4, triangle-free and nonplanar are
/// asserted; the fixation-pair and color-identical counts are findings.
pub fn check_grotzsch(config: &RunConfig) -> Result<CheckReport> {
    let started = std::time::Instant::now();
    let g = fixtures::grotzsch().graph;
    let key = to_graph6(&g);
    let mut report = CheckReport::new("grotzsch", "fixture:grotzsch");
    report.considered = 1;
    report.scanned = 1;
    let chi = chromatic_number(&g);
    let violation = |d: String| Entry { graph6: key.clone(), detail: d };
    if chi != 4 {
        report.violations.push(violation(format!("chromatic number is {chi}, expected 4")));
    }
    if !g.is_triangle_free() {
        report.violations.push(violation("graph contains a triangle".into()));
    }
    if is_planar(&g) {
        report.violations.push(violation("graph is planar".into()));
    }
    let dl = Deadline::from_option(config.timeout);
    let pairs: Result<Vec<FixationPair>> = fixation_pairs_within(&g, 4, &fixation_options(config), &dl);
    let ci = color_identical_pairs_within(&g, 4, &dl);
    match (pairs, ci) {
        (Ok(pairs), Ok(ci)) => {
            report.counters.insert("fixation_pairs".into(), pairs.len() as u64);
            report.counters.insert("embraces".into(), pairs.iter().filter(|p| p.embrace).count() as u64);
            report.counters.insert("color_identical_pairs".into(), ci.len() as u64);
            report.findings.push(violation(format!("fixation_pairs={} (max side {})", pairs.len(), config.max_side)));
            report.findings.push(violation(format!("color_identical_pairs={}", ci.len())));
        }
        (Err(Error::Timeout), _) | (_, Err(Error::Timeout)) => report.timeouts.push(key.clone()),
        (Err(e), _) | (_, Err(e)) => return Err(e),
    }
    report.finish(started.elapsed());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture_corpus(g: Graph) -> CorpusSpec {
        CorpusSpec::graphs("fixture", vec![g])
    }

    #[test]
    fn theorem1_on_fig1_and_empty() {
        let r = check_theorem1(fixture_corpus(fixtures::fig1().graph), &RunConfig::default()).unwrap();
        assert_eq!((r.scanned, r.violations.len()), (1, 0));
        assert_eq!(r.counter("color_identical_pairs"), 1);
        let r = check_theorem1(CorpusSpec::graphs("empty", vec![]), &RunConfig::default()).unwrap();
        assert_eq!((r.scanned, r.violations.len()), (0, 0));
    }

    #[test]
    fn lemma4_on_fig1() {
        let r = check_lemma4(fixture_corpus(fixtures::fig1().graph), Direction::Both, &RunConfig::default()).unwrap();
        assert!(r.violations.is_empty() && r.findings.is_empty());
        assert_eq!(r.counter("same_chain_pairs"), 1);
    }

    #[test]
    fn lemma2_lemma3_on_figure_graphs() {
        let r = check_lemma2_lemma3(fixture_corpus(fixtures::fig1().graph), &RunConfig::default()).unwrap();
        assert!(r.findings.is_empty(), "{:?}", r.findings);
        assert!(r.counter("non_minimal") > 0);
        assert!(r.counter("odd_cycle->vertex") > 0);
        let r = check_lemma2_lemma3(fixture_corpus(fixtures::fig2_edges().graph), &RunConfig::default()).unwrap();
        assert!(r.counter("edge->edge") > 0);
        assert!(!r.findings.iter().any(|e| e.detail.starts_with("lemma2")));
    }

    #[test]
    fn lemma5_on_chain_fixtures() {
        for f in [fixtures::fig1(), fixtures::fig7()] {
            let r = check_lemma5(fixture_corpus(f.graph), &RunConfig::default()).unwrap();
            assert_eq!(r.scanned, 1);
            assert!(r.findings.is_empty(), "{}", f.name);
            assert!(r.counter("vertex_node_pairs") >= 1);
        }
    }

    #[test]
    fn lemma1_reports_proxy() {
        let r = check_lemma1(fixture_corpus(fixtures::fig1().graph), &RunConfig::default()).unwrap();
        assert_eq!(r.notes, vec![LEMMA1_PROXY.to_string()]);
        assert!(r.counter("fixators_examined") > 0);
    }

    #[test]
    fn corollary_examples() {
        let k5 = corollary_experiment(&Graph::complete(5)).unwrap();
        assert_eq!(k5.len(), 10);
        assert!(k5.iter().all(|e| e.chromatic_after == 4 && e.color_identical == Some(true)));
        assert!(matches!(corollary_experiment(&Graph::complete(6)), Err(Error::Precondition(_))));
        let j = corollary_experiment(&fixtures::c5_join_k2().graph).unwrap();
        assert!(j.iter().all(|e| !e.violates()));
        assert!(j.iter().any(|e| e.color_identical == Some(true)));
    }

    #[test]
    fn check_names_parse() {
        for c in CheckName::ALL {
            assert_eq!(c.as_str().parse::<CheckName>().unwrap(), c);
        }
        assert!("nosuch".parse::<CheckName>().is_err());
        assert_eq!("converse".parse::<Direction>().unwrap(), Direction::Converse);
    }

    #[test]
    fn grotzsch_facts() {
        let r = check_grotzsch(&RunConfig::default()).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.findings.len(), 2);
    }
}
