//! Corpus campaigns: every claim is run as a falsifiable check over a corpus
//! of graphs, and the outcome is collected into a [`CheckReport`].

mod checks;
mod report;

use std::path::PathBuf;
use std::time::Duration;

use rayon::prelude::*;

use crate::coloring::chromatic_number_within;
use crate::deadline::{Deadline, Timeout};
use crate::error::{Error, Result};
use crate::generate::{generate_up_to, MAX_GENERATED_ORDER};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::io::read_graph6_file;
use crate::planarity::is_planar;

pub use checks::{
    check_corollary1, check_grotzsch, check_lemma1, check_lemma2_lemma3, check_lemma4, check_lemma5, check_theorem1,
    corollary_experiment, run_check, CheckName, Direction, EdgeOutcome, LEMMA1_PROXY,
};
pub use report::{CheckReport, Entry};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Every isomorphism class on 1..=max_n vertices.
    Builtin { max_n: usize },
    Graph6File(PathBuf),
    /// An explicit list, e.g. fixtures.
    Graphs { label: String, graphs: Vec<Graph> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    Planar,
    Chromatic(usize),
    Connected,
    TriangleFree,
}

impl std::fmt::Display for Filter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Filter::Planar => write!(f, "planar"),
            Filter::Chromatic(k) => write!(f, "chromatic={k}"),
            Filter::Connected => write!(f, "connected"),
            Filter::TriangleFree => write!(f, "triangle_free"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub source: Source,
    /// Applied left to right.
    pub filters: Vec<Filter>,
}

impl CorpusSpec {
    pub fn builtin(max_n: usize) -> CorpusSpec {
        CorpusSpec { source: Source::Builtin { max_n }, filters: Vec::new() }
    }

    pub fn graph6_file(path: impl Into<PathBuf>) -> CorpusSpec {
        CorpusSpec { source: Source::Graph6File(path.into()), filters: Vec::new() }
    }

    pub fn graphs(label: impl Into<String>, graphs: Vec<Graph>) -> CorpusSpec {
        CorpusSpec { source: Source::Graphs { label: label.into(), graphs }, filters: Vec::new() }
    }

    pub fn filter(mut self, f: Filter) -> CorpusSpec {
        self.filters.push(f);
        self
    }

    /// Appends each required filter the spec lacks. A chromatic filter with
    /// a different k is a precondition error.
    pub fn with_required(mut self, required: &[Filter]) -> Result<CorpusSpec> {
        for &r in required {
            if let Filter::Chromatic(k) = r {
                if let Some(other) = self.filters.iter().find_map(|f| match f {
                    Filter::Chromatic(j) if *j != k => Some(*j),
                    _ => None,
                }) {
                    return Err(Error::Precondition(format!("check needs chromatic={k}, corpus filters chromatic={other}")));
                }
            }
            if !self.filters.contains(&r) {
                self.filters.push(r);
            }
        }
        Ok(self)
    }

    pub fn describe(&self) -> String {
        let source = match &self.source {
            Source::Builtin { max_n } => format!("builtin n<={max_n}"),
            Source::Graph6File(p) => format!("graph6 file {}", p.display()),
            Source::Graphs { label, graphs } => format!("{label} ({} graphs)", graphs.len()),
        };
        if self.filters.is_empty() {
            source
        } else {
            let fs: Vec<String> = self.filters.iter().map(|f| f.to_string()).collect();
            format!("{source} | {}", fs.join(", "))
        }
    }

    fn source_graphs(&self) -> Result<Vec<Graph>> {
        match &self.source {
            Source::Builtin { max_n } => {
                if !(1..=MAX_GENERATED_ORDER).contains(max_n) {
                    return Err(Error::Argument(format!("builtin corpus order must be in 1..={MAX_GENERATED_ORDER}, got {max_n}")));
                }
                generate_up_to(*max_n)
            }
            Source::Graph6File(p) => read_graph6_file(p),
            Source::Graphs { graphs, .. } => Ok(graphs.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Per-graph budget; `None` is unbounded.
    pub timeout: Option<Duration>,
    pub max_side: usize,
    pub cycle_cap: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { jobs: 0, timeout: Some(Duration::from_secs(10)), max_side: 4, cycle_cap: None }
    }
}

impl RunConfig {
    fn deadline(&self) -> Deadline {
        Deadline::from_option(self.timeout)
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| Error::Argument(format!("cannot start worker pool: {e}")))
    }
}

/// Graphs of a corpus after filtering, plus the ones whose filters timed out.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub description: String,
    pub considered: usize,
    pub graphs: Vec<Graph>,
    pub timeouts: Vec<String>,
}

fn passes(g: &Graph, filters: &[Filter], deadline: &Deadline) -> Result<bool, Timeout> {
    for f in filters {
        let ok = match *f {
            Filter::Planar => is_planar(g),
            Filter::Chromatic(k) => chromatic_number_within(g, deadline)? == k,
            Filter::Connected => g.is_connected(),
            Filter::TriangleFree => g.is_triangle_free(),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn load_corpus(spec: &CorpusSpec, config: &RunConfig) -> Result<Corpus> {
    let all = spec.source_graphs()?;
    let considered = all.len();
    let verdicts: Vec<Result<bool, Timeout>> =
        config.pool()?.install(|| all.par_iter().map(|g| passes(g, &spec.filters, &config.deadline())).collect());
    let mut graphs = Vec::new();
    let mut timeouts = Vec::new();
    for (g, v) in all.into_iter().zip(verdicts) {
        match v {
            Ok(true) => graphs.push(g),
            Ok(false) => {}
            Err(Timeout) => timeouts.push(to_graph6(&g)),
        }
    }
    Ok(Corpus { description: spec.describe(), considered, graphs, timeouts })
}

/// What one graph contributed to a report.
#[derive(Clone, Debug, Default)]
pub(crate) struct GraphOutcome {
    pub violations: Vec<String>,
    pub findings: Vec<String>,
    pub counters: Vec<(&'static str, u64)>,
}

impl GraphOutcome {
    pub fn count(&mut self, key: &'static str, by: u64) {
        match self.counters.iter_mut().find(|(k, _)| *k == key) {
            Some((_, c)) => *c += by,
            None => self.counters.push((key, by)),
        }
    }
}

/// Runs `per_graph` over the corpus in parallel and folds the outcomes.
pub(crate) fn scan<F>(check: &str, corpus: Corpus, config: &RunConfig, notes: Vec<String>, per_graph: F) -> Result<CheckReport>
where
    F: Fn(&Graph, &Deadline) -> Result<GraphOutcome> + Sync,
{
    let started = std::time::Instant::now();
    let results: Vec<(String, Result<GraphOutcome>)> = config.pool()?.install(|| {
        corpus.graphs.par_iter().map(|g| (to_graph6(g), per_graph(g, &config.deadline()))).collect()
    });
    let mut report = CheckReport::new(check, &corpus.description);
    report.considered = corpus.considered;
    report.scanned = corpus.graphs.len();
    report.notes = notes;
    report.timeouts = corpus.timeouts;
    for (key, r) in results {
        match r {
            Ok(out) => {
                for d in out.violations {
                    report.violations.push(Entry { graph6: key.clone(), detail: d });
                }
                for d in out.findings {
                    report.findings.push(Entry { graph6: key.clone(), detail: d });
                }
                for (k, c) in out.counters {
                    *report.counters.entry(k.to_string()).or_insert(0) += c;
                }
            }
            Err(Error::Timeout) => report.timeouts.push(key),
            Err(e) => return Err(e),
        }
    }
    report.finish(started.elapsed());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn filters_are_monotone() {
        let cfg = RunConfig::default();
        let base = load_corpus(&CorpusSpec::builtin(6), &cfg).unwrap();
        assert_eq!(base.considered, 1 + 2 + 4 + 11 + 34 + 156);
        let mut prev = base.graphs.len();
        let mut spec = CorpusSpec::builtin(6);
        for f in [Filter::Connected, Filter::Planar, Filter::Chromatic(4), Filter::TriangleFree] {
            spec = spec.filter(f);
            let n = load_corpus(&spec, &cfg).unwrap().graphs.len();
            assert!(n <= prev);
            prev = n;
        }
        assert_eq!(prev, 0, "no triangle-free 4-chromatic graph on 6 vertices");
    }

    #[test]
    fn connected_counts() {
        // connected graphs on 1..=6 vertices: 1, 1, 2, 6, 21, 112
        let c = load_corpus(&CorpusSpec::builtin(6).filter(Filter::Connected), &RunConfig::default()).unwrap();
        assert_eq!(c.graphs.len(), 1 + 1 + 2 + 6 + 21 + 112);
    }

    #[test]
    fn required_filters_are_appended() {
        let s = CorpusSpec::builtin(5).with_required(&[Filter::Planar, Filter::Chromatic(4)]).unwrap();
        assert_eq!(s.filters, vec![Filter::Planar, Filter::Chromatic(4)]);
        let s = CorpusSpec::builtin(5).filter(Filter::Chromatic(4)).with_required(&[Filter::Chromatic(4)]).unwrap();
        assert_eq!(s.filters.len(), 1);
        assert!(CorpusSpec::builtin(5).filter(Filter::Chromatic(3)).with_required(&[Filter::Chromatic(4)]).is_err());
    }

    #[test]
    fn builtin_range() {
        assert!(load_corpus(&CorpusSpec::builtin(0), &RunConfig::default()).is_err());
        assert!(load_corpus(&CorpusSpec::builtin(11), &RunConfig::default()).is_err());
    }

    #[test]
    fn explicit_graph_list() {
        let spec = CorpusSpec::graphs("fixtures", vec![fixtures::fig1().graph, fixtures::grotzsch().graph]).filter(Filter::Planar);
        let c = load_corpus(&spec, &RunConfig::default()).unwrap();
        assert_eq!((c.considered, c.graphs.len()), (2, 1));
        assert_eq!(c.description, "fixtures (2 graphs) | planar");
    }
}
