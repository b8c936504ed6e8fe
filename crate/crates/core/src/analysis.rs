//! Everything the library knows about one graph, as a serializable document.

use std::fmt::Write as _;

use serde::Serialize;

use crate::coloring::{chromatic_number_within, color_identical_pairs_within};
use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::fixation::{build_fixation_chains_within, direct_fixator_class, fixation_pairs_within, ChainOptions, FixationChain, FixationOptions, FixationPair};
use crate::graph::{Graph, Vertex};
use crate::graph6::to_graph6;
use crate::planarity::{is_planar, joinable_unchecked};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Palette size; defaults to the chromatic number.
    pub palette: Option<usize>,
    pub fixation: FixationOptions,
    pub chains: ChainOptions,
    pub deadline: Option<std::time::Duration>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CiPair {
    pub u: Vertex,
    pub v: Vertex,
    /// "adjacent", "joinable" or "not-joinable"; absent for nonplanar graphs.
    pub joinable: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifiedPair {
    #[serde(flatten)]
    pub pair: FixationPair,
    pub class: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub chromatic_number: usize,
    pub palette: usize,
    pub planar: bool,
    pub triangle_free: bool,
    pub color_identical_pairs: Vec<CiPair>,
    pub fixation_pairs: Vec<ClassifiedPair>,
    pub chains: Vec<FixationChain>,
}

pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<Analysis> {
    let dl = Deadline::from_option(opts.deadline);
    let chi = chromatic_number_within(g, &dl)?;
    let k = opts.palette.unwrap_or(chi);
    if k < chi {
        return Err(Error::NotColorable { k });
    }
    let planar = is_planar(g);
    let ci = color_identical_pairs_within(g, k, &dl)?
        .into_iter()
        .map(|(u, v)| CiPair { u, v, joinable: planar.then(|| joinable_unchecked(g, u, v).verdict()) })
        .collect();
    let fixation_pairs = fixation_pairs_within(g, k, &opts.fixation, &dl)?
        .into_iter()
        .map(|p| ClassifiedPair { class: direct_fixator_class(g, &p).as_str(), pair: p })
        .collect();
    let chains = build_fixation_chains_within(g, &opts.chains, &dl)?;
    Ok(Analysis {
        graph6: to_graph6(g),
        order: g.order(),
        size: g.size(),
        chromatic_number: chi,
        palette: k,
        planar,
        triangle_free: g.is_triangle_free(),
        color_identical_pairs: ci,
        fixation_pairs,
        chains,
    })
}

impl Analysis {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("analysis serializes")
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        writeln!(s, "graph6:            {}", self.graph6).unwrap();
        writeln!(s, "order, size:       {}, {}", self.order, self.size).unwrap();
        writeln!(s, "chromatic number:  {}", self.chromatic_number).unwrap();
        writeln!(s, "palette:           {}", self.palette).unwrap();
        writeln!(s, "planar:            {}", self.planar).unwrap();
        writeln!(s, "triangle-free:     {}", self.triangle_free).unwrap();
        writeln!(s, "color identical pairs: {}", self.color_identical_pairs.len()).unwrap();
        for p in &self.color_identical_pairs {
            writeln!(s, "  {},{}  joinable: {}", p.u, p.v, p.joinable.unwrap_or("n/a (nonplanar)")).unwrap();
        }
        writeln!(s, "fixation pairs: {}", self.fixation_pairs.len()).unwrap();
        for p in &self.fixation_pairs {
            let embrace = if p.pair.embrace { "  embrace" } else { "" };
            writeln!(s, "  {} fixes {}  [{}] j={}{embrace}", p.pair.fixator, p.pair.fixee, p.class, p.pair.j).unwrap();
        }
        writeln!(s, "fixation chains: {}", self.chains.len()).unwrap();
        for c in &self.chains {
            let cycles: Vec<String> = c.cycle_nodes.iter().map(|n| n.cycle.to_string()).collect();
            writeln!(s, "  vertex nodes {}  cycle nodes {}", c.vertex_nodes, cycles.join(" ")).unwrap();
        }
        s
    }

    /// Flat rows: kind, item, detail.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["graph6", "kind", "item", "detail"]).unwrap();
        let g6 = self.graph6.as_str();
        let scalars = [
            ("chromatic_number", self.chromatic_number.to_string()),
            ("palette", self.palette.to_string()),
            ("planar", self.planar.to_string()),
            ("triangle_free", self.triangle_free.to_string()),
        ];
        for (k, v) in scalars {
            w.write_record([g6, "property", k, &v]).unwrap();
        }
        for p in &self.color_identical_pairs {
            w.write_record([g6, "color_identical", &format!("{},{}", p.u, p.v), p.joinable.unwrap_or("")]).unwrap();
        }
        for p in &self.fixation_pairs {
            let detail = format!("{} embrace={}", p.class, p.pair.embrace);
            w.write_record([g6, "fixation_pair", &format!("{}|{}", p.pair.fixator, p.pair.fixee), &detail]).unwrap();
        }
        for c in &self.chains {
            let cycles: Vec<String> = c.cycle_nodes.iter().map(|n| n.cycle.to_string()).collect();
            w.write_record([g6, "chain", &c.vertex_nodes.to_string(), &cycles.join(" ")]).unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}
