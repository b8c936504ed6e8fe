//! Color identity, color fixation, fixation chains and joinability on small
//! graphs, with a harness for running the related claims over exhaustive
//! corpora.

pub mod analysis;
pub mod canon;
pub mod cli;
pub mod coloring;
pub mod deadline;
pub mod error;
pub mod fixation;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod io;
pub mod planarity;

pub use coloring::{
    chromatic_number, color_identical_pairs, color_profile, enumerate_colorings, is_critical, is_k_colorable, ColorProfile,
    ColorSet, Coloring, Colorings, CriticalityMode, ReferenceClique,
};
pub use deadline::Deadline;
pub use error::{Error, Result};
pub use fixation::{
    audit_pair, build_fixation_chains, direct_fixator_class, fixation_pairs, is_fixed_as_whole, same_chain, FixationChain, FixationPair,
    FixatorClass,
};
pub use generate::generate_small_graphs;
pub use graph::{complete_join_exists, Graph, OddCycle, Vertex, VertexSet};
pub use graph6::{parse_graph6, to_graph6};
pub use planarity::{is_planar, joinable, JoinabilityResult};
