//! Fixation chains: vertices linked through the odd cycles they dominate.

use colorfix::fixation::ChainNode;
use colorfix::{build_fixation_chains, color_identical_pairs, fixtures, same_chain};

fn main() -> colorfix::Result<()> {
    let f = fixtures::fig7();
    let g = &f.graph;
    let chains = build_fixation_chains(g);
    println!("{}: {} chain(s)", f.name, chains.len());
    for chain in &chains {
        let nodes: Vec<&str> = chain.vertex_nodes.iter().map(|v| f.labels[v].as_str()).collect();
        println!("  vertex nodes {nodes:?}, {} cycle nodes", chain.cycle_nodes.len());
        if let Some(path) = chain.path(f.vertex("y0"), f.vertex("y2")) {
            let shown: Vec<String> = path
                .iter()
                .map(|n| match n {
                    ChainNode::Vertex(v) => f.labels[*v].clone(),
                    ChainNode::Cycle(i) => {
                        let c = &chain.cycle_nodes[*i].cycle;
                        format!("({})", c.vertices().iter().map(|&v| f.labels[v].as_str()).collect::<Vec<_>>().join("-"))
                    }
                })
                .collect();
            println!("  y0 to y2: {}", shown.join(" "));
        }
    }
    let (y0, y2) = (f.vertex("y0"), f.vertex("y2"));
    println!("same_chain(y0, y2) = {}", same_chain(g, y0, y2)?);
    println!("color identical: {}", color_identical_pairs(g, 4)?.contains(&(y0, y2)));
    Ok(())
}
