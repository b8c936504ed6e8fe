//! Color fixation pairs, embraces and their shape classes on the small
//! figure graphs.

use colorfix::{chromatic_number, direct_fixator_class, fixation_pairs, fixtures};

fn main() -> colorfix::Result<()> {
    for f in [fixtures::fig2_bipartite(), fixtures::fig2_pair(), fixtures::fig2_triangle(), fixtures::fig2_edges()] {
        let g = &f.graph;
        let k = chromatic_number(g);
        println!("{} ({k}-chromatic): {}", f.name, f.description);
        for p in fixation_pairs(g, k, 3)? {
            let name = |s: colorfix::VertexSet| s.iter().map(|v| f.labels[v].as_str()).collect::<Vec<_>>().join("");
            println!(
                "  {{{}}} fixes {{{}}}  {}{}",
                name(p.fixator),
                name(p.fixee),
                direct_fixator_class(g, &p).as_str(),
                if p.embrace { ", embrace" } else { "" }
            );
        }
    }
    Ok(())
}
