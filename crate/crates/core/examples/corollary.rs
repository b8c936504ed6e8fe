//! Deleting each edge of a 5-chromatic graph: when χ drops to 4 the
//! endpoints become color identical.

use colorfix::harness::corollary_experiment;
use colorfix::{fixtures, Graph};

fn main() -> colorfix::Result<()> {
    for (name, g) in [("K5", Graph::complete(5)), ("C5 join K2", fixtures::c5_join_k2().graph)] {
        println!("{name}:");
        for e in corollary_experiment(&g)? {
            println!("  -{},{}: chi {}, color identical {:?}", e.u, e.v, e.chromatic_after, e.color_identical);
        }
    }
    if let Err(e) = corollary_experiment(&fixtures::c5_join_k3().graph) {
        println!("C5 join K3: {e}");
    }
    Ok(())
}
