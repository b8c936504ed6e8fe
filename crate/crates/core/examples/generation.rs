//! Isomorph-free generation of small graphs and canonical forms.

use colorfix::canon::canonical_form;
use colorfix::{generate_small_graphs, is_planar, Graph};

fn main() -> colorfix::Result<()> {
    for n in 1..=7 {
        let gs = generate_small_graphs(n)?;
        let planar = gs.iter().filter(|g| is_planar(g)).count();
        println!("n={n}: {:>5} graphs, {:>5} planar", gs.len(), planar);
    }
    let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?;
    let b = Graph::from_edges(4, &[(3, 0), (0, 2), (2, 1)])?;
    println!("two labellings of P4 share a canonical form: {}", canonical_form(&a) == canonical_form(&b));
    Ok(())
}
