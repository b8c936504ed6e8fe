//! Color identical pairs and color profiles relative to a reference triangle.

use colorfix::{chromatic_number, color_identical_pairs, color_profile, enumerate_colorings, fixtures, ReferenceClique};

fn main() -> colorfix::Result<()> {
    let f = fixtures::fig1();
    let g = &f.graph;
    let k = chromatic_number(g);
    println!("fig1: chromatic number {k}, {} proper {k}-colorings", enumerate_colorings(g, k, None)?.count());
    for (u, v) in color_identical_pairs(g, k)? {
        println!("  {} and {} are color identical", f.labels[u], f.labels[v]);
    }

    // relative to the reference triangle xyz, p, q, r are constrained but
    // the triangle pqr always receives the same three colors
    let f = fixtures::fig3();
    let r = ReferenceClique::new(&f.graph, f.vertices(&["x", "y", "z"]))?;
    let profile = color_profile(&f.graph, 4, Some(&r))?;
    for (v, label) in f.labels.iter().enumerate() {
        let colors: Vec<usize> = profile.colors(v).iter().collect();
        println!("  {label}: {colors:?}");
    }
    let pqr = f.vertices(&["p", "q", "r"]).into_iter().collect();
    println!("pqr fixed as a whole: {}", colorfix::is_fixed_as_whole(&f.graph, 4, pqr, &r)?);
    Ok(())
}
