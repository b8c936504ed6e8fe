//! Joinability: can u and v be joined by an edge without losing planarity?

use colorfix::{fixtures, joinable, Graph};

fn main() -> colorfix::Result<()> {
    let p3 = Graph::path(3);
    println!("P3 endpoints: {}", joinable(&p3, 0, 2)?.verdict());

    let oct = fixtures::octahedron();
    for (u, v) in [(0, 1), (0, 2)] {
        println!("octahedron {u},{v}: {}", joinable(&oct.graph, u, v)?.verdict());
    }

    let f = fixtures::fig1();
    println!("fig1 u,v: {}", joinable(&f.graph, f.vertex("u"), f.vertex("v"))?.verdict());

    match joinable(&Graph::complete(5), 0, 1) {
        Err(e) => println!("K5: {e}"),
        Ok(r) => println!("K5: {}", r.verdict()),
    }
    Ok(())
}
