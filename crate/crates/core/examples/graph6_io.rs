//! Reading and writing graphs: graph6 strings, edge lists and fixtures.

use colorfix::io::{load_graph, parse_edge_list};
use colorfix::{parse_graph6, to_graph6, Graph};

fn main() -> colorfix::Result<()> {
    let k5 = parse_graph6("D~{")?;
    println!("D~{{ -> {} vertices, {} edges", k5.order(), k5.size());

    let double_wheel = Graph::cycle(5).join(&Graph::complete(2))?;
    println!("C5 join K2 encodes as {}", to_graph6(&double_wheel));

    let path = parse_edge_list("# a path\n3\n0 1\n1 2\n")?;
    println!("edge list path: graph6 {}", to_graph6(&path));

    for name in ["fig1", "octahedron", "grotzsch"] {
        let g = load_graph(&format!("fixture:{name}"))?;
        println!("fixture:{name:<11} {}", to_graph6(&g));
    }

    match parse_graph6("Bx") {
        Err(e) => println!("rejected Bx: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
