//! Named graphs: reconstructions of the figure graphs plus the standard
//! small graphs the checks refer to. Addressable as `fixture:NAME`.

use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub graph: Graph,
    /// Display label per vertex.
    pub labels: Vec<String>,
}

impl Fixture {
    fn new(name: &'static str, description: &'static str, labels: &[&str], edges: &[(&str, &str)]) -> Fixture {
        let idx = |l: &str| labels.iter().position(|x| *x == l).unwrap_or_else(|| panic!("unknown label {l}"));
        let edges: Vec<_> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
        Fixture {
            name,
            description,
            graph: Graph::from_edges(labels.len(), &edges).expect("fixture edges are valid"),
            labels: labels.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn numbered(name: &'static str, description: &'static str, graph: Graph) -> Fixture {
        let labels = (0..graph.order()).map(|v| v.to_string()).collect();
        Fixture { name, description, graph, labels }
    }

    pub fn vertex(&self, label: &str) -> Vertex {
        self.labels.iter().position(|l| l == label).unwrap_or_else(|| panic!("fixture {} has no vertex {label}", self.name))
    }

    pub fn vertices(&self, labels: &[&str]) -> Vec<Vertex> {
        labels.iter().map(|l| self.vertex(l)).collect()
    }
}

pub const NAMES: &[&str] = &[
    "fig1",
    "fig2-bipartite",
    "fig2-pair",
    "fig2-triangle",
    "fig2-edges",
    "fig3",
    "fig4-a",
    "fig4-b",
    "fig4-c",
    "fig7",
    "grotzsch",
    "k4",
    "k5",
    "octahedron",
    "c5",
    "wheel5",
    "k33",
    "c5-join-k2",
    "c5-join-k3",
];

pub fn by_name(name: &str) -> Option<Fixture> {
    Some(match name {
        "fig1" => fig1(),
        "fig2-bipartite" => fig2_bipartite(),
        "fig2-pair" => fig2_pair(),
        "fig2-triangle" => fig2_triangle(),
        "fig2-edges" => fig2_edges(),
        "fig3" => fig3(),
        "fig4-a" => fig4()[0].clone(),
        "fig4-b" => fig4()[1].clone(),
        "fig4-c" => fig4()[2].clone(),
        "fig7" => fig7(),
        "grotzsch" => grotzsch(),
        "k4" => Fixture::numbered("k4", "complete graph on 4 vertices", Graph::complete(4)),
        "k5" => Fixture::numbered("k5", "complete graph on 5 vertices", Graph::complete(5)),
        "octahedron" => octahedron(),
        "c5" => Fixture::numbered("c5", "5-cycle", Graph::cycle(5)),
        "wheel5" => wheel5(),
        "k33" => Fixture::numbered("k33", "complete bipartite graph K3,3", Graph::complete_bipartite(3, 3)),
        "c5-join-k2" => c5_join_k2(),
        "c5-join-k3" => c5_join_k3(),
        _ => return None,
    })
}

pub fn all() -> Vec<Fixture> {
    NAMES.iter().map(|n| by_name(n).unwrap()).collect()
}

/// Triangle abc with two apexes u and v adjacent to all of it (K5 minus uv).
pub fn fig1() -> Fixture {
    Fixture::new(
        "fig1",
        "triangle abc with apexes u, v each adjacent to a, b, c",
        &["a", "b", "c", "u", "v"],
        &[("a", "b"), ("b", "c"), ("a", "c"), ("u", "a"), ("u", "b"), ("u", "c"), ("v", "a"), ("v", "b"), ("v", "c")],
    )
}

/// A 2-chromatic graph in which every edge is an embrace of two vertices.
pub fn fig2_bipartite() -> Fixture {
    Fixture::new("fig2-bipartite", "4-cycle; every edge embraces two vertices", &["a", "b", "c", "d"], &[
        ("a", "b"),
        ("b", "c"),
        ("c", "d"),
        ("d", "a"),
    ])
}

/// A 3-chromatic graph where {a, b} (non-adjacent) and {c} form a fixation
/// pair but no embrace: a and b are forced apart through the triangle cxy.
pub fn fig2_pair() -> Fixture {
    Fixture::new(
        "fig2-pair",
        "3-chromatic: {a,b},{c} is a fixation pair, a and b non-adjacent",
        &["a", "b", "c", "x", "y"],
        &[("c", "x"), ("c", "y"), ("x", "y"), ("a", "c"), ("a", "x"), ("b", "c"), ("b", "y")],
    )
}

/// K4 read as a vertex t embracing the triangle abc.
pub fn fig2_triangle() -> Fixture {
    Fixture::new("fig2-triangle", "K4: vertex t embraces triangle abc", &["a", "b", "c", "t"], &[
        ("a", "b"),
        ("b", "c"),
        ("a", "c"),
        ("t", "a"),
        ("t", "b"),
        ("t", "c"),
    ])
}

/// K4 read as the edge ab embracing the edge cd.
pub fn fig2_edges() -> Fixture {
    Fixture::new("fig2-edges", "K4: edge ab embraces edge cd", &["a", "b", "c", "d"], &[
        ("a", "b"),
        ("c", "d"),
        ("a", "c"),
        ("a", "d"),
        ("b", "c"),
        ("b", "d"),
    ])
}

/// Reference triangle xyz, w dominating it and the triangle pqr, s dominating
/// pqr; q also sees y and r also sees x. Relative to xyz, p ranges over three
/// colors and q, r over two each while pqr as a whole is fixed.
pub fn fig3() -> Fixture {
    Fixture::new(
        "fig3",
        "reference triangle xyz; constrained but not fixed triangle pqr",
        &["x", "y", "z", "w", "p", "q", "r", "s"],
        &[
            ("x", "y"),
            ("y", "z"),
            ("x", "z"),
            ("w", "x"),
            ("w", "y"),
            ("w", "z"),
            ("p", "q"),
            ("q", "r"),
            ("p", "r"),
            ("w", "p"),
            ("w", "q"),
            ("w", "r"),
            ("s", "p"),
            ("s", "q"),
            ("s", "r"),
            ("q", "y"),
            ("r", "x"),
        ],
    )
}

/// Three Apollonian networks grown from the reference triangle abc by
/// repeatedly stacking a vertex into a triangular face.
pub fn fig4() -> [Fixture; 3] {
    let labels = ["a", "b", "c", "u", "v", "e1", "e2"];
    let base = [("a", "b"), ("b", "c"), ("a", "c"), ("u", "a"), ("u", "b"), ("u", "c")];
    let stack = |extra: &[(&'static str, &'static str)]| {
        let mut e: Vec<(&str, &str)> = base.to_vec();
        e.extend_from_slice(extra);
        e
    };
    let a = stack(&[("v", "b"), ("v", "c"), ("v", "u"), ("e1", "u"), ("e1", "v"), ("e1", "b"), ("e2", "a"), ("e2", "b"), ("e2", "u")]);
    let b = stack(&[("v", "a"), ("v", "b"), ("v", "u"), ("e1", "a"), ("e1", "v"), ("e1", "u"), ("e2", "e1"), ("e2", "v"), ("e2", "u")]);
    let c = stack(&[("v", "a"), ("v", "b"), ("v", "c"), ("e1", "u"), ("e1", "a"), ("e1", "b"), ("e2", "v"), ("e2", "b"), ("e2", "c")]);
    [
        Fixture::new("fig4-a", "Apollonian network on 7 vertices (stacked into ubc, uvb, uab)", &labels, &a),
        Fixture::new("fig4-b", "Apollonian network on 7 vertices (stacked into uab, uva, uve1)", &labels, &b),
        Fixture::new("fig4-c", "Apollonian network on 7 vertices (v outside abc, stacked into uab, vbc)", &labels, &c),
    ]
}

/// Planar chain y0 - T1 - y1 - T2 - y2: y0 inside triangle T1, y1 between T1
/// and the enclosing triangle T2, y2 outside T2.
pub fn fig7() -> Fixture {
    Fixture::new(
        "fig7",
        "fixation chain y0-T1-y1-T2-y2 of nested triangles",
        &["y0", "a1", "b1", "c1", "y1", "a2", "b2", "c2", "y2"],
        &[
            ("a1", "b1"),
            ("b1", "c1"),
            ("a1", "c1"),
            ("y0", "a1"),
            ("y0", "b1"),
            ("y0", "c1"),
            ("y1", "a1"),
            ("y1", "b1"),
            ("y1", "c1"),
            ("a2", "b2"),
            ("b2", "c2"),
            ("a2", "c2"),
            ("y1", "a2"),
            ("y1", "b2"),
            ("y1", "c2"),
            ("y2", "a2"),
            ("y2", "b2"),
            ("y2", "c2"),
        ],
    )
}

/// Mycielski graph of C5: 11 vertices, 20 edges, triangle-free, χ = 4.
pub fn grotzsch() -> Fixture {
    let mut g = Graph::new(11).unwrap();
    for i in 0..5 {
        let (prev, next) = ((i + 4) % 5, (i + 1) % 5);
        g.insert_edge(i, next).unwrap();
        g.insert_edge(5 + i, prev).unwrap();
        g.insert_edge(5 + i, next).unwrap();
        g.insert_edge(10, 5 + i).unwrap();
    }
    Fixture::numbered("grotzsch", "Grötzsch graph (Mycielskian of C5)", g)
}

/// K2,2,2; antipodal pairs are (0,1), (2,3), (4,5).
pub fn octahedron() -> Fixture {
    let mut g = Graph::complete(6);
    for (u, v) in [(0, 1), (2, 3), (4, 5)] {
        g.remove_edge(u, v);
    }
    Fixture::numbered("octahedron", "octahedron K2,2,2 with antipodes (0,1), (2,3), (4,5)", g)
}

/// Hub 5 over the rim 0..5.
pub fn wheel5() -> Fixture {
    Fixture::numbered("wheel5", "wheel: hub 5 over rim C5 on 0..5", Graph::cycle(5).join(&Graph::complete(1)).unwrap())
}

/// C5 joined with K2: the 5-chromatic double wheel.
pub fn c5_join_k2() -> Fixture {
    Fixture::numbered("c5-join-k2", "C5 joined with K2 (5-chromatic)", Graph::cycle(5).join(&Graph::complete(2)).unwrap())
}

/// C5 joined with K3 (6-chromatic).
pub fn c5_join_k3() -> Fixture {
    Fixture::numbered("c5-join-k3", "C5 joined with K3 (6-chromatic)", Graph::cycle(5).join(&Graph::complete(3)).unwrap())
}
