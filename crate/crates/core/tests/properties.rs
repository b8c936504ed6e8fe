mod common;

use colorfix::coloring::{color_profile, is_uniquely_k_colorable, Colorings};
use colorfix::fixation::{build_fixation_chains, same_chain};
use colorfix::graph::odd_cycles_dominated_by;
use colorfix::harness::{check_lemma4, CorpusSpec, Direction, RunConfig};
use colorfix::{
    audit_pair, chromatic_number, color_identical_pairs, complete_join_exists, enumerate_colorings, fixation_pairs, is_planar,
    joinable, parse_graph6, to_graph6, Graph, OddCycle, ReferenceClique, VertexSet,
};
use common::*;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
}

/// Random graph on up to 64 vertices with edge probability about `p`/256.
fn large_graph() -> impl Strategy<Value = Graph> {
    (0usize..=64, any::<u8>(), any::<u64>()).prop_map(|(n, p, seed)| {
        let mut g = Graph::new(n).unwrap();
        let mut s = seed;
        for v in 1..n {
            for u in 0..v {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if ((s >> 56) as u8) < p {
                    g.insert_edge(u, v).unwrap();
                }
            }
        }
        g
    })
}

fn sparse_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, prop::collection::vec((0usize..16, 0usize..16), 0..24)).prop_map(|(n, es)| {
        let mut g = Graph::new(n).unwrap();
        for (a, b) in es {
            let (a, b) = (a % n, b % n);
            if a != b {
                g.insert_edge(a, b).unwrap();
            }
        }
        g
    })
}

/// Graphs containing K4 on 0..4 with sparse extra edges; mostly 4-chromatic.
fn k4_based(max_n: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, a, b)| graph_from_bits(n, (a & b) | 0b111111))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in large_graph()) {
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn add_edge_keeps_order_and_removal_restores(g in graph(10), u in 0usize..10, v in 0usize..10) {
        let (u, v) = (u % g.order(), v % g.order());
        prop_assume!(u != v && !g.has_edge(u, v));
        let h = g.add_edge(u, v).unwrap();
        prop_assert_eq!(h.order(), g.order());
        prop_assert_eq!(h.size(), g.size() + 1);
        prop_assert_eq!(h.without_edge(u, v), g);
    }

    #[test]
    fn dominated_cycles_are_valid_and_dominated(g in graph(9)) {
        for v in 0..g.order() {
            for c in odd_cycles_dominated_by(&g, v).unwrap() {
                prop_assert!(OddCycle::new(&g, c.vertices().to_vec()).is_ok());
                prop_assert!(c.len() % 2 == 1 && c.len() >= 3);
                prop_assert!(complete_join_exists(&g, VertexSet::singleton(v), c.vertex_set()).unwrap());
            }
        }
    }

    #[test]
    fn coloring_count_is_a_sum_of_permutation_orbits(g in graph(7), k in 1usize..=4) {
        let all = enumerate_colorings(&g, k, None).unwrap().count();
        let orbit_sum: usize = Colorings::canonical(&g, k)
            .unwrap()
            .map(|c| {
                let used = c.partition().len();
                factorial(k) / factorial(k - used)
            })
            .sum();
        prop_assert_eq!(all, orbit_sum);
    }

    #[test]
    fn reference_clique_selects_one_member_per_orbit(g in graph(7)) {
        let k = chromatic_number(&g);
        let clique: Option<Vec<usize>> = match k {
            2 => Some(vec![0]),
            3 => g.edges().next().map(|(u, v)| vec![u, v]),
            4 => g.triangles().first().map(|t| t.to_vec()),
            _ => None,
        };
        prop_assume!(clique.is_some());
        let r = ReferenceClique::new(&g, clique.unwrap()).unwrap();
        let all = enumerate_colorings(&g, k, None).unwrap().count();
        prop_assert_eq!(all, factorial(k) * enumerate_colorings(&g, k, Some(&r)).unwrap().count());
    }

    #[test]
    fn identity_is_non_adjacent_symmetric_and_transitive(g in graph(8)) {
        let chi = chromatic_number(&g);
        prop_assume!(chi >= 1);
        let pairs = color_identical_pairs(&g, chi).unwrap();
        for &(u, v) in &pairs {
            prop_assert!(u < v && !g.has_edge(u, v));
        }
        for &(a, b) in &pairs {
            for &(c, d) in &pairs {
                let ends: Vec<usize> = match () {
                    _ if b == c => vec![a, d],
                    _ if a == c && b != d => vec![b, d],
                    _ if b == d && a != c => vec![a, c],
                    _ => continue,
                };
                let (x, y) = (ends[0].min(ends[1]), ends[0].max(ends[1]));
                prop_assert!(pairs.contains(&(x, y)), "{:?} {:?}", (a, b), (c, d));
            }
        }
    }

    #[test]
    fn profiles_are_attained(g in k4_based(7)) {
        let tris = g.triangles();
        prop_assume!(chromatic_number(&g) == 4 && !tris.is_empty());
        let r = ReferenceClique::new(&g, tris[0].to_vec()).unwrap();
        let p = color_profile(&g, 4, Some(&r)).unwrap();
        let all: Vec<_> = enumerate_colorings(&g, 4, Some(&r)).unwrap().collect();
        for v in 0..g.order() {
            for c in p.colors(v).iter() {
                prop_assert!(all.iter().any(|col| col.color(v) == c));
            }
            prop_assert!(all.iter().all(|col| p.colors(v).contains(col.color(v))));
        }
    }

    #[test]
    fn planar_graphs_are_four_colorable(g in sparse_graph(9)) {
        prop_assume!(is_planar(&g));
        prop_assert!(chromatic_number(&g) <= 4);
        if g.order() >= 3 {
            prop_assert!(g.size() <= 3 * g.order() - 6);
        }
        for (u, v) in g.edges() {
            prop_assert!(is_planar(&g.without_edge(u, v)));
        }
    }

    #[test]
    fn joinable_implies_planar_after_join(g in sparse_graph(9), u in 0usize..9, v in 0usize..9) {
        prop_assume!(is_planar(&g));
        let (u, v) = (u % g.order(), v % g.order());
        prop_assume!(u != v);
        let r = joinable(&g, u, v).unwrap();
        if r.joinable {
            prop_assert!(is_planar(&g.add_edge(u, v).unwrap()));
        } else if !g.has_edge(u, v) {
            prop_assert!(!oracle_planar(&g.add_edge(u, v).unwrap()));
        }
    }

    #[test]
    fn pairs_survive_audit_and_embraces_are_pairs(g in graph(7)) {
        let chi = chromatic_number(&g);
        prop_assume!(chi >= 2);
        for p in fixation_pairs(&g, chi, 3).unwrap() {
            prop_assert!(audit_pair(&g, chi, &p).unwrap());
            if p.embrace {
                prop_assert!(p.j < chi && p.j + p.fixee_chromatic == chi);
            }
        }
    }

    #[test]
    fn chains_are_sound_for_four_chromatic_graphs(g in k4_based(8)) {
        prop_assume!(chromatic_number(&g) == 4);
        let brute = brute_ci_pairs(&g, 4);
        for chain in build_fixation_chains(&g) {
            for (u, v) in chain.vertex_pairs() {
                prop_assert!(!g.has_edge(u, v));
                prop_assert!(brute.contains(&(u, v)));
                prop_assert!(same_chain(&g, u, v).unwrap());
                prop_assert!(chain.path(u, v).is_some());
            }
        }
    }
}

#[test]
fn uniquely_colorable_graphs_make_every_class_identical() {
    for f in colorfix::fixtures::fig4() {
        let g = &f.graph;
        assert!(is_uniquely_k_colorable(g, 4).unwrap());
        let pairs = color_identical_pairs(g, 4).unwrap();
        let coloring = enumerate_colorings(g, 4, None).unwrap().next().unwrap();
        let same_class: usize = coloring.partition().iter().map(|c| c.len() * (c.len() - 1) / 2).sum();
        assert_eq!(pairs.len(), same_class);
    }
}

#[test]
fn lemma4_report_is_deterministic() {
    let run = || {
        let cfg = RunConfig { jobs: 4, ..Default::default() };
        check_lemma4(CorpusSpec::builtin(6), Direction::Both, &cfg).unwrap()
    };
    let (a, b) = (run(), run());
    assert_eq!(a.body_json(), b.body_json());
    assert_eq!(a.to_csv(), b.to_csv());
}
