mod common;

use std::collections::BTreeSet;

use colorfix::{
    chromatic_number, color_identical_pairs, enumerate_colorings, fixation_pairs, generate_small_graphs, is_planar, joinable, Graph,
};
use common::*;

#[test]
fn minor_oracle_recognises_kuratowski_graphs() {
    assert!(!oracle_planar(&Graph::complete(5)));
    assert!(!oracle_planar(&Graph::complete_bipartite(3, 3)));
    assert!(oracle_planar(&Graph::complete(4)));
    assert!(oracle_planar(&Graph::cycle(7)));
    let mut k5_minus = Graph::complete(5);
    k5_minus.remove_edge(0, 1);
    assert!(oracle_planar(&k5_minus));
}

#[test]
fn planarity_agrees_with_minor_oracle_on_classes_up_to_7() {
    let mut checked = 0;
    for n in 1..=7 {
        for g in generate_small_graphs(n).unwrap() {
            assert_eq!(is_planar(&g), oracle_planar(&g), "{}", colorfix::to_graph6(&g));
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 2 + 4 + 11 + 34 + 156 + 1044);
}

#[test]
fn planarity_agrees_with_minor_oracle_on_labelled_graphs_up_to_6() {
    for n in 5..=6 {
        for bits in 0..1u64 << pair_count(n) {
            let g = graph_from_bits(n, bits);
            assert_eq!(is_planar(&g), oracle_planar(&g), "n={n} bits={bits:#x}");
        }
    }
}

#[test]
fn joinable_agrees_with_oracle_on_added_edge() {
    for n in 2..=6 {
        for g in generate_small_graphs(n).unwrap().into_iter().filter(is_planar) {
            for u in 0..n {
                for v in u + 1..n {
                    let r = joinable(&g, u, v).unwrap();
                    if g.has_edge(u, v) {
                        assert_eq!(r.verdict(), "adjacent");
                    } else {
                        assert_eq!(r.joinable, oracle_planar(&g.add_edge(u, v).unwrap()));
                    }
                }
            }
        }
    }
}

#[test]
fn generated_counts_match_burnside() {
    for n in 1..=8 {
        assert_eq!(generate_small_graphs(n).unwrap().len() as u128, burnside_count(n), "n={n}");
    }
}

#[test]
fn generated_counts_match_brute_force_classes() {
    assert_eq!(brute_class_count(4), 11);
    assert_eq!(brute_class_count(5), 34);
    for n in 1..=5 {
        assert_eq!(generate_small_graphs(n).unwrap().len(), brute_class_count(n), "n={n}");
    }
}

#[test]
fn generated_graphs_are_pairwise_non_isomorphic() {
    for n in 1..=6 {
        let perms = permutations(n);
        let gs = generate_small_graphs(n).unwrap();
        let keys: BTreeSet<u64> = gs.iter().map(|g| brute_canonical(g, &perms)).collect();
        assert_eq!(keys.len(), gs.len(), "n={n}");
    }
}

#[test]
fn coloring_counts_match_brute_force() {
    assert_eq!(enumerate_colorings(&Graph::cycle(5), 3, None).unwrap().count(), 30);
    for n in 1..=5 {
        for bits in 0..1u64 << pair_count(n) {
            let g = graph_from_bits(n, bits);
            for k in 1..=4 {
                let ours = enumerate_colorings(&g, k, None).unwrap().count();
                assert_eq!(ours, brute_colorings(&g, k).len(), "n={n} bits={bits:#x} k={k}");
            }
        }
    }
}

#[test]
fn chromatic_and_identity_match_brute_force() {
    for n in 1..=6 {
        for g in generate_small_graphs(n).unwrap() {
            let chi = chromatic_number(&g);
            assert_eq!(chi, brute_chromatic(&g));
            if chi >= 1 {
                assert_eq!(color_identical_pairs(&g, chi).unwrap(), brute_ci_pairs(&g, chi));
            }
        }
    }
}

#[test]
fn fixation_pairs_match_brute_force() {
    for n in 2..=6 {
        for g in generate_small_graphs(n).unwrap() {
            let chi = chromatic_number(&g);
            for k in [chi, chi + 1] {
                let ours: BTreeSet<(u64, u64)> = fixation_pairs(&g, k, 3)
                    .unwrap()
                    .iter()
                    .map(|p| {
                        let (a, b) = (p.fixator.bits(), p.fixee.bits());
                        (a.min(b), a.max(b))
                    })
                    .collect();
                assert_eq!(ours, brute_fixation_pairs(&g, k, 3), "{} k={k}", colorfix::to_graph6(&g));
            }
        }
    }
}
