//! Brute-force oracles, independent of the library algorithms they check.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use colorfix::{Graph, VertexSet};

/// Labelled graph on `n` vertices from the low bits of `bits`, pairs in
/// (0,1), (0,2), (1,2), (0,3), ... order.
pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> k & 1 == 1 {
                g.insert_edge(i, j).unwrap();
            }
            k += 1;
        }
    }
    g
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Unlabelled graphs on n vertices by Burnside's lemma over S_n acting on
/// vertex pairs.
pub fn burnside_count(n: usize) -> u128 {
    let perms = permutations(n);
    let mut total: u128 = 0;
    for p in &perms {
        let mut seen = HashSet::new();
        let mut orbits = 0u32;
        for j in 1..n {
            for i in 0..j {
                if seen.contains(&(i, j)) {
                    continue;
                }
                orbits += 1;
                let (mut a, mut b) = (i, j);
                loop {
                    seen.insert((a.min(b), a.max(b)));
                    let (x, y) = (p[a], p[b]);
                    a = x.min(y);
                    b = x.max(y);
                    if (a, b) == (i, j) {
                        break;
                    }
                }
            }
        }
        total += 1u128 << orbits;
    }
    total / perms.len() as u128
}

fn encode(g: &Graph) -> u64 {
    let n = g.order();
    let mut bits = 0u64;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

/// Minimum encoding over all relabellings.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| encode(&g.relabel(p))).min().unwrap()
}

/// Isomorphism classes among all labelled graphs on n vertices.
pub fn brute_class_count(n: usize) -> usize {
    let perms = permutations(n);
    let mut classes = HashSet::new();
    for bits in 0..1u64 << pair_count(n) {
        classes.insert(brute_canonical(&graph_from_bits(n, bits), &perms));
    }
    classes.len()
}

/// Every proper coloring with colors 0..k, by plain k^n enumeration.
pub fn brute_colorings(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    if k == 0 && n > 0 {
        return out;
    }
    let mut cols = vec![0usize; n];
    loop {
        if g.edges().all(|(u, v)| cols[u] != cols[v]) {
            out.push(cols.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            cols[i] += 1;
            if cols[i] < k {
                break;
            }
            cols[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_chromatic(g: &Graph) -> usize {
    (0..=g.order()).find(|&k| !brute_colorings(g, k).is_empty()).unwrap()
}

pub fn brute_ci_pairs(g: &Graph, k: usize) -> Vec<(usize, usize)> {
    let all = brute_colorings(g, k);
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if all.iter().all(|c| c[u] == c[v]) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Unordered fixation pairs (as sorted bitmask pairs) by direct check over
/// all colorings and all disjoint completely joined sides.
pub fn brute_fixation_pairs(g: &Graph, k: usize, max_side: usize) -> BTreeSet<(u64, u64)> {
    let all = brute_colorings(g, k);
    let n = g.order();
    let mut out = BTreeSet::new();
    for s in 1u64..1 << n {
        for t in 1u64..1 << n {
            if s & t != 0 || s.count_ones() as usize > max_side || t.count_ones() as usize > max_side || s > t {
                continue;
            }
            let (sv, tv) = (VertexSet::from_bits(s), VertexSet::from_bits(t));
            if !sv.iter().all(|a| tv.iter().all(|b| g.has_edge(a, b))) {
                continue;
            }
            let used = |c: &Vec<usize>, set: VertexSet| set.iter().map(|v| c[v]).collect::<HashSet<_>>().len();
            if all.iter().all(|c| used(c, sv) + used(c, tv) == k) {
                out.insert((s, t));
            }
        }
    }
    out
}

/// Does `g` have a minor isomorphic to K5 (`k33 = false`) or K3,3? Branch
/// sets are enumerated as restricted-growth labellings, unlabelled vertices
/// being deleted.
pub fn has_kuratowski_minor(g: &Graph, k33: bool) -> bool {
    let blocks = if k33 { 6 } else { 5 };
    if g.order() < blocks || g.size() < if k33 { 9 } else { 10 } {
        return false;
    }
    let mut labels = vec![usize::MAX; g.order()];
    search(g, blocks, k33, 0, 0, &mut labels)
}

fn search(g: &Graph, blocks: usize, k33: bool, at: usize, used: usize, labels: &mut [usize]) -> bool {
    if used + (labels.len() - at) < blocks {
        return false;
    }
    if at == labels.len() {
        return branch_sets_form_minor(g, blocks, k33, labels);
    }
    for l in (0..=used.min(blocks - 1)).chain([usize::MAX]) {
        labels[at] = l;
        let next = if l == used { used + 1 } else { used };
        if search(g, blocks, k33, at + 1, next, labels) {
            return true;
        }
    }
    labels[at] = usize::MAX;
    false
}

fn branch_sets_form_minor(g: &Graph, blocks: usize, k33: bool, labels: &[usize]) -> bool {
    let mut sets = vec![VertexSet::EMPTY; blocks];
    for (v, &l) in labels.iter().enumerate() {
        if l != usize::MAX {
            sets[l].insert(v);
        }
    }
    if !sets.iter().all(|&s| g.is_connected_set(s)) {
        return false;
    }
    let touch = |a: usize, b: usize| sets[a].iter().any(|x| sets[b].iter().any(|y| g.has_edge(x, y)));
    if !k33 {
        return (0..5).all(|a| (a + 1..5).all(|b| touch(a, b)));
    }
    // side containing block 0 plus two of the others
    for x in 1..6 {
        for y in x + 1..6 {
            let side: Vec<usize> = vec![0, x, y];
            let other: Vec<usize> = (1..6).filter(|b| !side.contains(b)).collect();
            if side.iter().all(|&a| other.iter().all(|&b| touch(a, b))) {
                return true;
            }
        }
    }
    false
}

/// Planar iff neither K5 nor K3,3 is a minor.
pub fn oracle_planar(g: &Graph) -> bool {
    !has_kuratowski_minor(g, false) && !has_kuratowski_minor(g, true)
}
