//! Naive reference implementations used only by tests. They share no code
//! with the library beyond the graph container.
#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use signed_cc::{Sign, SignedGraph};

pub fn graph(n: usize, edges: &[(usize, usize, i8)]) -> SignedGraph {
    SignedGraph::from_signed_pairs(n, edges).unwrap()
}

pub fn g3() -> SignedGraph {
    graph(
        4,
        &[
            (0, 1, 1),
            (0, 2, 1),
            (0, 3, 1),
            (1, 2, -1),
            (1, 3, -1),
            (2, 3, -1),
        ],
    )
}

pub fn g4() -> SignedGraph {
    graph(
        5,
        &[
            (0, 1, -1),
            (0, 2, 1),
            (1, 2, 1),
            (0, 3, 1),
            (1, 3, 1),
            (0, 4, 1),
            (1, 4, 1),
        ],
    )
}

/// Single weakly negative triangle.
pub fn wnt() -> SignedGraph {
    graph(3, &[(0, 1, 1), (0, 2, 1), (1, 2, -1)])
}

/// Sign of `(u, v)` as +1, -1 or 0 when absent.
pub fn s(g: &SignedGraph, u: usize, v: usize) -> i8 {
    g.sign(u, v).map_or(0, |x| x.value())
}

/// Graph from a code: one base-3 digit per pair in `(u < v)` order, with
/// 0 = no edge, 1 = positive, 2 = negative.
pub fn from_code(n: usize, mut code: u64) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match code % 3 {
                1 => edges.push((u, v, 1)),
                2 => edges.push((u, v, -1)),
                _ => {}
            }
            code /= 3;
        }
    }
    graph(n, &edges)
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(0u8..3, pairs).prop_map(move |digits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    match digits[k] {
                        1 => edges.push((u, v, 1)),
                        2 => edges.push((u, v, -1)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            graph(n, &edges)
        })
    })
}

/// Every permutation of `items`, in lexicographic order of positions.
pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

/// A cycle as the set of its edges; two vertex orders describe the same
/// cycle iff their edge sets coincide.
pub type EdgeSet = BTreeSet<(usize, usize)>;

fn closed_walk_edges(seq: &[usize]) -> EdgeSet {
    let k = seq.len();
    (0..k)
        .map(|i| {
            let (a, b) = (seq[i], seq[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// All simple cycles with their negative-edge counts, by trying every
/// ordering of every vertex subset of size at least 3.
pub fn all_cycles(g: &SignedGraph) -> Vec<(EdgeSet, usize)> {
    let n = g.vertex_count();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for set in subsets(n).filter(|s| s.len() >= 3) {
        for order in permutations(&set[1..]) {
            let mut seq = vec![set[0]];
            seq.extend(order);
            let k = seq.len();
            if (0..k).all(|i| g.has_edge(seq[i], seq[(i + 1) % k])) {
                let es = closed_walk_edges(&seq);
                if seen.insert(es.clone()) {
                    let neg = es.iter().filter(|&&(a, b)| s(g, a, b) == -1).count();
                    out.push((es, neg));
                }
            }
        }
    }
    out
}

pub fn weakly_negative_cycles(g: &SignedGraph) -> Vec<EdgeSet> {
    all_cycles(g)
        .into_iter()
        .filter(|(_, neg)| *neg == 1)
        .map(|(es, _)| es)
        .collect()
}

/// Largest family of pairwise edge-disjoint sets, by plain recursion.
pub fn max_disjoint(sets: &[EdgeSet]) -> usize {
    fn go(sets: &[EdgeSet], i: usize, used: &mut EdgeSet) -> usize {
        if i == sets.len() {
            return 0;
        }
        let skip = go(sets, i + 1, used);
        if sets[i].is_disjoint(used) {
            used.extend(sets[i].iter().copied());
            let take = 1 + go(sets, i + 1, used);
            for e in &sets[i] {
                used.remove(e);
            }
            skip.max(take)
        } else {
            skip
        }
    }
    go(sets, 0, &mut BTreeSet::new())
}

pub fn disagreements_of(g: &SignedGraph, label: &[usize]) -> usize {
    g.edges()
        .filter(|&(u, v, sg)| match sg {
            Sign::Positive => label[u] != label[v],
            Sign::Negative => label[u] == label[v],
        })
        .count()
}

/// Minimum disagreements over all `n^n` labelings.
pub fn naive_optimum(g: &SignedGraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut label = vec![0usize; n];
    let mut best = usize::MAX;
    loop {
        best = best.min(disagreements_of(g, &label));
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            label[i] += 1;
            if label[i] < n {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

/// Vertex sets inducing a cycle of length at least 4 with at most one
/// negative edge.
pub fn chordless_long_cycles(g: &SignedGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for set in subsets(n).filter(|s| s.len() >= 4) {
        let inside: Vec<(usize, usize)> = set
            .iter()
            .flat_map(|&a| set.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .filter(|&(a, b)| g.has_edge(a, b))
            .collect();
        if inside.len() != set.len() {
            continue;
        }
        let all_degree_two = set
            .iter()
            .all(|&v| inside.iter().filter(|&&(a, b)| a == v || b == v).count() == 2);
        if !all_degree_two {
            continue;
        }
        // connected: walk from the first vertex
        let mut reached = BTreeSet::from([set[0]]);
        let mut frontier = vec![set[0]];
        while let Some(x) = frontier.pop() {
            for &(a, b) in &inside {
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if reached.insert(y) {
                    frontier.push(y);
                }
            }
        }
        let negatives = inside.iter().filter(|&&(a, b)| s(g, a, b) == -1).count();
        if reached.len() == set.len() && negatives <= 1 {
            out.push(set);
        }
    }
    out
}

/// Whether `pattern` embeds in `host` as a not necessarily induced signed
/// subgraph, trying every injective map.
pub fn naive_embeds(pattern: &SignedGraph, host: &SignedGraph) -> bool {
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    if k > n {
        return false;
    }
    for set in subsets(n).filter(|s| s.len() == k) {
        for map in permutations(&set) {
            if pattern
                .edges()
                .all(|(a, b, sg)| host.sign(map[a], map[b]) == Some(sg))
            {
                return true;
            }
        }
    }
    false
}

/// Three weakly negative cycles, pairwise sharing an edge, with no edge
/// common to all three.
pub fn has_bad_triple(cycles: &[EdgeSet]) -> bool {
    let k = cycles.len();
    for a in 0..k {
        for b in a + 1..k {
            if cycles[a].is_disjoint(&cycles[b]) {
                continue;
            }
            for c in b + 1..k {
                if cycles[a].is_disjoint(&cycles[c]) || cycles[b].is_disjoint(&cycles[c]) {
                    continue;
                }
                let common = cycles[a]
                    .iter()
                    .any(|e| cycles[b].contains(e) && cycles[c].contains(e));
                if !common {
                    return true;
                }
            }
        }
    }
    false
}

/// Canonical code of a signed graph under vertex relabeling: the least
/// base-3 pair code over all permutations.
pub fn canonical_code(g: &SignedGraph) -> u64 {
    let n = g.vertex_count();
    let ids: Vec<usize> = (0..n).collect();
    permutations(&ids)
        .into_iter()
        .map(|p| {
            let mut code = 0u64;
            let mut mul = 1u64;
            for u in 0..n {
                for v in u + 1..n {
                    let d = match s(g, p[u], p[v]) {
                        1 => 1,
                        -1 => 2,
                        _ => 0,
                    };
                    code += d * mul;
                    mul *= 3;
                }
            }
            code
        })
        .min()
        .unwrap_or(0)
}
