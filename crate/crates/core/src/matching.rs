//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm), plus a deterministic choice among maximum matchings.

use std::collections::VecDeque;

use crate::graph::{edge_key, Edge};

const NONE: usize = usize::MAX;

/// Simple undirected graph view used by the matcher.
#[derive(Clone, Debug)]
pub struct MatchingGraph {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl MatchingGraph {
    /// Duplicate pairs and loops are dropped.
    pub fn new(n: usize, edges: &[Edge]) -> Self {
        let mut keys: Vec<Edge> = edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| edge_key(u, v))
            .collect();
        keys.sort_unstable();
        keys.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &keys {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        MatchingGraph { adj, edges: keys }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }
}

/// A maximum matching as sorted normalized edges.
pub fn maximum_matching(g: &MatchingGraph) -> Vec<Edge> {
    let active = vec![true; g.vertex_count()];
    let mate = Blossom::new(g, &active, vec![NONE; g.vertex_count()]).solve();
    mate_to_edges(&mate)
}

/// The maximum matching whose sorted edge list is lexicographically least.
///
/// Edges are scanned in order and kept whenever some maximum matching
/// extends the edges kept so far plus this one; feasibility is re-checked by
/// a blossom search warm-started from the current maximum matching.
pub fn lexicographic_maximum_matching(g: &MatchingGraph) -> Vec<Edge> {
    let n = g.vertex_count();
    let all = vec![true; n];
    let mut mate = Blossom::new(g, &all, vec![NONE; n]).solve();
    let target = mate_to_edges(&mate).len();
    let mut active = vec![true; n];
    let mut fixed: Vec<Edge> = Vec::with_capacity(target);

    for &(u, v) in &g.edges {
        if fixed.len() == target {
            break;
        }
        if !active[u] || !active[v] {
            continue;
        }
        if mate[u] == v {
            fixed.push((u, v));
            active[u] = false;
            active[v] = false;
            continue;
        }
        active[u] = false;
        active[v] = false;
        let mut init = mate.clone();
        for x in [u, v] {
            let y = init[x];
            if y != NONE {
                init[y] = NONE;
            }
            init[x] = NONE;
        }
        // vertices matched in `fixed` are inactive and stay paired in `init`
        let trial = Blossom::new(g, &active, init).solve();
        let size = (0..n)
            .filter(|&x| active[x] && trial[x] != NONE && x < trial[x])
            .count();
        if size + fixed.len() + 1 == target {
            mate = trial;
            mate[u] = v;
            mate[v] = u;
            fixed.push((u, v));
        } else {
            active[u] = true;
            active[v] = true;
        }
    }
    fixed
}

fn mate_to_edges(mate: &[usize]) -> Vec<Edge> {
    (0..mate.len())
        .filter(|&x| mate[x] != NONE && x < mate[x])
        .map(|x| (x, mate[x]))
        .collect()
}

struct Blossom<'a> {
    g: &'a MatchingGraph,
    active: &'a [bool],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a MatchingGraph, active: &'a [bool], mate: Vec<usize>) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            active,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn solve(mut self) -> Vec<usize> {
        for root in 0..self.g.vertex_count() {
            if !self.active[root] || self.mate[root] != NONE {
                continue;
            }
            if let Some(end) = self.find_augmenting_path(root) {
                self.augment(end);
            }
        }
        self.mate
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.vertex_count()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.vertex_count();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.g.adj[v].len() {
                let to = self.g.adj[v][idx];
                if !self.active[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// All matchings by brute force over edge subsets; returns the
    /// lexicographically least maximum one.
    fn brute_force(n: usize, edges: &[Edge]) -> Vec<Edge> {
        let g = MatchingGraph::new(n, edges);
        let es = &g.edges;
        let mut best: Vec<Edge> = Vec::new();
        for mask in 0u32..(1 << es.len()) {
            let mut used = vec![false; n];
            let mut chosen = Vec::new();
            let mut ok = true;
            for (i, &(u, v)) in es.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if used[u] || used[v] {
                        ok = false;
                        break;
                    }
                    used[u] = true;
                    used[v] = true;
                    chosen.push((u, v));
                }
            }
            if ok && (chosen.len() > best.len() || (chosen.len() == best.len() && chosen < best)) {
                best = chosen;
            }
        }
        best
    }

    fn is_matching(n: usize, m: &[Edge]) -> bool {
        let mut used = vec![false; n];
        m.iter().all(|&(u, v)| {
            let ok = !used[u] && !used[v];
            used[u] = true;
            used[v] = true;
            ok
        })
    }

    #[test]
    fn path_of_four() {
        let g = MatchingGraph::new(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(maximum_matching(&g).len(), 2);
        assert_eq!(lexicographic_maximum_matching(&g), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn odd_cycle_needs_blossom() {
        // 5-cycle with a pendant: greedy along (0,1),(2,3) leaves 4 and 5
        // unmatched; the blossom search must find size 3
        let g = MatchingGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)]);
        assert_eq!(maximum_matching(&g).len(), 3);
        assert_eq!(
            lexicographic_maximum_matching(&g),
            vec![(0, 1), (2, 3), (4, 5)]
        );
    }

    #[test]
    fn empty_graph() {
        let g = MatchingGraph::new(3, &[]);
        assert!(maximum_matching(&g).is_empty());
        assert!(lexicographic_maximum_matching(&g).is_empty());
    }

    #[test]
    fn lexicographic_choice_can_skip_greedy_edge() {
        // (0,1) is in no maximum matching: both ends carry a private pendant
        let edges = [(0, 1), (0, 5), (1, 6), (2, 3)];
        let g = MatchingGraph::new(7, &edges);
        assert_eq!(
            lexicographic_maximum_matching(&g),
            vec![(0, 5), (1, 6), (2, 3)]
        );
        assert_eq!(brute_force(7, &edges), vec![(0, 5), (1, 6), (2, 3)]);
    }

    fn small_graph() -> impl Strategy<Value = (usize, Vec<Edge>)> {
        (2usize..9).prop_flat_map(|n| {
            let pairs: Vec<Edge> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let k = pairs.len();
            proptest::collection::vec(any::<bool>(), k).prop_map(move |keep| {
                let edges: Vec<Edge> = pairs
                    .iter()
                    .zip(keep)
                    .filter(|(_, k)| *k)
                    .map(|(&e, _)| e)
                    .take(16)
                    .collect();
                (n, edges)
            })
        })
    }

    proptest! {
        #[test]
        fn matches_brute_force((n, edges) in small_graph()) {
            let expected = brute_force(n, &edges);
            let g = MatchingGraph::new(n, &edges);
            let any = maximum_matching(&g);
            prop_assert!(is_matching(n, &any));
            prop_assert_eq!(any.len(), expected.len());
            prop_assert_eq!(lexicographic_maximum_matching(&g), expected);
        }
    }
}
