//! Immutable signed graph and the degree vocabulary built on top of it.
//!
//! Vertices are dense ids `0..n`. Each undirected edge is stored once in an
//! ordered map keyed by the normalized `(min, max)` pair, and mirrored in a
//! sorted adjacency list so that both sign lookup and neighbor iteration are
//! cheap.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// Sign of an edge.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    /// `+1` or `-1`.
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// An undirected edge as a normalized `(min, max)` pair.
pub type Edge = (usize, usize);

#[inline]
pub fn edge_key(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: BTreeMap<Edge, Sign>,
    adj: Vec<Vec<(usize, Sign)>>,
}

/// Underlying, positive and negative degree of one vertex.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Degrees {
    pub underlying: usize,
    pub positive: usize,
    pub negative: usize,
}

/// Positive and negative edge counts between two disjoint vertex sets.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct PairDegree {
    pub plus: usize,
    pub minus: usize,
}

/// An induced subgraph together with the original id of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: SignedGraph,
    /// `ids[i]` is the id in the parent graph of local vertex `i`.
    pub ids: Vec<usize>,
}

impl InducedSubgraph {
    pub fn original(&self, local: usize) -> usize {
        self.ids[local]
    }
}

impl SignedGraph {
    /// Builds a graph from an edge list, rejecting loops, repeated pairs and
    /// out-of-range endpoints. Edge order does not matter.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut map = BTreeMap::new();
        for (index, (u, v, sign)) in edges.into_iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { index, u, v });
            }
            if map.insert(edge_key(u, v), sign).is_some() {
                return Err(Error::DuplicateEdge { index, u, v });
            }
        }
        Ok(Self::from_map(n, map))
    }

    /// Convenience constructor taking signs as `+1` / `-1` integers. Any
    /// non-negative value is read as positive.
    pub fn from_signed_pairs(n: usize, edges: &[(usize, usize, i8)]) -> Result<Self> {
        Self::new(
            n,
            edges.iter().map(|&(u, v, s)| {
                (
                    u,
                    v,
                    if s < 0 {
                        Sign::Negative
                    } else {
                        Sign::Positive
                    },
                )
            }),
        )
    }

    pub fn empty(n: usize) -> Self {
        Self::from_map(n, BTreeMap::new())
    }

    fn from_map(n: usize, edges: BTreeMap<Edge, Sign>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (&(u, v), &s) in &edges {
            adj[u].push((v, s));
            adj[v].push((u, s));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SignedGraph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.edges.get(&edge_key(u, v)).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains_key(&edge_key(u, v))
    }

    /// All edges as `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.edges.iter().map(|(&(u, v), &s)| (u, v, s))
    }

    pub fn edge_keys(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.keys().copied()
    }

    pub fn edges_with_sign(&self, sign: Sign) -> impl Iterator<Item = Edge> + '_ {
        self.edges
            .iter()
            .filter(move |(_, &s)| s == sign)
            .map(|(&e, _)| e)
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    pub fn positive_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v]
            .iter()
            .filter(|(_, s)| s.is_positive())
            .map(|&(w, _)| w)
    }

    pub fn degrees(&self, v: usize) -> Result<Degrees> {
        self.check_vertex(v)?;
        let positive = self.adj[v].iter().filter(|(_, s)| s.is_positive()).count();
        let underlying = self.adj[v].len();
        Ok(Degrees {
            underlying,
            positive,
            negative: underlying - positive,
        })
    }

    /// Graph on the same vertex set keeping only edges of the given sign.
    pub fn sign_subgraph(&self, which: Sign) -> SignedGraph {
        let kept = self
            .edges
            .iter()
            .filter(|(_, &s)| s == which)
            .map(|(&e, &s)| (e, s))
            .collect();
        Self::from_map(self.n, kept)
    }

    /// Counts positive and negative edges with one end in `a` and the other in `b`.
    pub fn set_pair_degree(&self, a: &[usize], b: &[usize]) -> Result<PairDegree> {
        let mut side = vec![0u8; self.n];
        for &v in a {
            self.check_vertex(v)?;
            side[v] = 1;
        }
        for &v in b {
            self.check_vertex(v)?;
            if side[v] == 1 {
                return Err(Error::OverlappingSets { vertex: v });
            }
            side[v] = 2;
        }
        let mut out = PairDegree::default();
        for &v in a {
            for &(w, s) in &self.adj[v] {
                if side[w] == 2 {
                    match s {
                        Sign::Positive => out.plus += 1,
                        Sign::Negative => out.minus += 1,
                    }
                }
            }
        }
        Ok(out)
    }

    /// Subgraph induced on `s`, reindexed in ascending order of original id.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<InducedSubgraph> {
        let mut local = vec![usize::MAX; self.n];
        let mut ids: Vec<usize> = Vec::with_capacity(s.len());
        for &v in s {
            self.check_vertex(v)?;
            ids.push(v);
        }
        ids.sort_unstable();
        ids.dedup();
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let mut map = BTreeMap::new();
        for &v in &ids {
            for &(w, sign) in &self.adj[v] {
                if v < w && local[w] != usize::MAX {
                    map.insert(edge_key(local[v], local[w]), sign);
                }
            }
        }
        Ok(InducedSubgraph {
            graph: Self::from_map(ids.len(), map),
            ids,
        })
    }

    /// Connected components of the positive subgraph, each sorted, ordered by
    /// smallest member.
    pub fn positive_components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n);
        for (u, v) in self.edges_with_sign(Sign::Positive) {
            uf.union(u, v);
        }
        uf.groups()
    }

    /// Copy of the graph with the listed edges removed. Absent edges are ignored.
    pub fn without_edges(&self, removed: &[Edge]) -> SignedGraph {
        let mut map = self.edges.clone();
        for &(u, v) in removed {
            map.remove(&edge_key(u, v));
        }
        Self::from_map(self.n, map)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.n;
        let mut map = self.edges.clone();
        for (&(u, v), &s) in &other.edges {
            map.insert((u + shift, v + shift), s);
        }
        Self::from_map(self.n + other.n, map)
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<SignedGraph> {
        Self::new(self.n, self.edges().map(|(u, v, s)| (perm[u], perm[v], s)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wnt() -> SignedGraph {
        SignedGraph::from_signed_pairs(3, &[(0, 1, 1), (0, 2, 1), (1, 2, -1)]).unwrap()
    }

    fn g3() -> SignedGraph {
        SignedGraph::from_signed_pairs(
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
        .unwrap()
    }

    fn keys(g: &SignedGraph) -> Vec<Edge> {
        g.edge_keys().collect()
    }

    #[test]
    fn build_simple_graph() {
        let g = SignedGraph::from_signed_pairs(3, &[(0, 1, 1), (1, 2, -1)]).unwrap();
        assert_eq!(
            g.edges_with_sign(Sign::Positive).collect::<Vec<_>>(),
            vec![(0, 1)]
        );
        assert_eq!(
            g.edges_with_sign(Sign::Negative).collect::<Vec<_>>(),
            vec![(1, 2)]
        );
        let h = SignedGraph::from_signed_pairs(3, &[(2, 1, -1), (1, 0, 1)]).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            SignedGraph::from_signed_pairs(2, &[(0, 0, 1)]),
            Err(Error::SelfLoop {
                index: 0,
                u: 0,
                v: 0
            })
        );
        assert_eq!(
            SignedGraph::from_signed_pairs(4, &[(0, 1, 1), (0, 1, -1)]),
            Err(Error::DuplicateEdge {
                index: 1,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            SignedGraph::from_signed_pairs(4, &[(0, 1, 1), (1, 0, 1)]),
            Err(Error::DuplicateEdge {
                index: 1,
                u: 1,
                v: 0
            })
        );
        assert_eq!(
            SignedGraph::from_signed_pairs(2, &[(0, 2, 1)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn sign_subgraphs() {
        assert_eq!(
            keys(&wnt().sign_subgraph(Sign::Positive)),
            vec![(0, 1), (0, 2)]
        );
        let k3 = SignedGraph::from_signed_pairs(3, &[(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap();
        let neg = k3.sign_subgraph(Sign::Negative);
        assert_eq!(neg.vertex_count(), 3);
        assert_eq!(neg.edge_count(), 0);
        assert_eq!(
            keys(&g3().sign_subgraph(Sign::Positive)),
            vec![(0, 1), (0, 2), (0, 3)]
        );
    }

    #[test]
    fn vertex_degrees() {
        let d = wnt().degrees(0).unwrap();
        assert_eq!((d.underlying, d.positive, d.negative), (2, 2, 0));
        let d = SignedGraph::empty(2).degrees(1).unwrap();
        assert_eq!((d.underlying, d.positive, d.negative), (0, 0, 0));
        let d = g3().degrees(0).unwrap();
        assert_eq!((d.underlying, d.positive, d.negative), (3, 3, 0));
        assert!(g3().degrees(4).is_err());
    }

    #[test]
    fn pair_degrees() {
        assert_eq!(
            wnt().set_pair_degree(&[0], &[1, 2]).unwrap(),
            PairDegree { plus: 2, minus: 0 }
        );
        assert_eq!(
            wnt().set_pair_degree(&[1], &[]).unwrap(),
            PairDegree::default()
        );
        assert_eq!(
            g3().set_pair_degree(&[0, 1], &[2, 3]).unwrap(),
            PairDegree { plus: 2, minus: 2 }
        );
        assert_eq!(
            g3().set_pair_degree(&[0, 1], &[1, 3]),
            Err(Error::OverlappingSets { vertex: 1 })
        );
    }

    #[test]
    fn induced_subgraphs() {
        let sub = g3().induced_subgraph(&[2, 0, 1]).unwrap();
        assert_eq!(sub.ids, vec![0, 1, 2]);
        assert_eq!(sub.graph, wnt());

        let empty = g3().induced_subgraph(&[]).unwrap();
        assert_eq!(empty.graph.vertex_count(), 0);

        let all = g3().induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(all.graph, g3());

        let sub = g3().induced_subgraph(&[3, 1]).unwrap();
        assert_eq!(sub.original(0), 1);
        assert_eq!(sub.graph.sign(0, 1), Some(Sign::Negative));
        assert!(g3().induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn positive_component_partition() {
        let g = SignedGraph::from_signed_pairs(3, &[(0, 1, 1), (1, 2, -1)]).unwrap();
        assert_eq!(g.positive_components(), vec![vec![0, 1], vec![2]]);
        assert_eq!(
            SignedGraph::empty(3).positive_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(g3().positive_components(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn union_and_relabel() {
        let u = wnt().disjoint_union(&wnt());
        assert_eq!(u.vertex_count(), 6);
        assert_eq!(u.sign(4, 5), Some(Sign::Negative));
        let r = wnt().relabeled(&[2, 1, 0]).unwrap();
        assert_eq!(r.sign(1, 0), Some(Sign::Negative));
    }
}
