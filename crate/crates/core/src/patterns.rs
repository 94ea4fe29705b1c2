//! Forbidden signed patterns and a backtracking signed-subgraph matcher.
//!
//! Matching is non-induced containment: an injective vertex map under which
//! every pattern edge is present in the host with the same sign. The host may
//! carry extra edges.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{Sign, SignedGraph};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternId {
    /// Negative edge `v1v2` with two common positive neighbors `v3`, `v4`.
    A,
    /// Weakly negative triangle `v1v2v3` (negative `v1v2`), `v4` positive to
    /// `v1` and `v3`, `v5` positive to `v2` and `v3`.
    B,
    /// A positive edge `xy` lying on three weakly negative triangles.
    C,
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PatternId::A => "A",
            PatternId::B => "B",
            PatternId::C => "C",
        };
        f.write_str(s)
    }
}

/// A forbidden structure. Pattern C is a family, so a pattern carries one or
/// more concrete signed graphs ("variants"); a host contains the pattern when
/// it contains any variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenPattern {
    pub id: PatternId,
    pub variants: Vec<SignedGraph>,
}

const P: i8 = 1;
const N: i8 = -1;

impl ForbiddenPattern {
    pub fn a() -> Self {
        // v1..v4 as 0..3
        let g = SignedGraph::from_signed_pairs(
            4,
            &[(0, 1, N), (0, 2, P), (1, 2, P), (0, 3, P), (1, 3, P)],
        )
        .unwrap();
        ForbiddenPattern {
            id: PatternId::A,
            variants: vec![g],
        }
    }

    pub fn b() -> Self {
        // v1..v5 as 0..4
        let g = SignedGraph::from_signed_pairs(
            5,
            &[
                (0, 1, N),
                (0, 2, P),
                (1, 2, P),
                (3, 0, P),
                (3, 2, P),
                (4, 1, P),
                (4, 2, P),
            ],
        )
        .unwrap();
        ForbiddenPattern {
            id: PatternId::B,
            variants: vec![g],
        }
    }

    /// `x = 0`, `y = 1`, `z_i = 2 + i`; variant `k` puts the negative edge of
    /// the first `k` triangles on `x` and of the rest on `y`.
    pub fn c() -> Self {
        let variants = (0..=3)
            .map(|k| {
                let mut edges = vec![(0, 1, P)];
                for i in 0..3 {
                    let z = 2 + i;
                    if i < k {
                        edges.push((0, z, N));
                        edges.push((1, z, P));
                    } else {
                        edges.push((0, z, P));
                        edges.push((1, z, N));
                    }
                }
                SignedGraph::from_signed_pairs(5, &edges).unwrap()
            })
            .collect();
        ForbiddenPattern {
            id: PatternId::C,
            variants,
        }
    }

    pub fn all() -> Vec<Self> {
        vec![Self::a(), Self::b(), Self::c()]
    }
}

/// One occurrence of a pattern in a host graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PatternHit {
    pub pattern: PatternId,
    /// `embedding[i]` is the host vertex for pattern vertex `i` (first
    /// embedding found for this image set).
    pub embedding: Vec<usize>,
    /// Sorted image vertex set; hits are unique per pattern and image set.
    pub image: Vec<usize>,
}

/// Every embedding of every pattern, deduplicated per pattern by image vertex
/// set, sorted by pattern then image.
pub fn forbidden_subgraph_scan(g: &SignedGraph, patterns: &[ForbiddenPattern]) -> Vec<PatternHit> {
    let mut out = Vec::new();
    for pattern in patterns {
        let mut seen = BTreeSet::new();
        for variant in &pattern.variants {
            for embedding in embeddings(variant, g) {
                let mut image = embedding.clone();
                image.sort_unstable();
                if seen.insert(image.clone()) {
                    out.push(PatternHit {
                        pattern: pattern.id,
                        embedding,
                        image,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// True iff `g` contains none of the patterns.
pub fn is_pattern_free(g: &SignedGraph, patterns: &[ForbiddenPattern]) -> bool {
    patterns
        .iter()
        .flat_map(|p| &p.variants)
        .all(|v| first_embedding(v, g).is_none())
}

/// All injective sign-preserving maps of `pattern` into `host`, in a fixed
/// search order.
pub fn embeddings(pattern: &SignedGraph, host: &SignedGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut m = Matcher::new(pattern, host);
    m.run(&mut |map| {
        out.push(map.to_vec());
        true
    });
    out
}

pub fn first_embedding(pattern: &SignedGraph, host: &SignedGraph) -> Option<Vec<usize>> {
    let mut found = None;
    let mut m = Matcher::new(pattern, host);
    m.run(&mut |map| {
        found = Some(map.to_vec());
        false
    });
    found
}

struct Matcher<'a> {
    pattern: &'a SignedGraph,
    host: &'a SignedGraph,
    /// pattern vertices in assignment order
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &'a SignedGraph, host: &'a SignedGraph) -> Self {
        let k = pattern.vertex_count();
        // connected-first order: highest degree, then greedily the vertex
        // with most already-ordered neighbors
        let mut order = Vec::with_capacity(k);
        let mut placed = vec![false; k];
        while order.len() < k {
            let next = (0..k)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let back = pattern
                        .neighbors(v)
                        .iter()
                        .filter(|(w, _)| placed[*w])
                        .count();
                    (back, pattern.neighbors(v).len(), std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        Matcher {
            pattern,
            host,
            order,
            map: vec![usize::MAX; k],
            used: vec![false; host.vertex_count()],
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) {
        if self.pattern.vertex_count() > self.host.vertex_count() {
            return;
        }
        self.step(0, visit);
    }

    /// Returns false once the visitor asks to stop.
    fn step(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let pv = self.order[depth];
        let anchor = self
            .pattern
            .neighbors(pv)
            .iter()
            .map(|&(pw, _)| self.map[pw])
            .find(|&hw| hw != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(hw) => self.host.neighbors(hw).iter().map(|&(x, _)| x).collect(),
            None => (0..self.host.vertex_count()).collect(),
        };
        for hv in candidates {
            if self.used[hv] || !self.compatible(pv, hv) {
                continue;
            }
            self.map[pv] = hv;
            self.used[hv] = true;
            let go_on = self.step(depth + 1, visit);
            self.used[hv] = false;
            self.map[pv] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }

    fn compatible(&self, pv: usize, hv: usize) -> bool {
        if self.host.neighbors(hv).len() < self.pattern.neighbors(pv).len() {
            return false;
        }
        self.pattern
            .neighbors(pv)
            .iter()
            .all(|&(pw, sign): &(usize, Sign)| {
                let hw = self.map[pw];
                hw == usize::MAX || self.host.sign(hv, hw) == Some(sign)
            })
    }
}
