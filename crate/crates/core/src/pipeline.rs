//! The six-step clustering pipeline.
//!
//! 1. peel isolated vertices and vertices with only negative edges into singletons;
//! 2. cluster each chain of strongly positive triangles;
//! 3. pair the endpoints of a maximum matching of the remaining positive edges;
//! 4. put every leftover vertex in its own cluster;
//! 5. merge the pair of clusters with no negative edge between them and the
//!    most positive edges; clusters from step 1 never take part;
//! 6. repeat step 5 until no pair qualifies.
//!
//! All degree counts in the merge loop are taken on the original graph.

use std::collections::BTreeMap;

use crate::clustering::Clustering;
use crate::cycles::triangle_chain_components;
use crate::graph::{Sign, SignedGraph};
use crate::matching::{lexicographic_maximum_matching, MatchingGraph};

/// Which step created a cluster.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    Peeled,
    Chain,
    Matched,
    Singleton,
    Merged,
}

impl Origin {
    pub fn as_str(self) -> &'static str {
        match self {
            Origin::Peeled => "step1",
            Origin::Chain => "step2",
            Origin::Matched => "step3",
            Origin::Singleton => "step4",
            Origin::Merged => "merged",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedCluster {
    /// Sorted.
    pub vertices: Vec<usize>,
    pub origin: Origin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    Peeled {
        vertex: usize,
    },
    Chain {
        vertices: Vec<usize>,
    },
    Matched {
        u: usize,
        v: usize,
    },
    Singleton {
        vertex: usize,
    },
    /// Clusters at positions `first < second` merged into position `first`.
    Merged {
        first: usize,
        second: usize,
        plus: usize,
        vertices: Vec<usize>,
    },
    /// Optional clean-up: two clusters with no edge between them joined.
    Joined {
        first: usize,
        second: usize,
        vertices: Vec<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Stage {
    Fresh,
    Peeled,
    Chained,
    Matched,
    Complete,
}

/// Evolving state of one pipeline run.
#[derive(Clone, Debug)]
pub struct PipelineState<'g> {
    original: &'g SignedGraph,
    remaining: Vec<bool>,
    clusters: Vec<TaggedCluster>,
    trace: Vec<TraceEvent>,
    stage: Stage,
}

impl<'g> PipelineState<'g> {
    pub fn new(g: &'g SignedGraph) -> Self {
        PipelineState {
            original: g,
            remaining: vec![true; g.vertex_count()],
            clusters: Vec::new(),
            trace: Vec::new(),
            stage: Stage::Fresh,
        }
    }

    pub fn graph(&self) -> &'g SignedGraph {
        self.original
    }

    pub fn clusters(&self) -> &[TaggedCluster] {
        &self.clusters
    }

    pub fn trace(&self) -> &[TraceEvent] {
        &self.trace
    }

    /// Vertices not yet placed in a cluster, ascending.
    pub fn remaining(&self) -> Vec<usize> {
        (0..self.remaining.len())
            .filter(|&v| self.remaining[v])
            .collect()
    }

    fn advance(&mut self, from: Stage, to: Stage) {
        assert_eq!(self.stage, from, "pipeline steps must run in order");
        self.stage = to;
    }

    fn place(&mut self, vertices: Vec<usize>, origin: Origin) {
        for &v in &vertices {
            debug_assert!(self.remaining[v]);
            self.remaining[v] = false;
        }
        self.clusters.push(TaggedCluster { vertices, origin });
    }

    /// Step 1, evaluated once on the original graph.
    pub fn step1_peel(&mut self) {
        self.advance(Stage::Fresh, Stage::Peeled);
        for v in 0..self.original.vertex_count() {
            if self.original.positive_neighbors(v).next().is_none() {
                self.place(vec![v], Origin::Peeled);
                self.trace.push(TraceEvent::Peeled { vertex: v });
            }
        }
    }

    /// Step 2: one cluster per chain of strongly positive triangles among the
    /// remaining vertices.
    pub fn step2_triangle_chains(&mut self) {
        self.advance(Stage::Peeled, Stage::Chained);
        let sub = self
            .original
            .induced_subgraph(&self.remaining())
            .expect("remaining vertices are in range");
        for component in triangle_chain_components(&sub.graph) {
            let vertices: Vec<usize> = component.iter().map(|&x| sub.original(x)).collect();
            self.trace.push(TraceEvent::Chain {
                vertices: vertices.clone(),
            });
            self.place(vertices, Origin::Chain);
        }
    }

    /// Step 3: exact maximum matching on the remaining positive edges; the
    /// lexicographically least one is taken among equal-size matchings.
    pub fn step3_matching(&mut self) {
        self.advance(Stage::Chained, Stage::Matched);
        let sub = self
            .original
            .induced_subgraph(&self.remaining())
            .expect("remaining vertices are in range");
        let positive: Vec<_> = sub.graph.edges_with_sign(Sign::Positive).collect();
        let mg = MatchingGraph::new(sub.graph.vertex_count(), &positive);
        for (a, b) in lexicographic_maximum_matching(&mg) {
            let (u, v) = (sub.original(a), sub.original(b));
            self.trace.push(TraceEvent::Matched { u, v });
            self.place(vec![u, v], Origin::Matched);
        }
    }

    /// Step 4: every leftover vertex becomes a singleton.
    pub fn step4_singletons(&mut self) {
        self.advance(Stage::Matched, Stage::Complete);
        for v in self.remaining() {
            self.trace.push(TraceEvent::Singleton { vertex: v });
            self.place(vec![v], Origin::Singleton);
        }
    }

    /// Positive and negative edge counts between every pair of clusters that
    /// has at least one edge between them, keyed by cluster positions `(i, j)`
    /// with `i < j`.
    fn pair_degrees(&self, include_peeled: bool) -> BTreeMap<(usize, usize), (usize, usize)> {
        let mut owner = vec![usize::MAX; self.original.vertex_count()];
        for (i, c) in self.clusters.iter().enumerate() {
            if include_peeled || c.origin != Origin::Peeled {
                for &v in &c.vertices {
                    owner[v] = i;
                }
            }
        }
        let mut out = BTreeMap::new();
        for (u, v, s) in self.original.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a == usize::MAX || b == usize::MAX || a == b {
                continue;
            }
            let entry = out.entry((a.min(b), a.max(b))).or_insert((0, 0));
            match s {
                Sign::Positive => entry.0 += 1,
                Sign::Negative => entry.1 += 1,
            }
        }
        out
    }

    /// Step 5: merges the eligible pair with the largest positive degree.
    /// Ties go to the smallest `(i, j)` position pair. Returns whether a merge
    /// happened.
    pub fn step5_merge_once(&mut self) -> bool {
        assert_eq!(
            self.stage,
            Stage::Complete,
            "merging needs a complete partition"
        );
        let mut best: Option<((usize, usize), usize)> = None;
        for (&pair, &(plus, minus)) in &self.pair_degrees(false) {
            if minus == 0 && plus >= 1 && best.is_none_or(|(_, p)| plus > p) {
                best = Some((pair, plus));
            }
        }
        let Some(((i, j), plus)) = best else {
            return false;
        };
        let vertices = self.join(i, j, Origin::Merged);
        self.trace.push(TraceEvent::Merged {
            first: i,
            second: j,
            plus,
            vertices,
        });
        true
    }

    fn join(&mut self, i: usize, j: usize, origin: Origin) -> Vec<usize> {
        let second = self.clusters.remove(j);
        let first = &mut self.clusters[i];
        first.vertices.extend(second.vertices);
        first.vertices.sort_unstable();
        first.origin = origin;
        first.vertices.clone()
    }

    /// Joins clusters that have no edge at all between them, step-1 clusters
    /// included. This never changes the disagreement count.
    pub fn join_unrelated(&mut self) {
        assert_eq!(
            self.stage,
            Stage::Complete,
            "joining needs a complete partition"
        );
        loop {
            let touching = self.pair_degrees(true);
            let k = self.clusters.len();
            let pair = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .find(|p| !touching.contains_key(p));
            let Some((i, j)) = pair else {
                break;
            };
            let vertices = self.join(i, j, Origin::Merged);
            self.trace.push(TraceEvent::Joined {
                first: i,
                second: j,
                vertices,
            });
        }
    }

    /// Structural invariants of the state; returns a description of the
    /// first breach.
    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.original.vertex_count();
        let mut seen = vec![false; n];
        for c in &self.clusters {
            if c.vertices.is_empty() {
                return Err("empty cluster".into());
            }
            for &v in &c.vertices {
                if v >= n || seen[v] {
                    return Err(format!("vertex {v} placed twice or out of range"));
                }
                seen[v] = true;
                if self.remaining[v] {
                    return Err(format!("vertex {v} is both clustered and remaining"));
                }
            }
            if c.origin == Origin::Peeled && c.vertices.len() != 1 {
                return Err("a step-1 cluster grew".into());
            }
        }
        if self.stage == Stage::Complete && seen.iter().any(|s| !s) {
            return Err("complete state does not cover every vertex".into());
        }
        Ok(())
    }

    pub fn to_clustering(&self) -> Clustering {
        let sets: Vec<Vec<usize>> = self.clusters.iter().map(|c| c.vertices.clone()).collect();
        Clustering::from_clusters(self.original.vertex_count(), &sets)
            .expect("a complete pipeline state partitions the vertex set")
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct CcOptions {
    /// After the merge fixpoint, also join clusters with no edges between them.
    pub post_merge: bool,
}

#[derive(Clone, Debug)]
pub struct CcOutcome {
    pub clustering: Clustering,
    /// Final clusters in pipeline order with their origin tags.
    pub clusters: Vec<TaggedCluster>,
    pub trace: Vec<TraceEvent>,
    /// Step-5 merges performed.
    pub merges: usize,
}

pub fn run_cc(g: &SignedGraph) -> CcOutcome {
    run_cc_with(g, CcOptions::default())
}

pub fn run_cc_with(g: &SignedGraph, options: CcOptions) -> CcOutcome {
    let mut state = PipelineState::new(g);
    state.step1_peel();
    state.step2_triangle_chains();
    state.step3_matching();
    state.step4_singletons();
    let mut merges = 0;
    while state.step5_merge_once() {
        merges += 1;
    }
    if options.post_merge {
        state.join_unrelated();
    }
    CcOutcome {
        clustering: state.to_clustering(),
        clusters: state.clusters.clone(),
        trace: state.trace.clone(),
        merges,
    }
}
