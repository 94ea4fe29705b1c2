//! Ground truth at desk scale: the disagreement objective, the exact optimum
//! by set-partition enumeration, the minimum deletion set, and the
//! approximation report comparing the pipeline against the optimum.

use crate::clustering::Clustering;
use crate::cycles::{is_clusterable, triangle_condition_check};
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};
use crate::patterns::{forbidden_subgraph_scan, ForbiddenPattern};
use crate::pipeline::run_cc;

/// Default vertex limit for [`brute_force_optimum`].
pub const DEFAULT_ORACLE_LIMIT: usize = 12;
/// Default edge limit for [`min_deletion_set`].
pub const DEFAULT_DELETION_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisagreementReport {
    pub total: usize,
    /// Negative edges with both ends in one cluster.
    pub negative_inside: Vec<Edge>,
    /// Positive edges whose ends lie in different clusters.
    pub positive_across: Vec<Edge>,
}

pub fn count_disagreements(g: &SignedGraph, c: &Clustering) -> Result<DisagreementReport> {
    if c.vertex_count() != g.vertex_count() {
        return Err(Error::PartitionMismatch {
            reason: format!(
                "clustering covers {} vertices, graph has {}",
                c.vertex_count(),
                g.vertex_count()
            ),
        });
    }
    let mut negative_inside = Vec::new();
    let mut positive_across = Vec::new();
    for (u, v, s) in g.edges() {
        match (s, c.same_cluster(u, v)) {
            (Sign::Negative, true) => negative_inside.push((u, v)),
            (Sign::Positive, false) => positive_across.push((u, v)),
            _ => {}
        }
    }
    Ok(DisagreementReport {
        total: negative_inside.len() + positive_across.len(),
        negative_inside,
        positive_across,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimumCertificate {
    pub disagreements: usize,
    /// Lexicographically least restricted growth string among optima.
    pub clustering: Clustering,
    /// Disagreeing edges of `clustering`; deleting them leaves no weakly
    /// negative cycle.
    pub deletion_set: Vec<Edge>,
}

/// Exact minimum-disagreement clustering by enumerating set partitions as
/// restricted growth strings, pruned on the partial disagreement count.
pub fn brute_force_optimum(g: &SignedGraph, limit: usize) -> Result<OptimumCertificate> {
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::TooLarge { size: n, limit });
    }
    // edges to lower-numbered vertices, so the cost of placing v is known
    // as soon as v is labeled
    let back: Vec<Vec<(usize, Sign)>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&(w, _)| w < v)
                .collect()
        })
        .collect();
    let mut search = PartitionSearch {
        back: &back,
        labels: vec![0; n],
        best_cost: usize::MAX,
        best: vec![0; n],
    };
    search.descend(0, 0, 0);
    let clustering = Clustering::from_labels(&search.best);
    let report = count_disagreements(g, &clustering)?;
    debug_assert_eq!(report.total, search.best_cost);
    let mut deletion_set = report.negative_inside;
    deletion_set.extend(report.positive_across);
    deletion_set.sort_unstable();
    Ok(OptimumCertificate {
        disagreements: report.total,
        clustering,
        deletion_set,
    })
}

struct PartitionSearch<'a> {
    back: &'a [Vec<(usize, Sign)>],
    labels: Vec<usize>,
    best_cost: usize,
    best: Vec<usize>,
}

impl PartitionSearch<'_> {
    fn descend(&mut self, v: usize, blocks: usize, cost: usize) {
        if cost >= self.best_cost {
            return;
        }
        if v == self.labels.len() {
            self.best_cost = cost;
            self.best.copy_from_slice(&self.labels);
            return;
        }
        for label in 0..=blocks {
            let mut added = 0;
            for &(w, s) in &self.back[v] {
                let same = self.labels[w] == label;
                if same == s.is_negative() {
                    added += 1;
                }
            }
            self.labels[v] = label;
            let next_blocks = if label == blocks { blocks + 1 } else { blocks };
            self.descend(v + 1, next_blocks, cost + added);
        }
    }
}

/// Smallest edge set whose removal leaves no weakly negative cycle, found by
/// trying subsets in increasing size (lexicographic within a size).
pub fn min_deletion_set(g: &SignedGraph, limit: usize) -> Result<Vec<Edge>> {
    let m = g.edge_count();
    if m > limit {
        return Err(Error::TooLarge { size: m, limit });
    }
    let edges: Vec<Edge> = g.edge_keys().collect();
    for size in 0..=m {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let chosen: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
            if is_clusterable(&g.without_edges(&chosen)).is_clusterable() {
                return Ok(chosen);
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    unreachable!("removing every edge leaves a clusterable graph")
}

fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// Subclass membership for the two-approximation guarantee.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubclassFlags {
    /// Every chordless strongly positive or weakly negative cycle is a triangle.
    pub triangle_condition: bool,
    /// No embedding of patterns A, B or C.
    pub pattern_free: bool,
}

impl SubclassFlags {
    pub fn of(g: &SignedGraph) -> Self {
        SubclassFlags {
            triangle_condition: triangle_condition_check(g).holds,
            pattern_free: forbidden_subgraph_scan(g, &ForbiddenPattern::all()).is_empty(),
        }
    }

    pub fn in_subclass(&self) -> bool {
        self.triangle_condition && self.pattern_free
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApproximationReport {
    /// Disagreements of the pipeline's clustering.
    pub solution: usize,
    /// Optimum disagreements.
    pub optimum: usize,
    /// `solution / optimum`, `1.0` when both are zero, `None` when the
    /// optimum is zero but the pipeline disagrees somewhere.
    pub ratio: Option<f64>,
    pub clusterable: bool,
    pub subclass: SubclassFlags,
}

impl ApproximationReport {
    /// The pipeline scored above zero on a graph that admits zero.
    pub fn zero_guarantee_failed(&self) -> bool {
        self.optimum == 0 && self.solution > 0
    }

    /// Subclass member whose solution exceeds twice the optimum.
    pub fn violates_two_approximation(&self) -> bool {
        self.subclass.in_subclass() && self.solution > 2 * self.optimum
    }
}

pub fn approximation_report(g: &SignedGraph, limit: usize) -> Result<ApproximationReport> {
    let optimum = brute_force_optimum(g, limit)?;
    approximation_report_for(g, &optimum)
}

/// Same as [`approximation_report`] with the optimum already computed.
pub fn approximation_report_for(
    g: &SignedGraph,
    optimum: &OptimumCertificate,
) -> Result<ApproximationReport> {
    let optimum = optimum.disagreements;
    let solution = count_disagreements(g, &run_cc(g).clustering)?.total;
    let ratio = match (solution, optimum) {
        (0, 0) => Some(1.0),
        (_, 0) => None,
        (s, o) => Some(s as f64 / o as f64),
    };
    Ok(ApproximationReport {
        solution,
        optimum,
        ratio,
        clusterable: is_clusterable(g).is_clusterable(),
        subclass: SubclassFlags::of(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize, i8)]) -> SignedGraph {
        SignedGraph::from_signed_pairs(n, edges).unwrap()
    }

    fn g3() -> SignedGraph {
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

    fn g4() -> SignedGraph {
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

    fn wnt() -> SignedGraph {
        graph(3, &[(0, 1, 1), (0, 2, 1), (1, 2, -1)])
    }

    #[test]
    fn disagreement_counts() {
        let c = Clustering::from_clusters(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
        let r = count_disagreements(&g3(), &c).unwrap();
        assert_eq!(r.total, 2);
        assert_eq!(r.positive_across, vec![(0, 2), (0, 3)]);
        assert!(r.negative_inside.is_empty());

        let r = count_disagreements(&g3(), &Clustering::single(4)).unwrap();
        assert_eq!(r.total, 3);
        assert_eq!(r.negative_inside, vec![(1, 2), (1, 3), (2, 3)]);

        let path = graph(3, &[(0, 1, 1), (1, 2, -1)]);
        let cert = Clustering::from_clusters(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(count_disagreements(&path, &cert).unwrap().total, 0);

        assert!(matches!(
            count_disagreements(&g3(), &Clustering::single(3)),
            Err(Error::PartitionMismatch { .. })
        ));
    }

    #[test]
    fn optimum_values() {
        assert_eq!(brute_force_optimum(&g3(), 12).unwrap().disagreements, 2);
        assert_eq!(brute_force_optimum(&g4(), 12).unwrap().disagreements, 1);
        let w = brute_force_optimum(&wnt(), 12).unwrap();
        assert_eq!(w.disagreements, 1);
        // the all-in-one string already scores 1 and is least
        assert_eq!(w.clustering.assignment(), &[0, 0, 0]);
        assert_eq!(w.deletion_set, vec![(1, 2)]);
    }

    #[test]
    fn optimum_certificate_is_consistent() {
        let cert = brute_force_optimum(&g3(), 12).unwrap();
        let r = count_disagreements(&g3(), &cert.clustering).unwrap();
        assert_eq!(r.total, cert.disagreements);
        assert_eq!(cert.deletion_set.len(), cert.disagreements);
        assert!(is_clusterable(&g3().without_edges(&cert.deletion_set)).is_clusterable());
    }

    #[test]
    fn optimum_limit() {
        assert_eq!(
            brute_force_optimum(&SignedGraph::empty(13), 12),
            Err(Error::TooLarge {
                size: 13,
                limit: 12
            })
        );
        assert_eq!(
            brute_force_optimum(&SignedGraph::empty(0), 12)
                .unwrap()
                .disagreements,
            0
        );
    }

    #[test]
    fn deletion_sets() {
        assert_eq!(min_deletion_set(&g4(), 20).unwrap(), vec![(0, 1)]);
        let path = graph(3, &[(0, 1, 1), (1, 2, -1)]);
        assert!(min_deletion_set(&path, 20).unwrap().is_empty());
        let u = min_deletion_set(&g3(), 20).unwrap();
        assert_eq!(u.len(), 2);
        assert!(is_clusterable(&g3().without_edges(&u)).is_clusterable());
        let big = graph(
            8,
            &(0..7)
                .map(|i| (i, i + 1, 1))
                .chain((0..6).map(|i| (i, i + 2, 1)))
                .collect::<Vec<_>>(),
        );
        assert!(matches!(
            min_deletion_set(&big, 10),
            Err(Error::TooLarge { size: 13, .. })
        ));
    }

    #[test]
    fn combinations_in_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }

    #[test]
    fn reports() {
        let path = graph(3, &[(0, 1, 1), (1, 2, -1)]);
        let r = approximation_report(&path, 12).unwrap();
        assert_eq!(r.ratio, Some(1.0));
        assert!(r.clusterable);

        let r = approximation_report(&wnt(), 12).unwrap();
        assert_eq!(r.optimum, 1);
        assert!((1..=2).contains(&r.solution));
        assert!(r.ratio.unwrap() <= 2.0);

        let r = approximation_report(&g3(), 12).unwrap();
        assert_eq!(r.optimum, 2);
        assert_eq!(r.ratio, Some(r.solution as f64 / 2.0));
        assert!(!r.zero_guarantee_failed());
    }
}
