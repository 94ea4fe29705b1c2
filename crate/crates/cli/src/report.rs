//! Serializable report shapes. Field order is the key order on disk.
//! All vertex ids here are 1-based.

use serde::Serialize;

use signed_cc::cycles::{ConditionCheck, Packing, TriangleCondition};
use signed_cc::oracle::{ApproximationReport, DisagreementReport};
use signed_cc::patterns::PatternHit;
use signed_cc::pipeline::TraceEvent;
use signed_cc::{Clusterability, Cycle, Edge};

pub fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn edge_pair(e: &Edge) -> [usize; 2] {
    [e.0 + 1, e.1 + 1]
}

fn cycle_list(cs: &[Cycle]) -> Vec<Vec<usize>> {
    cs.iter().map(|c| one_based(c.vertices())).collect()
}

#[derive(Serialize)]
pub struct ResultFile {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input_checksum: String,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clusters: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disagreements: Option<Disagreements>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Analysis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEntry>>,
}

impl ResultFile {
    pub fn new(command: &'static str, checksum: String, n: usize, m: usize) -> Self {
        ResultFile {
            tool: "sgcc",
            version: env!("CARGO_PKG_VERSION"),
            command,
            input_checksum: checksum,
            n,
            m,
            clusters: None,
            disagreements: None,
            analysis: None,
            oracle: None,
            trace: None,
        }
    }
}

#[derive(Serialize)]
pub struct Disagreements {
    pub total: usize,
    pub negative_inside: Vec<[usize; 2]>,
    pub positive_across: Vec<[usize; 2]>,
}

impl From<&DisagreementReport> for Disagreements {
    fn from(r: &DisagreementReport) -> Self {
        Disagreements {
            total: r.total,
            negative_inside: r.negative_inside.iter().map(edge_pair).collect(),
            positive_across: r.positive_across.iter().map(edge_pair).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct Analysis {
    pub clusterable: bool,
    /// Zero-disagreement clusters when clusterable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<Vec<usize>>>,
    /// A weakly negative cycle otherwise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Vec<usize>>,
    pub max_cycle_length: usize,
    pub enumeration_complete: bool,
    pub weakly_negative_cycles: usize,
    pub packing: PackingBlock,
    pub triangle_condition: bool,
    pub triangle_violations: Vec<Vec<usize>>,
    pub condition_theorem: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition_witness: Option<Vec<Vec<usize>>>,
    pub forbidden_hits: Vec<Hit>,
    pub in_subclass: bool,
}

pub struct AnalysisParts<'a> {
    pub clusterability: &'a Clusterability,
    pub max_cycle_length: usize,
    pub enumeration_complete: bool,
    pub weakly_negative_cycles: usize,
    pub packing: &'a Packing,
    pub triangle: &'a TriangleCondition,
    pub condition: &'a ConditionCheck,
    pub hits: &'a [PatternHit],
}

impl From<AnalysisParts<'_>> for Analysis {
    fn from(p: AnalysisParts<'_>) -> Self {
        let (certificate, obstruction) = match p.clusterability {
            Clusterability::Clusterable(c) => (
                Some(c.clusters().iter().map(|s| one_based(s)).collect()),
                None,
            ),
            Clusterability::Obstructed(cycle) => (None, Some(one_based(cycle.vertices()))),
        };
        Analysis {
            clusterable: p.clusterability.is_clusterable(),
            certificate,
            obstruction,
            max_cycle_length: p.max_cycle_length,
            enumeration_complete: p.enumeration_complete,
            weakly_negative_cycles: p.weakly_negative_cycles,
            packing: PackingBlock {
                size: p.packing.size,
                witness: cycle_list(&p.packing.witness),
            },
            triangle_condition: p.triangle.holds,
            triangle_violations: cycle_list(&p.triangle.violations),
            condition_theorem: p.condition.holds,
            condition_witness: p.condition.witness.as_ref().map(|w| cycle_list(w)),
            forbidden_hits: p
                .hits
                .iter()
                .map(|h| Hit {
                    pattern: h.pattern.to_string(),
                    vertices: one_based(&h.image),
                    embedding: one_based(&h.embedding),
                })
                .collect(),
            in_subclass: p.triangle.holds && p.hits.is_empty(),
        }
    }
}

#[derive(Serialize)]
pub struct PackingBlock {
    pub size: usize,
    pub witness: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct Hit {
    pub pattern: String,
    pub vertices: Vec<usize>,
    /// Image of pattern vertex `i` at position `i`.
    pub embedding: Vec<usize>,
}

#[derive(Serialize)]
pub struct OracleBlock {
    pub opt: usize,
    pub solution: usize,
    /// `null` when the optimum is zero and the solution is not.
    pub ratio: Option<f64>,
    pub clusterable: bool,
    pub triangle_condition: bool,
    pub pattern_free: bool,
    pub in_subclass: bool,
    pub optimal_clusters: Vec<Vec<usize>>,
    pub deletion_set: Vec<[usize; 2]>,
}

impl OracleBlock {
    pub fn new(r: &ApproximationReport, optimal: &[Vec<usize>], deletion: &[Edge]) -> Self {
        OracleBlock {
            opt: r.optimum,
            solution: r.solution,
            ratio: r.ratio,
            clusterable: r.clusterable,
            triangle_condition: r.subclass.triangle_condition,
            pattern_free: r.subclass.pattern_free,
            in_subclass: r.subclass.in_subclass(),
            optimal_clusters: optimal.iter().map(|c| one_based(c)).collect(),
            deletion_set: deletion.iter().map(edge_pair).collect(),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceEntry {
    Peel {
        vertex: usize,
    },
    Chain {
        vertices: Vec<usize>,
    },
    Match {
        vertices: [usize; 2],
    },
    Singleton {
        vertex: usize,
    },
    Merge {
        left: Vec<usize>,
        right: Vec<usize>,
        plus: usize,
        result: Vec<usize>,
    },
    Join {
        left: Vec<usize>,
        right: Vec<usize>,
        result: Vec<usize>,
    },
}

/// Rewrites pipeline events with the merged clusters spelled out. The
/// pipeline refers to clusters by position; replaying the events recovers
/// the vertex sets behind each position.
pub fn trace_entries(events: &[TraceEvent]) -> Vec<TraceEntry> {
    let mut live: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::with_capacity(events.len());
    for ev in events {
        let entry = match ev {
            TraceEvent::Peeled { vertex } => {
                live.push(vec![*vertex]);
                TraceEntry::Peel { vertex: vertex + 1 }
            }
            TraceEvent::Chain { vertices } => {
                live.push(vertices.clone());
                TraceEntry::Chain {
                    vertices: one_based(vertices),
                }
            }
            TraceEvent::Matched { u, v } => {
                live.push(vec![*u, *v]);
                TraceEntry::Match {
                    vertices: [u + 1, v + 1],
                }
            }
            TraceEvent::Singleton { vertex } => {
                live.push(vec![*vertex]);
                TraceEntry::Singleton { vertex: vertex + 1 }
            }
            TraceEvent::Merged {
                first,
                second,
                plus,
                vertices,
            } => {
                let right = live.remove(*second);
                let left = std::mem::replace(&mut live[*first], vertices.clone());
                TraceEntry::Merge {
                    left: one_based(&left),
                    right: one_based(&right),
                    plus: *plus,
                    result: one_based(vertices),
                }
            }
            TraceEvent::Joined {
                first,
                second,
                vertices,
            } => {
                let right = live.remove(*second);
                let left = std::mem::replace(&mut live[*first], vertices.clone());
                TraceEntry::Join {
                    left: one_based(&left),
                    right: one_based(&right),
                    result: one_based(vertices),
                }
            }
        };
        out.push(entry);
    }
    out
}
