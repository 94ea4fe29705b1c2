//! Seeded instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cycles::triangle_condition_check;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::patterns::{is_pattern_free, ForbiddenPattern};

pub const DEFAULT_ATTEMPT_BUDGET: usize = 10_000;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct GenerationStats {
    pub attempts: usize,
    pub rejected: usize,
}

fn check_probabilities(p_edge: f64, p_neg: f64) -> Result<()> {
    if !(p_edge > 0.0 && p_edge <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must lie in (0, 1], got {p_edge}"
        )));
    }
    if !(0.0..=1.0).contains(&p_neg) {
        return Err(Error::InvalidParameter(format!(
            "negative fraction must lie in [0, 1], got {p_neg}"
        )));
    }
    Ok(())
}

/// Draws each pair independently with probability `p_edge`; a drawn edge is
/// negative with probability `p_neg`.
pub fn random_signed_graph<R: Rng>(n: usize, p_edge: f64, p_neg: f64, rng: &mut R) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_edge) {
                let sign = if rng.gen_bool(p_neg) {
                    Sign::Negative
                } else {
                    Sign::Positive
                };
                edges.push((u, v, sign));
            }
        }
    }
    SignedGraph::new(n, edges).expect("generated pairs are simple")
}

pub fn generate_random(n: usize, p_edge: f64, p_neg: f64, seed: u64) -> Result<SignedGraph> {
    check_probabilities(p_edge, p_neg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_signed_graph(n, p_edge, p_neg, &mut rng))
}

/// Rejection sampling into the two-approximation subclass: a draw is kept
/// when every chordless strongly positive or weakly negative cycle is a
/// triangle and none of the forbidden patterns embeds.
pub fn generate_subclass_instance(
    n: usize,
    p_edge: f64,
    p_neg: f64,
    seed: u64,
    budget: usize,
) -> Result<(SignedGraph, GenerationStats)> {
    check_probabilities(p_edge, p_neg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let patterns = ForbiddenPattern::all();
    let mut stats = GenerationStats::default();
    while stats.attempts < budget {
        stats.attempts += 1;
        let g = random_signed_graph(n, p_edge, p_neg, &mut rng);
        if triangle_condition_check(&g).holds && is_pattern_free(&g, &patterns) {
            return Ok((g, stats));
        }
        stats.rejected += 1;
    }
    Err(Error::GenerationExhausted { attempts: budget })
}

/// Plants consecutive clusters of the given sizes; pairs inside a cluster
/// become positive edges and pairs across clusters negative edges, each with
/// probability `p_edge`.
pub fn generate_clusterable_instance(
    sizes: &[usize],
    p_edge: f64,
    seed: u64,
) -> Result<SignedGraph> {
    check_probabilities(p_edge, 0.0)?;
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidParameter(format!("cluster {i} has size 0")));
    }
    let n: usize = sizes.iter().sum();
    let mut label = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        label.extend(std::iter::repeat_n(i, s));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_edge) {
                let sign = if label[u] == label[v] {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                edges.push((u, v, sign));
            }
        }
    }
    SignedGraph::new(n, edges)
}
