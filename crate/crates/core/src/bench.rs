//! Timing of the clustering pipeline on sparse random graphs.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::generate::random_signed_graph;
use crate::pipeline::run_cc;

/// Negative-edge fraction of benchmark instances.
pub const BENCH_NEGATIVE_FRACTION: f64 = 0.3;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub edges: usize,
    /// Median wall time of one pipeline run, in seconds.
    pub seconds: f64,
    pub clusters: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of log(time) against log(n); `None` with fewer
    /// than two usable sizes.
    pub exponent: Option<f64>,
}

/// Runs the pipeline `repeats` times per size on one graph with expected
/// average degree `avg_degree`.
pub fn run_bench(sizes: &[usize], avg_degree: f64, seed: u64, repeats: usize) -> BenchReport {
    let mut rows = Vec::with_capacity(sizes.len());
    for (k, &n) in sizes.iter().enumerate() {
        let p = if n > 1 {
            (avg_degree / (n - 1) as f64).clamp(0.0, 1.0)
        } else {
            0.0
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let g = random_signed_graph(n, p, BENCH_NEGATIVE_FRACTION, &mut rng);
        let mut times = Vec::with_capacity(repeats.max(1));
        let mut clusters = 0;
        for _ in 0..repeats.max(1) {
            let start = Instant::now();
            let out = run_cc(&g);
            times.push(start.elapsed().as_secs_f64());
            clusters = out.clustering.len();
        }
        times.sort_by(f64::total_cmp);
        rows.push(BenchRow {
            n,
            edges: g.edge_count(),
            seconds: times[times.len() / 2],
            clusters,
        });
    }
    let points: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.seconds)).collect();
    BenchReport {
        exponent: fit_exponent(&points),
        rows,
    }
}

/// Slope of the least-squares line through `(ln x, ln y)`, skipping
/// non-positive coordinates.
pub fn fit_exponent(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}
