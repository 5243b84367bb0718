//! Wall-clock scaling measurements on seeded random graphs.

use std::fmt;
use std::time::Duration;

use crate::driver::max_priority_matching;
use crate::io::generate::{generate_random, GenerateError, PrioritySpec};

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub m: usize,
    /// Fastest of the repeated solves.
    pub elapsed: Duration,
    pub searches: usize,
    pub matching_size: usize,
}

/// `n m elapsed_ms searches matching_size`, whitespace separated.
impl fmt::Display for BenchRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {:.3} {} {}",
            self.n,
            self.m,
            self.elapsed.as_secs_f64() * 1e3,
            self.searches,
            self.matching_size
        )
    }
}

pub const BENCH_HEADER: &str = "# n m elapsed_ms searches matching_size";

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingConfig {
    pub sizes: Vec<usize>,
    /// Edges per vertex: `m = edge_factor * n`.
    pub edge_factor: usize,
    pub priorities: PrioritySpec,
    pub seed: u64,
    pub repeats: usize,
}

impl Default for ScalingConfig {
    fn default() -> Self {
        ScalingConfig {
            sizes: vec![500, 1000, 2000, 4000],
            edge_factor: 5,
            priorities: PrioritySpec::Full,
            seed: 1,
            repeats: 3,
        }
    }
}

/// Solves one graph per size, timing the best of `repeats` runs. The graph
/// for size `n` is generated with seed `seed + n`.
pub fn run_scaling(
    config: &ScalingConfig,
    mut on_record: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>, GenerateError> {
    let mut out = Vec::with_capacity(config.sizes.len());
    for &n in &config.sizes {
        let m = (config.edge_factor * n).min(n * n.saturating_sub(1) / 2);
        let graph = generate_random(n, m, &config.priorities, config.seed.wrapping_add(n as u64))?;
        let mut best: Option<BenchRecord> = None;
        for _ in 0..config.repeats.max(1) {
            let report = max_priority_matching(&graph);
            if best.as_ref().is_none_or(|b| report.elapsed < b.elapsed) {
                best = Some(BenchRecord {
                    n,
                    m,
                    elapsed: report.elapsed,
                    searches: report.searches,
                    matching_size: report.matching.len(),
                });
            }
        }
        let record = best.unwrap();
        on_record(&record);
        out.push(record);
    }
    Ok(out)
}

/// Ratios `t(2n) / t(n)` between successive records.
pub fn growth_ratios(records: &[BenchRecord]) -> Vec<f64> {
    records
        .windows(2)
        .map(|w| w[1].elapsed.as_secs_f64() / w[0].elapsed.as_secs_f64().max(1e-9))
        .collect()
}
