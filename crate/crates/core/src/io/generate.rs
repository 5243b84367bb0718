//! Seeded random instances.

use std::collections::HashSet;
use std::str::FromStr;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("{m} edges do not fit in a simple graph on {n} vertices")]
    TooManyEdges { n: usize, m: usize },
    #[error("priority {priority} out of range 1..={n}")]
    PriorityOutOfRange { priority: u32, n: usize },
    #[error("bad priority spec `{0}`")]
    BadSpec(String),
    #[error("graph needs at least one vertex")]
    NoVertices,
}

/// How vertex priorities are drawn.
#[derive(Clone, Debug, PartialEq)]
pub enum PrioritySpec {
    /// Uniform over `1..=n`.
    Full,
    /// Uniform over the listed priorities.
    Uniform(Vec<u32>),
    /// Priority `p` with probability proportional to its weight.
    Weighted(Vec<(u32, f64)>),
}

/// `full`, `uniform:1,2,5` or `weights:1=0.25,2=0.75`.
impl FromStr for PrioritySpec {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenerateError::BadSpec(s.to_string());
        if s == "full" {
            return Ok(PrioritySpec::Full);
        }
        if let Some(list) = s.strip_prefix("uniform:") {
            let ps = list
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            return if ps.is_empty() {
                Err(bad())
            } else {
                Ok(PrioritySpec::Uniform(ps))
            };
        }
        if let Some(list) = s.strip_prefix("weights:") {
            let ws = list
                .split(',')
                .map(|t| {
                    let (p, w) = t.split_once('=').ok_or_else(bad)?;
                    let p = p.trim().parse::<u32>().map_err(|_| bad())?;
                    let w = w.trim().parse::<f64>().map_err(|_| bad())?;
                    Ok((p, w))
                })
                .collect::<Result<Vec<_>, GenerateError>>()?;
            return Ok(PrioritySpec::Weighted(ws));
        }
        Err(bad())
    }
}

impl PrioritySpec {
    fn draw(&self, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<u32>, GenerateError> {
        let check = |p: u32| {
            if p == 0 || p as usize > n {
                Err(GenerateError::PriorityOutOfRange { priority: p, n })
            } else {
                Ok(p)
            }
        };
        match self {
            PrioritySpec::Full => Ok((0..n).map(|_| rng.random_range(1..=n as u32)).collect()),
            PrioritySpec::Uniform(ps) => {
                for &p in ps {
                    check(p)?;
                }
                Ok((0..n).map(|_| ps[rng.random_range(0..ps.len())]).collect())
            }
            PrioritySpec::Weighted(ws) => {
                for &(p, _) in ws {
                    check(p)?;
                }
                let dist = WeightedIndex::new(ws.iter().map(|w| w.1))
                    .map_err(|e| GenerateError::BadSpec(e.to_string()))?;
                Ok((0..n).map(|_| ws[dist.sample(rng)].0).collect())
            }
        }
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `m` distinct vertex pairs, sorted. Sparse requests use rejection, dense
/// ones sample indices into the full pair list.
fn sample_edges(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<(u32, u32)> {
    let total = pair_count(n);
    let mut edges = if 2 * m <= total {
        let mut seen = HashSet::with_capacity(m);
        let mut edges = Vec::with_capacity(m);
        while edges.len() < m {
            let u = rng.random_range(1..=n as u32);
            let v = rng.random_range(1..=n as u32);
            if u != v && seen.insert((u.min(v), u.max(v))) {
                edges.push((u.min(v), u.max(v)));
            }
        }
        edges
    } else {
        let all: Vec<(u32, u32)> = (1..=n as u32)
            .flat_map(|u| (u + 1..=n as u32).map(move |v| (u, v)))
            .collect();
        index::sample(rng, total, m)
            .into_iter()
            .map(|k| all[k])
            .collect()
    };
    edges.sort_unstable();
    edges
}

/// Uniform simple graph with `m` edges; priorities drawn from `spec`.
pub fn generate_random(
    n: usize,
    m: usize,
    spec: &PrioritySpec,
    seed: u64,
) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(GenerateError::NoVertices);
    }
    if m > pair_count(n) {
        return Err(GenerateError::TooManyEdges { n, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let priorities = spec.draw(n, &mut rng)?;
    let edges = sample_edges(n, m, &mut rng);
    Ok(Graph::new(n, &edges, &priorities).expect("generated edges are simple and in range"))
}

/// Random bipartite graph: vertices `1..=left` on one side, the rest on the
/// other; each cross pair is an edge with probability `density`.
pub fn generate_bipartite(
    left: usize,
    right: usize,
    density: f64,
    spec: &PrioritySpec,
    seed: u64,
) -> Result<Graph, GenerateError> {
    let n = left + right;
    if n == 0 {
        return Err(GenerateError::NoVertices);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let priorities = spec.draw(n, &mut rng)?;
    let mut edges = Vec::new();
    for u in 1..=left as u32 {
        for v in left as u32 + 1..=n as u32 {
            if rng.random_bool(density.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges, &priorities).expect("generated edges are simple and in range"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_when_m_is_maximal() {
        let g = generate_random(4, 6, &PrioritySpec::Full, 7).unwrap();
        assert_eq!(g.m(), 6);
        assert!(g.vertices().all(|u| g.degree(u) == 3));
    }

    #[test]
    fn deterministic_per_seed() {
        let spec = PrioritySpec::Uniform(vec![1, 2]);
        let a = generate_random(30, 60, &spec, 42).unwrap();
        let b = generate_random(30, 60, &spec, 42).unwrap();
        let c = generate_random(30, 60, &spec, 43).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.priorities().iter().all(|p| p.get() <= 2));
    }

    #[test]
    fn rejects_infeasible_requests() {
        assert_eq!(
            generate_random(4, 7, &PrioritySpec::Full, 0),
            Err(GenerateError::TooManyEdges { n: 4, m: 7 })
        );
        assert_eq!(
            generate_random(3, 0, &PrioritySpec::Uniform(vec![4]), 0),
            Err(GenerateError::PriorityOutOfRange { priority: 4, n: 3 })
        );
    }

    #[test]
    fn parses_specs() {
        assert_eq!("full".parse::<PrioritySpec>().unwrap(), PrioritySpec::Full);
        assert_eq!(
            "uniform:1,3".parse::<PrioritySpec>().unwrap(),
            PrioritySpec::Uniform(vec![1, 3])
        );
        assert_eq!(
            "weights:1=0.5,2=1.5".parse::<PrioritySpec>().unwrap(),
            PrioritySpec::Weighted(vec![(1, 0.5), (2, 1.5)])
        );
        assert!("uniform:".parse::<PrioritySpec>().is_err());
        assert!("gauss".parse::<PrioritySpec>().is_err());
    }

    #[test]
    fn bipartite_generator_is_bipartite() {
        let g = generate_bipartite(5, 6, 0.4, &PrioritySpec::Full, 3).unwrap();
        assert!(g.is_bipartite());
        assert!(g.edges().iter().all(|&(u, v)| u.get() <= 5 && v.get() > 5));
    }
}
