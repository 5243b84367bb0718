//! Exhaustive ground truth for small graphs.
//!
//! Everything here enumerates matchings directly and compares scores; no
//! path search is involved, so the oracle shares no logic with the solvers.

use std::cmp::Ordering;

use thiserror::Error;

use crate::graph::{Graph, Matching, Priority};
use crate::score::{priority_score, ScoreVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Enumeration stops with an error after this many matchings.
    pub max_matchings: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_vertices: 12,
            max_edges: 20,
            max_matchings: 5_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {got} vertices, oracle budget allows {limit}")]
    TooManyVertices { got: usize, limit: usize },
    #[error("graph has {got} edges, oracle budget allows {limit}")]
    TooManyEdges { got: usize, limit: usize },
    #[error("more than {0} matchings")]
    TooManyMatchings(u64),
}

fn check_budget(graph: &Graph, budget: &EnumerationBudget) -> Result<(), OracleError> {
    if graph.n() > budget.max_vertices {
        return Err(OracleError::TooManyVertices {
            got: graph.n(),
            limit: budget.max_vertices,
        });
    }
    if graph.m() > budget.max_edges {
        return Err(OracleError::TooManyEdges {
            got: graph.m(),
            limit: budget.max_edges,
        });
    }
    Ok(())
}

/// Calls `visit` once for every matching of `graph` (including the empty
/// one), backtracking over edges in index order. Returns the count.
pub fn visit_matchings(
    graph: &Graph,
    budget: &EnumerationBudget,
    visit: &mut dyn FnMut(&Matching),
) -> Result<u64, OracleError> {
    check_budget(graph, budget)?;
    let mut chosen = Vec::with_capacity(graph.n() / 2);
    let mut used = vec![false; graph.n()];
    let mut count = 0;
    backtrack(graph, budget, 0, &mut chosen, &mut used, &mut count, visit)?;
    Ok(count)
}

fn backtrack(
    graph: &Graph,
    budget: &EnumerationBudget,
    next: usize,
    chosen: &mut Vec<usize>,
    used: &mut [bool],
    count: &mut u64,
    visit: &mut dyn FnMut(&Matching),
) -> Result<(), OracleError> {
    if next == graph.m() {
        *count += 1;
        if *count > budget.max_matchings {
            return Err(OracleError::TooManyMatchings(budget.max_matchings));
        }
        let m = Matching::from_edges(graph, chosen).expect("backtracking keeps edges disjoint");
        visit(&m);
        return Ok(());
    }
    backtrack(graph, budget, next + 1, chosen, used, count, visit)?;
    let (u, v) = graph.endpoints(next);
    if !used[u.index()] && !used[v.index()] {
        used[u.index()] = true;
        used[v.index()] = true;
        chosen.push(next);
        backtrack(graph, budget, next + 1, chosen, used, count, visit)?;
        chosen.pop();
        used[u.index()] = false;
        used[v.index()] = false;
    }
    Ok(())
}

pub fn enumerate_matchings(
    graph: &Graph,
    budget: &EnumerationBudget,
) -> Result<Vec<Matching>, OracleError> {
    let mut out = Vec::new();
    visit_matchings(graph, budget, &mut |m| out.push(m.clone()))?;
    Ok(out)
}

/// Summary of one full enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSummary {
    pub best_score: ScoreVector,
    pub max_cardinality: usize,
    pub matchings: u64,
}

pub fn summarize(graph: &Graph, budget: &EnumerationBudget) -> Result<OracleSummary, OracleError> {
    let mut best = ScoreVector::zeros(graph.n());
    let mut max_cardinality = 0;
    let matchings = visit_matchings(graph, budget, &mut |m| {
        let s = priority_score(graph, m);
        if s.digits() > best.digits() {
            best = s;
        }
        max_cardinality = max_cardinality.max(m.len());
    })?;
    Ok(OracleSummary {
        best_score: best,
        max_cardinality,
        matchings,
    })
}

/// Largest priority score over all matchings.
pub fn oracle_best_score(
    graph: &Graph,
    budget: &EnumerationBudget,
) -> Result<ScoreVector, OracleError> {
    summarize(graph, budget).map(|s| s.best_score)
}

/// Whether some matching keeps the `(i-1)`-score of `matching` and has a
/// strictly larger `i`-score. When `matching` has a maximum `(i-1)`-score this
/// is exactly the existence of an `i`-augmenting path.
pub fn oracle_has_i_augmenting_path(
    graph: &Graph,
    matching: &Matching,
    target: Priority,
    budget: &EnumerationBudget,
) -> Result<bool, OracleError> {
    let current = priority_score(graph, matching);
    let i = target.index();
    let mut found = false;
    visit_matchings(graph, budget, &mut |m| {
        if found {
            return;
        }
        let s = priority_score(graph, m);
        found = s.digits()[..i] == current.digits()[..i]
            && s.digits()[i].cmp(&current.digits()[i]) == Ordering::Greater;
    })?;
    Ok(found)
}
