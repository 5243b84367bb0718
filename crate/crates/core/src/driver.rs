//! Priority sweep: repeatedly search and augment at each priority class,
//! highest first.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::bipartite::BipartiteSearch;
use crate::blossom::{BlossomSearch, SearchError};
use crate::graph::{Graph, Matching, Priority, VertexId};
use crate::path::AugPath;
use crate::score::{priority_score, ScoreVector};
use crate::trace::Observer;

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub matching: Matching,
    pub score: ScoreVector,
    /// Augmentations performed while sweeping each priority class.
    pub augmentations: BTreeMap<Priority, usize>,
    /// Searches run, successful or not.
    pub searches: usize,
    /// Blossoms shrunk over all searches.
    pub blossoms: usize,
    pub elapsed: Duration,
}

impl SolveReport {
    pub fn total_augmentations(&self) -> usize {
        self.augmentations.values().sum()
    }
}

/// Computes a matching with maximum priority score.
pub fn max_priority_matching(graph: &Graph) -> SolveReport {
    max_priority_matching_observed(graph, &mut ())
}

/// Sweeps only the priority classes present in `graph`; an empty class has
/// no roots, so its search would fail immediately.
pub fn max_priority_matching_observed(graph: &Graph, observer: &mut dyn Observer) -> SolveReport {
    let start = Instant::now();
    let mut matching = Matching::empty(graph);
    let mut augmentations = BTreeMap::new();
    let mut searches = 0;
    let mut blossoms = 0;
    for class in graph.priority_classes() {
        let count = augmentations.entry(class).or_insert(0);
        loop {
            let mut search = BlossomSearch::new(graph, &matching, class);
            let found = search.run_observed(observer);
            searches += 1;
            blossoms += search.blossoms_created();
            observer.on_search_end(&search, found.as_ref());
            drop(search);
            match found {
                Some(path) => {
                    matching
                        .augment(graph, path.vertices())
                        .expect("search returned a path that does not alternate");
                    *count += 1;
                }
                None => break,
            }
        }
    }
    SolveReport {
        score: priority_score(graph, &matching),
        matching,
        augmentations,
        searches,
        blossoms,
        elapsed: start.elapsed(),
    }
}

/// Priority 1 for members of `set`, 2 for everyone else (1 when `n = 1`).
pub fn two_priority_graph(graph: &Graph, set: &[VertexId]) -> Graph {
    let low = 2.min(graph.n() as u32);
    let mut priorities = vec![low; graph.n()];
    for &x in set {
        priorities[x.index()] = 1;
    }
    graph
        .with_priorities(&priorities)
        .expect("priorities 1 and 2 are always in range")
}

/// Maximizes the number of matched vertices of `set`, then the matching size.
/// The report's score is taken over the two-class priorities.
pub fn two_priority_matching(graph: &Graph, set: &[VertexId]) -> SolveReport {
    max_priority_matching(&two_priority_graph(graph, set))
}

/// Maximum cardinality matching: every vertex at priority 1.
pub fn max_size_matching(graph: &Graph) -> SolveReport {
    let uniform = graph
        .with_priorities(&vec![1; graph.n()])
        .expect("priority 1 is always in range");
    max_priority_matching(&uniform)
}

/// Two-priority solve on a bipartite graph using [`BipartiteSearch`]:
/// augment from `set` until no path remains, then from every vertex.
pub fn bipartite_two_priority_matching(
    graph: &Graph,
    set: &[VertexId],
) -> Result<SolveReport, SearchError> {
    bipartite_two_priority_matching_observed(graph, set, &mut |_, _| {})
}

/// As [`bipartite_two_priority_matching`], calling `on_search_end` after every search.
pub fn bipartite_two_priority_matching_observed(
    graph: &Graph,
    set: &[VertexId],
    on_search_end: &mut dyn FnMut(&BipartiteSearch<'_>, Option<&AugPath>),
) -> Result<SolveReport, SearchError> {
    let start = Instant::now();
    let scored = two_priority_graph(graph, set);
    let everyone: Vec<VertexId> = graph.vertices().collect();
    let mut matching = Matching::empty(graph);
    let mut augmentations = BTreeMap::new();
    let mut searches = 0;
    for (class, phase_set) in [(1, set), (2, everyone.as_slice())] {
        let count = augmentations.entry(Priority::new(class)).or_insert(0);
        loop {
            let mut search = BipartiteSearch::new(graph, &matching, phase_set)?;
            let found = search.run();
            searches += 1;
            on_search_end(&search, found.as_ref());
            drop(search);
            match found {
                Some(path) => {
                    matching
                        .augment(graph, path.vertices())
                        .expect("search returned a path that does not alternate");
                    *count += 1;
                }
                None => break,
            }
        }
    }
    Ok(SolveReport {
        score: priority_score(&scored, &matching),
        matching,
        augmentations,
        searches,
        blossoms: 0,
        elapsed: start.elapsed(),
    })
}
