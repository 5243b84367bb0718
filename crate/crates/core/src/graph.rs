//! Undirected simple graphs with per-vertex priorities, and matchings over them.
//!
//! Vertex ids are 1-based, matching the graph file format. Internally every
//! per-vertex table is indexed by [`VertexId::index`].

use std::fmt;

use thiserror::Error;

/// A vertex of a [`Graph`], numbered `1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    /// Panics if `id` is zero.
    pub fn new(id: u32) -> Self {
        assert!(id >= 1, "vertex ids start at 1");
        VertexId(id)
    }

    pub fn from_index(index: usize) -> Self {
        VertexId(index as u32 + 1)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Zero-based position in per-vertex tables.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Vertex priority class. `1` is the highest priority.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Priority(u32);

impl Priority {
    pub const HIGHEST: Priority = Priority(1);

    /// Panics if `value` is zero.
    pub fn new(value: u32) -> Self {
        assert!(value >= 1, "priorities start at 1");
        Priority(value)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Zero-based digit position in a score vector.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for Priority {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Index into [`Graph::edges`].
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(u32, u32),
    #[error("expected {expected} priorities, got {got}")]
    PriorityCount { expected: usize, got: usize },
    #[error("priority {priority} of vertex {vertex} out of range 1..={n}")]
    PriorityOutOfRange {
        vertex: u32,
        priority: u32,
        n: usize,
    },
}

/// An undirected simple graph on vertices `1..=n`, each carrying a priority in `[1, n]`.
///
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<EdgeId>>,
    priority: Vec<Priority>,
}

impl Graph {
    /// Validates and builds a graph. Edge endpoints are stored as given;
    /// parallel edges and self-loops are rejected.
    pub fn new(n: usize, edges: &[(u32, u32)], priorities: &[u32]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if priorities.len() != n {
            return Err(GraphError::PriorityCount {
                expected: n,
                got: priorities.len(),
            });
        }
        let priority = priorities
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                if p == 0 || p as usize > n {
                    Err(GraphError::PriorityOutOfRange {
                        vertex: i as u32 + 1,
                        priority: p,
                        n,
                    })
                } else {
                    Ok(Priority(p))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;

        let mut adjacency: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        let mut stored = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x == 0 || x as usize > n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            let id = stored.len();
            stored.push((VertexId(u), VertexId(v)));
            adjacency[u as usize - 1].push(id);
            adjacency[v as usize - 1].push(id);
        }
        Ok(Graph {
            edges: stored,
            adjacency,
            priority,
        })
    }

    /// Same edges, every vertex at priority 1.
    pub fn uniform(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        Graph::new(n, edges, &vec![1; n])
    }

    /// Copy of this graph with the priority table replaced.
    pub fn with_priorities(&self, priorities: &[u32]) -> Result<Self, GraphError> {
        let edges: Vec<(u32, u32)> = self.edges.iter().map(|&(u, v)| (u.0, v.0)).collect();
        Graph::new(self.n(), &edges, priorities)
    }

    pub fn n(&self) -> usize {
        self.priority.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + Clone {
        (0..self.n() as u32).map(|i| VertexId(i + 1))
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `u`.
    pub fn opposite(&self, e: EdgeId, u: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == u {
            b
        } else {
            debug_assert_eq!(b, u);
            a
        }
    }

    /// Incident edge ids of `u`, in ascending order.
    pub fn incident(&self, u: VertexId) -> &[EdgeId] {
        &self.adjacency[u.index()]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.adjacency[u.index()].len()
    }

    pub fn priority(&self, u: VertexId) -> Priority {
        self.priority[u.index()]
    }

    pub fn priorities(&self) -> &[Priority] {
        &self.priority
    }

    /// Distinct priorities present in the graph, ascending.
    pub fn priority_classes(&self) -> Vec<Priority> {
        let mut classes = self.priority.clone();
        classes.sort_unstable();
        classes.dedup();
        classes
    }

    /// Edge joining `u` and `v`, if any.
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let (short, other) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.incident(short)
            .iter()
            .copied()
            .find(|&e| self.opposite(e, short) == other)
    }

    /// A proper 2-colouring (`false`/`true` per vertex index) if the graph is bipartite.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut stack = Vec::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            stack.push(VertexId::from_index(start));
            while let Some(u) = stack.pop() {
                let cu = color[u.index()].unwrap();
                for &e in self.incident(u) {
                    let w = self.opposite(e, u);
                    match color[w.index()] {
                        None => {
                            color[w.index()] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edge index {edge} out of range (graph has {m} edges)")]
    EdgeOutOfRange { edge: EdgeId, m: usize },
    #[error("vertex {0} is covered by two matching edges")]
    SharedVertex(VertexId),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAnEdge(VertexId, VertexId),
    #[error("path is not alternating at position {0}")]
    NotAlternating(usize),
    #[error("path repeats vertex {0}")]
    RepeatedVertex(VertexId),
    #[error("path must start at an unmatched vertex")]
    StartMatched,
    #[error("path has fewer than two vertices")]
    TooShort,
}

/// A set of vertex-disjoint edges with O(1) mate lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<VertexId>>,
    mate_edge: Vec<Option<EdgeId>>,
    size: usize,
}

impl Matching {
    pub fn empty(graph: &Graph) -> Self {
        Matching {
            mate: vec![None; graph.n()],
            mate_edge: vec![None; graph.n()],
            size: 0,
        }
    }

    /// Builds a matching from edge ids, rejecting any two that share an endpoint.
    pub fn from_edges(graph: &Graph, edges: &[EdgeId]) -> Result<Self, MatchingError> {
        let mut m = Matching::empty(graph);
        for &e in edges {
            if e >= graph.m() {
                return Err(MatchingError::EdgeOutOfRange {
                    edge: e,
                    m: graph.m(),
                });
            }
            let (u, v) = graph.endpoints(e);
            for x in [u, v] {
                if m.mate[x.index()].is_some() {
                    return Err(MatchingError::SharedVertex(x));
                }
            }
            m.link(u, v, e);
        }
        Ok(m)
    }

    /// Builds a matching from vertex pairs, each of which must be an edge of `graph`.
    pub fn from_pairs(
        graph: &Graph,
        pairs: &[(VertexId, VertexId)],
    ) -> Result<Self, MatchingError> {
        let edges = pairs
            .iter()
            .map(|&(u, v)| graph.find_edge(u, v).ok_or(MatchingError::NotAnEdge(u, v)))
            .collect::<Result<Vec<_>, _>>()?;
        Matching::from_edges(graph, &edges)
    }

    pub fn mate(&self, u: VertexId) -> Option<VertexId> {
        self.mate[u.index()]
    }

    pub fn mate_edge(&self, u: VertexId) -> Option<EdgeId> {
        self.mate_edge[u.index()]
    }

    pub fn is_matched(&self, u: VertexId) -> bool {
        self.mate[u.index()].is_some()
    }

    /// Number of matching edges.
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains_edge(&self, graph: &Graph, e: EdgeId) -> bool {
        let (u, _) = graph.endpoints(e);
        self.mate_edge[u.index()] == Some(e)
    }

    /// Matching edge ids, ascending.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .mate
            .iter()
            .enumerate()
            .filter_map(|(i, m)| match m {
                Some(w) if w.index() > i => self.mate_edge[i],
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted by `u`.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(i, m)| match m {
                Some(w) if w.index() > i => Some((VertexId::from_index(i), *w)),
                _ => None,
            })
            .collect()
    }

    fn link(&mut self, u: VertexId, v: VertexId, e: EdgeId) {
        self.mate[u.index()] = Some(v);
        self.mate[v.index()] = Some(u);
        self.mate_edge[u.index()] = Some(e);
        self.mate_edge[v.index()] = Some(e);
        self.size += 1;
    }

    fn unlink(&mut self, u: VertexId) {
        if let Some(v) = self.mate[u.index()].take() {
            self.mate[v.index()] = None;
            self.mate_edge[u.index()] = None;
            self.mate_edge[v.index()] = None;
            self.size -= 1;
        }
    }

    /// Flips matching membership of every edge along `path`.
    ///
    /// The path must be simple, follow graph edges, start at an unmatched
    /// vertex and alternate non-matching/matching edges. Every vertex matched
    /// before stays matched except possibly the far endpoint of an
    /// even-length path.
    pub fn augment(&mut self, graph: &Graph, path: &[VertexId]) -> Result<(), MatchingError> {
        let edges = self.check_alternating(graph, path)?;
        // Unlink first so the relinking below never sees stale mates.
        for (k, _) in edges.iter().enumerate().filter(|(k, _)| k % 2 == 1) {
            self.unlink(path[k]);
        }
        for (k, &e) in edges.iter().enumerate().filter(|(k, _)| k % 2 == 0) {
            self.link(path[k], path[k + 1], e);
        }
        debug_assert!(self.audit(graph).is_ok());
        Ok(())
    }

    /// Structural check of an alternating path; returns the edge ids along it.
    pub(crate) fn check_alternating(
        &self,
        graph: &Graph,
        path: &[VertexId],
    ) -> Result<Vec<EdgeId>, MatchingError> {
        if path.len() < 2 {
            return Err(MatchingError::TooShort);
        }
        let mut seen = vec![false; graph.n()];
        for &x in path {
            if std::mem::replace(&mut seen[x.index()], true) {
                return Err(MatchingError::RepeatedVertex(x));
            }
        }
        if self.is_matched(path[0]) {
            return Err(MatchingError::StartMatched);
        }
        path.windows(2)
            .enumerate()
            .map(|(k, w)| {
                let e = graph
                    .find_edge(w[0], w[1])
                    .ok_or(MatchingError::NotAnEdge(w[0], w[1]))?;
                let in_matching = self.mate_edge(w[0]) == Some(e);
                if in_matching != (k % 2 == 1) {
                    return Err(MatchingError::NotAlternating(k));
                }
                Ok(e)
            })
            .collect()
    }

    /// Walks every vertex checking the mate involution and edge consistency.
    pub fn audit(&self, graph: &Graph) -> Result<(), MatchingError> {
        let mut count = 0;
        for u in graph.vertices() {
            match (self.mate(u), self.mate_edge(u)) {
                (None, None) => {}
                (Some(v), Some(e)) => {
                    let (a, b) = graph.endpoints(e);
                    if !((a == u && b == v) || (a == v && b == u)) || self.mate(v) != Some(u) {
                        return Err(MatchingError::SharedVertex(u));
                    }
                    count += 1;
                }
                _ => return Err(MatchingError::SharedVertex(u)),
            }
        }
        if count != 2 * self.size {
            return Err(MatchingError::SharedVertex(VertexId(1)));
        }
        Ok(())
    }
}

/// Checks that the edge ids in `edges` are pairwise vertex-disjoint.
///
/// Returns `Ok(None)` when valid, `Ok(Some(v))` naming one vertex covered
/// twice, and an error for an out-of-range edge index.
pub fn is_valid_matching(
    graph: &Graph,
    edges: &[EdgeId],
) -> Result<Option<VertexId>, MatchingError> {
    let mut covered = vec![false; graph.n()];
    for &e in edges {
        if e >= graph.m() {
            return Err(MatchingError::EdgeOutOfRange {
                edge: e,
                m: graph.m(),
            });
        }
        let (u, v) = graph.endpoints(e);
        for x in [u, v] {
            if std::mem::replace(&mut covered[x.index()], true) {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}
