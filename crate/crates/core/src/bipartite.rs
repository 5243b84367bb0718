//! Two-priority augmenting path search restricted to bipartite graphs.
//!
//! Trees are grown from the unmatched members of a target set `S`; no cycle
//! shrinking is needed because an edge between two even vertices always
//! joins different trees. Serves as an independent cross-check of
//! [`crate::blossom`] on bipartite inputs.

use std::collections::VecDeque;

use crate::blossom::{PropertyViolation, SearchError};
use crate::graph::{EdgeId, Graph, Matching, Priority, VertexId};
use crate::path::AugPath;
use crate::trace::{EdgeCase, ForestView, Label, SearchEvent};

pub struct BipartiteSearch<'g> {
    graph: &'g Graph,
    matching: &'g Matching,
    in_set: Vec<bool>,
    label: Vec<Label>,
    parent: Vec<Option<VertexId>>,
    root: Vec<Option<VertexId>>,
    queue: VecDeque<(VertexId, EdgeId)>,
    exhausted: bool,
}

impl<'g> BipartiteSearch<'g> {
    /// Fails with [`SearchError::NonBipartite`] unless `graph` is 2-colourable.
    pub fn new(
        graph: &'g Graph,
        matching: &'g Matching,
        set: &[VertexId],
    ) -> Result<Self, SearchError> {
        if !graph.is_bipartite() {
            return Err(SearchError::NonBipartite);
        }
        let n = graph.n();
        let mut in_set = vec![false; n];
        for &x in set {
            in_set[x.index()] = true;
        }
        let mut search = BipartiteSearch {
            graph,
            matching,
            in_set,
            label: vec![Label::Unreached; n],
            parent: vec![None; n],
            root: vec![None; n],
            queue: VecDeque::new(),
            exhausted: false,
        };
        for r in graph.vertices() {
            if search.in_set[r.index()] && !matching.is_matched(r) {
                search.label[r.index()] = Label::Even;
                search.root[r.index()] = Some(r);
                for &e in graph.incident(r) {
                    search.queue.push_back((r, e));
                }
            }
        }
        Ok(search)
    }

    pub fn in_set(&self) -> &[bool] {
        &self.in_set
    }

    pub fn run(&mut self) -> Option<AugPath> {
        self.run_traced(&mut |_| {})
    }

    /// Runs to completion, reporting each dequeued edge to `trace`.
    pub fn run_traced(&mut self, trace: &mut dyn FnMut(&SearchEvent)) -> Option<AugPath> {
        while let Some((u, e)) = self.queue.pop_front() {
            let v = self.graph.opposite(e, u);
            let (case, path) = self.process(u, v);
            trace(&SearchEvent::Dequeue {
                priority: Priority::HIGHEST,
                u,
                v,
                case,
            });
            if let Some(p) = path {
                trace(&SearchEvent::PathFound {
                    priority: Priority::HIGHEST,
                    path: p.vertices().to_vec(),
                });
                return Some(p);
            }
        }
        self.exhausted = true;
        trace(&SearchEvent::Exhausted {
            priority: Priority::HIGHEST,
        });
        None
    }

    fn process(&mut self, u: VertexId, v: VertexId) -> (EdgeCase, Option<AugPath>) {
        debug_assert_eq!(self.label[u.index()], Label::Even);
        match self.label[v.index()] {
            Label::Odd => (EdgeCase::Ignore, None),
            Label::Unreached => match self.matching.mate(v) {
                Some(w) => {
                    let root = self.root[u.index()];
                    self.label[v.index()] = Label::Odd;
                    self.parent[v.index()] = Some(u);
                    self.root[v.index()] = root;
                    self.label[w.index()] = Label::Even;
                    self.parent[w.index()] = Some(v);
                    self.root[w.index()] = root;
                    if !self.in_set[w.index()] {
                        let mut p = self.to_root(w);
                        p.reverse();
                        (EdgeCase::FoundPath, Some(AugPath::new(p)))
                    } else {
                        for &f in self.graph.incident(w) {
                            if Some(f) != self.matching.mate_edge(w) {
                                self.queue.push_back((w, f));
                            }
                        }
                        (EdgeCase::Grow, None)
                    }
                }
                None => {
                    let mut p = self.to_root(u);
                    p.reverse();
                    p.push(v);
                    (EdgeCase::OddPath, Some(AugPath::new(p)))
                }
            },
            Label::Even => {
                // A bipartite graph has no edge between two even vertices of one tree.
                debug_assert_ne!(self.root[u.index()], self.root[v.index()]);
                let mut p = self.to_root(u);
                p.reverse();
                p.extend(self.to_root(v));
                (EdgeCase::CrossPath, Some(AugPath::new(p)))
            }
        }
    }

    fn to_root(&self, mut x: VertexId) -> Vec<VertexId> {
        let mut out = vec![x];
        while let Some(p) = self.parent[x.index()] {
            out.push(p);
            x = p;
        }
        out
    }

    /// Checks the forest invariants after a failed search.
    ///
    /// 1. Roots are unmatched members of `S`; each tree has one unmatched vertex.
    /// 2. Matching edges are both unreached, or odd/even with the even side the child.
    /// 3. Edges inside one tree join an odd and an even vertex.
    /// 4. Every edge touching a tree has an odd endpoint.
    /// 5. Every even vertex is in `S`.
    pub fn check_failure_properties(&self) -> Result<(), PropertyViolation> {
        if !self.exhausted {
            return Err(PropertyViolation::new(0, "search has not failed"));
        }
        let g = self.graph;
        let m = self.matching;
        let lab = |x: VertexId| self.label[x.index()];
        for x in g.vertices() {
            let Some(r) = self.root[x.index()] else {
                continue;
            };
            if x == r && (m.is_matched(r) || !self.in_set[r.index()]) {
                return Err(PropertyViolation::new(
                    1,
                    format!("root {r} matched or outside S"),
                ));
            }
            if x != r && !m.is_matched(x) {
                return Err(PropertyViolation::new(
                    1,
                    format!("tree of {r} has second unmatched {x}"),
                ));
            }
        }
        for (a, b) in m.pairs() {
            let ok = match (lab(a), lab(b)) {
                (Label::Unreached, Label::Unreached) => true,
                (Label::Odd, Label::Even) => self.parent[b.index()] == Some(a),
                (Label::Even, Label::Odd) => self.parent[a.index()] == Some(b),
                _ => false,
            };
            if !ok {
                return Err(PropertyViolation::new(
                    2,
                    format!("matching edge {{{a}, {b}}}"),
                ));
            }
        }
        for &(a, b) in g.edges() {
            let (ra, rb) = (self.root[a.index()], self.root[b.index()]);
            if ra.is_some() && ra == rb && lab(a) == lab(b) {
                return Err(PropertyViolation::new(
                    3,
                    format!("edge {{{a}, {b}}} in one tree"),
                ));
            }
            if (ra.is_some() || rb.is_some()) && lab(a) != Label::Odd && lab(b) != Label::Odd {
                return Err(PropertyViolation::new(
                    4,
                    format!("edge {{{a}, {b}}} has no odd end"),
                ));
            }
        }
        for x in g.vertices() {
            if lab(x) == Label::Even && !self.in_set[x.index()] {
                return Err(PropertyViolation::new(
                    5,
                    format!("even vertex {x} outside S"),
                ));
            }
        }
        Ok(())
    }
}

impl ForestView for BipartiteSearch<'_> {
    fn graph(&self) -> &Graph {
        self.graph
    }

    fn matching(&self) -> &Matching {
        self.matching
    }

    fn label(&self, v: VertexId) -> Label {
        self.label[v.index()]
    }

    fn tree_parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v.index()]
    }
}

/// Searches for an alternating path from an unmatched vertex of `set` that
/// either ends unmatched or ends matched outside `set`.
pub fn bipartite_augmenting_path(
    graph: &Graph,
    matching: &Matching,
    set: &[VertexId],
) -> Result<Option<AugPath>, SearchError> {
    Ok(BipartiteSearch::new(graph, matching, set)?.run())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::validate_set_augmenting;

    fn v(id: u32) -> VertexId {
        VertexId::new(id)
    }

    fn ids(p: &AugPath) -> Vec<u32> {
        p.vertices().iter().map(|x| x.get()).collect()
    }

    #[test]
    fn single_edge() {
        let g = Graph::uniform(2, &[(1, 2)]).unwrap();
        let m = Matching::empty(&g);
        let p = bipartite_augmenting_path(&g, &m, &[v(1)]).unwrap().unwrap();
        assert_eq!(ids(&p), vec![1, 2]);
    }

    #[test]
    fn path_graph_even_length() {
        let g = Graph::new(3, &[(1, 2), (2, 3)], &[1, 1, 2]).unwrap();
        let m = Matching::from_pairs(&g, &[(v(2), v(3))]).unwrap();
        let p = bipartite_augmenting_path(&g, &m, &[v(1)]).unwrap().unwrap();
        assert_eq!(ids(&p), vec![1, 2, 3]);
    }

    #[test]
    fn rejects_odd_cycles() {
        let g = Graph::uniform(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let m = Matching::empty(&g);
        assert!(matches!(
            bipartite_augmenting_path(&g, &m, &[v(1)]),
            Err(SearchError::NonBipartite)
        ));
    }

    #[test]
    fn star_with_leaves_in_set_fails_with_properties_intact() {
        // Centre 1, leaves 2..4; matched 1-2. Roots 3 and 4 reach 1 (odd),
        // whose mate 2 is in S and has no other edges.
        let g = Graph::uniform(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let m = Matching::from_pairs(&g, &[(v(1), v(2))]).unwrap();
        let mut s = BipartiteSearch::new(&g, &m, &[v(2), v(3), v(4)]).unwrap();
        assert_eq!(s.run(), None);
        s.check_failure_properties().unwrap();
        assert_eq!(s.label(v(1)), Label::Odd);
        assert_eq!(s.label(v(2)), Label::Even);
        assert_eq!(s.tree_parent(v(1)), Some(v(3)));
    }

    #[test]
    fn c4_with_no_roots_is_vacuous() {
        let g = Graph::uniform(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let m = Matching::from_pairs(&g, &[(v(1), v(2)), (v(3), v(4))]).unwrap();
        let mut s = BipartiteSearch::new(&g, &m, &[v(1), v(2), v(3), v(4)]).unwrap();
        assert_eq!(s.run(), None);
        s.check_failure_properties().unwrap();
    }

    #[test]
    fn cross_path_between_trees() {
        // 1-2-3-4 with 2-3 matched, S = {1, 4}.
        let g = Graph::uniform(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let m = Matching::from_pairs(&g, &[(v(2), v(3))]).unwrap();
        let mut s = BipartiteSearch::new(&g, &m, &[v(1), v(3), v(2), v(4)]).unwrap();
        let p = s.run().unwrap();
        validate_set_augmenting(&g, &m, s.in_set(), &p).unwrap();
        assert_eq!(p.edge_count(), 3);
    }
}
