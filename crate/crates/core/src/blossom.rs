//! Search for an `i`-augmenting path in a general graph.
//!
//! The search grows alternating trees from every unmatched vertex of the
//! target priority `i` and shrinks odd cycles into blossoms. A path is
//! reported as soon as the tree reaches
//!
//! * a matched vertex of priority greater than `i` through its mate (even-length path),
//! * an unmatched vertex outside every tree (odd-length path),
//! * an even vertex of another tree (odd-length path), or
//! * an odd vertex of priority greater than `i` on a newly found blossom cycle.
//!
//! The shrunken graph is represented by a union-find over original vertices;
//! each set records its base vertex. Shrunken vertices are identified by
//! their base. Paths are built over shrunken vertices and then expanded
//! through every blossom they visit.

use std::collections::VecDeque;

use thiserror::Error;

use crate::dsu::DisjointSets;
use crate::graph::{EdgeId, Graph, Matching, Priority, VertexId};
use crate::path::AugPath;
use crate::trace::{EdgeCase, ForestView, Label, Observer, SearchEvent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph is not bipartite")]
    NonBipartite,
    #[error("edge {{{0}, {1}}} is not on the eligible list")]
    NotEligible(VertexId, VertexId),
    #[error("search already finished")]
    Finished,
    #[error("not a path in the shrunken graph: {0}")]
    InvalidShrunkenPath(String),
}

/// A shrunk odd cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blossom {
    pub id: usize,
    pub base: VertexId,
    /// The edge between two even vertices that closed the cycle.
    pub bridge: (VertexId, VertexId),
    /// Shrunken vertices on the cycle at creation time, base first.
    pub cycle: Vec<VertexId>,
    /// Blossoms that appear as single vertices on `cycle`.
    pub children: Vec<usize>,
}

/// A failed invariant of the search forest.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("property {property} violated: {detail}")]
pub struct PropertyViolation {
    pub property: u8,
    pub detail: String,
}

impl PropertyViolation {
    pub(crate) fn new(property: u8, detail: impl Into<String>) -> Self {
        PropertyViolation {
            property,
            detail: detail.into(),
        }
    }
}

/// Outcome of a single search step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Continue(EdgeCase),
    Found(AugPath),
    Exhausted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Running,
    Found,
    Exhausted,
}

/// A path over shrunken vertices. `links[k]` is the original edge joining
/// `nodes[k]` to `nodes[k + 1]`, with `links[k].0` inside `nodes[k]`.
#[derive(Clone, Debug, Default)]
struct ShrunkenPath {
    nodes: Vec<VertexId>,
    links: Vec<(VertexId, VertexId)>,
}

impl ShrunkenPath {
    fn reverse(&mut self) {
        self.nodes.reverse();
        self.links.reverse();
        for l in &mut self.links {
            *l = (l.1, l.0);
        }
    }

    fn append(&mut self, link: (VertexId, VertexId), mut rest: ShrunkenPath) {
        self.links.push(link);
        self.nodes.append(&mut rest.nodes);
        self.links.append(&mut rest.links);
    }
}

enum Task {
    Emit(VertexId),
    Walk {
        from: VertexId,
        to: VertexId,
        reversed: bool,
    },
}

/// State of one `i`-augmenting path search.
///
/// The search borrows the matching; apply a returned path with
/// [`Matching::augment`] after the search is dropped.
pub struct BlossomSearch<'g> {
    graph: &'g Graph,
    matching: &'g Matching,
    target: Priority,
    /// Label each vertex received when it joined a tree. Vertices absorbed
    /// into blossoms keep it; the blossom itself is labelled by its base.
    label: Vec<Label>,
    /// Odd vertex: the even vertex it was reached from. Even non-root vertex: its mate.
    parent: Vec<Option<VertexId>>,
    root: Vec<Option<VertexId>>,
    /// For odd vertices absorbed into a blossom: the closing edge, oriented
    /// so that the first endpoint lies on this vertex's side of the cycle.
    bridge: Vec<Option<(VertexId, VertexId)>>,
    sets: DisjointSets,
    /// Base vertex of each union-find representative.
    base: Vec<VertexId>,
    /// Outermost blossom whose base is this vertex.
    outer: Vec<Option<usize>>,
    blossoms: Vec<Blossom>,
    queue: VecDeque<(VertexId, EdgeId)>,
    mark: Vec<u32>,
    stamp: u32,
    stray_unmatched: usize,
    status: Status,
}

impl<'g> BlossomSearch<'g> {
    /// Makes every unmatched vertex of priority `target` a tree root and puts
    /// their incident edges on the eligible list, roots in ascending order.
    pub fn new(graph: &'g Graph, matching: &'g Matching, target: Priority) -> Self {
        let n = graph.n();
        let mut search = BlossomSearch {
            graph,
            matching,
            target,
            label: vec![Label::Unreached; n],
            parent: vec![None; n],
            root: vec![None; n],
            bridge: vec![None; n],
            sets: DisjointSets::new(n),
            base: graph.vertices().collect(),
            outer: vec![None; n],
            blossoms: Vec::new(),
            queue: VecDeque::new(),
            mark: vec![0; n],
            stamp: 0,
            stray_unmatched: 0,
            status: Status::Running,
        };
        for r in graph.vertices().filter(|&r| !matching.is_matched(r)) {
            let p = graph.priority(r);
            if p == target {
                search.label[r.index()] = Label::Even;
                search.root[r.index()] = Some(r);
                for &e in graph.incident(r) {
                    search.queue.push_back((r, e));
                }
            } else if p < target {
                search.stray_unmatched += 1;
            }
        }
        search
    }

    pub fn target(&self) -> Priority {
        self.target
    }

    /// Unmatched vertices whose priority outranks the target. They never
    /// become roots, and with a maximum `(i-1)`-score no tree can reach them.
    pub fn stray_unmatched(&self) -> usize {
        self.stray_unmatched
    }

    pub fn blossoms_created(&self) -> usize {
        self.blossoms.len()
    }

    pub fn is_exhausted(&self) -> bool {
        self.status == Status::Exhausted
    }

    /// Pending eligible edges as `(even endpoint, other endpoint)`, in queue order.
    pub fn eligible(&self) -> Vec<(VertexId, VertexId)> {
        self.queue
            .iter()
            .map(|&(u, e)| (u, self.graph.opposite(e, u)))
            .collect()
    }

    /// Shrunken vertex (its base) containing `v`.
    pub fn beta(&self, v: VertexId) -> VertexId {
        self.base[self.sets.find_const(v.index())]
    }

    fn beta_mut(&mut self, v: VertexId) -> VertexId {
        let r = self.sets.find(v.index());
        self.base[r]
    }

    /// True if `v` lies inside some blossom.
    pub fn is_internal(&self, v: VertexId) -> bool {
        self.outer[self.beta(v).index()].is_some()
    }

    pub fn tree_root(&self, v: VertexId) -> Option<VertexId> {
        self.root[self.beta(v).index()]
    }

    /// Runs to completion.
    pub fn run(&mut self) -> Option<AugPath> {
        self.run_observed(&mut ())
    }

    pub fn run_observed(&mut self, observer: &mut dyn Observer) -> Option<AugPath> {
        loop {
            match self.step_observed(observer) {
                Ok(Step::Continue(_)) => {}
                Ok(Step::Found(p)) => return Some(p),
                Ok(Step::Exhausted) | Err(_) => return None,
            }
        }
    }

    /// Processes the next eligible edge in FIFO order.
    pub fn step(&mut self) -> Result<Step, SearchError> {
        self.step_observed(&mut ())
    }

    pub fn step_observed(&mut self, observer: &mut dyn Observer) -> Result<Step, SearchError> {
        if self.status != Status::Running {
            return Err(SearchError::Finished);
        }
        match self.queue.pop_front() {
            Some((u, e)) => Ok(self.process(u, e, observer)),
            None => {
                self.status = Status::Exhausted;
                observer.on_event(
                    &SearchEvent::Exhausted {
                        priority: self.target,
                    },
                    self,
                );
                Ok(Step::Exhausted)
            }
        }
    }

    /// Processes a specific eligible edge `{u, v}` whose `u` side is even,
    /// removing its first occurrence from the eligible list.
    pub fn select(&mut self, u: VertexId, v: VertexId) -> Result<Step, SearchError> {
        self.select_observed(u, v, &mut ())
    }

    pub fn select_observed(
        &mut self,
        u: VertexId,
        v: VertexId,
        observer: &mut dyn Observer,
    ) -> Result<Step, SearchError> {
        if self.status != Status::Running {
            return Err(SearchError::Finished);
        }
        let pos = self
            .queue
            .iter()
            .position(|&(a, e)| a == u && self.graph.opposite(e, a) == v)
            .ok_or(SearchError::NotEligible(u, v))?;
        let (u, e) = self.queue.remove(pos).unwrap();
        Ok(self.process(u, e, observer))
    }

    fn process(&mut self, u: VertexId, e: EdgeId, observer: &mut dyn Observer) -> Step {
        let v = self.graph.opposite(e, u);
        let bu = self.beta_mut(u);
        let bv = self.beta_mut(v);
        debug_assert_eq!(self.label[bu.index()], Label::Even);

        let (case, found) = if bu == bv {
            (EdgeCase::Internal, None)
        } else {
            match self.label[bv.index()] {
                Label::Odd => (EdgeCase::Ignore, None),
                Label::Unreached => match self.matching.mate(v) {
                    Some(w) => {
                        self.grow(u, v, w, bu);
                        if self.graph.priority(w) > self.target {
                            let mut sp = ShrunkenPath {
                                nodes: vec![w, v],
                                links: vec![(w, v)],
                            };
                            sp.append((v, u), self.walk_up(bu, None));
                            sp.reverse();
                            (EdgeCase::FoundPath, Some(sp))
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
                        let mut sp = ShrunkenPath {
                            nodes: vec![v],
                            links: vec![],
                        };
                        sp.append((v, u), self.walk_up(bu, None));
                        sp.reverse();
                        (EdgeCase::OddPath, Some(sp))
                    }
                },
                Label::Even => {
                    if self.root[bu.index()] != self.root[bv.index()] {
                        let mut sp = self.walk_up(bu, None);
                        sp.reverse();
                        sp.append((u, v), self.walk_up(bv, None));
                        (EdgeCase::CrossPath, Some(sp))
                    } else {
                        match self.blossom_or_path(u, v, bu, bv, observer) {
                            Some(sp) => (EdgeCase::BlossomPath, Some(sp)),
                            None => (EdgeCase::Blossom, None),
                        }
                    }
                }
            }
        };

        observer.on_event(
            &SearchEvent::Dequeue {
                priority: self.target,
                u,
                v,
                case,
            },
            self,
        );
        match found {
            Some(sp) => {
                let path = self
                    .expand(&sp)
                    .expect("search produced a malformed shrunken path");
                self.status = Status::Found;
                observer.on_event(
                    &SearchEvent::PathFound {
                        priority: self.target,
                        path: path.vertices().to_vec(),
                    },
                    self,
                );
                Step::Found(path)
            }
            None => Step::Continue(case),
        }
    }

    fn grow(&mut self, u: VertexId, v: VertexId, w: VertexId, bu: VertexId) {
        let root = self.root[bu.index()];
        self.label[v.index()] = Label::Odd;
        self.parent[v.index()] = Some(u);
        self.root[v.index()] = root;
        self.label[w.index()] = Label::Even;
        self.parent[w.index()] = Some(v);
        self.root[w.index()] = root;
    }

    /// Next even shrunken vertex above `b`, with the odd vertex in between.
    fn up(&mut self, b: VertexId) -> Option<(VertexId, VertexId)> {
        let odd = self.matching.mate(b)?;
        let p = self.parent[odd.index()].expect("odd vertex without parent");
        Some((odd, self.beta_mut(p)))
    }

    /// Tree path from shrunken vertex `b` towards its root, stopping early
    /// after the odd vertex `stop` if given.
    fn walk_up(&mut self, mut b: VertexId, stop: Option<VertexId>) -> ShrunkenPath {
        let mut sp = ShrunkenPath::default();
        sp.nodes.push(b);
        while let Some((odd, next)) = self.up(b) {
            sp.links.push((b, odd));
            sp.nodes.push(odd);
            if Some(odd) == stop {
                break;
            }
            let p = self.parent[odd.index()].unwrap();
            sp.links.push((odd, p));
            sp.nodes.push(next);
            b = next;
        }
        sp
    }

    fn nearest_common_ancestor(&mut self, a: VertexId, b: VertexId) -> VertexId {
        self.stamp += 1;
        let stamp = self.stamp;
        let (mut x, mut y) = (Some(a), Some(b));
        loop {
            if let Some(cur) = x {
                if self.mark[cur.index()] == stamp {
                    return cur;
                }
                self.mark[cur.index()] = stamp;
                x = self.up(cur).map(|(_, next)| next);
            }
            if let Some(cur) = y {
                if self.mark[cur.index()] == stamp {
                    return cur;
                }
                self.mark[cur.index()] = stamp;
                y = self.up(cur).map(|(_, next)| next);
            }
            debug_assert!(x.is_some() || y.is_some(), "no common ancestor in one tree");
        }
    }

    /// Shrunken vertices strictly below `top` on the tree path from `b`,
    /// alternating even bases and odd vertices.
    fn side(&mut self, mut b: VertexId, top: VertexId) -> Vec<VertexId> {
        let mut out = Vec::new();
        while b != top {
            let (odd, next) = self.up(b).expect("walked past the root");
            out.push(b);
            out.push(odd);
            b = next;
        }
        out
    }

    /// Handles an edge joining two even vertices of one tree. Returns the
    /// through-cycle path if an odd cycle vertex has priority above the
    /// target, otherwise shrinks the cycle.
    fn blossom_or_path(
        &mut self,
        u: VertexId,
        v: VertexId,
        bu: VertexId,
        bv: VertexId,
        observer: &mut dyn Observer,
    ) -> Option<ShrunkenPath> {
        let top = self.nearest_common_ancestor(bu, bv);
        let u_side = self.side(bu, top);
        let v_side = self.side(bv, top);

        // Odd vertices sit at odd positions of each side.
        let exit = u_side
            .iter()
            .skip(1)
            .step_by(2)
            .map(|&x| (x, true))
            .chain(v_side.iter().skip(1).step_by(2).map(|&x| (x, false)))
            .find(|&(x, _)| self.graph.priority(x) > self.target);

        if let Some((x, on_u_side)) = exit {
            let (near, far, bnear, bfar) = if on_u_side {
                (u, v, bu, bv)
            } else {
                (v, u, bv, bu)
            };
            let mut sp = self.walk_up(bnear, Some(x));
            sp.reverse();
            sp.append((near, far), self.walk_up(bfar, None));
            sp.reverse();
            return Some(sp);
        }

        let id = self.blossoms.len();
        let mut cycle = Vec::with_capacity(1 + u_side.len() + v_side.len());
        cycle.push(top);
        cycle.extend(u_side.iter().rev());
        cycle.extend(v_side.iter());
        let children = cycle.iter().filter_map(|b| self.outer[b.index()]).collect();

        for (side, bridge) in [(&u_side, (u, v)), (&v_side, (v, u))] {
            for &x in side.iter().skip(1).step_by(2) {
                self.bridge[x.index()] = Some(bridge);
            }
        }
        for &b in u_side.iter().chain(v_side.iter()) {
            self.sets.union(b.index(), top.index());
        }
        let rep = self.sets.find(top.index());
        self.base[rep] = top;
        self.outer[top.index()] = Some(id);

        for side in [&u_side, &v_side] {
            for &x in side.iter().skip(1).step_by(2) {
                let parent = self.parent[x.index()];
                for &f in self.graph.incident(x) {
                    let y = self.graph.opposite(f, x);
                    if Some(f) != self.matching.mate_edge(x) && Some(y) != parent {
                        self.queue.push_back((x, f));
                    }
                }
            }
        }

        self.blossoms.push(Blossom {
            id,
            base: top,
            bridge: (u, v),
            cycle: cycle.clone(),
            children,
        });
        observer.on_event(
            &SearchEvent::BlossomCreated {
                priority: self.target,
                id,
                base: top,
                bridge: (u, v),
                cycle,
            },
            self,
        );
        None
    }

    /// Appends the even-length alternating path from `from` up to `to` in
    /// the original graph, or its reverse. `from` must be even or inside a
    /// blossom and `to` an even vertex on its way to the root.
    fn tree_path(&self, from: VertexId, to: VertexId, reversed: bool, out: &mut Vec<VertexId>) {
        let mut stack = vec![Task::Walk { from, to, reversed }];
        while let Some(task) = stack.pop() {
            let (v, w, rev) = match task {
                Task::Emit(x) => {
                    out.push(x);
                    continue;
                }
                Task::Walk { from, to, reversed } => (from, to, reversed),
            };
            if v == w {
                out.push(v);
                continue;
            }
            let mate = self
                .matching
                .mate(v)
                .expect("tree path leaves through a matched edge");
            match self.label[v.index()] {
                Label::Even => {
                    let next = self.parent[mate.index()].expect("odd vertex without parent");
                    // v, mate, path(next, w)
                    if rev {
                        stack.push(Task::Emit(v));
                        stack.push(Task::Emit(mate));
                        stack.push(Task::Walk {
                            from: next,
                            to: w,
                            reversed: true,
                        });
                    } else {
                        stack.push(Task::Walk {
                            from: next,
                            to: w,
                            reversed: false,
                        });
                        stack.push(Task::Emit(mate));
                        stack.push(Task::Emit(v));
                    }
                }
                Label::Odd => {
                    let (x, y) = self.bridge[v.index()].expect("odd vertex outside any blossom");
                    // v, reverse(path(x, mate)), path(y, w)
                    if rev {
                        stack.push(Task::Emit(v));
                        stack.push(Task::Walk {
                            from: x,
                            to: mate,
                            reversed: false,
                        });
                        stack.push(Task::Walk {
                            from: y,
                            to: w,
                            reversed: true,
                        });
                    } else {
                        stack.push(Task::Walk {
                            from: y,
                            to: w,
                            reversed: false,
                        });
                        stack.push(Task::Walk {
                            from: x,
                            to: mate,
                            reversed: true,
                        });
                        stack.push(Task::Emit(v));
                    }
                }
                Label::Unreached => unreachable!("tree path through unreached vertex {v}"),
            }
        }
    }

    fn expand(&self, sp: &ShrunkenPath) -> Result<AugPath, SearchError> {
        let last = sp.nodes.len() - 1;
        let mut out = Vec::new();
        for (k, &b) in sp.nodes.iter().enumerate() {
            let enter = (k > 0).then(|| sp.links[k - 1].1);
            let exit = (k < last).then(|| sp.links[k].0);
            if self.outer[b.index()].is_none() {
                if enter.is_some_and(|x| x != b) || exit.is_some_and(|x| x != b) {
                    return Err(SearchError::InvalidShrunkenPath(format!(
                        "link does not touch external vertex {b}"
                    )));
                }
                out.push(b);
            } else if enter.is_none_or(|x| x == b) {
                self.tree_path(exit.unwrap_or(b), b, true, &mut out);
            } else if exit.is_none_or(|x| x == b) {
                self.tree_path(enter.unwrap(), b, false, &mut out);
            } else {
                return Err(SearchError::InvalidShrunkenPath(format!(
                    "blossom with base {b} is neither entered nor left at its base"
                )));
            }
        }
        Ok(AugPath::new(out))
    }

    /// Expands a path given as a sequence of shrunken vertices of the
    /// current search state into a path of the original graph. Each entry
    /// may name any original vertex of the shrunken vertex it stands for.
    ///
    /// Consecutive shrunken vertices are joined by the matching edge between
    /// them if there is one, otherwise by their lowest-numbered non-matching edge.
    pub fn expand_path(&self, shrunken: &[VertexId]) -> Result<AugPath, SearchError> {
        if shrunken.is_empty() {
            return Err(SearchError::InvalidShrunkenPath("empty".into()));
        }
        let nodes: Vec<VertexId> = shrunken.iter().map(|&x| self.beta(x)).collect();
        let mut links = Vec::with_capacity(nodes.len() - 1);
        for pair in nodes.windows(2) {
            let (x, y) = (pair[0], pair[1]);
            let link = match (self.matching.mate(x), self.matching.mate(y)) {
                (Some(z), _) if self.beta(z) == y => (x, z),
                (_, Some(z)) if self.beta(z) == x => (z, y),
                _ => self
                    .graph
                    .vertices()
                    .filter(|&a| self.beta(a) == x)
                    .flat_map(|a| self.graph.incident(a).iter().map(move |&f| (a, f)))
                    .find(|&(a, f)| {
                        self.beta(self.graph.opposite(f, a)) == y
                            && self.matching.mate_edge(a) != Some(f)
                    })
                    .map(|(a, f)| (a, self.graph.opposite(f, a)))
                    .ok_or_else(|| {
                        SearchError::InvalidShrunkenPath(format!("no edge between {x} and {y}"))
                    })?,
            };
            links.push(link);
        }
        let path = self.expand(&ShrunkenPath { nodes, links })?;
        self.matching
            .check_alternating(self.graph, path.vertices())
            .map_err(|e| SearchError::InvalidShrunkenPath(e.to_string()))?;
        Ok(path)
    }

    /// Checks the forest invariants. The first three hold at all times; the
    /// last two only once the search is exhausted and are skipped otherwise.
    ///
    /// 1. Roots are unmatched with the target priority; each tree has exactly
    ///    one unmatched vertex.
    /// 2. Matching edges between shrunken vertices are both unreached, or
    ///    odd/even with the even side the child of the odd side.
    /// 3. Internal vertices lie in even blossoms, and an unmatched internal
    ///    vertex has an unmatched base.
    /// 4. Any edge whose endpoints are both even or internal lies inside one blossom.
    /// 5. Every even or internal vertex has priority at most the target.
    pub fn check_failure_properties(&self) -> Result<(), PropertyViolation> {
        let g = self.graph;
        let m = self.matching;
        let shrunken_label = |x: VertexId| self.label[self.beta(x).index()];

        for x in g.vertices() {
            let Some(r) = self.root[x.index()] else {
                continue;
            };
            if self.root[r.index()] != Some(r) {
                return Err(PropertyViolation::new(
                    1,
                    format!("root {r} of {x} is not a root"),
                ));
            }
            if x == r && (m.is_matched(r) || g.priority(r) != self.target) {
                return Err(PropertyViolation::new(
                    1,
                    format!("root {r} matched or wrong priority"),
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
            let (ba, bb) = (self.beta(a), self.beta(b));
            if ba == bb {
                continue;
            }
            let ok = match (shrunken_label(a), shrunken_label(b)) {
                (Label::Unreached, Label::Unreached) => true,
                (Label::Odd, Label::Even) => bb == b && self.parent[b.index()] == Some(a),
                (Label::Even, Label::Odd) => ba == a && self.parent[a.index()] == Some(b),
                _ => false,
            };
            if !ok {
                return Err(PropertyViolation::new(
                    2,
                    format!("matching edge {{{a}, {b}}}"),
                ));
            }
        }

        for x in g.vertices().filter(|&x| self.is_internal(x)) {
            let b = self.beta(x);
            if self.label[b.index()] != Label::Even {
                return Err(PropertyViolation::new(
                    3,
                    format!("blossom of {x} is not even"),
                ));
            }
            if !m.is_matched(x) && m.is_matched(b) {
                return Err(PropertyViolation::new(
                    3,
                    format!("unmatched {x} in matched blossom"),
                ));
            }
        }

        if self.status != Status::Exhausted {
            return Ok(());
        }

        for &(a, b) in g.edges() {
            if shrunken_label(a) == Label::Even
                && shrunken_label(b) == Label::Even
                && self.beta(a) != self.beta(b)
            {
                return Err(PropertyViolation::new(
                    4,
                    format!("edge {{{a}, {b}}} joins even vertices"),
                ));
            }
        }
        for x in g.vertices() {
            if shrunken_label(x) == Label::Even && g.priority(x) > self.target {
                return Err(PropertyViolation::new(
                    5,
                    format!("even or internal {x} has priority {}", g.priority(x)),
                ));
            }
        }
        Ok(())
    }
}

impl ForestView for BlossomSearch<'_> {
    fn graph(&self) -> &Graph {
        self.graph
    }

    fn matching(&self) -> &Matching {
        self.matching
    }

    fn label(&self, v: VertexId) -> Label {
        self.label[self.beta(v).index()]
    }

    fn tree_parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v.index()]
    }

    fn blossoms(&self) -> &[Blossom] {
        &self.blossoms
    }

    fn blossom_members(&self, id: usize) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(b) = stack.pop() {
            let blossom = &self.blossoms[b];
            for &node in &blossom.cycle {
                match blossom
                    .children
                    .iter()
                    .find(|&&c| self.blossoms[c].base == node)
                {
                    Some(&c) => stack.push(c),
                    None => out.push(node),
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Runs one search and returns an `i`-augmenting path if one exists.
pub fn find_i_augmenting_path(
    graph: &Graph,
    matching: &Matching,
    target: Priority,
) -> Option<AugPath> {
    BlossomSearch::new(graph, matching, target).run()
}
