//! Search events, observers and a read-only view of the alternating forest.

use std::fmt;

use crate::blossom::{Blossom, BlossomSearch};
use crate::graph::{Graph, Matching, Priority, VertexId};
use crate::path::AugPath;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Unreached,
    Even,
    Odd,
}

/// Which branch of the search loop handled a dequeued edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeCase {
    /// `v` unreached and matched: `v` and its mate joined the tree.
    Grow,
    /// Like `Grow`, but the mate ended an augmenting path.
    FoundPath,
    /// `v` unreached and unmatched.
    OddPath,
    /// `v` even in another tree.
    CrossPath,
    /// `v` even in the same tree; the cycle was shrunk.
    Blossom,
    /// `v` even in the same tree; an odd cycle vertex ended an augmenting path.
    BlossomPath,
    /// `v` odd.
    Ignore,
    /// Both endpoints already inside one blossom.
    Internal,
}

impl EdgeCase {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeCase::Grow => "grow",
            EdgeCase::FoundPath => "found-path",
            EdgeCase::OddPath => "odd-path",
            EdgeCase::CrossPath => "cross-path",
            EdgeCase::Blossom => "blossom",
            EdgeCase::BlossomPath => "blossom-path",
            EdgeCase::Ignore => "ignore",
            EdgeCase::Internal => "internal",
        }
    }

    pub fn finds_path(self) -> bool {
        matches!(
            self,
            EdgeCase::FoundPath | EdgeCase::OddPath | EdgeCase::CrossPath | EdgeCase::BlossomPath
        )
    }
}

impl fmt::Display for EdgeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchEvent {
    Dequeue {
        priority: Priority,
        u: VertexId,
        v: VertexId,
        case: EdgeCase,
    },
    BlossomCreated {
        priority: Priority,
        id: usize,
        base: VertexId,
        bridge: (VertexId, VertexId),
        cycle: Vec<VertexId>,
    },
    PathFound {
        priority: Priority,
        path: Vec<VertexId>,
    },
    Exhausted {
        priority: Priority,
    },
}

fn join(vs: &[VertexId]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One `key=value` record per line.
impl fmt::Display for SearchEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchEvent::Dequeue {
                priority,
                u,
                v,
                case,
            } => {
                write!(f, "dequeue i={priority} u={u} v={v} case={case}")
            }
            SearchEvent::BlossomCreated {
                priority,
                id,
                base,
                bridge,
                cycle,
            } => write!(
                f,
                "blossom i={priority} id={id} base={base} bridge={}-{} cycle={}",
                bridge.0,
                bridge.1,
                join(cycle)
            ),
            SearchEvent::PathFound { priority, path } => {
                write!(f, "path i={priority} vertices={}", join(path))
            }
            SearchEvent::Exhausted { priority } => write!(f, "exhausted i={priority}"),
        }
    }
}

/// Read-only snapshot of a search forest, for rendering and diagnostics.
pub trait ForestView {
    fn graph(&self) -> &Graph;
    fn matching(&self) -> &Matching;
    /// Label of the shrunken vertex containing `v`.
    fn label(&self, v: VertexId) -> Label;
    /// Parent pointer of `v` in the original graph, if it has one.
    fn tree_parent(&self, v: VertexId) -> Option<VertexId>;
    fn blossoms(&self) -> &[Blossom] {
        &[]
    }
    /// Original vertices of blossom `id`, including nested blossoms.
    fn blossom_members(&self, _id: usize) -> Vec<VertexId> {
        Vec::new()
    }
}

/// Hooks invoked while solving. All methods default to no-ops.
pub trait Observer {
    fn on_event(&mut self, _event: &SearchEvent, _forest: &dyn ForestView) {}

    /// Called once per blossom search, before any augmentation.
    fn on_search_end(&mut self, _search: &BlossomSearch<'_>, _found: Option<&AugPath>) {}
}

impl Observer for () {}

/// Collects every event as its rendered line.
#[derive(Debug, Default)]
pub struct EventLog {
    pub lines: Vec<String>,
}

impl Observer for EventLog {
    fn on_event(&mut self, event: &SearchEvent, _forest: &dyn ForestView) {
        self.lines.push(event.to_string());
    }
}
