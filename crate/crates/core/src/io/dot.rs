//! Graphviz output. Even vertices are marked `+`, odd ones `-`; blossoms
//! become nested clusters, matching edges are bold and tree edges blue.

use std::fmt::Write as _;

use crate::graph::{Graph, Matching};
use crate::trace::{ForestView, Label};

fn write_edges(
    out: &mut String,
    graph: &Graph,
    matching: &Matching,
    view: Option<&dyn ForestView>,
) {
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        let matched = matching.contains_edge(graph, e);
        let tree = view.is_some_and(|f| f.tree_parent(u) == Some(v) || f.tree_parent(v) == Some(u));
        let style = match (matched, tree) {
            (true, true) => " [penwidth=3, color=blue]",
            (true, false) => " [penwidth=3]",
            (false, true) => " [color=blue]",
            (false, false) => " [color=gray]",
        };
        writeln!(out, "  {u} -- {v}{style};").unwrap();
    }
}

/// The final matching of a solve.
pub fn matching_to_dot(graph: &Graph, matching: &Matching) -> String {
    let mut out = String::from("graph matching {\n");
    for u in graph.vertices() {
        writeln!(out, "  {u} [label=\"{u} ({})\"];", graph.priority(u)).unwrap();
    }
    write_edges(&mut out, graph, matching, None);
    out.push_str("}\n");
    out
}

/// Snapshot of a search forest.
pub fn forest_to_dot(view: &dyn ForestView, title: &str) -> String {
    let graph = view.graph();
    let mut out = String::new();
    writeln!(
        out,
        "graph forest {{\n  label=\"{}\";",
        title.replace('"', "'")
    )
    .unwrap();

    let blossoms = view.blossoms();
    let mut nested = vec![false; blossoms.len()];
    for b in blossoms {
        for &c in &b.children {
            nested[c] = true;
        }
    }
    let mut placed = vec![false; graph.n()];
    // Outermost blossoms first, each recursively containing its children.
    let mut stack: Vec<(usize, usize, bool)> = blossoms
        .iter()
        .filter(|b| !nested[b.id])
        .map(|b| (b.id, 1, true))
        .rev()
        .collect();
    while let Some((id, depth, open)) = stack.pop() {
        let indent = "  ".repeat(depth);
        if !open {
            writeln!(out, "{indent}}}").unwrap();
            continue;
        }
        writeln!(
            out,
            "{indent}subgraph cluster_b{id} {{\n{indent}  label=\"B{id}\";"
        )
        .unwrap();
        stack.push((id, depth, false));
        let children = &blossoms[id].children;
        let child_members: Vec<_> = children
            .iter()
            .flat_map(|&c| view.blossom_members(c))
            .collect();
        for x in view.blossom_members(id) {
            if !child_members.contains(&x) && !placed[x.index()] {
                placed[x.index()] = true;
                writeln!(out, "{indent}  {x};").unwrap();
            }
        }
        for &c in children.iter().rev() {
            stack.push((c, depth + 1, true));
        }
    }

    for u in graph.vertices() {
        let mark = match view.label(u) {
            Label::Even => "+",
            Label::Odd => "-",
            Label::Unreached => "",
        };
        writeln!(out, "  {u} [label=\"{u}{mark}\"];").unwrap();
    }
    write_edges(&mut out, graph, view.matching(), Some(view));
    out.push_str("}\n");
    out
}
