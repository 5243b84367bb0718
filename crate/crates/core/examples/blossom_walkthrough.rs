//! Drive a single search edge by edge and watch two blossoms form.
//!
//! Vertices are named by letters. Trees grow from `a` and `h`; the edge
//! `eg` closes the odd cycle `c d e g f` and `mj` closes `j k m`. After that,
//! `fh` or `kg` joins the two trees.
//!
//! ```bash
//! cargo run -p priority-matching --example blossom_walkthrough
//! ```

use priority_matching::{
    BlossomSearch, EventLog, ForestView, Graph, Matching, Priority, Step, VertexId,
};

const NAMES: &str = "abcdefghijkm";

fn id(c: char) -> VertexId {
    VertexId::new(NAMES.find(c).unwrap() as u32 + 1)
}

fn name(x: VertexId) -> char {
    NAMES.as_bytes()[x.index()] as char
}

fn spell(path: &[VertexId]) -> String {
    path.iter().map(|&x| name(x)).collect()
}

fn example(low: &str) -> (Graph, Matching) {
    let edges: Vec<(u32, u32)> = "ab bc cd cf de dg eg fg fh gk hi ij jk jm km"
        .split(' ')
        .map(|e| {
            let mut c = e.chars();
            (id(c.next().unwrap()).get(), id(c.next().unwrap()).get())
        })
        .collect();
    let priorities: Vec<u32> = NAMES
        .chars()
        .map(|c| if low.contains(c) { 2 } else { 1 })
        .collect();
    let g = Graph::new(12, &edges, &priorities).unwrap();
    let pairs: Vec<_> = ["bc", "de", "fg", "km", "ij"]
        .iter()
        .map(|e| {
            let mut c = e.chars();
            (id(c.next().unwrap()), id(c.next().unwrap()))
        })
        .collect();
    let m = Matching::from_pairs(&g, &pairs).unwrap();
    (g, m)
}

fn play(search: &mut BlossomSearch<'_>, log: &mut EventLog, script: &[&str]) -> Option<String> {
    for edge in script {
        let mut c = edge.chars();
        let (u, v) = (id(c.next().unwrap()), id(c.next().unwrap()));
        match search.select_observed(u, v, log).expect("edge is eligible") {
            Step::Found(p) => return Some(spell(p.vertices())),
            Step::Continue(_) | Step::Exhausted => {}
        }
    }
    None
}

fn main() {
    let (g, m) = example("bi");
    let build = ["ab", "cd", "cf", "hi", "jk", "hf", "gd", "gk", "eg", "mj"];

    let mut log = EventLog::default();
    let mut search = BlossomSearch::new(&g, &m, Priority::HIGHEST);
    play(&mut search, &mut log, &build);
    for b in search.blossoms() {
        println!(
            "blossom {} base {} cycle {}",
            b.id,
            name(b.base),
            spell(&search.blossom_members(b.id))
        );
    }
    for shrunken in ["abch", "abcjih"] {
        let ids: Vec<_> = shrunken.chars().map(id).collect();
        let full = search.expand_path(&ids).unwrap();
        println!(
            "shrunken {shrunken:>6} expands to {}",
            spell(full.vertices())
        );
    }
    let path = play(&mut search, &mut log, &["fh"]).unwrap();
    println!("edge fh finds {path}");

    let mut search = BlossomSearch::new(&g, &m, Priority::HIGHEST);
    let path = play(
        &mut search,
        &mut EventLog::default(),
        &[&build[..], &["kg"]].concat(),
    )
    .unwrap();
    println!("edge kg finds {path}");

    println!("\nevent log of the first run:");
    for line in &log.lines {
        println!("  {line}");
    }

    // With d demoted, closing the first cycle exposes d as an endpoint.
    let (g, m) = example("bid");
    let mut search = BlossomSearch::new(&g, &m, Priority::HIGHEST);
    let path = play(
        &mut search,
        &mut EventLog::default(),
        &["ab", "cd", "cf", "eg"],
    )
    .unwrap();
    println!("\nwith d demoted, edge eg finds {path}");
}
