#![allow(dead_code)]

use priority_matching::{Graph, Matching, VertexId};

pub fn v(id: u32) -> VertexId {
    VertexId::new(id)
}

const LETTERS: &str = "abcdefghijkm";

/// Vertex named by a letter of the blossom example (`l` is skipped).
pub fn letter(c: char) -> VertexId {
    let pos = LETTERS
        .find(c)
        .unwrap_or_else(|| panic!("no vertex named {c}"));
    v(pos as u32 + 1)
}

pub fn word(s: &str) -> Vec<VertexId> {
    s.chars().map(letter).collect()
}

pub fn spell(path: &[VertexId]) -> String {
    path.iter()
        .map(|x| LETTERS.as_bytes()[x.index()] as char)
        .collect()
}

/// Two trees rooted at `a` and `h`, each holding one odd cycle. Vertices in
/// `S` get priority 1, `b` and `i` priority 2; with `d_in_set == false`, `d`
/// drops to priority 2 as well.
pub fn blossom_example(d_in_set: bool) -> (Graph, Matching) {
    let edges: Vec<(u32, u32)> = [
        "ab", "bc", "cd", "cf", "de", "dg", "eg", "fg", "fh", "gk", "hi", "ij", "jk", "jm", "km",
    ]
    .iter()
    .map(|e| {
        let w = word(e);
        (w[0].get(), w[1].get())
    })
    .collect();
    let mut priorities = vec![1; 12];
    for c in ['b', 'i'] {
        priorities[letter(c).index()] = 2;
    }
    if !d_in_set {
        priorities[letter('d').index()] = 2;
    }
    let graph = Graph::new(12, &edges, &priorities).unwrap();
    let pairs: Vec<_> = ["bc", "de", "fg", "km", "ij"]
        .iter()
        .map(|e| {
            let w = word(e);
            (w[0], w[1])
        })
        .collect();
    let matching = Matching::from_pairs(&graph, &pairs).unwrap();
    (graph, matching)
}

/// Every edge subset of `K_n`, as edge lists.
pub fn all_graphs(n: u32) -> impl Iterator<Item = Vec<(u32, u32)>> {
    let pairs: Vec<(u32, u32)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |w| (u, w)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect()
    })
}
