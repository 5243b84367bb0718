//! Two priority classes: match as many vertices of `S` as possible, then
//! as many vertices overall.
//!
//! ```bash
//! cargo run -p priority-matching --example two_priority
//! ```

use priority_matching::{two_priority_matching, Graph, VertexId};

fn main() {
    // Two triangles joined by a path; the set holds one vertex per triangle
    // plus the middle of the path.
    let edges = [
        (1, 2),
        (2, 3),
        (3, 1),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 6),
    ];
    let g = Graph::uniform(8, &edges).expect("valid graph");
    let set: Vec<VertexId> = [1, 4, 7].into_iter().map(VertexId::new).collect();

    let report = two_priority_matching(&g, &set);
    let covered = set
        .iter()
        .filter(|&&x| report.matching.is_matched(x))
        .count();
    println!(
        "matched {covered} of {} set vertices, {} edges in total",
        set.len(),
        report.matching.len()
    );
    for x in &set {
        match report.matching.mate(*x) {
            Some(m) => println!("  {x} -> {m}"),
            None => println!("  {x} unmatched"),
        }
    }
    let d = report.score.digits();
    println!("matched vertices in S: {}, outside S: {}", d[0], d[1]);
}
