//! Solve a small graph and compare against a plain maximum-size matching.
//!
//! ```bash
//! cargo run -p priority-matching --example solve_basic
//! ```

use priority_matching::{max_priority_matching, max_size_matching, Graph};

fn main() {
    // A 6-cycle with a chord; vertex 4 is the most important.
    let edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 5)];
    let priorities = [3, 2, 3, 1, 2, 3];
    let g = Graph::new(6, &edges, &priorities).expect("valid graph");

    let report = max_priority_matching(&g);
    println!("priority score: {}", report.score);
    for (u, v) in report.matching.pairs() {
        println!(
            "  {u} - {v}   (priorities {} and {})",
            g.priority(u),
            g.priority(v)
        );
    }
    println!(
        "{} searches, {} augmentations, {} blossoms",
        report.searches,
        report.total_augmentations(),
        report.blossoms
    );

    let plain = max_size_matching(&g);
    println!(
        "maximum size {} (priority matching has {})",
        plain.matching.len(),
        report.matching.len()
    );
}
