//! The bipartite search grows plain alternating trees from the unmatched
//! members of `S`. On bipartite input it agrees with the blossom search.
//!
//! ```bash
//! cargo run -p priority-matching --example bipartite_search
//! ```

use priority_matching::io::{generate_bipartite, PrioritySpec};
use priority_matching::{
    bipartite_two_priority_matching, two_priority_matching, BipartiteSearch, Graph, Matching,
    VertexId,
};

fn main() {
    // Left side 1..=3, right side 4..=6.
    let g = Graph::uniform(6, &[(1, 4), (1, 5), (2, 4), (3, 5), (3, 6)]).unwrap();
    let m = Matching::from_pairs(&g, &[(VertexId::new(1), VertexId::new(4))]).unwrap();
    let set = [VertexId::new(2), VertexId::new(6)];

    let mut search = BipartiteSearch::new(&g, &m, &set).unwrap();
    let path = search.run_traced(&mut |event| println!("  {event}"));
    match path {
        Some(p) => println!(
            "augmenting path {:?}",
            p.vertices().iter().map(|x| x.get()).collect::<Vec<_>>()
        ),
        None => println!("no augmenting path"),
    }

    let mut disagreements = 0;
    for seed in 0..200 {
        let g = generate_bipartite(5, 6, 0.4, &PrioritySpec::Uniform(vec![1]), seed).unwrap();
        let set: Vec<VertexId> = g.vertices().filter(|x| x.get() % 3 == 0).collect();
        let a = bipartite_two_priority_matching(&g, &set).unwrap();
        let b = two_priority_matching(&g, &set);
        if a.score != b.score || b.blossoms != 0 {
            disagreements += 1;
        }
    }
    println!("200 random bipartite graphs, {disagreements} disagreements");
}
