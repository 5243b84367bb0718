//! Record a DOT snapshot of the search forest after every event.
//!
//! ```bash
//! cargo run -p priority-matching --example trace_to_dot -- frames
//! for f in frames/*.dot; do dot -Tsvg "$f" -o "${f%.dot}.svg"; done
//! ```

use std::fs;
use std::path::PathBuf;

use priority_matching::io::{forest_to_dot, matching_to_dot};
use priority_matching::{
    max_priority_matching, BlossomSearch, ForestView, Graph, Matching, Observer, Priority,
    SearchEvent, VertexId,
};

struct Frames {
    dir: PathBuf,
    count: usize,
}

impl Observer for Frames {
    fn on_event(&mut self, event: &SearchEvent, forest: &dyn ForestView) {
        self.count += 1;
        let file = self.dir.join(format!("step-{:03}.dot", self.count));
        fs::write(file, forest_to_dot(forest, &event.to_string())).unwrap();
        println!("{:3} {event}", self.count);
    }
}

fn main() {
    let dir = PathBuf::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "trace-frames".into()),
    );
    fs::create_dir_all(&dir).unwrap();

    // A 5-cycle through the root 1 with 2-3 and 4-5 matched, plus a
    // low-priority pendant 6 on vertex 3.
    let g = Graph::new(
        6,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (3, 6)],
        &[1, 1, 1, 1, 1, 2],
    )
    .unwrap();
    let v = VertexId::new;
    let m = Matching::from_pairs(&g, &[(v(2), v(3)), (v(4), v(5))]).unwrap();

    let mut frames = Frames {
        dir: dir.clone(),
        count: 0,
    };
    let mut search = BlossomSearch::new(&g, &m, Priority::HIGHEST);
    let path = search
        .run_observed(&mut frames)
        .expect("path through the blossom");
    println!(
        "path {:?}",
        path.vertices().iter().map(|x| x.get()).collect::<Vec<_>>()
    );

    let report = max_priority_matching(&g);
    fs::write(dir.join("final.dot"), matching_to_dot(&g, &report.matching)).unwrap();
    println!("{} frames written to {}", frames.count, dir.display());
}
