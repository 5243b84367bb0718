//! Write a graph file, read it back, solve, and verify the matching file.
//!
//! ```bash
//! cargo run -p priority-matching --example file_round_trip
//! ```

use priority_matching::io::{
    generate_random, parse_graph, parse_matching, render_graph, render_matching, verify_matching,
    PrioritySpec,
};
use priority_matching::max_priority_matching;

fn main() {
    let spec: PrioritySpec = "weights:1=1,2=2,3=4".parse().unwrap();
    let g = generate_random(8, 12, &spec, 3).unwrap();
    let text = render_graph(&g);
    print!("{text}");

    let back = parse_graph(&text).unwrap();
    assert_eq!(back, g);

    let out = render_matching(&back, &max_priority_matching(&back).matching);
    println!("--");
    print!("{out}");

    let file = parse_matching(&out).unwrap();
    let m = verify_matching(&back, &file).unwrap();
    println!("-- verified {} edges", m.len());

    let tampered = out.replacen("s ", "s 9 ", 1);
    let err = verify_matching(&back, &parse_matching(&tampered).unwrap()).unwrap_err();
    println!("tampered score rejected: {err}");
}
