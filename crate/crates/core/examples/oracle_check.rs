//! Cross-check the solver against exhaustive enumeration on random graphs.
//!
//! ```bash
//! cargo run -p priority-matching --example oracle_check -- 500
//! ```

use priority_matching::io::{generate_random, PrioritySpec};
use priority_matching::oracle::summarize;
use priority_matching::{max_priority_matching, EnumerationBudget};

fn main() {
    let count: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(300);
    let budget = EnumerationBudget::default();
    let mut agree = 0;
    let mut matchings = 0;
    for seed in 0..count {
        let n = 2 + (seed % 9) as usize;
        let m = (seed as usize * 7 % 21).min(n * (n - 1) / 2);
        let g = generate_random(n, m, &PrioritySpec::Full, seed).unwrap();
        let summary = summarize(&g, &budget).unwrap();
        matchings += summary.matchings;
        let solved = max_priority_matching(&g);
        if solved.score == summary.best_score {
            agree += 1;
        } else {
            println!(
                "seed {seed}: solver {} oracle {}",
                solved.score, summary.best_score
            );
        }
    }
    println!("{agree}/{count} graphs agree ({matchings} matchings enumerated)");
}
