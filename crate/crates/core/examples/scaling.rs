//! Time solves on random graphs with `m = 5n`, doubling `n` each step.
//!
//! ```bash
//! cargo run --release -p priority-matching --example scaling -- 500 1000 2000 4000 8000
//! ```

use priority_matching::bench::{growth_ratios, run_scaling, ScalingConfig, BENCH_HEADER};

fn main() {
    let sizes: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let mut config = ScalingConfig::default();
    if !sizes.is_empty() {
        config.sizes = sizes;
    }
    println!("{BENCH_HEADER}");
    let records = run_scaling(&config, |r| println!("{r}")).unwrap();
    for (w, ratio) in records.windows(2).zip(growth_ratios(&records)) {
        let n_ratio = w[1].n as f64 / w[0].n as f64;
        println!("# n x{n_ratio:.1}: time x{ratio:.2}");
    }
}
