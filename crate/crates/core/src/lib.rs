//! Maximum priority matchings in general undirected graphs.
//!
//! Every vertex carries a priority in `1..=n`, 1 being the highest. The
//! priority score of a matching counts matched vertices per priority class;
//! scores compare lexicographically, highest class first. A maximum priority
//! matching maximizes that score, and is in particular a maximum
//! cardinality matching.
//!
//! [`max_priority_matching`] sweeps the priority classes from the top. For
//! each class `i` it repeatedly searches for an `i`-augmenting path (an
//! alternating path from an unmatched priority-`i` vertex that either ends
//! unmatched or ends at a matched vertex of lower priority) and flips it.
//! Each search runs in near-linear time, giving `O(mn)` overall.
//!
//! ```
//! use priority_matching::{max_priority_matching, Graph};
//!
//! // Path 1-2-3: vertices 1 and 3 have priority 1, but only one of them
//! // can be matched.
//! let g = Graph::new(3, &[(1, 2), (2, 3)], &[1, 2, 1]).unwrap();
//! let report = max_priority_matching(&g);
//! assert_eq!(report.score.digits(), &[1, 1, 0]);
//! ```
//!
//! Runnable examples live in `examples/`:
//!
//! ```bash
//! cargo run -p priority-matching --example solve_basic
//! cargo run -p priority-matching --example two_priority
//! cargo run -p priority-matching --example blossom_walkthrough
//! cargo run -p priority-matching --example bipartite_search
//! cargo run -p priority-matching --example oracle_check
//! cargo run -p priority-matching --example file_round_trip
//! cargo run -p priority-matching --example trace_to_dot
//! cargo run --release -p priority-matching --example scaling
//! ```

pub mod bench;
pub mod bipartite;
pub mod blossom;
pub mod driver;
mod dsu;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod path;
pub mod score;
pub mod trace;

pub use bipartite::{bipartite_augmenting_path, BipartiteSearch};
pub use blossom::{
    find_i_augmenting_path, Blossom, BlossomSearch, PropertyViolation, SearchError, Step,
};
pub use driver::{
    bipartite_two_priority_matching, max_priority_matching, max_priority_matching_observed,
    max_size_matching, two_priority_matching, SolveReport,
};
pub use graph::{
    is_valid_matching, EdgeId, Graph, GraphError, Matching, MatchingError, Priority, VertexId,
};
pub use oracle::{oracle_best_score, oracle_has_i_augmenting_path, EnumerationBudget, OracleError};
pub use path::{validate_i_augmenting, validate_set_augmenting, AugPath, PathError};
pub use score::{compare, priority_score, ScoreVector};
pub use trace::{EdgeCase, EventLog, ForestView, Label, Observer, SearchEvent};
