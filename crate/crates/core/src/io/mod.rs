//! File formats, instance generation and Graphviz rendering.

pub mod dot;
pub mod format;
pub mod generate;

pub use dot::{forest_to_dot, matching_to_dot};
pub use format::{
    parse_graph, parse_matching, parse_vertex_set, render_graph, render_matching, verify_matching,
    MatchingFile, ParseError, ParseErrorKind, VerifyError,
};
pub use generate::{generate_bipartite, generate_random, GenerateError, PrioritySpec};
