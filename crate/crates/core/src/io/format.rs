//! Text formats.
//!
//! Graph file:
//!
//! ```text
//! # comment
//! p mpm <n> <m>
//! v <id> <priority>     (optional; unlisted vertices get priority n)
//! e <u> <v>             (exactly m lines)
//! ```
//!
//! Matching file:
//!
//! ```text
//! s <d1> <d2> ... <dn>
//! m <u> <v>             (one per matching edge, u < v, ascending u)
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Matching, VertexId};
use crate::score::{priority_score, ScoreVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p mpm <n> <m>` header")]
    MissingHeader,
    #[error("malformed header: {0}")]
    BadHeader(String),
    #[error("expected {expected}, found `{found}`")]
    BadToken {
        expected: &'static str,
        found: String,
    },
    #[error("unknown record type `{0}`")]
    UnknownRecord(String),
    #[error("unexpected trailing token `{0}`")]
    TrailingToken(String),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("priority {priority} out of range 1..={n}")]
    PriorityOutOfRange { priority: u32, n: usize },
    #[error("priority of vertex {0} given twice")]
    DuplicatePriority(u32),
    #[error("header declares {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(u32, u32),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Non-blank, non-comment lines as (line number, tokens).
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<(usize, &str)>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, tokens(line)))
        }
    })
}

struct Cursor<'a> {
    line: usize,
    toks: &'a [(usize, &'a str)],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column,
            kind,
        }
    }

    fn end_column(&self) -> usize {
        self.toks.last().map(|(c, t)| c + t.len()).unwrap_or(1)
    }

    fn number(&mut self, expected: &'static str) -> Result<(usize, u32), ParseError> {
        let Some(&(col, tok)) = self.toks.get(self.pos) else {
            return Err(self.err(
                self.end_column(),
                ParseErrorKind::BadToken {
                    expected,
                    found: String::new(),
                },
            ));
        };
        self.pos += 1;
        tok.parse::<u32>().map(|v| (col, v)).map_err(|_| {
            self.err(
                col,
                ParseErrorKind::BadToken {
                    expected,
                    found: tok.to_string(),
                },
            )
        })
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.toks.get(self.pos) {
            Some(&(col, tok)) => Err(self.err(col, ParseErrorKind::TrailingToken(tok.to_string()))),
            None => Ok(()),
        }
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut recs = records(text);
    let Some((hline, htoks)) = recs.next() else {
        return Err(ParseError {
            line: 1,
            column: 1,
            kind: ParseErrorKind::MissingHeader,
        });
    };
    if htoks.first().map(|t| t.1) != Some("p") {
        return Err(ParseError {
            line: hline,
            column: htoks[0].0,
            kind: ParseErrorKind::MissingHeader,
        });
    }
    if htoks.get(1).map(|t| t.1) != Some("mpm") {
        return Err(ParseError {
            line: hline,
            column: htoks.get(1).map_or(2, |t| t.0),
            kind: ParseErrorKind::BadHeader("expected format tag `mpm`".into()),
        });
    }
    let mut cur = Cursor {
        line: hline,
        toks: &htoks,
        pos: 2,
    };
    let (ncol, n) = cur.number("vertex count")?;
    let (_, m) = cur.number("edge count")?;
    cur.finish()?;
    if n == 0 {
        return Err(cur.err(
            ncol,
            ParseErrorKind::BadHeader("vertex count must be positive".into()),
        ));
    }
    let n = n as usize;
    let m = m as usize;

    let mut priorities: Vec<Option<u32>> = vec![None; n];
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = hline;
    for (line, toks) in recs {
        last_line = line;
        let mut cur = Cursor {
            line,
            toks: &toks,
            pos: 1,
        };
        let vertex = |cur: &Cursor, (col, id): (usize, u32)| {
            if id == 0 || id as usize > n {
                Err(cur.err(col, ParseErrorKind::VertexOutOfRange { vertex: id, n }))
            } else {
                Ok(id)
            }
        };
        match toks[0].1 {
            "v" => {
                let idc = cur.number("vertex id")?;
                let id = vertex(&cur, idc)?;
                let (pcol, p) = cur.number("priority")?;
                cur.finish()?;
                if p == 0 || p as usize > n {
                    return Err(
                        cur.err(pcol, ParseErrorKind::PriorityOutOfRange { priority: p, n })
                    );
                }
                let slot = &mut priorities[id as usize - 1];
                if slot.is_some() {
                    return Err(cur.err(idc.0, ParseErrorKind::DuplicatePriority(id)));
                }
                *slot = Some(p);
            }
            "e" => {
                let uc = cur.number("vertex id")?;
                let u = vertex(&cur, uc)?;
                let vc = cur.number("vertex id")?;
                let v = vertex(&cur, vc)?;
                cur.finish()?;
                if u == v {
                    return Err(cur.err(uc.0, ParseErrorKind::SelfLoop(u)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(cur.err(uc.0, ParseErrorKind::DuplicateEdge(u, v)));
                }
                if edges.len() == m {
                    return Err(cur.err(
                        1,
                        ParseErrorKind::EdgeCountMismatch {
                            expected: m,
                            found: m + 1,
                        },
                    ));
                }
                edges.push((u, v));
            }
            other => {
                return Err(cur.err(toks[0].0, ParseErrorKind::UnknownRecord(other.to_string())));
            }
        }
    }
    if edges.len() != m {
        return Err(ParseError {
            line: last_line,
            column: 1,
            kind: ParseErrorKind::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            },
        });
    }
    let priorities: Vec<u32> = priorities
        .into_iter()
        .map(|p| p.unwrap_or(n as u32))
        .collect();
    Graph::new(n, &edges, &priorities).map_err(|e| ParseError {
        line: hline,
        column: 1,
        kind: e.into(),
    })
}

/// Header, one `v` line per vertex, then the edges in index order.
pub fn render_graph(graph: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p mpm {} {}", graph.n(), graph.m()).unwrap();
    for u in graph.vertices() {
        writeln!(out, "v {} {}", u, graph.priority(u)).unwrap();
    }
    for &(u, v) in graph.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn render_matching(graph: &Graph, matching: &Matching) -> String {
    let mut out = String::new();
    writeln!(out, "s {}", priority_score(graph, matching)).unwrap();
    for (u, v) in matching.pairs() {
        writeln!(out, "m {u} {v}").unwrap();
    }
    out
}

/// Parsed but unvalidated matching file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingFile {
    pub score: Vec<u32>,
    pub pairs: Vec<(u32, u32)>,
}

pub fn parse_matching(text: &str) -> Result<MatchingFile, ParseError> {
    let mut score = None;
    let mut pairs = Vec::new();
    for (line, toks) in records(text) {
        let mut cur = Cursor {
            line,
            toks: &toks,
            pos: 1,
        };
        match toks[0].1 {
            "s" if score.is_none() => {
                let mut digits = Vec::with_capacity(toks.len() - 1);
                while cur.pos < toks.len() {
                    digits.push(cur.number("score digit")?.1);
                }
                score = Some(digits);
            }
            "m" => {
                let (_, u) = cur.number("vertex id")?;
                let (_, v) = cur.number("vertex id")?;
                cur.finish()?;
                pairs.push((u, v));
            }
            other => {
                return Err(cur.err(toks[0].0, ParseErrorKind::UnknownRecord(other.to_string())));
            }
        }
    }
    let score = score.ok_or(ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::BadToken {
            expected: "`s` score line",
            found: String::new(),
        },
    })?;
    Ok(MatchingFile { score, pairs })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(u32),
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(u32, u32),
    #[error("vertex {0} is matched twice")]
    SharedVertex(u32),
    #[error("score line says `{claimed}`, matching scores `{actual}`")]
    ScoreMismatch {
        claimed: String,
        actual: ScoreVector,
    },
}

/// Checks that the file describes a matching of `graph` and that its score
/// line is correct. Returns the matching.
pub fn verify_matching(graph: &Graph, file: &MatchingFile) -> Result<Matching, VerifyError> {
    let n = graph.n() as u32;
    let mut pairs = Vec::with_capacity(file.pairs.len());
    for &(u, v) in &file.pairs {
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(VerifyError::VertexOutOfRange(x));
            }
        }
        pairs.push((VertexId::new(u), VertexId::new(v)));
    }
    let mut edges = Vec::with_capacity(pairs.len());
    for &(u, v) in &pairs {
        edges.push(
            graph
                .find_edge(u, v)
                .ok_or(VerifyError::NotAnEdge(u.get(), v.get()))?,
        );
    }
    let matching = Matching::from_edges(graph, &edges).map_err(|e| match e {
        crate::graph::MatchingError::SharedVertex(x) => VerifyError::SharedVertex(x.get()),
        other => unreachable!("edge ids come from the graph: {other}"),
    })?;
    let actual = priority_score(graph, &matching);
    if actual.digits() != file.score.as_slice() {
        return Err(VerifyError::ScoreMismatch {
            claimed: file
                .score
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            actual,
        });
    }
    Ok(matching)
}

/// Whitespace-separated vertex ids; `#` starts a comment line.
pub fn parse_vertex_set(text: &str, n: usize) -> Result<Vec<VertexId>, ParseError> {
    let mut out = Vec::new();
    for (line, toks) in records(text) {
        let mut cur = Cursor {
            line,
            toks: &toks,
            pos: 0,
        };
        while cur.pos < toks.len() {
            let (col, id) = cur.number("vertex id")?;
            if id == 0 || id as usize > n {
                return Err(cur.err(col, ParseErrorKind::VertexOutOfRange { vertex: id, n }));
            }
            out.push(VertexId::new(id));
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
