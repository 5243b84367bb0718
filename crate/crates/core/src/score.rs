//! Priority scores: digit `i` counts the matched vertices of priority `i + 1`.
//!
//! Scores compare lexicographically with the priority-1 digit most
//! significant. They are kept as digit vectors rather than packed integers
//! since the base-n numeral overflows machine words for all but tiny graphs.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Matching, Priority};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot compare scores of length {0} and {1}")]
pub struct LengthMismatch(pub usize, pub usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScoreVector {
    digits: Vec<u32>,
}

impl ScoreVector {
    pub fn zeros(len: usize) -> Self {
        ScoreVector {
            digits: vec![0; len],
        }
    }

    pub fn from_digits(digits: Vec<u32>) -> Self {
        ScoreVector { digits }
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digit(&self, p: Priority) -> u32 {
        self.digits[p.index()]
    }

    /// Total matched vertices.
    pub fn total(&self) -> u64 {
        self.digits.iter().map(|&d| d as u64).sum()
    }

    /// Lexicographic comparison; scores of different lengths are incomparable.
    pub fn compare(&self, other: &ScoreVector) -> Result<Ordering, LengthMismatch> {
        if self.len() != other.len() {
            return Err(LengthMismatch(self.len(), other.len()));
        }
        Ok(self.digits.cmp(&other.digits))
    }

    /// The first `i` digits.
    pub fn i_score(&self, i: Priority) -> ScoreVector {
        let i = (i.get() as usize).min(self.len());
        ScoreVector {
            digits: self.digits[..i].to_vec(),
        }
    }

    /// Renders digits without separators, or `None` if any digit exceeds 9.
    pub fn compact(&self) -> Option<String> {
        self.digits
            .iter()
            .map(|&d| char::from_digit(d, 10))
            .collect()
    }
}

/// Space-separated digits.
impl fmt::Display for ScoreVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.digits.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

pub fn priority_score(graph: &Graph, matching: &Matching) -> ScoreVector {
    let mut digits = vec![0; graph.n()];
    for u in graph.vertices().filter(|&u| matching.is_matched(u)) {
        digits[graph.priority(u).index()] += 1;
    }
    ScoreVector { digits }
}

/// Lexicographic comparison of two scores.
pub fn compare(a: &ScoreVector, b: &ScoreVector) -> Result<Ordering, LengthMismatch> {
    a.compare(b)
}
