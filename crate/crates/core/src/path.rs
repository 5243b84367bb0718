//! Augmenting paths in the original (unshrunken) graph and their validation.

use thiserror::Error;

use crate::graph::{Graph, Matching, MatchingError, Priority, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error(transparent)]
    Structure(#[from] MatchingError),
    #[error("path starts at vertex {vertex} of priority {found}, expected {expected}")]
    StartPriority {
        vertex: VertexId,
        found: Priority,
        expected: Priority,
    },
    #[error("path ends at matched vertex {vertex} of priority {found}, not below {target}")]
    EndPriority {
        vertex: VertexId,
        found: Priority,
        target: Priority,
    },
    #[error("path starts at vertex {0} outside the target set")]
    StartNotInSet(VertexId),
    #[error("path ends at matched vertex {0} inside the target set")]
    EndInSet(VertexId),
}

/// An alternating path `u0, ..., ut` starting at an unmatched vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugPath {
    vertices: Vec<VertexId>,
}

impl AugPath {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        AugPath { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Odd-length paths join two unmatched vertices and grow the matching.
    pub fn grows_matching(&self) -> bool {
        self.edge_count() % 2 == 1
    }

    pub fn reversed(&self) -> AugPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        AugPath { vertices }
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.vertices
    }
}

/// Checks that `path` is an `i`-augmenting path for `matching`: simple,
/// alternating, starting at an unmatched priority-`i` vertex, and, when its
/// far end is matched, ending at a vertex of priority strictly below `i`
/// (numerically greater).
pub fn validate_i_augmenting(
    graph: &Graph,
    matching: &Matching,
    target: Priority,
    path: &AugPath,
) -> Result<(), PathError> {
    matching.check_alternating(graph, path.vertices())?;
    let start = path.start();
    if graph.priority(start) != target {
        return Err(PathError::StartPriority {
            vertex: start,
            found: graph.priority(start),
            expected: target,
        });
    }
    let end = path.end();
    if matching.is_matched(end) && graph.priority(end) <= target {
        return Err(PathError::EndPriority {
            vertex: end,
            found: graph.priority(end),
            target,
        });
    }
    Ok(())
}

/// Two-priority form: starts unmatched inside `in_set`, and if the far end is
/// matched it lies outside `in_set`.
pub fn validate_set_augmenting(
    graph: &Graph,
    matching: &Matching,
    in_set: &[bool],
    path: &AugPath,
) -> Result<(), PathError> {
    matching.check_alternating(graph, path.vertices())?;
    if !in_set[path.start().index()] {
        return Err(PathError::StartNotInSet(path.start()));
    }
    let end = path.end();
    if matching.is_matched(end) && in_set[end.index()] {
        return Err(PathError::EndInSet(end));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ids: &[u32]) -> AugPath {
        AugPath::new(ids.iter().map(|&i| VertexId::new(i)).collect())
    }

    #[test]
    fn accepts_odd_and_even_paths() {
        let g = Graph::new(3, &[(1, 2), (2, 3)], &[1, 1, 2]).unwrap();
        let m = Matching::empty(&g);
        validate_i_augmenting(&g, &m, Priority::new(1), &p(&[1, 2])).unwrap();
        let m = Matching::from_edges(&g, &[1]).unwrap();
        validate_i_augmenting(&g, &m, Priority::new(1), &p(&[1, 2, 3])).unwrap();
        assert!(!p(&[1, 2, 3]).grows_matching());
    }

    #[test]
    fn rejects_bad_endpoints() {
        let g = Graph::new(3, &[(1, 2), (2, 3)], &[1, 1, 1]).unwrap();
        let m = Matching::from_edges(&g, &[1]).unwrap();
        assert!(matches!(
            validate_i_augmenting(&g, &m, Priority::new(1), &p(&[1, 2, 3])),
            Err(PathError::EndPriority { .. })
        ));
        let g = Graph::new(3, &[(1, 2), (2, 3)], &[2, 1, 1]).unwrap();
        let m = Matching::empty(&g);
        assert!(matches!(
            validate_i_augmenting(&g, &m, Priority::new(1), &p(&[1, 2])),
            Err(PathError::StartPriority { .. })
        ));
        assert_eq!(
            validate_set_augmenting(&g, &m, &[false, true, true], &p(&[1, 2])),
            Err(PathError::StartNotInSet(VertexId::new(1)))
        );
    }
}
