//! Paths of consecutive nearest-neighbor edges.

use crate::error::{Error, Result};
use crate::lattice::{Edge, LatticePoint};
use serde::{Deserialize, Serialize};

/// A path given by its vertex sequence; consecutive vertices differ by
/// exactly one unit step. The self-avoiding flag is verified at
/// construction (only the two endpoints may coincide).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    vertices: Vec<LatticePoint>,
    self_avoiding: bool,
    closed: bool,
}

impl PathRecord {
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("path needs at least one vertex".into()));
        }
        for w in vertices.windows(2) {
            if Edge::between(&w[0], &w[1]).is_none() {
                return Err(Error::InvalidPath(format!(
                    "{:?} and {:?} are not nearest neighbors",
                    w[0], w[1]
                )));
            }
        }
        let closed = vertices.len() > 1 && vertices[0] == vertices[vertices.len() - 1];
        let interior = if closed {
            &vertices[..vertices.len() - 1]
        } else {
            &vertices[..]
        };
        let mut seen = std::collections::HashSet::new();
        let self_avoiding = interior.iter().all(|v| seen.insert(v.clone()));
        Ok(PathRecord {
            vertices,
            self_avoiding,
            closed,
        })
    }

    /// Straight run of `len` edges from `start` along `axis` (backwards
    /// when `sign` is false).
    pub fn axis_segment(start: LatticePoint, axis: usize, len: u64, sign: bool) -> Self {
        let mut vertices = vec![start];
        for _ in 0..len {
            let last = vertices.last().unwrap().clone();
            vertices.push(last.step(axis, sign));
        }
        PathRecord::new(vertices).expect("axis segment is always a valid path")
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn first(&self) -> &LatticePoint {
        &self.vertices[0]
    }

    pub fn last(&self) -> &LatticePoint {
        &self.vertices[self.vertices.len() - 1]
    }

    pub fn len_edges(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_self_avoiding(&self) -> bool {
        self.self_avoiding
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.vertices
            .windows(2)
            .map(|w| Edge::between(&w[0], &w[1]).expect("validated at construction"))
            .collect()
    }

    /// Contiguous subpath over vertex indices `i..=j`.
    pub fn subpath(&self, i: usize, j: usize) -> Result<PathRecord> {
        if i > j || j >= self.vertices.len() {
            return Err(Error::InvalidPath("subpath indices out of range".into()));
        }
        PathRecord::new(self.vertices[i..=j].to_vec())
    }

    pub fn reversed(&self) -> PathRecord {
        let mut v = self.vertices.clone();
        v.reverse();
        PathRecord::new(v).expect("reversal preserves validity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> LatticePoint {
        LatticePoint::new(c.to_vec())
    }

    #[test]
    fn construction_and_flags() {
        let path = PathRecord::new(vec![p(&[0, 0]), p(&[1, 0]), p(&[1, 1])]).unwrap();
        assert!(path.is_self_avoiding());
        assert!(!path.is_closed());
        assert_eq!(path.len_edges(), 2);

        let square = PathRecord::new(vec![
            p(&[0, 0]),
            p(&[1, 0]),
            p(&[1, 1]),
            p(&[0, 1]),
            p(&[0, 0]),
        ])
        .unwrap();
        assert!(square.is_closed());
        assert!(square.is_self_avoiding());

        let revisit =
            PathRecord::new(vec![p(&[0, 0]), p(&[1, 0]), p(&[0, 0]), p(&[0, 1])]).unwrap();
        assert!(!revisit.is_self_avoiding());

        assert!(PathRecord::new(vec![p(&[0, 0]), p(&[1, 1])]).is_err());
        assert!(PathRecord::new(vec![]).is_err());
    }

    #[test]
    fn axis_segment_endpoints() {
        let s = PathRecord::axis_segment(p(&[3, 0]), 0, 15, true);
        assert_eq!(s.first(), &p(&[3, 0]));
        assert_eq!(s.last(), &p(&[18, 0]));
        assert_eq!(s.len_edges(), 15);
        let back = PathRecord::axis_segment(p(&[-3, 0]), 0, 2, false);
        assert_eq!(back.last(), &p(&[-5, 0]));
    }

    #[test]
    fn single_vertex_path() {
        let single = PathRecord::new(vec![p(&[2, 2])]).unwrap();
        assert_eq!(single.len_edges(), 0);
        assert!(single.edges().is_empty());
        assert!(single.is_self_avoiding());
    }
}
