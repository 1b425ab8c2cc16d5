//! Lattice points, canonical nearest-neighbor edges and finite windows.

use crate::error::{Error, Result};
use crate::rat::{floor_i64, Rat};
use serde::{Deserialize, Serialize};

/// A point of the integer lattice. Dimension is carried by the
/// coordinate vector and must be consistent across one workspace.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn origin(d: usize) -> Self {
        LatticePoint(vec![0; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// ℓ1 norm, the sum of absolute coordinate values.
    pub fn l1_norm(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs()).sum()
    }

    pub fn l1_dist(&self, other: &LatticePoint) -> u64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.abs_diff(*b))
            .sum()
    }

    /// ℓ∞ norm; the boundary of the box `[-p, p]^d` is the shell where
    /// this equals `p`.
    pub fn linf_norm(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// The neighbor reached by one unit step along `axis` (negative step
    /// when `sign` is false).
    pub fn step(&self, axis: usize, sign: bool) -> LatticePoint {
        let mut c = self.0.clone();
        c[axis] += if sign { 1 } else { -1 };
        LatticePoint(c)
    }

    pub fn sub(&self, other: &LatticePoint) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }
}

/// The unique lattice point `p` with `v ∈ p + [0,1)^d`.
pub fn floor_lattice_point(v: &[Rat]) -> LatticePoint {
    LatticePoint(v.iter().map(floor_i64).collect())
}

/// Canonical nearest-neighbor edge: joins `base` and `base + ξ_axis`.
/// Every unordered nearest-neighbor pair maps to exactly one `Edge`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub base: LatticePoint,
    pub axis: usize,
}

impl Edge {
    pub fn new(base: LatticePoint, axis: usize) -> Self {
        Edge { base, axis }
    }

    /// Canonicalize an unordered adjacent pair; `None` if the points are
    /// not nearest neighbors.
    pub fn between(a: &LatticePoint, b: &LatticePoint) -> Option<Edge> {
        if a.dim() != b.dim() {
            return None;
        }
        let mut axis = None;
        for i in 0..a.dim() {
            match (a.0[i] - b.0[i]).abs() {
                0 => {}
                1 if axis.is_none() => axis = Some(i),
                _ => return None,
            }
        }
        let axis = axis?;
        let base = if a.0[axis] < b.0[axis] { a } else { b };
        Some(Edge::new(base.clone(), axis))
    }

    pub fn endpoints(&self) -> (LatticePoint, LatticePoint) {
        (self.base.clone(), self.base.step(self.axis, true))
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }
}

/// Axis-aligned box of lattice points, `lo ≤ hi` per axis. All engine
/// operations are relative to one window; it is the finite restriction
/// of the lattice that a `Configuration` assigns weights on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch {
                expected: lo.len(),
                got: hi.len(),
            });
        }
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::Malformed("window lo exceeds hi".into()));
        }
        Ok(Window { lo, hi })
    }

    /// `[-r, r]^d`.
    pub fn centered(d: usize, r: i64) -> Self {
        Window {
            lo: vec![-r; d],
            hi: vec![r; d],
        }
    }

    /// Smallest window containing all given points.
    pub fn bounding(points: &[LatticePoint]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptySet)?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for p in points {
            for i in 0..p.dim() {
                lo[i] = lo[i].min(p.0[i]);
                hi[i] = hi[i].max(p.0[i]);
            }
        }
        Ok(Window { lo, hi })
    }

    pub fn inflate(&self, m: i64) -> Self {
        Window {
            lo: self.lo.iter().map(|c| c - m).collect(),
            hi: self.hi.iter().map(|c| c + m).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn side(&self, axis: usize) -> i64 {
        self.hi[axis] - self.lo[axis] + 1
    }

    pub fn contains_point(&self, p: &LatticePoint) -> bool {
        p.dim() == self.dim()
            && p.0
                .iter()
                .enumerate()
                .all(|(i, c)| self.lo[i] <= *c && *c <= self.hi[i])
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        let (a, b) = e.endpoints();
        self.contains_point(&a) && self.contains_point(&b)
    }

    pub fn contains_window(&self, other: &Window) -> bool {
        self.dim() == other.dim()
            && (0..self.dim()).all(|i| self.lo[i] <= other.lo[i] && other.hi[i] <= self.hi[i])
    }

    pub fn vertex_count(&self) -> usize {
        (0..self.dim()).map(|i| self.side(i) as usize).product()
    }

    /// Lexicographic rank of a point; inverse of [`Window::point_at`].
    pub fn vertex_index(&self, p: &LatticePoint) -> Option<usize> {
        if !self.contains_point(p) {
            return None;
        }
        let mut idx = 0usize;
        for i in 0..self.dim() {
            idx = idx * self.side(i) as usize + (p.0[i] - self.lo[i]) as usize;
        }
        Some(idx)
    }

    pub fn point_at(&self, mut idx: usize) -> LatticePoint {
        let d = self.dim();
        let mut coords = vec![0i64; d];
        for i in (0..d).rev() {
            let s = self.side(i) as usize;
            coords[i] = self.lo[i] + (idx % s) as i64;
            idx /= s;
        }
        LatticePoint(coords)
    }

    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        (0..self.vertex_count()).map(move |i| self.point_at(i))
    }

    /// Every edge with both endpoints in the window, each exactly once,
    /// in deterministic axis-major order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for axis in 0..self.dim() {
            for p in self.points() {
                if p.0[axis] < self.hi[axis] {
                    out.push(Edge::new(p, axis));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let mut total = 0usize;
        for axis in 0..self.dim() {
            let mut c = 1usize;
            for i in 0..self.dim() {
                let s = self.side(i) as usize;
                c *= if i == axis { s - 1 } else { s };
            }
            total += c;
        }
        total
    }

    /// Deterministic rank of an in-window edge, matching [`Window::edges`] order.
    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        if !self.contains_edge(e) {
            return None;
        }
        let mut offset = 0usize;
        for axis in 0..e.axis {
            let mut c = 1usize;
            for i in 0..self.dim() {
                let s = self.side(i) as usize;
                c *= if i == axis { s - 1 } else { s };
            }
            offset += c;
        }
        // rank of base within the reduced box (side - 1 along the edge axis)
        let mut idx = 0usize;
        for i in 0..self.dim() {
            let s = if i == e.axis {
                self.side(i) as usize - 1
            } else {
                self.side(i) as usize
            };
            idx = idx * s + (e.base.0[i] - self.lo[i]) as usize;
        }
        Some(offset + idx)
    }

    /// Points with at least one coordinate on the window bounds.
    pub fn boundary_points(&self) -> Vec<LatticePoint> {
        self.points()
            .filter(|p| {
                (0..self.dim()).any(|i| p.0[i] == self.lo[i] || p.0[i] == self.hi[i])
            })
            .collect()
    }

    /// Minimum number of edges of any path from `x` to `y` that visits a
    /// vertex outside the window. Lower-bounds the length of every
    /// window-exiting path; used by the locality certificates.
    pub fn exit_steps(&self, x: &LatticePoint, y: &LatticePoint) -> u64 {
        let mut best: Option<u64> = None;
        for axis in 0..self.dim() {
            let rest: u64 = (0..self.dim())
                .filter(|i| *i != axis)
                .map(|i| x.0[i].abs_diff(y.0[i]))
                .sum();
            // exit across the high face: outside coordinate hi+1
            let hi_steps = (self.hi[axis] + 1 - x.0[axis]).unsigned_abs()
                + (self.hi[axis] + 1 - y.0[axis]).unsigned_abs()
                + rest;
            // exit across the low face: outside coordinate lo-1
            let lo_steps = (x.0[axis] - self.lo[axis] + 1).unsigned_abs()
                + (y.0[axis] - self.lo[axis] + 1).unsigned_abs()
                + rest;
            let m = hi_steps.min(lo_steps);
            best = Some(best.map_or(m, |b| b.min(m)));
        }
        best.unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn l1_norm_examples() {
        assert_eq!(LatticePoint::new(vec![0, 0]).l1_norm(), 0);
        assert_eq!(LatticePoint::new(vec![2, -3]).l1_norm(), 5);
        assert_eq!(LatticePoint::new(vec![1, 1, 1]).l1_norm(), 3);
    }

    #[test]
    fn floor_lattice_point_examples() {
        assert_eq!(
            floor_lattice_point(&[rat(5, 2), rat(0, 1)]),
            LatticePoint::new(vec![2, 0])
        );
        assert_eq!(
            floor_lattice_point(&[rat(3, 1), rat(0, 1)]),
            LatticePoint::new(vec![3, 0])
        );
        assert_eq!(
            floor_lattice_point(&[rat(-3, 10), rat(7, 10)]),
            LatticePoint::new(vec![-1, 0])
        );
    }

    #[test]
    fn window_edges_counts() {
        // unit square in d=2: 4 points, 4 edges
        let w = Window::new(vec![0, 0], vec![1, 1]).unwrap();
        assert_eq!(w.edges().len(), 4);
        assert_eq!(w.edge_count(), 4);
        // degenerate window: single point, no edges
        let w = Window::new(vec![2, 2], vec![2, 2]).unwrap();
        assert!(w.edges().is_empty());
        // [0,2]^2: 3x3 grid has 12 edges (2 per row/column, 3 rows + 3 columns)
        let w = Window::new(vec![0, 0], vec![2, 2]).unwrap();
        assert_eq!(w.edges().len(), 12);
    }

    #[test]
    fn edge_canonicalization() {
        let w = Window::new(vec![-2, -2], vec![2, 2]).unwrap();
        for e in w.edges() {
            let (a, b) = e.endpoints();
            assert_eq!(Edge::between(&a, &b), Some(e.clone()));
            assert_eq!(Edge::between(&b, &a), Some(e));
        }
        let p = LatticePoint::new(vec![0, 0]);
        let q = LatticePoint::new(vec![1, 1]);
        assert_eq!(Edge::between(&p, &q), None);
    }

    #[test]
    fn edge_indexing_roundtrip() {
        let w = Window::new(vec![-1, 0, 2], vec![2, 3, 4]).unwrap();
        let edges = w.edges();
        for (i, e) in edges.iter().enumerate() {
            assert_eq!(w.edge_index(e), Some(i));
        }
        assert_eq!(edges.len(), w.edge_count());
    }

    #[test]
    fn vertex_indexing_roundtrip() {
        let w = Window::new(vec![-2, 1], vec![1, 5]).unwrap();
        for (i, p) in w.points().enumerate() {
            assert_eq!(w.vertex_index(&p), Some(i));
            assert_eq!(w.point_at(i), p);
        }
    }

    #[test]
    fn exit_steps_basic() {
        let w = Window::centered(2, 3);
        let o = LatticePoint::origin(2);
        // leaving a radius-3 box from the center and coming back costs 8 steps
        assert_eq!(w.exit_steps(&o, &o), 8);
        let x = LatticePoint::new(vec![3, 0]);
        // cheapest exit: walk to the face next to x (4 steps), step back in (1)
        assert_eq!(w.exit_steps(&o, &x), 5);
    }
}
