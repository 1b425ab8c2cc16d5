//! Exact single-source shortest paths and geodesic counting.
//!
//! The search is generic over the cost domain: `BigRational` always
//! works; when every weight shares a small common denominator the
//! callers scale to `i128` for speed. Both domains are exact.

use super::graph::WindowGraph;
use crate::rat::Rat;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Exact totally-ordered cost domain.
pub trait Cost: Clone + Ord {
    fn zero() -> Self;
    fn plus(&self, other: &Self) -> Self;
}

impl Cost for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
}

impl Cost for i128 {
    fn zero() -> Self {
        0
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("integer cost overflow")
    }
}

/// Distances from one source plus the settle order (nondecreasing cost).
pub struct ShortestPaths<C> {
    pub dist: Vec<Option<C>>,
    pub order: Vec<u32>,
}

pub fn dijkstra<C: Cost>(g: &WindowGraph, weights: &[C], src: u32) -> ShortestPaths<C> {
    let n = g.vertex_count();
    let mut dist: Vec<Option<C>> = vec![None; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut heap: BinaryHeap<Reverse<(C, u32)>> = BinaryHeap::new();
    dist[src as usize] = Some(C::zero());
    heap.push(Reverse((C::zero(), src)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u as usize] {
            continue;
        }
        done[u as usize] = true;
        order.push(u);
        for &(v, e) in g.neighbors(u) {
            if done[v as usize] {
                continue;
            }
            let nd = d.plus(&weights[e as usize]);
            let better = match &dist[v as usize] {
                None => true,
                Some(old) => nd < *old,
            };
            if better {
                dist[v as usize] = Some(nd.clone());
                heap.push(Reverse((nd, v)));
            }
        }
    }
    ShortestPaths { dist, order }
}

/// Number of shortest paths from the source to every vertex, by the
/// tight-edge relation `dist(u) + w(u,v) = dist(v)`. Weights must be
/// strictly positive so the settle order is a topological order of the
/// tight DAG.
pub fn count_geodesics<C: Cost>(
    g: &WindowGraph,
    weights: &[C],
    sp: &ShortestPaths<C>,
    src: u32,
) -> Vec<BigUint> {
    let n = g.vertex_count();
    let mut counts = vec![BigUint::zero(); n];
    counts[src as usize] = BigUint::one();
    for &u in &sp.order {
        let du = match &sp.dist[u as usize] {
            Some(d) => d.clone(),
            None => continue,
        };
        if counts[u as usize].is_zero() {
            continue;
        }
        for &(v, e) in g.neighbors(u) {
            if let Some(dv) = &sp.dist[v as usize] {
                if du.plus(&weights[e as usize]) == *dv {
                    let add = counts[u as usize].clone();
                    counts[v as usize] += add;
                }
            }
        }
    }
    counts
}

/// Scale rational weights to a shared integer domain when the common
/// denominator and magnitudes are small enough for `i128` arithmetic
/// with ample headroom. Returns the scaled weights and the denominator.
pub fn integerize(weights: &[Rat], extra: &[Rat]) -> Option<(Vec<i128>, Vec<i128>, BigInt)> {
    let mut den = BigInt::one();
    for w in weights.iter().chain(extra.iter()) {
        den = num_integer::lcm(den, w.denom().clone());
        if den.bits() > 48 {
            return None;
        }
    }
    let lift = |r: &Rat| -> Option<i128> {
        let scaled = r.numer() * (&den / r.denom());
        scaled.to_i128()
    };
    let mut out = Vec::with_capacity(weights.len());
    let mut total = BigInt::zero();
    for w in weights {
        let v = lift(w)?;
        total += BigInt::from(v).abs();
        out.push(v);
    }
    // the sum of all edge weights bounds every finite distance
    if total.bits() > 100 {
        return None;
    }
    let extra_out: Option<Vec<i128>> = extra.iter().map(lift).collect();
    Some((out, extra_out?, den))
}

/// Lift an integer cost back to the rational domain.
pub fn de_scale(v: i128, den: &BigInt) -> Rat {
    Rat::new(BigInt::from(v), den.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Window;
    use crate::rat::{rat, rat_int};

    #[test]
    fn unit_grid_distances() {
        let w = Window::new(vec![0, 0], vec![3, 3]).unwrap();
        let g = WindowGraph::new(&w);
        let weights = vec![rat_int(1); w.edge_count()];
        let src = w.vertex_index(&crate::lattice::LatticePoint::new(vec![0, 0])).unwrap() as u32;
        let sp = dijkstra(&g, &weights, src);
        for p in w.points() {
            let i = w.vertex_index(&p).unwrap();
            assert_eq!(sp.dist[i].clone().unwrap(), rat_int(p.l1_norm() as i64));
        }
        let counts = count_geodesics(&g, &weights, &sp, src);
        let corner = w.vertex_index(&crate::lattice::LatticePoint::new(vec![3, 3])).unwrap();
        // monotone staircases: C(6,3) = 20
        assert_eq!(counts[corner], BigUint::from(20u32));
    }

    #[test]
    fn integerize_roundtrip() {
        let ws = vec![rat(1, 2), rat(3, 4), rat_int(2)];
        let (ints, extra, den) = integerize(&ws, &[rat(1, 4)]).unwrap();
        assert_eq!(den, BigInt::from(4));
        assert_eq!(ints, vec![2, 3, 8]);
        assert_eq!(extra, vec![1]);
        assert_eq!(de_scale(3, &den), rat(3, 4));
        // giant denominators fall back to rational mode
        let huge = vec![Rat::new(BigInt::one(), BigInt::from(2).pow(100u32))];
        assert!(integerize(&huge, &[]).is_none());
    }
}
