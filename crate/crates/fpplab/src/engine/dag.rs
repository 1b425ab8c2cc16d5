//! The DAG of all shortest paths between two vertices.

use super::graph::WindowGraph;
use super::search::{dijkstra, Cost, ShortestPaths};
use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::lattice::{Edge, LatticePoint};
use crate::path::PathRecord;
use crate::rat::Rat;
use num_bigint::BigUint;
use num_traits::Zero;
use std::collections::BTreeSet;

/// All shortest paths from `source` to `target`: the tight-edge
/// predecessor structure, the exact distance, the number of distinct
/// geodesics and one extracted geodesic (lexicographic tie-break).
#[derive(Debug, Clone)]
pub struct GeodesicDag {
    pub source: LatticePoint,
    pub target: LatticePoint,
    pub distance: Rat,
    pub count: BigUint,
    /// Canonical (undirected) edges lying on at least one geodesic.
    pub edges: BTreeSet<Edge>,
    pub geodesic: PathRecord,
}

impl GeodesicDag {
    pub fn is_unique(&self) -> bool {
        self.count == BigUint::from(1u32)
    }
}

pub(crate) fn build_dag(cfg: &Configuration, x: &LatticePoint, y: &LatticePoint) -> Result<GeodesicDag> {
    if cfg.has_negative() {
        return Err(Error::NegativeWeights);
    }
    if cfg.has_nonpositive() {
        // zero-weight edges make the geodesic count ill-defined
        return Err(Error::NonPositiveWeight);
    }
    let window = cfg.window();
    let (ix, iy) = match (window.vertex_index(x), window.vertex_index(y)) {
        (Some(a), Some(b)) => (a as u32, b as u32),
        _ => return Err(Error::OutOfWindow),
    };
    let g = WindowGraph::new(window);
    let ws = cfg.weights();
    let from_x = dijkstra(&g, ws, ix);
    let from_y = dijkstra(&g, ws, iy);
    let total = from_x.dist[iy as usize]
        .clone()
        .expect("window graphs are connected");

    // directed tight edges on some x→y geodesic
    let mut edges = BTreeSet::new();
    let mut succ: Vec<Vec<u32>> = vec![Vec::new(); g.vertex_count()];
    for (eidx, e) in window.edges().iter().enumerate() {
        let (a, b) = e.endpoints();
        let ia = window.vertex_index(&a).unwrap() as u32;
        let ib = window.vertex_index(&b).unwrap() as u32;
        for (u, v) in [(ia, ib), (ib, ia)] {
            if let (Some(du), Some(dv)) =
                (&from_x.dist[u as usize], &from_y.dist[v as usize])
            {
                if du.plus(&ws[eidx]).plus(dv) == total {
                    edges.insert(e.clone());
                    succ[u as usize].push(v);
                }
            }
        }
    }

    // count x→y geodesics: forward counts restricted to the tight DAG
    let counts = restricted_counts(&g, ws, &from_x, &from_y, &total, ix);
    let count = counts[iy as usize].clone();

    // lexicographically-first geodesic: repeatedly take the smallest
    // coordinate vector among tight successors
    let mut vertices = vec![x.clone()];
    let mut cur = ix;
    while cur != iy {
        let next = succ[cur as usize]
            .iter()
            .map(|v| (window.point_at(*v as usize), *v))
            .min()
            .expect("target is reachable in the geodesic DAG");
        vertices.push(next.0);
        cur = next.1;
    }
    let geodesic = PathRecord::new(vertices)?;

    Ok(GeodesicDag {
        source: x.clone(),
        target: y.clone(),
        distance: total,
        count,
        edges,
        geodesic,
    })
}

fn restricted_counts<C: Cost>(
    g: &WindowGraph,
    weights: &[C],
    from_x: &ShortestPaths<C>,
    from_y: &ShortestPaths<C>,
    total: &C,
    src: u32,
) -> Vec<BigUint> {
    let on_geodesic = |v: usize| -> bool {
        matches!(
            (&from_x.dist[v], &from_y.dist[v]),
            (Some(a), Some(b)) if a.plus(b) == *total
        )
    };
    let mut counts = vec![BigUint::zero(); g.vertex_count()];
    counts[src as usize] = BigUint::from(1u32);
    for &u in &from_x.order {
        if counts[u as usize].is_zero() || !on_geodesic(u as usize) {
            continue;
        }
        let du = from_x.dist[u as usize].clone().unwrap();
        for &(v, e) in g.neighbors(u) {
            if !on_geodesic(v as usize) {
                continue;
            }
            if let Some(dv) = &from_x.dist[v as usize] {
                if du.plus(&weights[e as usize]) == *dv {
                    let add = counts[u as usize].clone();
                    counts[v as usize] += add;
                }
            }
        }
    }
    counts
}
