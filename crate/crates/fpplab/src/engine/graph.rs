//! Adjacency view of a window, shared by the search routines.

use crate::lattice::Window;

/// Flat adjacency lists over the window's vertex indexing; edge ids
/// match [`Window::edges`] order so weight vectors index directly.
pub struct WindowGraph {
    pub window: Window,
    adj: Vec<Vec<(u32, u32)>>,
}

impl WindowGraph {
    pub fn new(window: &Window) -> Self {
        let n = window.vertex_count();
        let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::with_capacity(2 * window.dim()); n];
        for (eidx, e) in window.edges().iter().enumerate() {
            let (a, b) = e.endpoints();
            let ia = window.vertex_index(&a).unwrap() as u32;
            let ib = window.vertex_index(&b).unwrap() as u32;
            adj[ia as usize].push((ib, eidx as u32));
            adj[ib as usize].push((ia, eidx as u32));
        }
        WindowGraph {
            window: window.clone(),
            adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: u32) -> &[(u32, u32)] {
        &self.adj[v as usize]
    }
}
