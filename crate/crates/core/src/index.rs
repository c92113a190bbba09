//! Distance-based (Graovac-Ghorbani) and degree-based atom-bond connectivity indices.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Per-edge proximity counts: `n_u` vertices are strictly closer to `u`
/// than to `v`, `n_v` symmetrically. Equidistant vertices count for neither.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeProximity {
    pub u: usize,
    pub v: usize,
    pub n_u: usize,
    pub n_v: usize,
    pub term: f64,
}

impl EdgeProximity {
    fn from_counts(u: usize, v: usize, n_u: usize, n_v: usize) -> Self {
        EdgeProximity { u, v, n_u, n_v, term: proximity_term(n_u, n_v) }
    }
}

/// `sqrt((a + b - 2) / (a b))` formed from the exact integer ratio.
pub fn proximity_term(a: usize, b: usize) -> f64 {
    debug_assert!(a >= 1 && b >= 1);
    ((a + b - 2) as f64 / (a * b) as f64).sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexReport {
    pub total: f64,
    /// Sorted by `(u, v)` with `u < v`.
    pub per_edge: Vec<EdgeProximity>,
}

fn count_sides(dist: &[Vec<usize>], u: usize, v: usize) -> (usize, usize) {
    let (du, dv) = (&dist[u], &dist[v]);
    let mut n_u = 0;
    let mut n_v = 0;
    for (a, b) in du.iter().zip(dv) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => n_u += 1,
            std::cmp::Ordering::Greater => n_v += 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    (n_u, n_v)
}

pub fn edge_proximity(g: &Graph, u: usize, v: usize) -> Result<EdgeProximity> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dist = vec![g.bfs_distances(u), g.bfs_distances(v)];
    let (n_u, n_v) = count_sides(&dist, 0, 1);
    Ok(EdgeProximity::from_counts(u, v, n_u, n_v))
}

/// The Graovac-Ghorbani index with its per-edge breakdown.
///
/// Terms are accumulated in sorted edge order, so relabelled copies of a
/// graph produce the same multiset of terms and agree up to rounding.
pub fn abc_gg(g: &Graph) -> Result<IndexReport> {
    if g.order() < 2 {
        return Err(Error::TooSmall { min: 2, got: g.order() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dist = g.distance_matrix();
    let per_edge: Vec<_> = g
        .edges()
        .map(|(u, v)| {
            let (n_u, n_v) = count_sides(&dist, u, v);
            EdgeProximity::from_counts(u, v, n_u, n_v)
        })
        .collect();
    let total = per_edge.iter().map(|e| e.term).sum();
    Ok(IndexReport { total, per_edge })
}

/// Shorthand for `abc_gg(g)?.total`.
pub fn abc_gg_value(g: &Graph) -> Result<f64> {
    abc_gg(g).map(|r| r.total)
}

/// The classical degree-based atom-bond connectivity index.
pub fn abc_classic(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::TooSmall { min: 2, got: g.order() });
    }
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.edges().map(|(u, v)| proximity_term(g.degree(u), g.degree(v))).sum())
}
