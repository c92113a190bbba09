//! Edge lifting and the cut-edge machinery it relies on.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq)]
pub struct LiftResult {
    pub graph: Graph,
    pub merged_vertex: usize,
    pub new_pendant: usize,
}

pub fn is_cut_edge(g: &Graph, u: usize, v: usize) -> Result<bool> {
    Ok(g.split_sizes(u, v)?.is_some())
}

/// Edges that admit a lift: cut edges whose endpoints both have degree >= 2.
pub fn liftable_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| g.degree(u) >= 2 && g.degree(v) >= 2)
        .filter(|&(u, v)| matches!(g.split_sizes(u, v), Ok(Some(_))))
        .collect()
}

/// Deletes the cut edge `uv`, identifies `u` and `v`, and hangs a new pendant
/// on the merged vertex.
///
/// The merged vertex keeps `min(u, v)`; vertices above `max(u, v)` shift down
/// by one and the new pendant takes index `n - 1`.
pub fn edge_lift(g: &Graph, u: usize, v: usize) -> Result<LiftResult> {
    let (lo, hi) = (u.min(v), u.max(v));
    if !is_cut_edge(g, lo, hi)? {
        return Err(Error::NotCutEdge { u: lo, v: hi });
    }
    if g.degree(lo) < 2 || g.degree(hi) < 2 {
        return Err(Error::PendantEdge { u: lo, v: hi });
    }
    let n = g.order();
    let map = |x: usize| match x {
        x if x == hi => lo,
        x if x > hi => x - 1,
        x => x,
    };
    let mut edges: Vec<_> = g.edges().filter(|&e| e != (lo, hi)).map(|(a, b)| (map(a), map(b))).collect();
    edges.push((lo, n - 1));
    // u and v have disjoint neighbourhoods across a cut edge, so no parallel edge can appear.
    let graph = Graph::new(n, &edges).expect("lifting a cut edge keeps the graph simple");
    Ok(LiftResult { graph, merged_vertex: lo, new_pendant: n - 1 })
}

/// Uniform random labelled tree on `n >= 2` vertices via a Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// A connected random graph that has at least one liftable edge, together
/// with one such edge chosen uniformly.
///
/// Draws a uniform spanning tree on `4..=max_n` vertices, adds up to
/// `max_extra` random non-edges, and rejects samples without a liftable edge.
pub fn random_liftable<R: Rng>(rng: &mut R, max_n: usize, max_extra: usize) -> (Graph, (usize, usize)) {
    assert!(max_n >= 4, "a liftable edge needs at least four vertices");
    loop {
        let n = rng.gen_range(4..=max_n);
        let mut edges = random_tree(n, rng);
        let mut present = vec![vec![false; n]; n];
        for &(a, b) in &edges {
            present[a][b] = true;
            present[b][a] = true;
        }
        let extra = rng.gen_range(0..=max_extra);
        let mut candidates: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| !present[a][b]).collect();
        candidates.shuffle(rng);
        edges.extend(candidates.into_iter().take(extra));
        let g = Graph::new(n, &edges).expect("tree plus non-edges is simple");
        let liftable = liftable_edges(&g);
        if let Some(&e) = liftable.choose(rng) {
            return (g, e);
        }
    }
}

/// Seeded generator used by the property suites.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::abc_gg_value;
    use crate::scalar::root;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12
    }

    #[test]
    fn cut_edge_examples() {
        let tree = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        for (u, v) in tree.edges() {
            assert!(is_cut_edge(&tree, u, v).unwrap());
        }
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        for (u, v) in c5.edges() {
            assert!(!is_cut_edge(&c5, u, v).unwrap());
        }
        let bowtie = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(is_cut_edge(&bowtie, 2, 3).unwrap());
        assert!(is_cut_edge(&bowtie, 0, 3).is_err());
    }

    #[test]
    fn lifting_p4_gives_star() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let before = abc_gg_value(&p4).unwrap();
        assert!(close(before, 2.0 * root(2, 3) + root(1, 2)));
        let lifted = edge_lift(&p4, 1, 2).unwrap();
        assert_eq!(lifted.graph, Graph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap());
        assert_eq!((lifted.merged_vertex, lifted.new_pendant), (1, 3));
        assert!(close(abc_gg_value(&lifted.graph).unwrap(), 3.0 * root(2, 3)));
    }

    #[test]
    fn lifting_triangle_tail() {
        // triangle 0-1-2 with path 0-3-4; lift 0-3
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
        let lifted = edge_lift(&g, 0, 3).unwrap();
        let h = &lifted.graph;
        assert_eq!(h.degree(0), 4);
        assert_eq!(h.size(), g.size());
        let expect = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)]).unwrap();
        assert_eq!(*h, expect);
        assert!(abc_gg_value(h).unwrap() > abc_gg_value(&g).unwrap());
    }

    #[test]
    fn lifting_errors() {
        let tri = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(edge_lift(&tri, 0, 1), Err(Error::NotCutEdge { u: 0, v: 1 }));
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_lift(&p3, 0, 1), Err(Error::PendantEdge { u: 0, v: 1 }));
        assert!(edge_lift(&p3, 0, 2).is_err());
    }

    #[test]
    fn random_trees_are_spanning() {
        let mut rng = seeded_rng(7);
        for n in 2..15 {
            let edges = random_tree(n, &mut rng);
            let g = Graph::new(n, &edges).unwrap();
            assert_eq!(g.size(), n - 1);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn random_liftable_is_reproducible() {
        let a = random_liftable(&mut seeded_rng(42), 12, 3);
        let b = random_liftable(&mut seeded_rng(42), 12, 3);
        assert_eq!(a, b);
        assert!(liftable_edges(&a.0).contains(&a.1));
    }
}
