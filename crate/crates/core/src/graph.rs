//! Immutable simple undirected graphs.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Marker distance for vertices not reachable from the BFS source.
pub const UNREACHABLE: usize = usize::MAX;

/// A simple undirected graph stored as sorted adjacency lists.
///
/// Vertices are `0..n`. Construction validates the edge list, so every
/// `Graph` value is loop-free, has no parallel edges and symmetric adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge { u: a, v: b });
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Each undirected edge once as `(min, max)`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn pendant_count(&self) -> usize {
        self.adj.iter().filter(|l| l.len() == 1).count()
    }

    /// Breadth-first distances from `source`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.order()];
        let mut queue = VecDeque::with_capacity(self.order());
        dist[source] = 0;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let next = dist[x] + 1;
            for &y in &self.adj[x] {
                if dist[y] == UNREACHABLE {
                    dist[y] = next;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// All-pairs distances via one BFS per vertex.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.order()).map(|s| self.bfs_distances(s)).collect()
    }

    pub fn is_connected(&self) -> bool {
        match self.order() {
            0 => true,
            _ => self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE),
        }
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order() {
            return Err(Error::InvalidParameters(format!(
                "permutation of length {} for a graph of order {}",
                perm.len(),
                self.order()
            )));
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.order(), &edges)
    }

    /// Sizes of the two components left after deleting edge `uv`, or `None`
    /// when `uv` lies on a cycle. The first entry is the side containing `u`.
    pub fn split_sizes(&self, u: usize, v: usize) -> Result<Option<(usize, usize)>> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let mut seen = vec![false; self.order()];
        let mut stack = vec![u];
        seen[u] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if (x == u && y == v) || (x == v && y == u) || seen[y] {
                    continue;
                }
                if y == v {
                    return Ok(None);
                }
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
        let total_reachable = self.bfs_distances(u).iter().filter(|&&d| d != UNREACHABLE).count();
        Ok(Some((count, total_reachable - count)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn q4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    #[test]
    fn smallest_edge() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.order(), 2);
        assert_eq!(k2.size(), 1);
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn construction_errors_name_the_pair() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange { u: 0, v: 3, n: 3 }));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge { u: 0, v: 1 }));
    }

    #[test]
    fn q4_is_c4_plus_chord() {
        let g = q4();
        assert_eq!(g.size(), 5);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(path3().bfs_distances(0), vec![0, 1, 2]);
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.bfs_distances(0), vec![0, 1, 2, 1]);
        assert_eq!(q4().bfs_distances(1), vec![1, 0, 1, 2]);
    }

    #[test]
    fn bfs_marks_unreachable() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(g.bfs_distances(0), vec![0, 1, UNREACHABLE]);
        assert!(!g.is_connected());
    }

    #[test]
    fn split_sizes_of_bridge_and_cycle_edge() {
        // two triangles joined by the bridge 2-3
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(g.split_sizes(2, 3).unwrap(), Some((3, 3)));
        assert_eq!(g.split_sizes(0, 1).unwrap(), None);
        assert!(g.split_sizes(0, 4).is_err());
    }
}
