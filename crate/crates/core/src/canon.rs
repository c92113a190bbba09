//! Canonical labelling by colour refinement and individualisation.
//!
//! Refinement splits colour classes by the multiset of neighbour colours
//! until the partition is equitable. When cells remain, the first
//! non-singleton cell is individualised vertex by vertex and the search
//! recurses; the lexicographically smallest relabelled edge list over all
//! leaves is the canonical form. Twins inside the target cell (vertices with
//! identical neighbourhoods apart from each other) are swapped by an
//! automorphism fixing the current branch, so only one twin per class is
//! explored.

use std::fmt;

use crate::graph::Graph;

/// Labelling-invariant encoding: the order as a little-endian `u16`,
/// followed by the sorted canonical edge list as `u16` pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    fn encode(n: usize, edges: &[(u16, u16)]) -> Self {
        let mut bytes = Vec::with_capacity(2 + 4 * edges.len());
        bytes.extend_from_slice(&(n as u16).to_le_bytes());
        for &(a, b) in edges {
            bytes.extend_from_slice(&a.to_le_bytes());
            bytes.extend_from_slice(&b.to_le_bytes());
        }
        CanonicalForm(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        u16::from_le_bytes([self.0[0], self.0[1]]) as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.0[2..]
            .chunks_exact(4)
            .map(|c| (u16::from_le_bytes([c[0], c[1]]) as usize, u16::from_le_bytes([c[2], c[3]]) as usize))
            .collect()
    }

    /// The graph in canonical labelling.
    pub fn to_graph(&self) -> Graph {
        Graph::new(self.order(), &self.edges()).expect("canonical form encodes a simple graph")
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(n={}, {:?})", self.order(), self.edges())
    }
}

fn mix(x: u64) -> u64 {
    // splitmix64 finaliser
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Vec<(u16, u16)>>,
    keys: Vec<(u32, u64, u32)>,
    leaf: Vec<(u16, u16)>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search { g, best: None, keys: Vec::with_capacity(g.order()), leaf: Vec::with_capacity(g.size()) }
    }

    /// Refines `colors` in place to an equitable partition; colours become
    /// dense ranks. Returns the number of cells.
    fn refine(&mut self, colors: &mut [u32]) -> usize {
        let n = colors.len();
        let mut cells = usize::MAX;
        loop {
            self.keys.clear();
            for v in 0..n {
                let h = self.g.neighbors(v).iter().fold(0u64, |acc, &w| acc.wrapping_add(mix(colors[w] as u64)));
                self.keys.push((colors[v], h, v as u32));
            }
            self.keys.sort_unstable();
            let mut rank = 0u32;
            for i in 0..n {
                if i > 0 && (self.keys[i].0, self.keys[i].1) != (self.keys[i - 1].0, self.keys[i - 1].1) {
                    rank += 1;
                }
                colors[self.keys[i].2 as usize] = rank;
            }
            let now = rank as usize + 1;
            if now == cells || now == n {
                return now;
            }
            cells = now;
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let a = self.g.neighbors(u).iter().filter(|&&x| x != v);
        let b = self.g.neighbors(v).iter().filter(|&&x| x != u);
        a.eq(b)
    }

    fn visit_leaf(&mut self, colors: &[u32]) {
        self.leaf.clear();
        for (u, v) in self.g.edges() {
            let (a, b) = (colors[u] as u16, colors[v] as u16);
            self.leaf.push((a.min(b), a.max(b)));
        }
        self.leaf.sort_unstable();
        match &mut self.best {
            Some(best) if *best <= self.leaf => {}
            Some(best) => best.clone_from(&self.leaf),
            None => self.best = Some(self.leaf.clone()),
        }
    }

    fn run(&mut self, mut colors: Vec<u32>) {
        let n = colors.len();
        let cells = self.refine(&mut colors);
        if cells == n {
            self.visit_leaf(&colors);
            return;
        }
        let mut size = vec![0usize; cells];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = size.iter().position(|&s| s > 1).unwrap() as u32;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if explored.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            explored.push(v);
            let child: Vec<u32> = (0..n).map(|x| 2 * colors[x] + u32::from(colors[x] == target && x != v)).collect();
            self.run(child);
        }
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let mut search = Search::new(g);
    if g.order() == 0 {
        return CanonicalForm::encode(0, &[]);
    }
    search.run(vec![0; g.order()]);
    CanonicalForm::encode(g.order(), &search.best.unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        if a.order() != b.order() || a.size() != b.size() {
            return false;
        }
        let n = a.order();
        (0..n).permutations(n).any(|p| a.edges().all(|(u, v)| b.has_edge(p[u], p[v])))
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn cycle_under_all_relabelings() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let want = canonical_form(&c5);
        for p in (0..5).permutations(5) {
            assert_eq!(canonical_form(&c5.relabel(&p).unwrap()), want);
        }
    }

    #[test]
    fn path_equals_star_on_three_vertices() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let k12 = Graph::new(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&p3), canonical_form(&k12));
    }

    #[test]
    fn q4_differs_from_c4() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let q4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_ne!(canonical_form(&c4), canonical_form(&q4));
    }

    #[test]
    fn form_decodes_to_isomorphic_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_graph(&mut rng, 6, 0.5);
            let back = canonical_form(&g).to_graph();
            assert!(brute_isomorphic(&g, &back));
            assert_eq!(canonical_form(&back), canonical_form(&g));
        }
    }

    #[test]
    fn agrees_with_brute_force_isomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=6 {
            for _ in 0..150 {
                let a = random_graph(&mut rng, n, 0.5);
                let b = if rng.gen_bool(0.5) {
                    let mut p: Vec<usize> = (0..n).collect();
                    rand::seq::SliceRandom::shuffle(&mut p[..], &mut rng);
                    a.relabel(&p).unwrap()
                } else {
                    random_graph(&mut rng, n, 0.5)
                };
                assert_eq!(canonical_form(&a) == canonical_form(&b), brute_isomorphic(&a, &b), "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn regular_graphs_with_same_refinement() {
        // C6 and two disjoint triangles are both 2-regular on six vertices.
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tt = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&tt));
        // K_{3,3} against the prism: both 3-regular on six vertices.
        let k33 = Graph::new(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let prism = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_ne!(canonical_form(&k33), canonical_form(&prism));
    }
}
