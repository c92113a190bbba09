//! Isomorphism-free generation of connected bicyclic graphs.
//!
//! Every connected graph with `n + 1` edges has a 2-core of one of three
//! shapes: two cycles sharing a vertex, two disjoint cycles joined by a
//! path, or a theta graph. The structured enumerator builds each core and
//! hangs rooted trees on its vertices; a canonical-form set removes the
//! duplicates caused by core symmetries. The naive oracle instead walks all
//! `(n + 1)`-edge subsets of `K_n`.

use std::collections::HashSet;
use std::fmt;

use dashmap::DashMap;
use log::warn;
use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::families::make_b_quad;
use crate::graph::Graph;
use crate::index::abc_gg_value;
use crate::scalar::theorem_bound;

/// Largest order the naive edge-subset oracle accepts.
pub const NAIVE_MAX_N: usize = 8;
/// Largest order `extremal_scan` accepts.
pub const SCAN_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct EnumerationRecord {
    pub canonical: CanonicalForm,
    pub graph: Graph,
    pub index_value: f64,
    pub pendant_count: usize,
}

impl EnumerationRecord {
    pub fn new(graph: Graph) -> Result<Self> {
        let canonical = canonical_form(&graph);
        Self::with_form(graph, canonical)
    }

    fn with_form(graph: Graph, canonical: CanonicalForm) -> Result<Self> {
        Ok(EnumerationRecord {
            index_value: abc_gg_value(&graph)?,
            pendant_count: graph.pendant_count(),
            canonical,
            graph,
        })
    }
}

/// Shape of the 2-core of a connected bicyclic graph. Lengths count edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseShape {
    /// Cycles of lengths `r >= t` with exactly one common vertex.
    SharedVertex { r: usize, t: usize },
    /// Disjoint cycles `r >= t` joined by a path of `path >= 1` edges.
    Dumbbell { r: usize, t: usize, path: usize },
    /// Two branch vertices joined by internally disjoint paths `a >= b >= c`.
    Theta { a: usize, b: usize, c: usize },
}

impl BaseShape {
    pub fn order(&self) -> usize {
        match *self {
            BaseShape::SharedVertex { r, t } => r + t - 1,
            BaseShape::Dumbbell { r, t, path } => r + t + path - 1,
            BaseShape::Theta { a, b, c } => a + b + c - 1,
        }
    }

    /// All cores on at most `n` vertices.
    pub fn all_up_to(n: usize) -> Vec<BaseShape> {
        let mut out = Vec::new();
        for r in 3..=n {
            for t in 3..=r {
                if r + t - 1 <= n {
                    out.push(BaseShape::SharedVertex { r, t });
                }
                for path in 1.. {
                    if r + t + path - 1 > n {
                        break;
                    }
                    out.push(BaseShape::Dumbbell { r, t, path });
                }
            }
        }
        for a in 2..=n {
            for b in 2..=a {
                for c in 1..=b {
                    if a + b + c - 1 <= n {
                        out.push(BaseShape::Theta { a, b, c });
                    }
                }
            }
        }
        out
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        let mut next = 2;
        let mut arc = |from: usize, to: usize, len: usize| {
            let mut prev = from;
            for _ in 1..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, to));
        };
        match *self {
            // hub 0; vertex 1 is the first vertex of C_r after the hub
            BaseShape::SharedVertex { r, t } => {
                arc(0, 1, 1);
                arc(1, 0, r - 1);
                arc(0, 0, t);
            }
            // vertex 0 on C_r, vertex 1 on C_t
            BaseShape::Dumbbell { r, t, path } => {
                arc(0, 0, r);
                arc(1, 1, t);
                arc(0, 1, path);
            }
            BaseShape::Theta { a, b, c } => {
                arc(0, 1, a);
                arc(0, 1, b);
                arc(0, 1, c);
            }
        }
        debug_assert_eq!(next, self.order());
        edges
    }
}

impl fmt::Display for BaseShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseShape::SharedVertex { r, t } => write!(f, "shared-vertex({r},{t})"),
            BaseShape::Dumbbell { r, t, path } => write!(f, "dumbbell({r},{t};{path})"),
            BaseShape::Theta { a, b, c } => write!(f, "theta({a},{b},{c})"),
        }
    }
}

/// Identifies the 2-core of a connected bicyclic graph; `None` for anything else.
pub fn classify_base(g: &Graph) -> Option<BaseShape> {
    let n = g.order();
    if g.size() != n + 1 || !g.is_connected() {
        return None;
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let branch: Vec<usize> = (0..n).filter(|&v| !removed[v] && deg[v] >= 3).collect();
    // Walk from `start` through `first` along degree-2 core vertices.
    let walk = |start: usize, first: usize| -> (usize, usize) {
        let (mut prev, mut cur, mut len) = (start, first, 1);
        while deg[cur] == 2 {
            let nxt = *g.neighbors(cur).iter().find(|&&w| !removed[w] && w != prev).unwrap();
            prev = cur;
            cur = nxt;
            len += 1;
        }
        (cur, len)
    };
    let core_nbrs = |v: usize| g.neighbors(v).iter().copied().filter(|&w| !removed[w]).collect::<Vec<_>>();
    match *branch.as_slice() {
        [hub] => {
            let mut lens: Vec<usize> = core_nbrs(hub).into_iter().map(|w| walk(hub, w).1).collect();
            lens.sort_unstable();
            // each cycle is walked from both ends
            let (t, r) = (lens[0], lens[2]);
            Some(BaseShape::SharedVertex { r, t })
        }
        [x, y] => {
            let from_x: Vec<(usize, usize)> = core_nbrs(x).into_iter().map(|w| walk(x, w)).collect();
            if from_x.iter().all(|&(end, _)| end == y) {
                let mut lens: Vec<usize> = from_x.iter().map(|&(_, l)| l).collect();
                lens.sort_unstable_by(|a, b| b.cmp(a));
                return Some(BaseShape::Theta { a: lens[0], b: lens[1], c: lens[2] });
            }
            let path = from_x.iter().find(|&&(end, _)| end == y)?.1;
            let loop_x = from_x.iter().find(|&&(end, _)| end == x)?.1;
            let loop_y = core_nbrs(y).into_iter().map(|w| walk(y, w)).find(|&(end, _)| end == y)?.1;
            Some(BaseShape::Dumbbell { r: loop_x.max(loop_y), t: loop_x.min(loop_y), path })
        }
        _ => None,
    }
}

/// Unlabelled rooted trees up to a size bound, each stored as the
/// non-decreasing list of its children's tree ids.
struct RootedTrees {
    children: Vec<Vec<usize>>,
    size: Vec<usize>,
    by_size: Vec<Vec<usize>>,
}

impl RootedTrees {
    fn up_to(max_size: usize) -> Self {
        let mut trees = RootedTrees { children: vec![Vec::new()], size: vec![1], by_size: vec![Vec::new(), vec![0]] };
        for s in 2..=max_size {
            let known = trees.children.len();
            let mut found = Vec::new();
            let mut cur = Vec::new();
            trees.multisets(0, known, s - 1, &mut cur, &mut found);
            let mut ids = Vec::new();
            for kids in found {
                ids.push(trees.children.len());
                trees.children.push(kids);
                trees.size.push(s);
            }
            trees.by_size.push(ids);
        }
        trees
    }

    fn multisets(
        &self,
        min_id: usize,
        known: usize,
        remaining: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for id in min_id..known {
            if self.size[id] <= remaining {
                cur.push(id);
                self.multisets(id, known, remaining - self.size[id], cur, out);
                cur.pop();
            }
        }
    }

    fn attach(&self, tree: usize, at: usize, edges: &mut Vec<(usize, usize)>, next: &mut usize) {
        for &child in &self.children[tree] {
            let w = *next;
            *next += 1;
            edges.push((at, w));
            self.attach(child, w, edges, next);
        }
    }
}

/// Calls `emit` for every assignment of rooted trees to the base vertices
/// that adds exactly `extra` vertices.
fn for_each_attachment(trees: &RootedTrees, base: usize, extra: usize, emit: &mut dyn FnMut(&[usize])) {
    fn rec(trees: &RootedTrees, base: usize, left: usize, cur: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        if cur.len() == base {
            if left == 0 {
                emit(cur);
            }
            return;
        }
        let range = if cur.len() + 1 == base { left..=left } else { 0..=left };
        for add in range {
            for &id in &trees.by_size[add + 1] {
                cur.push(id);
                rec(trees, base, left - add, cur, emit);
                cur.pop();
            }
        }
    }
    rec(trees, base, extra, &mut Vec::with_capacity(base), emit);
}

/// One representative per isomorphism class of connected graphs with `n`
/// vertices and `n + 1` edges, sorted by canonical form.
pub fn enumerate_bicyclic(n: usize) -> Vec<EnumerationRecord> {
    if n < 4 {
        warn!("no bicyclic graphs of order {n}; need n >= 4");
        return Vec::new();
    }
    let trees = RootedTrees::up_to(n - 3);
    let seen: DashMap<CanonicalForm, Graph> = DashMap::new();
    BaseShape::all_up_to(n).par_iter().for_each(|base| {
        let b = base.order();
        let base_edges = base.edges();
        for_each_attachment(&trees, b, n - b, &mut |assignment| {
            let mut edges = base_edges.clone();
            let mut next = b;
            for (v, &tree) in assignment.iter().enumerate() {
                trees.attach(tree, v, &mut edges, &mut next);
            }
            let g = Graph::new(n, &edges).expect("generated graph is simple");
            seen.entry(canonical_form(&g)).or_insert(g);
        });
    });
    into_records(seen.into_iter().collect())
}

fn into_records(mut found: Vec<(CanonicalForm, Graph)>) -> Vec<EnumerationRecord> {
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found
        .into_iter()
        .map(|(form, g)| EnumerationRecord::with_form(g, form).expect("bicyclic graphs are connected"))
        .collect()
}

/// Brute-force oracle: every `(n + 1)`-subset of the edges of `K_n`, kept
/// when connected, deduplicated by canonical form.
pub fn naive_enumerate_bicyclic(n: usize) -> Result<Vec<EnumerationRecord>> {
    if !(4..=NAIVE_MAX_N).contains(&n) {
        return Err(Error::Refused(format!("naive enumeration supports 4 <= n <= {NAIVE_MAX_N}, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let slots = pairs.len();
    let k = n + 1;
    let full: u32 = (1 << n) - 1;

    // Split the subsets by their lowest chosen edge.
    let parts: Vec<HashSet<CanonicalForm>> = (0..=slots - k)
        .into_par_iter()
        .map(|low| {
            let mut local = HashSet::new();
            let rest_slots = slots - low - 1;
            let mut mask: u64 = (1u64 << (k - 1)) - 1;
            let limit: u64 = 1u64 << rest_slots;
            let mut edges = Vec::with_capacity(k);
            while mask < limit {
                let chosen = (mask << (low + 1)) | (1u64 << low);
                let mut adj = [0u32; NAIVE_MAX_N];
                let mut bits = chosen;
                while bits != 0 {
                    let (a, b) = pairs[bits.trailing_zeros() as usize];
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                    bits &= bits - 1;
                }
                let mut reach: u32 = 1;
                loop {
                    let mut grown = reach;
                    let mut r = reach;
                    while r != 0 {
                        grown |= adj[r.trailing_zeros() as usize];
                        r &= r - 1;
                    }
                    if grown == reach {
                        break;
                    }
                    reach = grown;
                }
                if reach == full {
                    edges.clear();
                    let mut bits = chosen;
                    while bits != 0 {
                        edges.push(pairs[bits.trailing_zeros() as usize]);
                        bits &= bits - 1;
                    }
                    local.insert(canonical_form(&Graph::new(n, &edges).expect("subset of K_n")));
                }
                // Gosper's hack: next mask with the same popcount
                let c = mask & mask.wrapping_neg();
                let r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
            local
        })
        .collect();
    let mut all = HashSet::new();
    for p in parts {
        all.extend(p);
    }
    Ok(into_records(
        all.into_iter()
            .map(|form| {
                let g = form.to_graph();
                (form, g)
            })
            .collect(),
    ))
}

#[derive(Debug, Clone)]
pub struct ExtremalScan {
    pub n: usize,
    pub class_count: usize,
    pub best: EnumerationRecord,
    /// Index of the best non-maximising class; `None` when only one class exists.
    pub second_value: Option<f64>,
    /// `best - second_value`, or infinity when there is no runner-up.
    pub gap: f64,
    /// Whether the maximiser is isomorphic to `B_n(n-3,1,1,1)`.
    pub best_is_b_quad: bool,
    /// `|best - theorem_bound(n)|`.
    pub bound_error: f64,
}

/// Exhaustive maximisation over all bicyclic graphs of order `n`.
///
/// Ties are broken by canonical form so the result does not depend on
/// enumeration order.
pub fn extremal_scan(n: usize) -> Result<ExtremalScan> {
    if n < 4 {
        return Err(Error::Domain(format!("bicyclic graphs need n >= 4, got {n}")));
    }
    if n > SCAN_MAX_N {
        return Err(Error::Refused(format!(
            "exhaustive scan is limited to n <= {SCAN_MAX_N}; use the closed-form suites for larger n"
        )));
    }
    let records = enumerate_bicyclic(n);
    let class_count = records.len();
    let better = |a: &EnumerationRecord, b: &EnumerationRecord| {
        a.index_value.total_cmp(&b.index_value).then_with(|| b.canonical.cmp(&a.canonical))
    };
    let best_pos = (0..records.len()).max_by(|&i, &j| better(&records[i], &records[j])).unwrap();
    let second_value =
        records.iter().enumerate().filter(|&(i, _)| i != best_pos).map(|(_, r)| r.index_value).max_by(f64::total_cmp);
    let best = records.into_iter().nth(best_pos).unwrap();
    let expected = canonical_form(&make_b_quad([n - 3, 1, 1, 1])?);
    let bound = theorem_bound(n)?.value;
    Ok(ExtremalScan {
        n,
        class_count,
        gap: second_value.map_or(f64::INFINITY, |s| best.index_value - s),
        second_value,
        best_is_b_quad: best.canonical == expected,
        bound_error: (best.index_value - bound).abs(),
        best,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_s_rt, make_shared_path};

    #[test]
    fn rooted_tree_counts() {
        // unlabelled rooted trees by size
        let trees = RootedTrees::up_to(8);
        let counts: Vec<usize> = (1..=8).map(|s| trees.by_size[s].len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115]);
    }

    #[test]
    fn base_shapes_are_bicyclic() {
        for base in BaseShape::all_up_to(9) {
            let g = Graph::new(base.order(), &base.edges()).unwrap();
            assert_eq!(g.size(), g.order() + 1, "{base}");
            assert!(g.is_connected());
            assert_eq!(classify_base(&g), Some(base), "{base}");
        }
    }

    #[test]
    fn classify_families() {
        let g = make_s_rt(4, 3, &[1, 0, 2], &[0, 1], 3).unwrap();
        assert_eq!(classify_base(&g), Some(BaseShape::SharedVertex { r: 4, t: 3 }));
        let g = make_shared_path(5, 4, 3, &[]).unwrap();
        assert_eq!(classify_base(&g), Some(BaseShape::Theta { a: 3, b: 2, c: 2 }));
        let g = make_b_quad([3, 1, 2, 1]).unwrap();
        assert_eq!(classify_base(&g), Some(BaseShape::Theta { a: 2, b: 2, c: 1 }));
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(classify_base(&c4), None);
    }

    #[test]
    fn order_four_has_one_class() {
        let recs = enumerate_bicyclic(4);
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].canonical, canonical_form(&make_b_quad([1, 1, 1, 1]).unwrap()));
        assert_eq!(naive_enumerate_bicyclic(4).unwrap().len(), 1);
    }

    #[test]
    fn small_orders_have_no_classes() {
        assert!(enumerate_bicyclic(3).is_empty());
        assert!(naive_enumerate_bicyclic(3).is_err());
        assert!(naive_enumerate_bicyclic(9).is_err());
    }

    #[test]
    fn records_are_distinct_and_sorted() {
        let recs = enumerate_bicyclic(7);
        assert!(recs.windows(2).all(|w| w[0].canonical < w[1].canonical));
    }

    #[test]
    fn scan_refuses_out_of_range() {
        assert!(extremal_scan(3).is_err());
        assert!(matches!(extremal_scan(SCAN_MAX_N + 1), Err(Error::Refused(_))));
    }
}
