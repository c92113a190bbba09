//! Shared inputs for the benchmarks under `benches/`.

use abcgg_core::{make_b_quad, make_shared_path, random_tree, seeded_rng, FamilySpec, Graph};

/// Named graphs of increasing order used by the index and canonical-form benches.
pub fn fixtures() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in [10, 40, 160] {
        out.push((format!("B_{n}(n-3,1,1,1)"), make_b_quad([n - 3, 1, 1, 1]).unwrap()));
        let spec = FamilySpec::s33(2, 2, n - 9);
        out.push((spec.to_string(), spec.build().unwrap()));
        let mut p = vec![0; 6];
        p[2] = n - 6;
        out.push((format!("theta(5,4,3) n={n}"), make_shared_path(5, 4, 3, &p).unwrap()));
        let edges = random_tree(n, &mut seeded_rng(n as u64));
        out.push((format!("random tree n={n}"), Graph::new(n, &edges).unwrap()));
    }
    out
}
