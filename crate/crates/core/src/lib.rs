//! Graovac-Ghorbani index laboratory.
//!
//! Computes the distance-based atom-bond connectivity index
//! `ABC_GG(G) = sum over edges uv of sqrt((n_u + n_v - 2) / (n_u n_v))`,
//! builds the parametric bicyclic families around the maximiser
//! `B_n(n-3,1,1,1)`, enumerates all connected bicyclic graphs of small order
//! up to isomorphism, and runs verification suites over all of it.
//!
//! ```
//! use abcgg_core::{abc_gg, make_b_quad, theorem_bound};
//!
//! let g = make_b_quad([4, 1, 1, 1]).unwrap();
//! let total = abc_gg(&g).unwrap().total;
//! assert!((total - theorem_bound(7).unwrap().value).abs() < 1e-9);
//! ```

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod index;
pub mod io;
pub mod scalar;
pub mod table;
pub mod transforms;
pub mod verify;

pub use canon::{canonical_form, CanonicalForm};
pub use enumerate::{
    classify_base, enumerate_bicyclic, extremal_scan, naive_enumerate_bicyclic, BaseShape, EnumerationRecord,
    ExtremalScan,
};
pub use error::{Error, Result};
pub use families::{b_quad_closed_form, make_b_quad, make_cycle_pendants, make_s_rt, make_shared_path, FamilySpec};
pub use graph::Graph;
pub use index::{abc_classic, abc_gg, abc_gg_value, edge_proximity, EdgeProximity, IndexReport};
pub use io::{parse_edge_list, write_edge_list};
pub use scalar::{
    f, g, lemma31_argmax, lemma31_f, lemma33_bound, lemma33_g, lemma35_extremal, s33_closed_form, theorem_bound,
    BoundValue, Lemma31Result,
};
pub use table::{format_sig, table_rows, write_table_csv, TableName, TableRow};
pub use transforms::{edge_lift, is_cut_edge, liftable_edges, random_liftable, random_tree, seeded_rng, LiftResult};
pub use verify::{run_suite, write_reports_csv, Status, Suite, SuiteOptions, VerificationReport};
