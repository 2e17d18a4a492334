//! Matching arrangements of graphs.
//!
//! For a simple graph with numbered edges, every simple path and every
//! even simple cycle defines a hyperplane through the origin whose normal
//! alternates between +1 and -1 on the coordinates of the traversed
//! edges. The set of all such hyperplanes is the matching arrangement of
//! the graph. This crate builds these arrangements exactly, computes the
//! flat lattice of the normal-vector matroid, its Möbius function and
//! characteristic polynomial, counts regions, and exposes brute-force
//! maximum-weight-matching probes plus independent oracles (finite-field
//! point counts, Fourier–Motzkin region enumeration) for cross-checking.
//!
//! All arithmetic on the lattice path is exact; nothing is floating
//! point. The `parallel` feature (on by default) runs the hot loops on
//! rayon; without it the same code paths run sequentially with identical
//! results.

pub mod arrangement;
pub mod error;
mod exec;
pub mod graph;
pub mod lattice;
pub mod linalg;
pub mod matching;
pub mod paths;
pub mod poly;
pub mod verify;

pub use arrangement::{
    arrangements_identical, build_graphical_arrangement, build_matching_arrangement,
    build_matching_arrangement_with_limit, normal_vector, reconstruct_line_graph, Arrangement,
    Hyperplane,
};
pub use error::{Error, GraphDefect, Result};
pub use graph::{
    chromatic_polynomial, connected_components, count_acyclic_orientations, disjoint_union,
    is_isomorphic, line_graph, EdgeNumbering, Graph,
};
pub use lattice::{
    build_flat_lattice, characteristic_polynomial, closure, region_count, Flat, FlatLattice,
};
pub use linalg::{fm_feasible, in_span, poly_eval, rank, Rat, RatMatrix, RatVector, Sign,
    StrictSystem};
pub use matching::{
    enumerate_matchings, max_weight_matchings, probe_theorem2, sample_generic_point, sign_vector,
    symdiff_decompose, Matching, RegionReport, SignVector, SymDiffComponent, WeightPoint,
};
pub use paths::{enumerate_even_cycles, enumerate_simple_paths, EdgeSequence, SequenceKind};
pub use poly::IntPolynomial;
pub use verify::{
    all_graphs, all_trees, default_suite, enumerate_regions_exact, finite_field_count, glue_at,
    random_graph, run_suite, verify_theorem, TheoremCheck, TheoremId, TheoremReport,
};
