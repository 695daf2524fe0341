//! Planar-F-Deletion by iterative compression. The disjoint variant marks
//! bags of a decomposition of `G - X`, branches on the marked part of the
//! solution and searches one representative per cluster for the rest.

mod brute;
mod family;
mod representatives;
mod solver;

pub use brute::{f_deletion_brute_force, BRUTE_FORCE_CAP};
pub use family::{is_planar_small, treewidth_bound_for_family, Family};
pub use representatives::{
    compute_representatives, enumerate_test_graphs, test_set, RepresentativeClass,
    RepresentativeTable, TestGraph, DEFAULT_SIGNATURE_WORK_CAP, REPRESENTATIVE_CLUSTER_CAP,
    TEST_ENUMERATION_CAP,
};
pub use solver::{
    disjoint_solver, planar_f_deletion, solve_with_decomposition, DisjointInstance, SolveStats,
    Solver, SolverOptions,
};
