//! Survivable network topology toolkit.
//!
//! Builds k-connected topologies from a symmetric link-cost matrix by
//! accumulated-cost node numbering followed by a complete bipartite
//! construction, generates the classical comparator families (sequential,
//! circulant ring, hypercube), verifies vertex connectivity exactly with
//! disjoint-path and vertex-cut certificates, reproduces the per-method
//! link-count comparison, and measures survivability under random node or
//! link failures.
//!
//! The pipeline:
//!
//! 1. [`costmodel`] — parse the cost matrix, sum each node's row, rank
//!    nodes `1..=n` by ascending accumulated cost.
//! 2. [`generators`] — build a topology on the ranks.
//! 3. [`connectivity`] — measure exactly what connectivity was achieved,
//!    with certificates that can be re-checked independently.
//! 4. [`analysis`] / [`survivsim`] — compare methods and stress the result
//!    under failures.
//!
//! With the `parallel` feature (on by default) the heavy inner loops — the
//! all-pairs connectivity sweep, Monte Carlo failure trials, and exhaustive
//! subset enumeration — fan out via rayon. The `*_seq` variants are always
//! available and return bit-identical results, which the test suite checks.

pub mod analysis;
mod combi;
pub mod connectivity;
pub mod costmodel;
mod flow;
pub mod generators;
pub mod survivsim;
pub mod topology;

pub use analysis::{
    compare, link_count_formula, total_cost, AnalysisError, Comparison, ComparisonRow,
};
pub use connectivity::{
    brute_force_connectivity, cut_disconnects, is_k_connected, local_connectivity,
    validate_disjoint_paths, vertex_connectivity, vertex_connectivity_seq, Certificate,
    ConnectivityError, ConnectivityReport, KConnectedVerdict, LocalConnectivity,
};
pub use costmodel::{
    accumulated_costs, number_nodes, AccumulatedCosts, CostMatrix, CostMatrixError, NodeLabel,
    Numbering,
};
pub use generators::{
    generate, generate_bipartite, generate_harary, generate_hypercube, generate_sequential,
    Generated, GeneratorError, GeneratorParams, GeneratorWarning,
};
pub use survivsim::{
    exhaustive_survivability, exhaustive_survivability_seq, simulate, simulate_seq,
    ExactSurvivability, FailureMode, SimError, SurvivabilityReport, TrialConfig,
};
pub use topology::{EdgeListDoc, Method, Partition, Topology, TopologyError};

#[cfg(test)]
pub(crate) mod testdata {
    use crate::costmodel::CostMatrix;

    /// 7-node cost matrix used as the reference instance across the tests.
    pub const REFERENCE_MATRIX_CSV: &str = "\
label,A,B,C,D,E,F,G
A,0,4,2,4,3,1,5
B,4,0,4,5,2,3,2
C,2,4,0,1,4,3,1
D,4,5,1,0,2,2,4
E,3,2,4,2,0,1,10
F,1,3,3,2,1,0,3
G,5,2,1,4,10,3,0
";

    pub fn reference_matrix() -> CostMatrix {
        CostMatrix::parse_csv(REFERENCE_MATRIX_CSV).expect("reference matrix is valid")
    }
}
