//! Three independent certifiers: brute-force t-wise coverage, generator
//! rank checks (CPHF view), and a structural verifier for the recursive
//! strength-4 construction.

mod coverage;
mod cross;
mod rank;
mod structural;

pub use coverage::{
    brute_force_cost, verify_coverage, verify_matrix_coverage, CoverageReport, Witness,
    BRUTE_FORCE_LIMIT, COVERAGE_GUARD, WITNESS_CAP,
};
pub use cross::{cross_check, CrossCheckReport, StructuralVerdict};
pub use rank::{rank_of, verify_rank_cphf, verify_rank_cphf_where, RankCertificate};
pub use structural::{verify_recursive_structure, CaseReport, RecursiveReport};
