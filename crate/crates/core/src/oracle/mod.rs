//! Ground truth by exhaustion: enumeration, flip graphs, exact counting,
//! Hamiltonian search and Gray-code verification.

mod determinant;
mod enumerate;
mod flip_graph;
mod hamilton;
mod verify;

pub use determinant::{count_arborescences_matrix_tree, determinant_bareiss, laplacian};
pub use enumerate::{enumerate_arborescences, enumerate_arborescences_with_budget};
pub use flip_graph::{build_flip_graph, build_flip_graph_with_budget, FlipGraph};
pub use hamilton::{
    find_hamiltonian_cycle, find_hamiltonian_cycle_bruteforce, find_hamiltonian_path,
    find_hamiltonian_path_bruteforce, SearchBudget,
};
pub use verify::{verify_arc_lists, verify_gray_code, CheckResult, VerifyReport};

/// Default cap on the number of arborescences an enumeration may produce.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 20_000;
/// Default cap on the node count of a flip graph handed to Hamiltonian search.
pub const DEFAULT_SEARCH_BUDGET: usize = 5_000;
