//! Ladder and hypercube primitives, the contraction and duplication lifts,
//! and the Gray code construction for clique-support digraphs.

mod engine;
mod hypercube;
mod ladder;
mod lift;
mod spanning;
mod structure;
mod types;

pub use engine::{gray_code_clique_support, gray_code_with_options, CounterexampleBundle, GrayPath, Options, Outcome};
pub use hypercube::{hypercube_ham_cycle_through_edge, hypercube_ham_path_from};
pub use ladder::{ladder_ham_path, ladder_walk_from, ladder_walk_to_partner, Ladder, LadderVertex, Side};
pub use lift::{lift_contraction_path, lift_duplication_path, ContractionLift, Fiber};
pub use spanning::{bidirected_complete, is_strong_revolving_door, spanning_tree_pivot_gray_code, Edge, SpanningTreeCode};
pub use structure::{detect_flip_clique_structure, FlipCliqueStructure};
pub use types::{choose_pivot_pair, partition_types, PivotArcs, TypePartition};
