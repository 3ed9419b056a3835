//! Cycle-continuous mappings: verification, search, and composition.

mod brute;
mod compose;
mod guide;
mod local;
mod mapping;
mod search;
mod verify;

pub use brute::{brute_force_cc, DEFAULT_BRUTE_FORCE_BOUND};
pub use compose::{compose_three_join_maps, compose_two_join_maps};
pub use guide::{extract_guiding_hom, factor_through_copy, CopyFactor};
pub use local::is_vertex_local;
pub use mapping::EdgeMapping;
pub use search::{
    exists_cc, search_cc, vertex_order, Profile, SearchConfig, SearchMode, SearchOutcome,
    SearchStatus,
};
pub use verify::{find_violation, verify_cc, VerifyMode, Violation};
