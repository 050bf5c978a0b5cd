//! Toolkit for directed hypergraphs with tuple-ordered arcs: complete
//! structures (one ordered tuple per k-subset), spanning paths and cycles,
//! degeneration of a strong structure into a strong tournament generated by
//! its arcs, pancyclicity checks, path covers and independence, domination,
//! and the counting facts behind the degeneration's matching step.
//!
//! # Layout
//!
//! - [`hypercore`] — vertex/arc/structure types, subset combinatorics,
//!   seeded random generators, and the generated digraph.
//! - [`connectivity`] — paths, cycles, strongness, 2-step domination.
//! - [`hamiltonian`] — spanning paths and cycles with guarantee-aware
//!   error contracts.
//! - [`pancyclic`] — anchored cycles of every length.
//! - [`degenerate`] — the cycle-plus-matching construction of a strong
//!   generated tournament, membership certificates, enumeration of all
//!   generated tournaments, and the counterexample search.
//! - [`covers`] — exhaustive path covers and independence numbers, with
//!   the cover/independence chain report.
//! - [`lemmas`] — pair-occurrence profiles and bounds along cycles, and
//!   the exact matching-feasibility inequality.
//! - [`formats`] — canonical plain-text serialization (`.kht`, `.trn`,
//!   `.cert`).
//!
//! # Conventions
//!
//! Vertices are `1..=n` ([`hypercore::VertexId`]). All iteration orders are
//! canonical (sorted), every search returns its first hit in that order,
//! and all randomness flows through explicitly seeded generators, so every
//! function here is deterministic given its inputs.

pub mod connectivity;
pub mod covers;
pub mod degenerate;
pub mod error;
pub mod formats;
pub mod hamiltonian;
pub mod hypercore;
pub mod lemmas;
pub mod pancyclic;

mod search;
#[cfg(test)]
pub(crate) mod testutil;

pub use connectivity::{
    find_path, is_strong, random_strong_tournament, two_kings, HyperCycle, HyperPath,
};
pub use covers::{
    digraph_independence_number, digraph_min_path_cover, gallai_milgram_chain,
    independence_number, lift_d_path, min_path_cover, CoverReport, PathCover,
};
pub use degenerate::{
    build_bipartite, count_strong_members, degenerate_tournament, degeneration_range_supported,
    enumerate_th, max_matching, search_no_strong_witness, verify_membership, BipartiteInstance,
    GenerationCertificate, Matching, MembershipReport, MembershipViolation,
};
pub use error::{Error, Result};
pub use hamiltonian::{hamiltonian_cycle, hamiltonian_path};
pub use hypercore::{
    binomial, derive_seed, k_subsets, random_hyperdigraph, random_tournament, subset_rank,
    subset_unrank, Digraph, HyperArc, HyperDigraph, HyperTournament, Tournament, VertexId,
};
pub use lemmas::{
    check_cycle_bounds, check_matching_inequality, pair_occurrence_profile, BoundCheck,
    CycleBoundsVerdict, InequalityCheck, PairOccurrenceProfile,
};
pub use pancyclic::{cycle_through, is_vertex_pancyclic, pancyclic_hyperarcs_on_cycle, CycleAnchor};
