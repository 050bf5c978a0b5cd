//! Shared fixtures for the unit-test suites.

use crate::hypercore::{HyperTournament, VertexId};

/// The four-vertex, arity-3 structure used as the standard small fixture:
/// subsets {1,2,3}, {1,2,4}, {1,3,4}, {2,3,4} carrying the tuples
/// (1,2,3), (2,4,1), (3,4,1), (2,3,4). It is strong and its canonical
/// spanning cycle is 1 -> 2 -> 3 -> 4 -> 1.
pub(crate) fn h4() -> HyperTournament {
    HyperTournament::build(
        3,
        4,
        &[vec![1, 2, 3], vec![2, 4, 1], vec![3, 4, 1], vec![2, 3, 4]],
    )
    .expect("fixture is a complete structure")
}

/// Shorthand for building vertex-id lists in tests.
pub(crate) fn ids(raw: &[u32]) -> Vec<VertexId> {
    raw.iter().copied().map(VertexId::new).collect()
}
