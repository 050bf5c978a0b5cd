//! Error kinds shared across the crate.

use thiserror::Error;

/// All failure modes surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A tuple, id, or parameter combination that violates basic shape rules.
    #[error("bad tuple: {0}")]
    BadTuple(String),

    /// Two hyperarcs were declared on the same vertex subset.
    #[error("duplicate subset {{{}}}", join_ids(.0))]
    DuplicateSubset(Vec<u32>),

    /// A structure that must carry one hyperarc per subset is missing some.
    #[error("missing subsets: expected {expected} hyperarcs, found {found}")]
    MissingSubset { expected: u64, found: u64 },

    /// Text input that does not follow the expected format.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Parameters outside the range an operation supports.
    #[error("range unsupported: {0}")]
    RangeUnsupported(String),

    /// The operation requires a strong input and the argument is not strong.
    #[error("input is not strong")]
    NotStrong,

    /// A cycle argument that is not structurally a cycle of the instance.
    #[error("bad cycle: {0}")]
    BadCycle(String),

    /// A bounded search or enumeration ran out of its configured budget.
    #[error("budget exceeded")]
    BudgetExceeded,

    /// An invariant that the theory guarantees failed to hold at runtime.
    /// Seeing this error means the implementation, not the input, is wrong.
    #[error("internal guarantee violated: {0}")]
    InternalGuaranteeViolated(String),
}

fn join_ids(ids: &[u32]) -> String {
    ids.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub type Result<T> = std::result::Result<T, Error>;
