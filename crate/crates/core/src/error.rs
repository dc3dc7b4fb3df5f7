use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use crate::setkit::Subset;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what}: instance size {size} exceeds budget {limit}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("block {block} of the independent set is not a full star")]
    NotAStar { block: Subset },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("characterization violation: no permutation reproduces the independent set")]
    CharacterizationViolation(Box<Counterexample>),

    #[error("no total coloring after {attempts} attempts")]
    RetriesExhausted { attempts: usize },
}

/// Everything needed to replay a failed match of a maximum independent set
/// against the sets `S_sigma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub r: usize,
    pub t: usize,
    /// Vertex indices of the independent set.
    pub members: Vec<usize>,
    /// Arcs `(i, j)` of the center digraph, 1-based.
    pub arcs: Vec<(usize, usize)>,
    /// The permutation that was tried.
    pub attempted: Vec<usize>,
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
