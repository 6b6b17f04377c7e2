use crate::mask::Mask;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator '{0}' is not a non-trivial involution")]
    NonInvolution(String),
    #[error("group closure exceeds size cap of {0} elements")]
    SizeCapExceeded(usize),
    #[error("malformed group spec: {0}")]
    MalformedSpec(String),
    #[error("unknown generator label '{0}'")]
    UnknownLabel(String),
    #[error("graph is not 2-acyclic (witness 2-cycle through vertices {v} and {u} with labels {alpha:?}, {beta:?})")]
    NotTwoAcyclic { v: u32, u: u32, alpha: Mask, beta: Mask },
    #[error("search budget exceeded ({0} states)")]
    BudgetExceeded(u64),
    #[error("generator alphabets do not match: {0}")]
    LabelMismatch(String),
    #[error("groups are not compatible, witness word '{0}'")]
    NotCompatible(String),
    #[error("unknown catalog family '{0}'")]
    UnknownFamily(String),
    #[error("bad catalog parameters: {0}")]
    BadParams(String),
    #[error("acyclicity guard too weak: {0}")]
    GuardTooWeak(String),
    #[error("malformed dual path: {0}")]
    MalformedDualPath(String),
    #[error("hypergraph n-acyclicity is only defined for n >= 3 (got {0})")]
    BadAcyclicityBound(usize),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
