use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graphs have mismatched vertex counts ({expected} vs {found})")]
    MismatchedVertexCount { expected: usize, found: usize },

    #[error("empty input list")]
    EmptyInput,

    #[error("function arity {expected} does not match {found} supplied graphs")]
    ArityMismatch { expected: usize, found: usize },

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    OutOfRangeVertex { vertex: usize, n: usize },

    #[error("vertex {0} appears more than once")]
    DuplicateVertex(usize),

    #[error("{what}: size {size} exceeds the limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("variable x{0} is outside the function's arity")]
    OutOfRangeVariable(usize),

    #[error("boolean function is not monotone")]
    NotMonotone,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("not a permutation")]
    NotAPermutation,

    #[error("class {0} is not supported here")]
    UnsupportedTag(String),

    #[error("class {0} is not intersection-closed")]
    NotIntersectionClosed(String),

    #[error("graph is not a member of class {0}")]
    NotInClass(String),

    #[error("graph is not an equivalence graph")]
    NotEquivalenceGraph,

    #[error("search budget exceeded: needs {needed}, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("no twin class leaves at most {budget} vertices outside (smallest remainder is {remainder})")]
    NoBigTwinClass { remainder: usize, budget: usize },

    #[error("decomposition failed certification: {0}")]
    CertificationFailed(String),

    #[error("perfectness oracles disagree on graph {0}")]
    OracleDisagreement(String),

    #[error("unsupported expression: {0}")]
    UnsupportedExpression(String),

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("graph is rejected by the {0} labeling scheme")]
    SchemeRejectsGraph(String),

    #[error("malformed label: {0}")]
    MalformedLabel(String),

    #[error("malformed input at byte {offset}: {message}")]
    MalformedInput { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_size(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::SizeLimitExceeded { what, size, limit })
    } else {
        Ok(())
    }
}
