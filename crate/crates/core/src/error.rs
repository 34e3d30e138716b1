use thiserror::Error;

/// Errors raised by the exact-arithmetic routines.
///
/// Variants are grouped by how a caller usually reacts to them: malformed
/// input, a violated mathematical precondition, a resource limit, or an
/// internal consistency failure (which always indicates a bug).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("sequence must be nonempty")]
    EmptySequence,

    #[error("sequence must have even length, got {0}")]
    OddLength(usize),

    #[error("partial continuant indices out of range: i={i}, j={j}, n={n}")]
    IndexRange { i: usize, j: usize, n: usize },

    #[error("no positive continued fraction of the requested parity exists for {0}")]
    ParityImpossible(String),

    #[error("incompatible radicands {0} and {1}")]
    IncompatibleRadicands(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("determinant must be +1 or -1, got {0}")]
    Determinant(String),

    #[error("form is not associated to an SL(2,Z) matrix: {0}")]
    NotAssociated(String),

    #[error("not a Markov triple: ({0}, {1}, {2})")]
    NotMarkov(String, String, String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
