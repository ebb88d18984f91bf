//! Error taxonomy. Parse and validation failures are user errors; failed
//! preconditions are their own class so callers can exit differently; an
//! `InternalInconsistency` means two independent computations of the same
//! quantity disagreed and the result cannot be trusted.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("relation violated by module data: {0}")]
    RelationViolated(String),

    #[error("algebra is not finite dimensional (no vanishing degree up to path length {0})")]
    NotFiniteDimensional(usize),

    #[error("ideal is not admissible: {0}")]
    NotAdmissible(String),

    #[error("relation is not length-homogeneous: {0}")]
    NonHomogeneousRelation(String),

    #[error("algebra is not triangular (quiver has an oriented cycle)")]
    NotTriangular,

    #[error("algebra is not gentle: {0}")]
    NotGentle(String),

    #[error("algebra is not a cyclic Nakayama algebra: {0}")]
    NotNakayama(String),

    #[error("vertex {0} is not a sink, so its simple is not projective")]
    NotSimpleProjective(usize),

    #[error("component has no copy of the simple at vertex {0} in its generic dimension vector")]
    SimpleNotInSupport(usize),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Process exit code contract: 1 parse/validation, 2 failed precondition,
    /// 3 internal inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::Invalid(_)
            | Error::RelationViolated(_)
            | Error::NotFiniteDimensional(_)
            | Error::NotAdmissible(_)
            | Error::NonHomogeneousRelation(_) => 1,
            Error::NotTriangular
            | Error::NotGentle(_)
            | Error::NotNakayama(_)
            | Error::NotSimpleProjective(_)
            | Error::SimpleNotInSupport(_) => 2,
            Error::InternalInconsistency(_) => 3,
        }
    }
}
