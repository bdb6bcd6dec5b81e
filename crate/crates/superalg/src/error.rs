//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgError {
    #[error("{0} is not an odd prime")]
    BadPrime(u64),
    #[error("prime {0} outside supported range 3..={1} (override with SUPERALG_MAX_P)")]
    PrimeOutOfRange(u64, u64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("q[{0}][{1}] must be nonzero")]
    ZeroQ(usize, usize),
    #[error("degree map is not a filtration: {0}")]
    NotFiltered(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("relation violated: {0}")]
    RelationFailure(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
