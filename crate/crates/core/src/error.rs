use thiserror::Error;

use crate::composition_algebras::AlgebraTag;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("composition algebra tags differ: {0:?} vs {1:?}")]
    TagMismatch(AlgebraTag, AlgebraTag),
    #[error("unknown case id `{0}`")]
    UnknownCase(String),
    #[error("parameter n = {n} is invalid for case {case}: {reason}")]
    InvalidParameter { case: String, n: usize, reason: String },
    #[error("pfaffian of an odd-dimensional ({0}) matrix")]
    OddDimension(usize),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("case {0} carries no bracket")]
    NoBracket(String),
    #[error("subspace is not invariant (residual {0:.3e})")]
    NotInvariant(f64),
    #[error("numeric rank is ambiguous: singular value {0:.3e} near the threshold")]
    RankAmbiguity(f64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("quadrature order too low: order-doubling disagreement {0:.3e}")]
    Quadrature(f64),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
