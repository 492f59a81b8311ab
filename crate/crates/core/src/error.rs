//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by constructors and structural preconditions.
///
/// Law violations discovered during verification are not errors; they are
/// recorded in a [`crate::report::VerificationReport`]. An `Error` means the
/// input is malformed or a hard precondition (bijectivity, symmetry,
/// well-definedness) fails, so the requested object cannot be built at all.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("not an identity arrow: {0}")]
    NotAnIdentity(String),
    #[error("antipode is not bijective between the counital subalgebras: {0}")]
    AntipodeNotBijectiveOnCounital(String),
    #[error("antipode matrix is not invertible")]
    AntipodeNotInvertible,
    #[error("partial action is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("weak Hopf algebra is not the algebra of the given groupoid: {0}")]
    NotAGroupoidAlgebra(String),
    #[error("subspace is not a right ideal: {0}")]
    NotARightIdeal(String),
    #[error("subspace is not a unital subalgebra: {0}")]
    NotAUnitalSubalgebra(String),
    #[error("multiplication does not descend to the quotient: {0}")]
    NotWellDefined(String),
    #[error("span is not closed under the operation: {0}")]
    NotClosed(String),
    #[error("linear extension is inconsistent: {0}")]
    InconsistentExtension(String),
    #[error("enumeration bound exceeded: size {size} is over the bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
