use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violated an operation's domain (range, alphabet, generator set).
    #[error("domain error: {0}")]
    Domain(String),
    /// Two quadratic numbers with different non-trivial radicands were combined.
    #[error("field mismatch: sqrt({0}) and sqrt({1}) do not share a quadratic field")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    /// A step or depth bound was exhausted.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// No continued-fraction writing of the expected shape was found.
    #[error("classification failed: {0}")]
    ClassificationFailed(String),
    #[error("morphism is not prolongable: {0}")]
    NotProlongable(String),
    /// The conjugating word `gamma(0)` minus its last letter is undefined.
    #[error("conjugation undefined: {0}")]
    ConjugationUndefined(String),
    #[error("internal consistency violated: {0}")]
    InternalConsistency(String),
    #[error("morphism is not in the monoid generated by {0}")]
    NotInMonoid(String),
    #[error("no fixed point: {0}")]
    NoFixedPoint(String),
    /// The linear equation for rho degenerates to `0 = 0`.
    #[error("ambiguous rho: {0}")]
    AmbiguousRho(String),
    #[error("not found: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
