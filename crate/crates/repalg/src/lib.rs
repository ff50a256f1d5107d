//! Exact computation with finite-dimensional associative algebras over prime
//! fields GF(p): structure-constant algebras, Krull-Schmidt module theory,
//! extension certificates (split / separable / Frobenius / H-separable /
//! centrally projective), finite group machinery, and representation
//! dimension bounds via global dimensions of endomorphism algebras.
//!
//! All arithmetic is exact. Every certificate emitted anywhere in the crate
//! is re-verified by direct computation before it is returned.

pub mod algebra;
pub mod ext;
pub mod exec;
pub mod fmt;
pub mod group;
pub mod linalg;
pub mod module;
pub mod oracle;
pub mod poly;
pub mod repdim;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
