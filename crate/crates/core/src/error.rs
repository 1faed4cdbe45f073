use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("cannot parse rational literal: {0}")]
    Parse(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("ill-defined map on a quotient: {0}")]
    IllDefined(String),
    #[error("axiom violation: {0}")]
    Axiom(String),
    #[error("not finitely generated projective: {0}")]
    NotProjective(String),
    #[error("vector does not lie in the expected subspace: {0}")]
    NotInSubspace(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
