use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Shape or ring mismatch between operands.
    #[error("structural error: {0}")]
    Structural(String),
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("inhomogeneous map: entry ({row}, {col}) has the wrong degree")]
    InhomogeneousMap { row: usize, col: usize },
    #[error("map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("{0} undefined for the zero module")]
    ZeroModule(&'static str),
    #[error("Matlis dual representable only for finite length")]
    NotFiniteLength,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("expected a cyclic module, found {0} generators")]
    NotCyclic(usize),
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
