use thiserror::Error;

/// Errors raised by the computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter violates an operation's precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The request is well-formed but beyond the supported computation ceiling.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Two partitions (or a partition and a composition) of different sizes.
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    /// A polynomial expected to be symmetric is not. `exponent` has a
    /// coefficient different from its sorted rearrangement `sorted`.
    #[error("polynomial is not symmetric: coefficient of x^{exponent:?} differs from x^{sorted:?}{}",
        block.map(|b| format!(" (block {b})")).unwrap_or_default())]
    NotSymmetric {
        exponent: Vec<u32>,
        sorted: Vec<u32>,
        block: Option<&'static str>,
    },

    /// An internal cross-check disagreed (e.g. an interpolation holdout).
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
