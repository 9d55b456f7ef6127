use thiserror::Error;

/// Errors shared across the crate.
///
/// The four domain errors (`NotEffective`, `WallBase`, `BoundaryAmbiguous`,
/// `RankDeficient`) map to CLI exit code 2; everything else is an input or
/// internal error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("configuration matrix has rank below n")]
    RankDeficient,

    #[error("weight vector lies outside the effective cone slice")]
    NotEffective,

    #[error("base weight vector lies on a wall")]
    WallBase,

    #[error("limit linearization is ambiguous: base has strictly semistable points")]
    BoundaryAmbiguous,

    #[error("degenerate slice plane")]
    DegenerateSlice,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Machine-readable name used in CLI error payloads.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::EmptyInput(_) => "EmptyInput",
            Error::RankDeficient => "RankDeficient",
            Error::NotEffective => "NotEffective",
            Error::WallBase => "WallBase",
            Error::BoundaryAmbiguous => "BoundaryAmbiguous",
            Error::DegenerateSlice => "DegenerateSlice",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }

    /// True for the domain errors that the CLI reports with exit code 2.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NotEffective | Error::WallBase | Error::BoundaryAmbiguous | Error::RankDeficient
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
