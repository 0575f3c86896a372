use thiserror::Error;

/// Errors produced by the numerical modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix must be real")]
    NotReal,

    #[error("symmetry defect {defect:e} exceeds limit {limit:e}")]
    SymmetryDefect { defect: f64, limit: f64 },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("matrix is empty")]
    EmptyMatrix,

    #[error("theta must be positive, got {0}")]
    NonPositiveTheta(f64),

    #[error("series argument |z| = {z} outside the supported range |z| <= {max}")]
    SeriesOutOfRange { z: f64, max: f64 },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("kernel entry requested on the diagonal at x = {0}; the diagonal is only defined through the Hankel-square extension")]
    DiagonalEntry(usize),

    #[error("condition report did not pass; cannot extract a symbol")]
    FailedConditionReport,

    #[error("tail bound {bound:e} beyond the requested sum length exceeds the certification threshold {need:e}")]
    InsufficientTail { bound: f64, need: f64 },

    #[error("symbol stores {have} values but {needed} are required")]
    SymbolTooShort { needed: usize, have: usize },

    #[error("weighted-sum bound missing; the trace formula needs a bound on the weighted tail")]
    MissingWeightedBound,

    #[error("invalid sample pairs: {0}")]
    InvalidSamples(&'static str),

    #[error("quadrature needs at least {min} nodes, got {got}")]
    QuadratureNodes { got: usize, min: usize },

    #[error("parameter must lie strictly inside the unit disk, got |a| = {0}")]
    OutsideUnitDisk(f64),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}

pub type Result<T> = std::result::Result<T, Error>;
