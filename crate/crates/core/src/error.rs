//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Scene directory is missing views, has inconsistent view sizes, or
    /// otherwise does not follow the expected layout.
    #[error("malformed scene: {0}")]
    MalformedScene(String),

    /// PFM stream could not be decoded.
    #[error("pfm parse error: {0}")]
    PfmParse(String),

    /// Input array contained non-finite samples or violated a precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Disparity grid violates its invariants (empty, reversed, bad interval).
    #[error("invalid disparity grid: {0}")]
    InvalidGrid(String),

    /// Two arrays that must agree in shape do not.
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    /// Ground-truth disparity falls outside the grid and clamping is disabled.
    #[error("disparity {value} outside grid range [{min}, {max}]")]
    OutOfRange { value: f64, min: f64, max: f64 },

    /// Division by zero disparity in the depth conversion.
    #[error("division by zero disparity")]
    DivisionByZero,

    /// Metric evaluated over an empty mask.
    #[error("metric mask selects no pixels")]
    EmptyMask,

    /// Training produced a non-finite loss or parameter.
    #[error("training diverged at step {step}")]
    TrainingDiverged { step: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),
}

pub type Result<T> = std::result::Result<T, Error>;
