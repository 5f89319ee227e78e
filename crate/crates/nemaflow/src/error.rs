//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration value (grid size, exponent, time step, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// Two fields that must live on the same grid do not.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// A pointwise constraint (unit director, density bounds) is violated
    /// beyond the documented tolerance.
    #[error("constraint violation: {what} (magnitude {magnitude:.3e})")]
    Constraint { what: &'static str, magnitude: f64 },

    /// The density dropped below half its configured lower bound; the
    /// transport step is no longer trustworthy.
    #[error("stability error: density fell to {min:.6e} (floor {floor:.6e})")]
    DensityFloor { min: f64, floor: f64 },

    /// Non-finite values appeared during time stepping. This is a legitimate
    /// outcome for a local-in-time model; the step index is retained.
    #[error("blow-up detected at step {step} (t = {time:.6e})")]
    BlowUp { step: usize, time: f64 },

    /// The director magnitude fell below 1/2 somewhere; renormalization is
    /// meaningless past this point.
    #[error("director degenerated: min |d| = {min_norm:.6e}")]
    DirectorDegenerate { min_norm: f64 },

    /// Input data outside what the solver evolves (e.g. vacuum density).
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// API misuse that is not a configuration-file problem (window too
    /// short, missing records, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// Config file could not be parsed; carries the offending key/line when
    /// the underlying parser reports them.
    #[error("config parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
