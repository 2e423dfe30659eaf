//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at a singular configuration (r = 0, coincident electrons, ...).
    #[error("singular configuration: {0}")]
    Singular(String),

    /// Adaptive quadrature failed to reach the requested tolerance.
    #[error("quadrature failure: {0}")]
    Quadrature(String),

    /// ODE integration overflowed; carries the radius where it blew up.
    #[error("integration blew up at r = {radius:.6e}")]
    Blowup { radius: f64 },

    /// Root bracketing failed: no sign change over the given interval.
    #[error("no sign change in bracket [{lo}, {hi}] (f(lo) = {f_lo:.3e}, f(hi) = {f_hi:.3e})")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// Pieces of a glued solution disagree beyond tolerance.
    #[error("inconsistent solution pieces: {0}")]
    Inconsistent(String),

    /// Wavefunction not strictly positive where positivity is required.
    #[error("nonpositive wavefunction: {0}")]
    NonpositivePsi(String),

    /// Weight fails the admissibility condition it was assumed to satisfy.
    #[error("inadmissible weight: {0}")]
    InadmissibleWeight(String),

    /// Construction of an auxiliary profile violated its derivative bounds.
    #[error("profile construction failed: {0}")]
    Profile(String),

    /// Scan parameters cannot produce a valid result (e.g. wrong coupling sign).
    #[error("parameter failure: {0}")]
    Parameter(String),

    /// Analytic formula and independent numerical route disagree.
    #[error("analytic/numeric mismatch: {0}")]
    Formula(String),

    /// Configuration validation error, carrying the offending field path.
    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config { field: field.into(), message: message.into() }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
