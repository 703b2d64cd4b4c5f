//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter is outside its mathematical domain (bad probability,
    /// nonpositive scale, too few cells, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A distribution family was requested with parameters violating its
    /// construction conditions (zero mean, finite variance, symmetry).
    #[error("construction error: {0}")]
    Construction(String),

    /// Autoregression coefficients with a characteristic root on or outside
    /// the unit circle.
    #[error("non-stationary coefficients: max characteristic root modulus {max_modulus}")]
    NonStationary { max_modulus: f64 },

    /// The lag design matrix is rank deficient (e.g. a constant series).
    #[error("singular lag design matrix")]
    SingularDesign,

    /// The scale estimating equation has no sign change in the search range.
    #[error("no root of the scale estimating equation in [{lo}, {hi}]")]
    NoRoot { lo: f64, hi: f64 },

    /// An EDF was requested over an empty sample.
    #[error("empty sample")]
    EmptySample,

    /// More Monte Carlo replicates failed than the harness tolerates.
    #[error("{failed} of {total} replicates failed (budget {budget})")]
    TooManyFailures {
        failed: usize,
        total: usize,
        budget: usize,
    },

    /// An oracle diagnostic needs the hidden truth of a simulated sample.
    #[error("oracle data unavailable: {0}")]
    OracleUnavailable(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }
}
