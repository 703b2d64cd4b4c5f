//! Symmetrized Pearson chi-square test for normality of AR(p) innovations
//! when observations carry sporadic gross errors.
//!
//! The crate simulates contaminated autoregressions, fits them, runs the
//! symmetrized chi-square test on the residuals, and evaluates the matching
//! asymptotics (noncentrality, limiting power, and the contamination
//! robustness bound), plus a reproducible Monte Carlo harness tying the two
//! together.

pub mod ar;
pub mod asympt;
pub mod dist;
pub mod edf;
pub mod error;
pub mod estimate;
pub mod mc;
pub mod pearson;
pub mod special;

pub use ar::{check_stationary, ARModelSpec, ObservedSample, ScenarioSpec};
pub use asympt::AsymptoticContext;
pub use dist::{AlternativeH, ContaminationPi, NormalScale};
pub use edf::{Edf, SymmetrizedEdf};
pub use error::Error;
pub use estimate::{BetaEstimator, FitResult, MeanEstimator};
pub use mc::{ExperimentConfig, PowerResult};
pub use pearson::{CellCounts, Partition, RunOptions, TestReport};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
