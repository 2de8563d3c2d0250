//! Error type shared across the library.
//!
//! Contract violations that indicate caller bugs (mismatched variable
//! counts, revlex across degrees, reading an expansion past its cap) panic;
//! data-dependent failures are reported through this enum.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Degreewise dimensions disagree where equality was required.
    #[error("Hilbert functions differ in degree {degree}: {left} vs {right}")]
    HilbertMismatch { degree: u32, left: u64, right: u64 },

    /// A degreewise construction still produces minimal generators in the
    /// top margin degrees; the caller must raise the cap.
    #[error("{what}: new minimal generators at degree {degree} (cap {cap}); raise the cap")]
    StabilizationFailure { what: &'static str, degree: u32, cap: u32 },

    /// The requested cap is too small to even cover the input generators.
    #[error("{what}: cap {cap} too small, need at least {needed}")]
    InsufficientCap { what: &'static str, cap: u32, needed: u32 },

    /// A Hilbert function not attainable by the requested construction.
    #[error("infeasible Hilbert function: {reason}")]
    InfeasibleHilbert { reason: String },

    /// An operation that requires a Borel ideal received a non-Borel one.
    #[error("ideal is not Borel: {witness} is in the ideal but {missing} is not")]
    NotBorel { witness: String, missing: String },

    /// The colon formula requires that the base ideal avoid the pure powers.
    #[error("ideal contains the pure power {power}")]
    ContainsPurePower { power: String },

    /// An operation preconditioned on containing P received an ideal that
    /// misses one of the pure powers.
    #[error("ideal does not contain the pure power {power}")]
    MissingPurePower { power: String },

    /// Precondition on a plus-P transform not met.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A proved identity failed to hold along a transform or walk step;
    /// this indicates an implementation bug and is never swallowed.
    #[error("certificate failure in {step}: {detail}")]
    CertificateFailure { step: String, detail: String },

    /// A loop guaranteed to terminate exceeded its iteration guard.
    #[error("{what} exceeded the iteration limit of {limit}")]
    IterationLimit { what: &'static str, limit: usize },
}
