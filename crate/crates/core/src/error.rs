//! Error kinds shared across the crate.
//!
//! The split matters to callers: `Domain`, `Precondition` and `Integrity`
//! signal bad or inconsistent *inputs*, while `Certification`,
//! `CertificationImpossible`, `AuditFailure` and `CoverageFailure` signal
//! that a requested *certificate* could not be established.  The command-line
//! front end maps the first group to exit code 2 and the second to exit
//! code 3.

use crate::exact::Int;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of the operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Input data is internally inconsistent (parity, integrality, ...).
    #[error("inconsistent input: {0}")]
    Integrity(String),

    /// An interval-chain certificate broke down at level `n`.
    #[error("certification failed at n = {n}: {reason}")]
    Certification { n: Int, reason: String },

    /// The data cannot support the requested certificate at all.
    #[error("certification impossible: {0}")]
    CertificationImpossible(String),

    /// An exhaustive coverage audit found an unwitnessed genus.
    #[error("audit failed: smallest uncovered genus is {smallest_uncovered}")]
    AuditFailure { smallest_uncovered: Int },

    /// No realization witness exists for the pair (d, g).
    #[error("no realization witness for degree {d}, genus {g}")]
    CoverageFailure { d: Int, g: Int },
}

pub type Result<T> = std::result::Result<T, Error>;
