use thiserror::Error;

use crate::ring::{Ambient, Gen};

/// Errors surfaced by engine operations with genuine runtime failure modes.
///
/// Ambient mismatches in ring arithmetic are treated as programming errors
/// and panic instead; everything a caller can trip with bad parameters goes
/// through this enum.
#[derive(Debug, Error)]
pub enum Error {
    #[error("substitution table has no entry for generator {0:?}")]
    MissingSubstitution(Gen),

    #[error("ambient mismatch: expected {expected:?}, got {got:?}")]
    AmbientMismatch { expected: Ambient, got: Ambient },

    #[error("{op}: parameter out of range: {detail}")]
    OutOfRange { op: &'static str, detail: String },

    #[error("multinomial parts invalid: {0}")]
    BadMultinomial(String),

    #[error("Brill-Noether number rho({g},{r},{d}) = {rho} is nonzero; count undefined")]
    RhoNonzero { g: i64, r: i64, d: i64, rho: i64 },

    #[error("slope undefined: {0}")]
    SlopeUndefined(String),

    #[error("no tabulated certificate data for (g, n) = ({g}, {n}): {reason}")]
    UnsupportedCertificate { g: u32, n: u32, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn out_of_range(op: &'static str, detail: impl Into<String>) -> Self {
        Error::OutOfRange {
            op,
            detail: detail.into(),
        }
    }
}
