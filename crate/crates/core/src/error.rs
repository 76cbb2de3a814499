use num_bigint::BigInt;
use thiserror::Error;

/// Errors reported by the library.
///
/// Arithmetic that is guaranteed exact by the theory (integer quotients
/// certified by a divisibility argument) reports [`Error::Internal`] if it
/// ever fails; such a failure indicates an implementation bug, not bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Seifert invariant ({alpha}, {beta}): {reason}")]
    InvalidInvariant {
        alpha: BigInt,
        beta: BigInt,
        reason: &'static str,
    },

    #[error("covering degree must be a positive integer, got {0}")]
    InvalidDegree(BigInt),

    #[error("rational denominator must be nonzero")]
    ZeroDenominator,

    #[error("cannot parse {input:?} as a rational: {reason}")]
    ParseRational { input: String, reason: &'static str },

    /// The existence condition beta1*alpha2 = k*beta2*alpha1 fails.
    #[error("no degree-{k} covering: beta1*alpha2 = {lhs} but k*beta2*alpha1 = {rhs}")]
    RatioCondition { k: BigInt, lhs: BigInt, rhs: BigInt },

    #[error("point coordinate out of range: {0}")]
    InvalidPoint(String),

    /// Serialized covering data failed re-validation, naming the invariant.
    #[error("covering data fails invariant: {0}")]
    SpecInvariant(String),

    #[error("fiber degree is undefined on the central fiber (r = 0); central preimage count is the t-multiplier")]
    CentralFiberDegree,

    #[error("internal arithmetic violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
