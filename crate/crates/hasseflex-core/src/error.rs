//! Error type shared by the whole kernel.

use alloc::string::String;
use core::fmt;

/// Errors raised by kernel operations.
///
/// Failures of *mathematical statements under test* are never errors; they
/// are reported as data in a [`crate::report::VerificationReport`]. Errors
/// are reserved for contract violations (bad inputs, unsupported rings,
/// insufficient precision).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A variable name was not declared in the polynomial's variable list.
    UnknownVariable(String),
    /// Exact division failed; the divisor does not divide the dividend.
    NotDivisible,
    /// An operation required a nonzero polynomial.
    ZeroPolynomial,
    /// Reduction mod p hit a coefficient whose denominator is divisible by p.
    /// Carries the offending monomial in canonical text form.
    DenominatorDivisibleByP(String),
    /// Local inversion was asked to expand around a multiple root.
    NotASimpleRoot,
    /// A series computation ran out of precision before the quantity of
    /// interest was determined.
    InsufficientPrecision,
    /// A substitution did not cover the variables it needed to eliminate,
    /// or mixed incompatible variable lists.
    ArityMismatch,
    /// Numerological hypotheses of a construction were violated.
    Hypotheses(String),
    /// A prime was rejected (composite, or excluded by the tameness rules).
    BadPrime(u64),
    /// The requested computation is outside the supported ring catalog.
    Unsupported(String),
    /// A registered statement refuses the given parameters.
    Refused(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            Error::NotDivisible => write!(f, "not divisible"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::DenominatorDivisibleByP(m) => {
                write!(f, "denominator divisible by p at monomial {m}")
            }
            Error::NotASimpleRoot => write!(f, "not a simple root"),
            Error::InsufficientPrecision => write!(f, "insufficient series precision"),
            Error::ArityMismatch => write!(f, "arity mismatch in substitution"),
            Error::Hypotheses(s) => write!(f, "hypotheses violated: {s}"),
            Error::BadPrime(p) => write!(f, "bad prime {p}"),
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
            Error::Refused(s) => write!(f, "refused: {s}"),
        }
    }
}

impl core::error::Error for Error {}

/// Convenient result alias.
pub type Result<T> = core::result::Result<T, Error>;
