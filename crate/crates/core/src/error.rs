//! Error type shared by the whole crate.

use core::fmt;

use alloc::string::String;

/// Errors raised by domain checks and guarded operations.
///
/// All computations here are exact, so there are no numerical failure modes;
/// every variant is a violated precondition or an explicit refusal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A value required to be strictly positive was not.
    NonPositive(String),
    /// Division by zero (or a zero denominator in a quotient of minors).
    DivisionByZero(String),
    /// A rational literal could not be parsed.
    Parse(String),
    /// A cell, interval or index lies outside the rectangle.
    IndexOutOfRange(String),
    /// The set of cells is not an antichain.
    NotAntichain,
    /// An enumeration was refused because it exceeds the configured guard.
    SizeGuard(String),
    /// The requested exponent is outside the window of the direct formula;
    /// use `rho_power_any` instead.
    ExponentOutOfWindow(String),
    /// The interval is not corner-anchored, so the minor-quotient fast path
    /// does not apply; use the enumeration oracle.
    NotCornerAnchored(String),
    /// A rank-sequence sum has no terms, so its value is not a positive
    /// rational.
    EmptyOmegaFamily(String),
    /// A chain-sum profile is not consistent with any positive labeling.
    InconsistentProfile(String),
    /// A path collection is malformed (wrong endpoints, not disjoint, ...).
    MalformedCollection(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositive(msg) => write!(f, "value must be strictly positive: {msg}"),
            Error::DivisionByZero(msg) => write!(f, "division by zero: {msg}"),
            Error::Parse(msg) => write!(f, "cannot parse rational: {msg}"),
            Error::IndexOutOfRange(msg) => write!(f, "index out of range: {msg}"),
            Error::NotAntichain => write!(f, "cell set is not an antichain"),
            Error::SizeGuard(msg) => write!(f, "enumeration guard exceeded: {msg}"),
            Error::ExponentOutOfWindow(msg) => {
                write!(f, "exponent outside direct-formula window: {msg}")
            }
            Error::NotCornerAnchored(msg) => {
                write!(f, "interval is not corner-anchored, use the oracle: {msg}")
            }
            Error::EmptyOmegaFamily(msg) => write!(f, "empty rank-sequence family: {msg}"),
            Error::InconsistentProfile(msg) => write!(f, "inconsistent chain-sum profile: {msg}"),
            Error::MalformedCollection(msg) => write!(f, "malformed path collection: {msg}"),
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
