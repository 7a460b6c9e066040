use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::rational::Rational;

/// Errors for every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside an operation's domain (e.g. `n = 0` where `n >= 1` is required).
    Domain(&'static str),
    /// An `(m, n)` pair that is not a valid Euclid seed; names the violated condition.
    InvalidSeed { m: u128, n: u128, reason: &'static str },
    /// A prime was required.
    NotPrime(u128),
    /// Sides fail `leg1² + leg2² = hyp²`; carries the exact residual.
    NonPythagorean { residual: Rational },
    /// A rational could not be built or parsed.
    InvalidRational(String),
    /// A triangle falls outside the normalized family a law requires.
    Contract(&'static str),
    /// Unknown claim id; carries the ids the registry does know.
    UnknownClaim { id: String, known: Vec<&'static str> },
    /// A claim was invoked without one of its required bounds.
    MissingBound { claim: String, bound: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidSeed { m, n, reason } => {
                write!(f, "invalid Euclid seed (m={m}, n={n}): {reason}")
            }
            Error::NotPrime(v) => write!(f, "{v} is not prime"),
            Error::NonPythagorean { residual } => {
                write!(f, "sides are not exactly Pythagorean (residual {residual})")
            }
            Error::InvalidRational(s) => write!(f, "invalid rational: {s}"),
            Error::Contract(msg) => write!(f, "contract violation: {msg}"),
            Error::UnknownClaim { id, known } => {
                write!(f, "unknown claim id {id:?}; known ids: ")?;
                for (i, k) in known.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{k}")?;
                }
                Ok(())
            }
            Error::MissingBound { claim, bound } => {
                write!(f, "claim {claim} requires bound {bound:?}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
