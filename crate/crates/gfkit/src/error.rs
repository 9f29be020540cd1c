//! Error type shared by all modules of the crate.

use std::error::Error as StdError;
use std::fmt;

/// Everything that can go wrong across the crate, from bad user input to
/// internal invariant violations.
///
/// The three coarse classes matter to callers: ordinary input errors,
/// [`Error::Capacity`] (an exhaustive scan or discrete log would exceed the
/// configured bound), and [`Error::Internal`] (a structural invariant that
/// should hold by construction failed, i.e. a defect, not a usage problem).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A value that had to be prime was not.
    NotPrime(u64),
    /// A modulus or field order does not fit the supported integer range.
    Overflow(String),
    /// Input rejected for a reason not covered by a more specific variant.
    InvalidArgument(String),
    /// CRT moduli must be pairwise coprime; this pair is not.
    NotCoprime { a: u64, b: u64 },
    /// The residue is not invertible modulo the given modulus.
    NotUnit { value: u64, modulus: u64 },
    /// U(n) is not cyclic, so it has no single generator.
    UnitsNotCyclic(u64),
    /// Mixed characteristics in a polynomial operation.
    CharacteristicMismatch { left: u64, right: u64 },
    /// Division by the zero polynomial.
    ZeroPolyDivision,
    /// The operation needs a non-constant polynomial modulus.
    ConstantModulus,
    /// Text that could not be parsed as a polynomial or element.
    Parse(String),
    /// A candidate field modulus that is not irreducible; the degree of a
    /// nontrivial factor is reported as evidence.
    ReducibleModulus { factor_degree: usize },
    /// Elements of distinct fields were mixed, or a spec does not match.
    SpecMismatch,
    /// Zero has no multiplicative inverse or order.
    ZeroElement,
    /// The requested subfield degree must divide the field degree.
    NotADivisor { k: u64, n: u64 },
    /// A subgroup or subfield was passed to a group it does not belong to.
    Foreign(String),
    /// An exhaustive operation would visit more elements than allowed.
    Capacity { required: u128, limit: u64 },
    /// A structural invariant failed; this signals a defect in the library.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::Overflow(what) => write!(f, "value out of range: {what}"),
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
            Error::NotCoprime { a, b } => {
                write!(f, "moduli {a} and {b} are not coprime")
            }
            Error::NotUnit { value, modulus } => {
                write!(f, "{value} is not a unit modulo {modulus}")
            }
            Error::UnitsNotCyclic(n) => {
                write!(f, "the unit group of Z/{n}Z is not cyclic")
            }
            Error::CharacteristicMismatch { left, right } => {
                write!(f, "mixed characteristics {left} and {right}")
            }
            Error::ZeroPolyDivision => write!(f, "division by the zero polynomial"),
            Error::ConstantModulus => {
                write!(f, "a constant polynomial cannot be used as a modulus")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::ReducibleModulus { factor_degree } => write!(
                f,
                "modulus is reducible (it has an irreducible factor of degree {factor_degree})"
            ),
            Error::SpecMismatch => write!(f, "elements belong to different fields"),
            Error::ZeroElement => write!(f, "zero has no multiplicative inverse or order"),
            Error::NotADivisor { k, n } => {
                write!(f, "{k} does not divide the field degree {n}")
            }
            Error::Foreign(msg) => write!(f, "{msg}"),
            Error::Capacity { required, limit } => write!(
                f,
                "operation needs an exhaustive scan over {required} elements, above the limit {limit}"
            ),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl StdError for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
