use alloc::string::String;
use core::fmt;

/// Everything that can go wrong inside the core crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested modulus failed the primality check.
    NotPrime(u64),
    /// Moduli are limited to 63 bits.
    ModulusTooLarge(u64),
    /// Two operands live over different prime fields.
    ModulusMismatch { left: u64, right: u64 },
    /// Inversion or division by zero.
    ZeroDivisor,
    /// `d` does not divide `p - 1`.
    NotADivisor { d: u64, p_minus_one: u64 },
    /// An integer divisor required by a formula vanishes modulo `p`.
    DivisorVanishes { divisor: i64, modulus: u64 },
    /// An argument is outside the operation's domain.
    InvalidArgument(String),
    /// A stated precondition of the operation does not hold.
    Precondition(String),
    /// Expansion requested at a multiple root of a polynomial.
    MultipleRoot(u64),
    /// A search exceeded its configured bounds.
    ResourceLimit(String),
    /// An internal invariant failed; this always indicates a bug.
    InvariantViolated(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::ModulusTooLarge(n) => write!(f, "modulus {n} exceeds 63 bits"),
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::ZeroDivisor => write!(f, "division by zero"),
            Error::NotADivisor { d, p_minus_one } => {
                write!(f, "{d} does not divide {p_minus_one}")
            }
            Error::DivisorVanishes { divisor, modulus } => {
                write!(f, "divisor {divisor} vanishes modulo {modulus}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::MultipleRoot(c) => write!(f, "center {c} is a multiple root"),
            Error::ResourceLimit(msg) => write!(f, "resource limit: {msg}"),
            Error::InvariantViolated(msg) => write!(f, "invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

macro_rules! precondition {
    ($($arg:tt)*) => {
        $crate::error::Error::Precondition(alloc::format!($($arg)*))
    };
}

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::error::Error::InvalidArgument(alloc::format!($($arg)*))
    };
}

pub(crate) use invalid;
pub(crate) use precondition;
