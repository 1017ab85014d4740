use alloc::string::String;
use core::fmt;

/// Errors raised by the core library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// An exact field was required (rank, kernel and dichotomy decisions).
    ExactFieldRequired,
    /// Operands disagree in variable count, degree or size.
    Mismatch(String),
    /// A documented precondition does not hold.
    Precondition(String),
    /// A size cap was exceeded.
    LimitExceeded(String),
    /// Columns of a matrix over the function field are dependent.
    Dependent(String),
    UnknownEntry(String),
    /// Malformed polynomial or number text.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ExactFieldRequired => write!(f, "exact field required"),
            Error::Mismatch(m) => write!(f, "mismatch: {m}"),
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::LimitExceeded(m) => write!(f, "limit exceeded: {m}"),
            Error::Dependent(m) => write!(f, "dependent columns: {m}"),
            Error::UnknownEntry(m) => write!(f, "unknown entry: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
