use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An input exceeded the documented bound.
    OutOfRange { value: u64, max: u64 },
    /// An intermediate value did not fit in 128 bits.
    Overflow,
    /// An input violated the operation's precondition.
    Domain(&'static str),
    /// A result failed a check that the underlying theory guarantees.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRange { value, max } => {
                write!(f, "input {value} exceeds the supported bound {max}")
            }
            Error::Overflow => f.write_str("arithmetic overflow in exact computation"),
            Error::Domain(msg) => write!(f, "invalid input: {msg}"),
            Error::Internal(msg) => write!(f, "internal consistency check failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
