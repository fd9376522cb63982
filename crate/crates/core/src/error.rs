use core::fmt;

/// Errors raised by the library surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational with zero denominator.
    InvalidScalar,
    /// Matrix dimensions do not fit the operation.
    Shape { rows: usize, cols: usize, expected: &'static str },
    /// `images` is not a bijection of `{1, 2, 3, 4}`.
    InvalidPermutation([u8; 4]),
    /// A lambda vector that does not witness realizability.
    InvalidWitness(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidScalar => f.write_str("rational with zero denominator"),
            Error::Shape { rows, cols, expected } => {
                write!(f, "matrix is {rows}x{cols}, expected {expected}")
            }
            Error::InvalidPermutation(images) => {
                write!(f, "{images:?} is not a permutation of 1..=4")
            }
            Error::InvalidWitness(reason) => write!(f, "invalid witness: {reason}"),
        }
    }
}

impl core::error::Error for Error {}
