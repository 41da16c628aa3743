use std::fmt;

/// Errors produced by constructors and operations with preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts are not weakly decreasing positive integers.
    InvalidPartition(String),
    /// Inner shape is not contained in the outer shape.
    InvalidShape(String),
    /// Row lengths, cell counts or entries do not match the shape.
    InvalidTableau(String),
    /// A biword or Burge word violates its ordering invariant.
    InvalidWord(String),
    /// A jeu de taquin slide was started from a cell that is not an
    /// inner corner.
    InvalidCorner { row: usize, col: usize },
    /// A rectified subtableau does not have the shape required by the
    /// sign statistic; signals a violated precondition on the input.
    ShapeMismatch(String),
    /// A tableau does not have the content required by an operation.
    ContentMismatch(String),
    /// Malformed textual input.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition(m) => write!(f, "invalid partition: {m}"),
            Error::InvalidShape(m) => write!(f, "invalid skew shape: {m}"),
            Error::InvalidTableau(m) => write!(f, "invalid tableau: {m}"),
            Error::InvalidWord(m) => write!(f, "invalid word: {m}"),
            Error::InvalidCorner { row, col } => {
                write!(f, "({row},{col}) is not an inner corner")
            }
            Error::ShapeMismatch(m) => write!(f, "shape mismatch: {m}"),
            Error::ContentMismatch(m) => write!(f, "content mismatch: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
