use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("prime must be odd (got {0})")]
    EvenPrime(u32),
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{what} = {value} is outside {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("element is not in the image of the representation ring")]
    NotInImage,
    #[error("brute-force basis of size {size} exceeds the guard {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("generator `{0}` has odd degree")]
    OddDegree(String),
    #[error("max degree {max_degree} is below the bottom class in degree {min}")]
    DegreeTooSmall { max_degree: i64, min: i64 },
    #[error("stem window {lo}..{hi} is empty")]
    WindowEmpty { lo: i64, hi: i64 },
    #[error("unsupported output format `{0}`")]
    UnsupportedFormat(String),
    #[error("schema violation: {0}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
