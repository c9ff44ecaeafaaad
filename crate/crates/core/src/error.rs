use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mediant undefined: {0}")]
    UndefinedMediant(String),
    #[error("degenerate image: matrix sends {0} to the zero vector")]
    DegenerateImage(String),
    #[error("zero denominator in fraction {0}/0 (only 1/0 is allowed)")]
    InvalidInfinity(String),
    #[error("0/0 is not a fraction")]
    ZeroOverZero,

    #[error("index out of range: {0}")]
    IndexRange(String),
    #[error("Morse code enumeration capped at n = {limit}, got n = {n}")]
    MorseLimit { n: usize, limit: usize },
    #[error("matrix must be square of order >= {min}, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize, min: usize },

    #[error("non-positive entry {value} in row {row}, position {position}")]
    NonPositiveEntry { row: usize, position: usize, value: String },
    #[error("adjacent ones at positions {0} and {1}")]
    AdjacentOnes(usize, usize),
    #[error("empty second row")]
    EmptyRow,
    #[error("not the quiddity of a frieze: {0}")]
    NotAFriezeQuiddity(String),
    #[error("division {0} / {1} is not integral")]
    NonIntegralDivision(String, String),

    #[error("invalid quiddity: {0}")]
    InvalidQuiddity(String),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("({0}, {1}) is not a side of the polygon")]
    NotASide(usize, usize),
    #[error("dual tree branches; triangulation is not a bamboo")]
    NotBamboo,

    #[error("{0} is outside the domain of this operation")]
    OutOfDomain(String),
    #[error("continued fraction tower divides by zero at level {0}")]
    DivisionByZeroTower(usize),
    #[error("malformed continued fraction: {0}")]
    MalformedContinuedFraction(String),

    #[error("{0} and {1} are not joined by a Farey edge")]
    NotAdjacent(String, String),
    #[error("invalid dissection: {0}")]
    InvalidDissection(String),

    #[error("render depth {0} exceeds the limit of {1}")]
    DepthLimit(u32, u32),
    #[error("invalid render configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
