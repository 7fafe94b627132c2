use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arithmetic overflow in exact rational computation")]
    Overflow,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational {0:?}: expected an integer or p/q")]
    ParseRational(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("weights {0:?} are not primitive")]
    NotPrimitive(Vec<u64>),
    #[error("weights {0:?} sum to less than 2")]
    IndexTooSmall(Vec<u64>),
    #[error("weights {0:?} contain a zero entry")]
    ZeroWeight(Vec<u64>),
    #[error("epsilon {0} is not in (0, 1]")]
    EpsilonOutOfRange(String),
    #[error("coset index {k} out of range 1..={max}")]
    CosetOutOfRange { k: u64, max: u64 },
    #[error("index {v} exceeds the brute-force oracle cap {cap}")]
    OracleCapExceeded { v: u64, cap: u64 },
    #[error("operation requires dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("projected candidate count {projected} exceeds budget {budget}")]
    BudgetExceeded { projected: u128, budget: u128 },
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("unknown quintuple id {0:?}")]
    UnknownQuintuple(String),
    #[error("apex {0} out of range 1..=5")]
    ApexOutOfRange(usize),
    #[error("quintuple {id} needs V divisible by {denominator}, got V={v}")]
    Divisibility { id: String, denominator: i64, v: u64 },
    #[error("apex entry of {id} at l={apex} is zero")]
    ZeroApexEntry { id: String, apex: usize },
    #[error("index subset must be a proper nonempty subset of 1..={0}")]
    BadSubset(usize),
    #[error("point configuration does not affinely span R^{0}")]
    DegenerateSpan(usize),
    #[error("configurations are supported only in dimensions 1 to 3, got {0}")]
    UnsupportedDimension(usize),
    #[error("facet with normal {normal:?} contains every non-origin point")]
    FacetContainsAll { normal: Vec<i64> },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: record V={v} b={b:?} violates sum = 0 mod V")]
    RecordInvariant { line: usize, v: u64, b: [u64; 5] },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
