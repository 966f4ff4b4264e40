use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(
        "malformed type spec {0:?}: expected A<n>, B<n>, C<n>, D<n>, G2, F4, I2(<m>) or I2(inf)"
    )]
    MalformedType(String),
    #[error("unsupported type {0:?}")]
    UnsupportedType(String),
    #[error("group {name} has {order} elements, more than the enumeration limit {limit}")]
    TooLarge {
        name: String,
        order: u128,
        limit: usize,
    },
    #[error("generator index {index} out of range 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("{0} requires a finite Coxeter group")]
    InfiniteGroup(&'static str),
    #[error("a length bound is required for the infinite group {0} (for example {default})", default = crate::eset::DEFAULT_TRUNCATION)]
    MissingBound(String),
    #[error("E(w) is empty{0}")]
    EmptyESet(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("no split regular semisimple element over F_{q} for n = {n}: need 2 <= n <= q - 1")]
    DimensionOutOfRange { n: usize, q: u32 },
    #[error(
        "diagonal {0:?} is not regular semisimple (entries must be distinct and nonzero mod q)"
    )]
    NotRegularSemisimple(Vec<u32>),
    #[error("flag is not fixed by the torus")]
    NotTorusFixed,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid word {0:?}")]
    InvalidWord(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
