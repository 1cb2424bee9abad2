use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of size {size} exceeds the configured cap {cap}")]
    FieldTooLarge { size: u64, cap: u64 },
    #[error("no primitive polynomial of degree {k} over F_{p} (internal error)")]
    NoPrimitivePolynomial { p: u64, k: u32 },
    #[error("GF({p}^{sub}) is not a subfield of GF({p}^{ext})")]
    NotASubfield { p: u64, sub: u32, ext: u32 },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("zero has no discrete logarithm")]
    ZeroElement,
    #[error("order of a root of unity must be positive")]
    ZeroOrder,
    #[error("matrix is singular")]
    Singular,
    #[error("group of order {size} exceeds the enumeration cap {cap}")]
    GroupTooLarge { size: u64, cap: u64 },
    #[error("matrix is not in {0}")]
    NotInSubgroup(&'static str),
    #[error("unsupported subgroup pair {0} / {1}")]
    UnsupportedPair(&'static str, &'static str),
    #[error("table is incomplete: {0}")]
    IncompleteTable(String),
    #[error("character exponent {exponent} is not regular for q = {q}, r = {r}")]
    NotRegular { exponent: u64, q: u64, r: usize },
    #[error("parameters do not match: {0}")]
    Mismatch(String),
    #[error("domain is not closed under inversion")]
    NotClosedUnderInverse,
    #[error("expected an integer, found {0}")]
    NotInteger(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
