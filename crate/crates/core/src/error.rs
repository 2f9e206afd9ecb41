use alloc::vec::Vec;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field parameters out of range: {0}")]
    InvalidField(&'static str),
    #[error("field of order {0} is too large")]
    FieldTooLarge(u64),
    #[error("modulus is not monic of degree {expected}")]
    BadModulus { expected: u32 },
    #[error("modulus coefficient {0} is not reduced modulo p")]
    UnreducedCoefficient(u32),
    #[error("modulus is reducible")]
    ReducibleModulus,
    #[error("no primitive element found")]
    NoPrimitiveRootFound,
    #[error("element is not primitive")]
    NotPrimitive,
    #[error("element is not in the subfield GF(q)")]
    NotInSubfield,
    #[error("N must exceed 1, got {0}")]
    InvalidDivisor(u64),
    #[error("{n} does not divide {order_minus_one}")]
    DoesNotDivide { n: u64, order_minus_one: u64 },
    #[error("symbol alphabet of size {0} is not supported (q must be at most 256)")]
    AlphabetTooLarge(u64),
    #[error("symbol {symbol} out of range for q = {q}")]
    SymbolOutOfRange { symbol: u32, q: u32 },
    #[error("generator matrix rows have inconsistent lengths")]
    RaggedMatrix,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("columns {0} and {1} are proportional")]
    ColumnsProportional(usize, usize),
    #[error("every codeword vanishes on the last coordinate")]
    ZeroLastColumn,
    #[error("column {0} of the generator matrix is zero")]
    ZeroColumn(usize),
    #[error("shortening would leave dimension {0}")]
    DimensionExhausted(usize),
    #[error("dual distance is at most 2")]
    DualDistanceTooSmall,
    #[error("enumeration of {0} codewords exceeds the limit")]
    TooLarge(u64),
    #[error("word is not a codeword")]
    NotInCode,
    #[error("the code has no nonzero codewords")]
    EmptyCode,
    #[error("word is zero")]
    ZeroWord,
    #[error("closed-form predicates only cover N in {{2, 3, 4}}, got {0}")]
    UnsupportedN(u64),
    #[error("the trace algorithm requires s = 1, got s = {0}")]
    UnsupportedS(u32),
    #[error("code is not certified minimal")]
    NotCertifiedMinimal,
    #[error("code of length {0} leaves no participants")]
    NoParticipants(usize),
    #[error("participant {0} does not exist")]
    UnknownParticipant(usize),
    #[error("no share supplied for participant {0}")]
    MissingShare(usize),
    #[error("coalition {0:?} cannot determine the secret")]
    NotAuthorized(Vec<usize>),
    #[error("column 0 of the scheme generator is zero")]
    ZeroSecretColumn,
}

pub type Result<T> = core::result::Result<T, Error>;
