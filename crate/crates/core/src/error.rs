use thiserror::Error;

/// Errors raised by precondition violations across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series constant term is not invertible")]
    NonInvertibleConstant,
    #[error("formal exp requires a zero constant term")]
    ExpNeedsZeroConstant,
    #[error("formal log requires constant term 1")]
    LogNeedsUnitConstant,
    #[error("multinomial index list is empty")]
    EmptyMultinomial,
    #[error("multinomial indices mix signs: {0:?}")]
    MixedSignMultinomial(Vec<i64>),
    #[error("cannot parse polynomial from {0:?}")]
    PolyParse(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("prime {p} divides the field size {q}")]
    PrimeDividesFieldSize { p: u64, q: u64 },
    #[error("argument must be positive")]
    ZeroArgument,
    #[error("{a} and {m} are not coprime")]
    NotCoprime { a: u64, m: u64 },
    #[error("size {0} exceeds the supported brute-force scale")]
    ScaleCap(String),
    #[error("invariant factors must form a divisibility chain of integers >= 2")]
    BadInvariantFactors,
}

pub type Result<T> = std::result::Result<T, Error>;
