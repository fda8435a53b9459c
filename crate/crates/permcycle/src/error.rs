use thiserror::Error;

/// Errors surfaced by field construction, polynomial parsing, the
/// construction theorems and the analyzer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported; q must be odd")]
    EvenCharacteristic,
    #[error("modulus is reducible over F_p")]
    ReducibleModulus,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero has no multiplicative order")]
    ZeroOrder,
    #[error("zero has no discrete logarithm")]
    ZeroLog,
    #[error("{0} does not divide q-1")]
    OrderNotDividing(u64),
    #[error("syntax error at position {0}")]
    SyntaxError(usize),
    #[error("index d = {0} must be even")]
    OddIndex(u64),
    #[error("units must be distinct")]
    EqualUnits,
    #[error("unit with encoding {0} lies outside the subgroup of order {1}")]
    UnitOutsideSubgroup(u64, u64),
    #[error("units must not all be equal")]
    AllUnitsEqual,
    #[error("q must be congruent to 1 mod 3")]
    BadResidue,
    #[error("index d = {0} must be a multiple of 3")]
    IndexNotMultipleOf3(u64),
    #[error("bad divisibility: {0}")]
    BadDivisibility(String),
    #[error("units must have the same multiplicative order")]
    OrderMismatch,
    #[error("table is not a permutation")]
    NotAPermutation,
    #[error("polynomial is not coset-multiplicative for the given index")]
    NotCosetMultiplicative,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("invalid element: {0}")]
    BadElement(String),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

impl Error {
    /// Stable machine-readable name, used by the CLI on precondition failures.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::EvenCharacteristic => "EvenCharacteristic",
            Error::ReducibleModulus => "ReducibleModulus",
            Error::FieldMismatch => "FieldMismatch",
            Error::ZeroInverse => "ZeroInverse",
            Error::ZeroOrder => "ZeroOrder",
            Error::ZeroLog => "ZeroLog",
            Error::OrderNotDividing(_) => "OrderNotDividing",
            Error::SyntaxError(_) => "SyntaxError",
            Error::OddIndex(_) => "OddIndex",
            Error::EqualUnits => "EqualUnits",
            Error::UnitOutsideSubgroup(_, _) => "UnitOutsideSubgroup",
            Error::AllUnitsEqual => "AllUnitsEqual",
            Error::BadResidue => "BadResidue",
            Error::IndexNotMultipleOf3(_) => "IndexNotMultipleOf3",
            Error::BadDivisibility(_) => "BadDivisibility",
            Error::OrderMismatch => "OrderMismatch",
            Error::NotAPermutation => "NotAPermutation",
            Error::NotCosetMultiplicative => "NotCosetMultiplicative",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::BadElement(_) => "BadElement",
            Error::BadParameter(_) => "BadParameter",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
