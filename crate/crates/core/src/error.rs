use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed ideal specification: {0}")]
    MalformedJson(String),
    #[error("p must be prime (got {0})")]
    NotPrime(u64),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("cannot parse generator `{expr}`: {message}")]
    Parse { expr: String, message: String },
    #[error("not a rational number: `{0}`")]
    BadRational(String),
    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u64, u64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("variable lists differ between ideals")]
    VariableMismatch,
    #[error("a monomial ideal needs at least one generator")]
    EmptyIdeal,
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("{0} is not a power of the characteristic {1}")]
    NotPrimePower(u64, u64),
    #[error("parameter must be nonnegative (got {0})")]
    Negative(String),
    #[error("dimension {got} exceeds the supported bound {max}")]
    DimensionTooLarge { got: usize, max: usize },
    #[error("ideal is not primary to the maximal ideal")]
    NotMPrimary,
    #[error("the ideal is not contained in the radical of the reference ideal")]
    NotInRadical,
    #[error("the reference ideal is the unit ideal")]
    UnitIdeal,
    #[error("expected a monomial ideal")]
    NotMonomial,
    #[error("resource guard exceeded: {0}")]
    Guard(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
