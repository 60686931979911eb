use thiserror::Error;

/// Errors raised by the field, character, series and curve layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{p} is not an odd prime")]
    NotPrime { p: u64 },

    #[error("p = {p} exceeds the configured maximum field size {max}")]
    TooLarge { p: u64, max: u64 },

    #[error("division by zero in F_{p}")]
    DivisionByZero { p: u64 },

    #[error("argument must be nonzero")]
    ZeroArgument,

    #[error("p = {p} is not 1 mod {modulus} (p \u{2262} 1 mod {modulus})")]
    BadFieldResidue { p: u64, modulus: u64 },

    #[error("singular curve: lambda = {lambda} must not be 0 or 1")]
    SingularCurve { lambda: u64 },

    #[error(
        "denominator factor vanishes mod {p} at index {index} before any numerator factor"
    )]
    DenominatorVanishes { p: u64, index: u64 },

    #[error("rounding failure: value {value} is {residual:e} from an integer (tolerance {tolerance:e})")]
    RoundingFailure {
        value: String,
        residual: f64,
        tolerance: f64,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
