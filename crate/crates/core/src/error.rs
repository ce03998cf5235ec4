use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Precondition failures surfaced by the kernel. Every operation that can
/// reject its input returns one of these; nothing panics on bad data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{0}` as an exact rational")]
    ParseRational(String),

    #[error("inner series of a composition must have zero constant term")]
    NonZeroConstantTerm,

    #[error("series reversion needs a nonzero rational linear coefficient")]
    ZeroLinearCoefficient,

    #[error("series must have constant term 1 (found {0})")]
    ConstantTermNotOne(String),

    #[error("constant term {0} is not invertible in Q[s]")]
    NotInvertible(String),

    #[error("convention mismatch: expected {expected}, found {found}")]
    ConventionMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("truncation order {have} is too small, need at least {need}")]
    InsufficientOrder { have: usize, need: usize },

    #[error("polynomial division by {divisor} is not exact")]
    InexactDivision { divisor: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
