use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ring map is not well defined: {0}")]
    IllDefinedMap(String),
    #[error("module map is not well defined: relation {0} does not map into the target relations")]
    IllDefinedModuleMap(usize),
    #[error("base change is not injective: {0} lies in the kernel")]
    NonInjectiveBaseChange(String),
    #[error("flatness of the base extension was neither asserted nor recognised")]
    FlatnessUnknown,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("{0} is not an associated prime of the base ring")]
    NotAssociated(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
