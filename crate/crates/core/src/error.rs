use thiserror::Error;

/// Errors raised anywhere in the algebra stack.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable index {index} out of range for {arity} variables")]
    VariableOutOfRange { index: usize, arity: usize },
    #[error("ring has no variable weights configured")]
    NoWeights,
    #[error("weighted degree {degree} is not invertible in characteristic {characteristic}")]
    DegreeNotInvertible { degree: u64, characteristic: u64 },
    #[error("polynomial is not quasihomogeneous for the configured weights")]
    NotQuasihomogeneous,
    #[error("Groebner computation exceeded its budget of {budget} reduction steps")]
    BudgetExceeded { budget: u64 },
    #[error("element is not in the ideal")]
    NotInIdeal,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
