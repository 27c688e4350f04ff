use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("the rationals are infinite and cannot be enumerated")]
    InfiniteField,

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is singular")]
    Singular,

    #[error("algebra axioms fail: {0}")]
    Axioms(String),

    #[error("not a twisting map: {0}")]
    NotTwisting(String),

    #[error("search space of {bits:.1} bits exceeds the 40-bit bound")]
    SearchSpaceTooLarge { bits: f64 },

    #[error("radical criterion inapplicable in characteristic {characteristic} for dimension {dim}")]
    CriterionInapplicable { characteristic: u32, dim: usize },

    #[error("budget exceeded: {needed} scalars needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("cochain complex check failed: {0}")]
    Complex(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown name: {0}")]
    UnknownName(String),
}
