//! Error type shared by the ideal engine.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("arity mismatch: context has {expected} variables, monomial has {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("contexts differ: both operands must live in the same variable context")]
    ContextMismatch,

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation undefined for the unit ideal")]
    UnitIdeal,

    #[error("prime {prime} is not associated to the ideal")]
    NotAssociated { prime: String },

    #[error("expected a two-variable ideal containing pure powers of both variables")]
    NotPrimaryStaircase,

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("generator cap exceeded at power {k}: {count} minimal generators (cap {cap})")]
    Capacity { k: u32, count: usize, cap: usize },

    #[error("associated-prime search supports at most {max} variables in the support, found {found}")]
    TooManyVariables { found: usize, max: usize },
}
