use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("outside the function domain: {0}")]
    Domain(String),
    #[error("exponent too large")]
    Overflow,
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(String),
    #[error("{line}:{column}: unknown identifier '{name}'")]
    UnknownIdentifier {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("{line}:{column}: {message}")]
    Syntax {
        message: String,
        line: usize,
        column: usize,
    },
    #[error("invalid chart: {0}")]
    InvalidChart(String),
}
