use sublorentz_expr::ExprError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("expected 3 components, found {0}")]
    Dimension(usize),
    #[error("form of degree {expected} evaluated on {found} fields")]
    Arity { expected: usize, found: usize },
    #[error("degenerate frame: X1, X2, [X1,X2] are dependent")]
    DegenerateFrame,
    #[error("cannot decide whether {0} vanishes")]
    IndeterminateDomain(String),
    #[error("singular system: {0}")]
    SingularSystem(String),
    #[error("bracket {bracket} has nonzero X0 component {component}")]
    NonHorizontalBracket { bracket: String, component: String },
    #[error("c011 + c022 = {0} is not zero")]
    TraceViolation(String),
    #[error("h~ is not zero")]
    HTildeNonzero,
    #[error("undecided zero test: {0}")]
    Indeterminate(String),
    #[error("theta does not normalize the frame; residuals: {}", .0.join(", "))]
    ThetaInvalid(Vec<String>),
    #[error("the field does not preserve the distribution")]
    DistributionNotPreserved,
    #[error("bracket pattern violated: {0}")]
    BracketPatternViolation(String),
    #[error("unknown algebra '{0}'")]
    UnknownAlgebra(String),
    #[error("coefficient is not constant: {0}")]
    NonConstant(String),
    #[error("missing section [{0}]")]
    MissingSection(String),
    #[error("both [frame] and [algebra] given; exactly one input mode is allowed")]
    DuplicateMode,
    #[error("invalid structure file: {0}")]
    InvalidFile(String),
    #[error("invalid structure equation: {0}")]
    InvalidEquation(String),
    #[error("operation needs {0}")]
    WrongMode(&'static str),
}
