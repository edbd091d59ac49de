use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// Points and polynomials are carried pre-rendered so the error stays
/// independent of variable naming.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("empty polynomial system")]
    EmptySystem,
    #[error("point {0} is not isolated: dual space does not stabilize within degree {1}")]
    NonIsolatedPoint(String, usize),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("common zeros are not all rational: unresolved factor(s) {0}")]
    IrrationalRoots(String),
    #[error("{0} is not a common zero of the system")]
    InvalidRoot(String),
    #[error("polynomial does not vanish at common zero {0}")]
    NotVanishing(String),
    #[error("no power m <= {0} of the polynomial lies in the ideal")]
    BoundViolation(usize),
    #[error("expected a system of 2 polynomials in 2 variables, got {polys} in {vars}")]
    WrongArity { polys: usize, vars: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
