use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("a constant polynomial is not allowed here")]
    ConstantPolynomial,
    #[error("polynomial must be primitive (content 1)")]
    NotPrimitive,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial is reducible")]
    Reducible,
    #[error("degree {got} exceeds the supported cap {cap}")]
    DegreeCap { got: usize, cap: usize },
    #[error("root index {index} out of range: polynomial has {count} real roots")]
    RootIndexOutOfRange { index: usize, count: usize },
    #[error("polynomial has no real roots")]
    NoRealRoots,
    #[error("field degree must be between {min} and {max}, got {got}")]
    UnsupportedDegree { got: usize, min: usize, max: usize },
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("empty input")]
    EmptyInput,
    #[error("vectors must all have the same length")]
    ShapeMismatch,
    #[error("matrix must be square")]
    NotSquare,
    #[error("rows are linearly dependent")]
    DependentRows,
    #[error("basis elements are linearly dependent over the rationals")]
    DependentBasis,
    #[error("flow components are rationally dependent")]
    DependentComponents,
    #[error("lattice is not of full rank")]
    RankDeficient,
    #[error("{0} is not squarefree")]
    NotSquarefree(i64),
    #[error("discriminant {0} is too large to factor exactly")]
    DiscriminantTooLarge(String),
    #[error("operation requires a quadratic field (degree 2), got degree {0}")]
    NotQuadratic(usize),
    #[error("not an order: {0}")]
    NotAnOrder(String),
    #[error("operation requires an exact flow, this flow is numeric")]
    NumericFlow,
    #[error("operation requires a numeric flow, this flow is exact")]
    ExactFlow,
    #[error("flow is not algebraic: {0}")]
    NotAlgebraic(String),
    #[error("flow has {components} components but its field has degree {degree}")]
    ComponentCountMismatch { components: usize, degree: usize },
    #[error("enumeration guard exceeded: (2*{bound}+1)^({n}*{n}) > 10^8")]
    GuardExceeded { bound: i64, n: usize },
    #[error("malformed decimal literal: {0:?}")]
    MalformedDecimal(String),
    #[error("insufficient precision: need at least {need} digits, got {got}")]
    InsufficientPrecision { need: u32, got: u32 },
    #[error("precision must be positive")]
    ZeroPrecision,
    #[error("height bound must be at least 1")]
    ZeroHeightBound,
    #[error("degree bound must be at least 1")]
    ZeroDegreeBound,
    #[error("iteration limit exceeded in {0}")]
    IterationLimit(&'static str),
    #[error("invalid {what}: {detail}")]
    InvalidJson { what: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
