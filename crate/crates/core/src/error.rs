use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the ring laboratory.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table shape mismatch: {0}")]
    Shape(String),
    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("addition table is not an abelian group: {0}")]
    NotAGroup(String),
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("multiplication does not distribute over addition at ({a}, {b}, {c})")]
    NotDistributive { a: usize, b: usize, c: usize },
    #[error("zero does not annihilate element {0}")]
    ZeroNotAbsorbing(usize),
    #[error("ring is flagged unital but has no two-sided identity")]
    NoUnity,
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("operation requires a ring with unity")]
    NonUnitalUnsupported,
    #[error("direct product of a unital and a non-unital ring")]
    MixedUnitality,
    #[error("invalid ring name {0:?}")]
    InvalidName(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("element index {index} is out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("polynomials live over different rings")]
    RingMismatch,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("window width {width} is narrower than {len} stored coefficients")]
    WindowTooNarrow { width: usize, len: usize },
    #[error("base ring must be commutative and unital")]
    BaseNotCommutativeUnital,
    #[error("duplicate ring name {0:?} in corpus")]
    DuplicateName(String),
    #[error("unknown builtin ring {0:?}")]
    UnknownBuiltin(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("ring is not semi-commutative")]
    NotSemicommutative,
    #[error("ring is not right Duo")]
    NotRightDuo,
    #[error("ring is not left Duo")]
    NotLeftDuo,
    #[error("ring is neither left nor right Duo")]
    NotOneSidedDuo,
    #[error("the product f*g is not zero")]
    ProductNotZero,
    #[error("no nilpotency exponent found for a0 against coefficient {coeff} within {cap} powers")]
    ExponentNotFound { coeff: usize, cap: usize },
    #[error("no element r with a0^{k}*b{j} = b{j}*r")]
    WitnessNotFound { j: usize, k: u32 },
    #[error("annihilation formula failed: {0}")]
    FormulaFailed(String),
    #[error("trace replay diverged at step {step}: {message}")]
    ReplayMismatch { step: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
