use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown variable `{name}` at line {line}, column {col}")]
    UnknownVariable { name: String, line: usize, col: usize },
    #[error("coefficient {coeff} at line {line}, column {col} is not invertible in {field}")]
    NonInvertibleCoefficient {
        coeff: String,
        field: String,
        line: usize,
        col: usize,
    },
    #[error("duplicate ideal name `{0}`")]
    DuplicateIdeal(String),
    #[error("no ideal named `{0}`")]
    MissingIdeal(String),
    #[error("exponent vectors of different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("monomial order mismatch: polynomial uses {found}, basis uses {expected}")]
    OrderMismatch { expected: String, found: String },
    #[error("cannot eliminate {k} of {nvars} variables")]
    EliminationRange { k: usize, nvars: usize },
    #[error("resource budget of {budget} pair reductions exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("{op} requires a homogeneous ideal")]
    Inhomogeneous { op: &'static str },
    #[error("{op} is undefined for the zero ideal")]
    ZeroIdeal { op: &'static str },
    #[error("{op} is undefined for the unit ideal")]
    UnitIdeal { op: &'static str },
    #[error("{op} requires a saturated ideal")]
    NotSaturated { op: &'static str },
    #[error("{op} requires a monomial ideal")]
    NonMonomial { op: &'static str },
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("ideal is not pure (minimal primes of different codimension)")]
    NotPure,
    #[error("lattice enumeration of {points} points exceeds the cap of {cap}")]
    EnumerationCap { points: u128, cap: u128 },
    #[error("ambient dimension {dim} exceeds the polyhedral limit of {max}")]
    DimensionCap { dim: usize, max: usize },
    #[error("no generic link found after {attempts} attempts")]
    Genericity { attempts: usize },
    #[error("situation B on a graded ring needs generators of one degree, found {0:?}")]
    MixedDegrees(Vec<u64>),
    #[error("resolution of length {length} is shorter than codimension {codim}")]
    ShortResolution { length: usize, codim: usize },
    #[error("inconsistent degrees: {0}")]
    InconsistentDegrees(String),
    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }

    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable { .. }
                | Error::NonInvertibleCoefficient { .. }
                | Error::DuplicateIdeal(_)
                | Error::MissingIdeal(_)
        )
    }
}
