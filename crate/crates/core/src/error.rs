use thiserror::Error;

/// Errors raised while building or verifying an instance.
///
/// Variants that name an internal consistency failure (`ZNotCentral`,
/// `NotIntegralM`, `NoSolution`, ...) cannot occur for valid input; seeing
/// one means a construction step produced something the theory rules out.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    CompositeCharacteristic(u64),
    #[error("root order {order} is divisible by the characteristic {p}")]
    OrderDivisibleByP { p: u64, order: u64 },
    #[error("root order {order} does not divide p^e - 1 = {group_order}")]
    OrderNotSupported { order: u64, group_order: u64 },
    #[error("field of size {0} exceeds the table limit")]
    FieldTooLarge(u64),
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },
    #[error("character does not extend: {0}")]
    NoExtension(String),
    #[error("form value t_{i}{j} has order {order}, which does not divide {bound}")]
    BadFormOrder {
        i: usize,
        j: usize,
        order: u64,
        bound: u64,
    },
    #[error("map is not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("cocycles are not cohomologous: {0}")]
    NotCohomologous(String),
    #[error("invalid alternating form: {0}")]
    BadForm(String),
    #[error("induced character degree is not an integer: {0}")]
    NotIntegralM(String),
    #[error("eigenvalues of the action are not in the field: {0}")]
    EigenvaluesNotInField(String),
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("z_{{{i},{j},{vertex}}} is not central")]
    ZNotCentral { i: usize, j: usize, vertex: usize },
    #[error("no group element solves {0}")]
    NoSolution(String),
    #[error("relation fails: {0}")]
    RelationFails(String),
    #[error("arrow does not commute with the matrix subalgebra: {0}")]
    CommutationFails(String),
    #[error("products do not span: rank {rank} < {dim}")]
    SpanDeficient { rank: usize, dim: usize },
    #[error("no invertible intertwiner found: {0}")]
    NoInvertibleSolution(String),
    #[error("map is not a group automorphism: {0}")]
    NotAutomorphism(String),
    #[error("twist map is not multiplicative: {0}")]
    MultiplicativityFails(String),
    #[error("rewriting closure exceeded the dimension cap {cap}")]
    NonTerminating { cap: usize },
    #[error("algebra check failed: {0}")]
    AlgebraCheck(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("{}", fmt_validation(*.line, .reason))]
    Validation { line: Option<usize>, reason: String },
    #[error("{0}")]
    Io(String),
}

fn fmt_validation(line: Option<usize>, reason: &str) -> String {
    match line {
        Some(l) => format!("line {l}: {reason}"),
        None => reason.to_string(),
    }
}

impl Error {
    pub(crate) fn validation(reason: impl Into<String>) -> Self {
        Error::Validation {
            line: None,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
