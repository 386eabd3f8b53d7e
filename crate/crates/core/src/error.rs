use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("element is not a member of the group")]
    NotMember,

    #[error("{what}: size {size} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, size: u64, cap: u64 },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup of order {0} is not a p-group")]
    NotPrimePower(u64),

    #[error("prime {p} does not divide the group order {order}")]
    PrimeNotDividing { p: u64, order: u64 },

    #[error("group order overflows u64")]
    OrderOverflow,

    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u64, u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("singular matrix")]
    SingularMatrix,

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("unknown group name: {0}")]
    UnknownName(String),

    #[error("action image is not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("inconsistent action: constructed order {got}, expected {expected}")]
    InconsistentAction { expected: u64, got: u64 },

    #[error("declared order {declared} does not match computed order {computed}")]
    OrderMismatch { declared: u64, computed: u64 },

    #[error("orders differ: {0} vs {1}")]
    OrderDiffers(u64, u64),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
