use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u32),

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("a modulus polynomial is required for extension degree {0}")]
    MissingModulus(u32),

    #[error("modulus {modulus} does not encode a monic polynomial of degree {degree} over GF({p})")]
    InvalidModulus { p: u32, degree: u32, modulus: u64 },

    #[error("modulus {0} is reducible")]
    ReducibleModulus(u64),

    #[error("field of order {0} exceeds the table bound of 256")]
    FieldTooLarge(u64),

    #[error("value {value} is not an element of GF({q})")]
    NotAnElement { value: u32, q: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("operands live in different fields")]
    FieldMismatch,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("generator matrix has rank {rank} but {rows} rows")]
    NotFullRank { rank: usize, rows: usize },

    #[error("code has dimension zero")]
    EmptyCode,

    #[error("code length {0} exceeds the supported maximum of 64")]
    LengthTooLarge(usize),

    #[error("operation requires a nonzero subcode")]
    ZeroSubcode,

    #[error("vectors do not lie in the parent code")]
    NotASubcode,

    #[error("subset enumeration over {required} coordinates exceeds the cap of {cap} (raise it with --max-enum)")]
    SizeLimitExceeded { required: usize, cap: usize },

    #[error("lattice has {elements} elements, above the enumeration bound {bound}")]
    LatticeTooLarge { elements: u128, bound: u128 },

    #[error("empty rank/degree profile")]
    EmptyProfile,

    #[error("invalid weight hierarchy: {0}")]
    InvalidHierarchy(String),

    #[error("{0}")]
    NotFullSupport(SupportDefect),

    #[error("code is not self-dual")]
    NotSelfDual,

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("theorem violation: {0}")]
    Violation(String),
}

/// Which side of a code/dual pair lacks full support, with the data needed
/// to reduce to the full-support case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportDefect {
    /// The code itself has zero coordinates.
    Code { zero_coordinates: Vec<usize> },
    /// The dual lacks full support: the code contains weight-one words.
    /// `weight_one_coordinates` are the positions `i` with `e_i` in the code;
    /// their span is the first step of the canonical filtration.
    Dual { weight_one_coordinates: Vec<usize> },
}

impl std::fmt::Display for SupportDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SupportDefect::Code { zero_coordinates } => {
                write!(f, "code has zero coordinates {zero_coordinates:?}")
            }
            SupportDefect::Dual {
                weight_one_coordinates,
            } => write!(
                f,
                "dual lacks full support; weight-one words at {weight_one_coordinates:?}"
            ),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
