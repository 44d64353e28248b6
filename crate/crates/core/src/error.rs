use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty point list")]
    EmptyInput,
    #[error("mixed dimensions: expected {expected}, found {found}")]
    MixedDimensions { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires ambient dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("negative dilation factor {0}")]
    NegativeFactor(String),
    #[error("scale factors must be positive, found {0}")]
    NonpositiveScale(String),
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("volume of a general polytope is unsupported in dimension {0}")]
    UnsupportedDimension(usize),
    #[error("lattice enumeration would visit {points} points, above the guard of {limit}")]
    GuardExceeded { points: String, limit: u64 },
    #[error("semigroup division unavailable and the value group is not divisible")]
    DivisionUnsupported,
    #[error("expansion check failed: {0}")]
    ReconstructionFailure(String),
    #[error("valuation `{0}` is not translation-invariant and cannot be applied to translation classes")]
    NonInvariantOnClasses(String),
    #[error("degree bound {degree} is below the dimension {required} of a summand")]
    DegreeTooSmall { degree: usize, required: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
