use thiserror::Error;

use crate::exactalg::AlgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("structure constants violate {0}")]
    InvalidStructureConstants(String),
    #[error("dimension {0} is outside the supported range 2..=4")]
    UnsupportedDimension(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("frame change is singular")]
    SingularFrameChange,
    #[error("frame change has determinant `{0}`, which is not a unit")]
    NonUnitDeterminant(String),
    #[error("frame change is not orthogonal")]
    NonOrthogonalFrame,
    #[error("plane is degenerate")]
    DegeneratePlane,
    #[error("cannot divide by `{0}`")]
    NonUnitDenominator(String),
    #[error("vector must be horizontal and nonzero")]
    NotHorizontal,
    #[error("invalid deformation target: {0}")]
    InvalidTarget(String),
    #[error("S is not skew in its last two slots at {0:?}")]
    SkewViolation(Vec<usize>),
    #[error("Ambrose-Singer conditions fail: {0}")]
    AsCheckFailed(String),
    #[error("curvature operators do not close under commutators")]
    HolonomyNotClosed,
    #[error("reconstructed bracket violates the Jacobi identity")]
    ReconstructionNotLie,
    #[error("relation group {0} mixes `sym` with rational values")]
    MixedParameters(String),
    #[error("malformed input: {0}")]
    Input(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// Stable variant name used in machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Alg(e) => match e {
                AlgError::ContextMismatch => "ContextMismatch",
                AlgError::DivisionByZero => "DivisionByZero",
                AlgError::NonUnitDivisor(_) => "NonUnitDivisor",
                AlgError::MissingParameter(_) => "MissingParameter",
                AlgError::RelationViolation(_) => "RelationViolation",
                AlgError::MissingDerivationTable(_) => "MissingDerivationTable",
                AlgError::Parse { .. } => "ParseError",
                AlgError::InconsistentDerivation(_) => "InconsistentDerivation",
            },
            Error::UnknownCatalogEntry(_) => "UnknownCatalogEntry",
            Error::InvalidStructureConstants(_) => "InvalidStructureConstants",
            Error::UnsupportedDimension(_) => "UnsupportedDimension",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::SingularFrameChange => "SingularFrameChange",
            Error::NonUnitDeterminant(_) => "NonUnitDeterminant",
            Error::NonOrthogonalFrame => "NonOrthogonalFrame",
            Error::DegeneratePlane => "DegeneratePlane",
            Error::NonUnitDenominator(_) => "NonUnitDenominator",
            Error::NotHorizontal => "NotHorizontal",
            Error::InvalidTarget(_) => "InvalidTarget",
            Error::SkewViolation(_) => "SkewViolation",
            Error::AsCheckFailed(_) => "AsCheckFailed",
            Error::HolonomyNotClosed => "HolonomyNotClosed",
            Error::ReconstructionNotLie => "ReconstructionNotLie",
            Error::MixedParameters(_) => "MixedParameters",
            Error::Input(_) => "InputError",
            Error::Io(_) => "IoError",
            Error::Invalid(_) => "Invalid",
        }
    }

    /// Process exit status for a run that stopped on this error: 3 for I/O,
    /// 2 for every input or validation failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
