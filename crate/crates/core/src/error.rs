use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("inequality system describes an unbounded region")]
    Unbounded,

    #[error("inequality system is infeasible")]
    Empty,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {dim} is outside the supported range {min}..={max}")]
    DimensionOutOfRange { dim: usize, min: usize, max: usize },

    #[error("inconsistent incidence: {0}")]
    InconsistentIncidence(String),

    #[error("vertex {0} is not present in the complex")]
    VertexNotPresent(usize),

    #[error("not comparable: {0}")]
    NotComparable(String),

    #[error("vertex {0} is not a cone vertex for the given face")]
    NotAConeVertex(usize),

    #[error("size limit exceeded: {size} elements, limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },

    #[error("certificate contains a base that is not a simplex")]
    NotDeltaConic,

    #[error("certificate contains a base that is not a cube")]
    NotCubeConic,

    #[error("witness is inconsistent with the face numbers: {0}")]
    InconsistentWitness(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutations have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
