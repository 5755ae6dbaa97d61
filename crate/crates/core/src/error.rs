use thiserror::Error;

/// Error type shared by every module of the crate.
///
/// Each variant carries enough context to be actionable and maps to a stable
/// machine-readable code via [`Error::code`], which downstream tools (the CLI
/// in particular) surface in structured output.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is out of range [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    /// Two labelled points coincide exactly (labels are 1-based).
    #[error("points {first} and {second} coincide")]
    DuplicatePoints { first: usize, second: usize },

    /// All points of a configuration coincide; there is no shape to normalize.
    #[error("degenerate configuration: all points coincide")]
    DegenerateConfiguration,

    /// All eigenvalues fall into a single cluster: the form is (up to
    /// tolerance) a multiple of the identity and has no normalized spectrum.
    #[error("degenerate form: all eigenvalues fall in one cluster")]
    DegenerateForm,

    #[error(
        "eigensolver failed to converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("matrix asymmetry {max_asymmetry:.3e} exceeds tolerance {tolerance:.3e}")]
    NotSymmetric { max_asymmetry: f64, tolerance: f64 },

    #[error("non-finite value at {location}")]
    NotFinite { location: String },

    #[error("matrix is not square ({rows} rows, {cols} columns)")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A hand-assembled eigendecomposition violates its invariants
    /// (orthogonality, reconstruction, or eigenvalue ordering).
    #[error("invalid eigendecomposition: {reason}")]
    InvalidDecomposition { reason: &'static str },

    #[error("unknown object {id}")]
    UnknownObject { id: usize },

    #[error("structure of size {size} exceeds limit {max}")]
    SizeLimit { size: usize, max: usize },

    /// The two functors of a fiber product do not share a target groupoid.
    #[error("fiber product functors land in different groupoids")]
    IncompatibleTargets,

    /// A groupoid, group action, or functor fails its construction checks.
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
}

impl Error {
    /// Stable machine-readable code for this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::OutOfRange { .. } => "out_of_range",
            Error::DuplicatePoints { .. } => "duplicate_points",
            Error::DegenerateConfiguration => "degenerate_configuration",
            Error::DegenerateForm => "degenerate_form",
            Error::NoConvergence { .. } => "no_convergence",
            Error::NotSymmetric { .. } => "not_symmetric",
            Error::NotFinite { .. } => "not_finite",
            Error::NotSquare { .. } => "not_square",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::InvalidDecomposition { .. } => "invalid_decomposition",
            Error::UnknownObject { .. } => "unknown_object",
            Error::SizeLimit { .. } => "size_limit",
            Error::IncompatibleTargets => "incompatible_targets",
            Error::InvalidStructure(_) => "invalid_structure",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
