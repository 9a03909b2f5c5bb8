use thiserror::Error;

/// Errors surfaced by the simulation kernel and the discrimination pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {dim} is not a power of two")]
    NotPowerOfTwo { dim: usize },

    #[error("matrix is not Hermitian (max asymmetry {max_asymmetry:.3e})")]
    NotHermitian { max_asymmetry: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("state is not normalized ({norm} where 1 expected)")]
    NotNormalized { norm: f64 },

    #[error("qubit index {qubit} out of range for {total}-qubit register")]
    QubitOutOfRange { qubit: usize, total: usize },

    #[error("qubit index {qubit} listed more than once")]
    DuplicateQubit { qubit: usize },

    #[error("target qubit list is empty")]
    EmptyTargets,

    #[error("noise parameter {value} outside [0, 1]")]
    InvalidNoise { value: f64 },

    #[error("Kraus operators violate completeness (deviation {deviation:.3e})")]
    IncompleteKraus { deviation: f64 },

    #[error("measurement branch has zero probability ({probability:.3e})")]
    ZeroProbabilityBranch { probability: f64 },

    #[error("POVM/ensemble label mismatch: expected {expected}, got {got}")]
    LabelMismatch { expected: String, got: String },

    #[error("grid `{name}` is empty")]
    EmptyGrid { name: &'static str },

    #[error("no PSD-feasible grid point for `{name}`")]
    InfeasibleGrid { name: &'static str },

    #[error("invalid parameter {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
