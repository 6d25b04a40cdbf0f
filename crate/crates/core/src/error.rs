use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("qubit index {index} out of range 1..={n_qubits}")]
    QubitOutOfRange { index: usize, n_qubits: usize },

    #[error("qubit subset must not be empty")]
    EmptySubset,

    #[error("qubit {0} listed more than once")]
    DuplicateQubit(usize),

    #[error("qubit {0} is used both as control and target")]
    Overlap(usize),

    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not unitary (max deviation {0:e})")]
    NotUnitary(f64),

    #[error("density matrix trace is {0}, expected 1")]
    BadTrace(f64),

    #[error("density matrix has negative eigenvalue {0:e}")]
    NotPositive(f64),

    #[error("value {value} outside of domain {domain}")]
    Domain { value: f64, domain: &'static str },

    #[error("invalid basis specification: {0}")]
    InvalidSpec(String),

    #[error("label {label} does not fit in {n_qubits} qubits")]
    InvalidLabel { label: usize, n_qubits: usize },

    #[error("{0}")]
    Parse(String),

    #[error("generated basis is not orthonormal (max deviation {0:e})")]
    NotOrthonormal(f64),

    #[error("measure {measure} differs between basis states {a} and {b}: {va} vs {vb}")]
    InvarianceViolation {
        measure: &'static str,
        a: String,
        b: String,
        va: f64,
        vb: f64,
    },
}
