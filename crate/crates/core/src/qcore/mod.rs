//! Complex state vectors, density matrices, partial traces, Hermitian spectra
//! and entropies.
//!
//! Qubits are numbered from 1 and qubit 1 is the most significant bit of an
//! amplitude index, so `|x₁x₂…xₙ⟩` reads left to right.

mod density;
mod entropy;
mod state;

pub(crate) use density::hermitian_eigen;
pub use density::{
    hermitian_eigenvalues, hermitian_matrix_eigenvalues, partial_trace, DensityMatrix, HERMITIAN_TOL, PSD_TOL,
    TRACE_TOL,
};
pub use entropy::{binary_entropy, spectrum_entropy, von_neumann_entropy, ZERO_EIGENVALUE};
pub use state::{bitstring, inner_product, parse_bitstring, qubit_bit, qubit_mask, QubitSubset, StateVector, NORM_TOL};
