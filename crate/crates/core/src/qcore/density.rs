use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::state::{QubitSubset, StateVector};
use crate::error::{Error, Result};

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
pub const PSD_TOL: f64 = 1e-10;

/// Hermitian, positive semidefinite, unit-trace matrix on `n_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    data: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates Hermiticity, trace and positivity.
    pub fn new(data: DMatrix<Complex64>) -> Result<Self> {
        let dim = data.nrows();
        if data.ncols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: data.ncols(),
            });
        }
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::InvalidSpec(format!(
                "density matrix dimension {dim} is not a power of two"
            )));
        }
        let dev = hermitian_deviation(&data);
        if dev > HERMITIAN_TOL {
            return Err(Error::NotHermitian(dev));
        }
        let trace = data.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::BadTrace(trace.re));
        }
        let rho = Self {
            n_qubits: dim.trailing_zeros() as usize,
            data,
        };
        let min = hermitian_eigenvalues(&rho)?.last().copied().unwrap_or(0.0);
        if min < -PSD_TOL {
            return Err(Error::NotPositive(min));
        }
        Ok(rho)
    }

    /// Builds from a real matrix given row by row.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        let data = DMatrix::from_fn(dim, dim, |i, j| {
            Complex64::new(rows[i].get(j).copied().unwrap_or(f64::NAN), 0.0)
        });
        Self::new(data)
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn from_pure(state: &StateVector) -> Self {
        let a = state.amplitudes();
        let dim = a.len();
        Self {
            n_qubits: state.n_qubits(),
            data: DMatrix::from_fn(dim, dim, |i, j| a[i] * a[j].conj()),
        }
    }

    /// Maximally mixed state `I/dim`.
    pub fn maximally_mixed(n_qubits: usize) -> Self {
        let dim = 1 << n_qubits;
        Self {
            n_qubits,
            data: DMatrix::from_diagonal_element(dim, dim, Complex64::new(1.0 / dim as f64, 0.0)),
        }
    }

    pub(crate) fn from_raw(n_qubits: usize, data: DMatrix<Complex64>) -> Self {
        Self { n_qubits, data }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[(row, col)]
    }

    /// Largest entrywise distance to `other`.
    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        (&self.data - &other.data).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn determinant(&self) -> Complex64 {
        self.data.determinant()
    }

    /// Exchanges the two qubits of a two-qubit density matrix.
    pub fn swap_two_qubits(&self) -> Result<Self> {
        if self.n_qubits != 2 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: self.dim(),
            });
        }
        let perm = |i: usize| ((i & 1) << 1) | (i >> 1);
        Ok(Self {
            n_qubits: 2,
            data: DMatrix::from_fn(4, 4, |i, j| self.data[(perm(i), perm(j))]),
        })
    }

    /// Partial transpose on the qubits in `subset`.
    pub fn partial_transpose(&self, subset: &QubitSubset) -> Result<DMatrix<Complex64>> {
        if subset.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.n_qubits,
                found: subset.n_qubits(),
            });
        }
        let mask = subset
            .indices()
            .iter()
            .fold(0usize, |m, &q| m | super::state::qubit_mask(self.n_qubits, q));
        let dim = self.dim();
        Ok(DMatrix::from_fn(dim, dim, |i, j| {
            let ti = (i & !mask) | (j & mask);
            let tj = (j & !mask) | (i & mask);
            self.data[(ti, tj)]
        }))
    }
}

fn hermitian_deviation(m: &DMatrix<Complex64>) -> f64 {
    let n = m.nrows();
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Reduced density matrix on `keep`, kept qubits in ascending order.
pub fn partial_trace(state: &StateVector, keep: &QubitSubset) -> Result<DensityMatrix> {
    keep.check_state(state)?;
    let n = state.n_qubits();
    let k = keep.len();
    let traced = keep.complement();
    let t = n - k;
    // Row = kept bits, column = traced bits; ρ = M M†.
    let mut m = DMatrix::<Complex64>::zeros(1 << k, 1 << t);
    for (index, amp) in state.amplitudes().iter().enumerate() {
        let row = keep.extract(index);
        let col = traced.as_ref().map_or(0, |s| s.extract(index));
        m[(row, col)] = *amp;
    }
    let rho = &m * m.adjoint();
    Ok(DensityMatrix::from_raw(k, rho))
}

/// Eigenvalues of a Hermitian matrix, descending.
pub fn hermitian_matrix_eigenvalues(m: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    let dev = hermitian_deviation(m);
    if dev > HERMITIAN_TOL.max(1e-10 * max_entry(m)) {
        return Err(Error::NotHermitian(dev));
    }
    let sym = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let mut values: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Eigen-decomposition of a Hermitian matrix as `(values, vectors)`, columns
/// of `vectors` being the eigenvectors.
pub(crate) fn hermitian_eigen(m: &DMatrix<Complex64>) -> Result<(Vec<f64>, DMatrix<Complex64>)> {
    let dev = hermitian_deviation(m);
    if dev > HERMITIAN_TOL.max(1e-10 * max_entry(m)) {
        return Err(Error::NotHermitian(dev));
    }
    let sym = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(sym);
    Ok((eig.eigenvalues.iter().copied().collect(), eig.eigenvectors))
}

fn max_entry(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Real spectrum of `rho`, descending.
pub fn hermitian_eigenvalues(rho: &DensityMatrix) -> Result<Vec<f64>> {
    hermitian_matrix_eigenvalues(rho.matrix())
}
