use super::density::{hermitian_eigenvalues, DensityMatrix};
use crate::error::{Error, Result};

/// Eigenvalues below this are treated as exactly zero before taking logs.
pub const ZERO_EIGENVALUE: f64 = 1e-12;

/// Shannon entropy (bits) of a probability spectrum, `0 log 0 := 0`.
pub fn spectrum_entropy(values: &[f64]) -> f64 {
    let s: f64 = values
        .iter()
        .filter(|&&p| p > ZERO_EIGENVALUE)
        .map(|&p| -p * p.log2())
        .sum();
    s.max(0.0)
}

/// `S(ρ) = -Σ λ log₂ λ`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let values = hermitian_eigenvalues(rho)?;
    Ok(spectrum_entropy(&values).min(rho.n_qubits() as f64))
}

/// `h(x) = -x log₂ x - (1-x) log₂(1-x)`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            value: x,
            domain: "[0, 1]",
        });
    }
    Ok(spectrum_entropy(&[x, 1.0 - x]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::state::StateVector;

    #[test]
    fn entropy_values() {
        assert!((von_neumann_entropy(&DensityMatrix::maximally_mixed(1)).unwrap() - 1.0).abs() < 1e-15);
        let pure = DensityMatrix::from_pure(&StateVector::basis(2, 3).unwrap());
        assert_eq!(von_neumann_entropy(&pure).unwrap(), 0.0);
        let rho = DensityMatrix::from_real_rows(&[&[0.75, 0.0], &[0.0, 0.25]]).unwrap();
        assert!((von_neumann_entropy(&rho).unwrap() - 0.811278).abs() < 5e-7);
    }

    #[test]
    fn binary_entropy_values() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        // -(3/4)log2(3/4) - (1/4)log2(1/4) = 2 - (3/4)log2 3
        let expected = 2.0 - 0.75 * 3f64.log2();
        assert!((binary_entropy(0.75).unwrap() - expected).abs() < 1e-15);
        assert!((expected - 0.811278).abs() < 5e-7);
        assert!(binary_entropy(-0.1).is_err());
        assert!(binary_entropy(1.5).is_err());
        assert!(binary_entropy(f64::NAN).is_err());
    }
}
