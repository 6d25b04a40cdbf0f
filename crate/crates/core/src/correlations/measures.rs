use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::qcore::{
    binary_entropy, hermitian_eigen, hermitian_eigenvalues, hermitian_matrix_eigenvalues, partial_trace,
    von_neumann_entropy, DensityMatrix, QubitSubset, StateVector, ZERO_EIGENVALUE,
};

fn require_qubits(state: &StateVector, min: usize) -> Result<()> {
    if state.n_qubits() < min {
        return Err(Error::InvalidSpec(format!(
            "measure needs at least {min} qubits, state has {}",
            state.n_qubits()
        )));
    }
    Ok(())
}

pub(crate) fn require_two_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.n_qubits() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    Ok(())
}

/// `2√det ρ_q` for the cut `q : rest` of a pure state.
pub fn concurrence_pure_cut(state: &StateVector, qubit: usize) -> Result<f64> {
    require_qubits(state, 2)?;
    let rho = partial_trace(state, &QubitSubset::new(state.n_qubits(), [qubit])?)?;
    let det = rho.get(0, 0).re * rho.get(1, 1).re - rho.get(0, 1).norm_sqr();
    Ok((2.0 * det.max(0.0).sqrt()).min(1.0))
}

/// Concurrence of the cut `1 : rest`.
pub fn concurrence_pure_1_rest(state: &StateVector) -> Result<f64> {
    concurrence_pure_cut(state, 1)
}

/// Wootters concurrence `max(0, λ₁ - λ₂ - λ₃ - λ₄)`, with `λᵢ` the
/// descending square roots of the spectrum of `ρ (Y⊗Y) ρ* (Y⊗Y)`.
///
/// The `λᵢ` are taken as the singular values of `τ = Wᵀ (Y⊗Y) W`, where the
/// columns of `W` are the eigenvectors of `ρ` scaled by `√pᵢ`. This avoids
/// square roots of near-zero eigenvalues, which would turn rounding noise in
/// rank-deficient states into errors of order `1e-8`. Weights `pᵢ` below
/// [`ZERO_EIGENVALUE`] are dropped.
pub fn wootters_concurrence(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubit(rho)?;
    let (values, vectors) = hermitian_eigen(rho.matrix())?;
    let kept: Vec<usize> = (0..4).filter(|&i| values[i] > ZERO_EIGENVALUE).collect();
    if kept.is_empty() {
        return Ok(0.0);
    }
    let w = DMatrix::from_fn(4, kept.len(), |r, c| vectors[(r, kept[c])] * values[kept[c]].sqrt());
    // (Y⊗Y) is real, antidiagonal with signs (-1, 1, 1, -1).
    let yy_w = DMatrix::from_fn(4, kept.len(), |r, c| {
        let sign = if r == 0 || r == 3 { -1.0 } else { 1.0 };
        w[(3 - r, c)] * sign
    });
    let tau = w.transpose() * yy_w;
    let mut lambdas: Vec<f64> = tau.singular_values().iter().copied().collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    let rest: f64 = lambdas.iter().skip(1).sum();
    Ok((lambdas[0] - rest).max(0.0))
}

/// Entanglement of formation `h((1 + √(1 - C²))/2)`.
pub fn eof_from_concurrence(c: f64) -> Result<f64> {
    if !(0.0..=1.0 + 1e-12).contains(&c) {
        return Err(Error::Domain {
            value: c,
            domain: "[0, 1]",
        });
    }
    let c = c.min(1.0);
    binary_entropy((1.0 + (1.0 - c * c).sqrt()) / 2.0)
}

/// Negativity of the `1 : rest` cut of a pure state, `C/2`.
pub fn negativity_pure(state: &StateVector) -> Result<f64> {
    Ok(concurrence_pure_1_rest(state)? / 2.0)
}

/// `log₂(2N + 1)` for the `1 : rest` cut of a pure state.
pub fn log_negativity_pure(state: &StateVector) -> Result<f64> {
    Ok((2.0 * negativity_pure(state)? + 1.0).log2())
}

/// Negativity `(‖ρ^{T_A}‖₁ - 1)/2` from the partial transpose on `subset`.
pub fn negativity_partial_transpose(state: &StateVector, subset: &QubitSubset) -> Result<f64> {
    let rho = DensityMatrix::from_pure(state);
    let pt = rho.partial_transpose(subset)?;
    let trace_norm: f64 = hermitian_matrix_eigenvalues(&pt)?.iter().map(|v| v.abs()).sum();
    Ok(((trace_norm - 1.0) / 2.0).max(0.0))
}

/// Every nonempty qubit subset of size at most `⌊n/2⌋`, ascending by size
/// then lexicographically.
pub fn half_cuts(n: usize) -> Vec<QubitSubset> {
    let mut out = Vec::new();
    for size in 1..=n / 2 {
        let mut masks: Vec<usize> = (1usize..1 << n).filter(|m| m.count_ones() as usize == size).collect();
        // Lexicographic on qubit lists: qubit 1 is the highest bit of the mask.
        masks.sort_by_key(|&m| std::cmp::Reverse(m));
        for m in masks {
            let qubits = (1..=n).filter(|q| m >> (n - q) & 1 == 1);
            out.push(QubitSubset::new(n, qubits).expect("valid subset"));
        }
    }
    out
}

/// Generalized geometric measure: `1 - max_A λ_max(ρ_A)` over all cuts
/// `A : Ā` with `|A| ≤ ⌊n/2⌋`.
pub fn ggm(state: &StateVector) -> Result<f64> {
    require_qubits(state, 2)?;
    let mut best: f64 = 0.0;
    for cut in half_cuts(state.n_qubits()) {
        let top = hermitian_eigenvalues(&partial_trace(state, &cut)?)?[0];
        best = best.max(top);
    }
    Ok((1.0 - best).max(0.0))
}

/// Mean von Neumann entropy of `ρ_A` over every nonempty subset `A` with
/// `|A| ≤ ⌊n/2⌋`. For even `n` the two halves of each half-half cut are both
/// counted.
pub fn avg_entanglement_entropy(state: &StateVector) -> Result<f64> {
    require_qubits(state, 2)?;
    let cuts = half_cuts(state.n_qubits());
    let mut total = 0.0;
    for cut in &cuts {
        total += von_neumann_entropy(&partial_trace(state, cut)?)?;
    }
    Ok(total / cuts.len() as f64)
}

/// Mean entropy over the `2^{n-1} - 1` distinct bipartitions (half-half cuts
/// counted once).
pub fn avg_entanglement_entropy_bipartitions(state: &StateVector) -> Result<f64> {
    require_qubits(state, 2)?;
    let n = state.n_qubits();
    let cuts: Vec<QubitSubset> = half_cuts(n)
        .into_iter()
        .filter(|c| 2 * c.len() < n || c.contains(1))
        .collect();
    debug_assert_eq!(cuts.len(), (1 << (n - 1)) - 1);
    let mut total = 0.0;
    for cut in &cuts {
        total += von_neumann_entropy(&partial_trace(state, cut)?)?;
    }
    Ok(total / cuts.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use std::f64::consts::FRAC_1_SQRT_2 as S;

    fn bell_rho() -> DensityMatrix {
        DensityMatrix::from_pure(&StateVector::from_real(2, &[S, 0.0, 0.0, S]).unwrap())
    }

    #[test]
    fn concurrence_of_product_and_bell_states() {
        assert_eq!(
            concurrence_pure_1_rest(&StateVector::basis(3, 0).unwrap()).unwrap(),
            0.0
        );
        let bell = StateVector::from_real(2, &[S, 0.0, 0.0, S]).unwrap();
        assert!((concurrence_pure_1_rest(&bell).unwrap() - 1.0).abs() < 1e-15);
        assert!(concurrence_pure_1_rest(&StateVector::basis(1, 0).unwrap()).is_err());
    }

    #[test]
    fn wootters_reference_values() {
        assert!((wootters_concurrence(&bell_rho()).unwrap() - 1.0).abs() < 1e-12);
        assert!(wootters_concurrence(&DensityMatrix::maximally_mixed(2)).unwrap() < 1e-12);
        // Werner state p|Φ+⟩⟨Φ+| + (1-p)I/4 has C = max(0, (3p-1)/2).
        for p in [0.2, 0.5, 0.8] {
            let data = bell_rho().matrix() * Complex64::new(p, 0.0)
                + DensityMatrix::maximally_mixed(2).matrix() * Complex64::new(1.0 - p, 0.0);
            let c = wootters_concurrence(&DensityMatrix::new(data).unwrap()).unwrap();
            assert!((c - ((3.0 * p - 1.0) / 2.0).max(0.0)).abs() < 1e-12, "p = {p}: {c}");
        }
        assert!(wootters_concurrence(&DensityMatrix::maximally_mixed(1)).is_err());
    }

    #[test]
    fn eof_values() {
        assert!((eof_from_concurrence(1.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(eof_from_concurrence(0.0).unwrap(), 0.0);
        let c = 3f64.sqrt() / 2.0;
        assert!((eof_from_concurrence(c).unwrap() - (2.0 - 0.75 * 3f64.log2())).abs() < 1e-12);
        assert!(eof_from_concurrence(1.1).is_err());
        assert!(eof_from_concurrence(-0.1).is_err());
    }

    #[test]
    fn log_negativity_values() {
        assert_eq!(log_negativity_pure(&StateVector::basis(3, 5).unwrap()).unwrap(), 0.0);
        let ghz = StateVector::from_real(3, &[S, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, S]).unwrap();
        assert!((log_negativity_pure(&ghz).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn half_cut_enumeration() {
        let cuts = half_cuts(4);
        assert_eq!(cuts.len(), 4 + 6);
        assert_eq!(cuts[0].indices(), &[1]);
        assert_eq!(cuts[4].indices(), &[1, 2]);
        assert_eq!(cuts[9].indices(), &[3, 4]);
        assert_eq!(half_cuts(5).len(), 5 + 10);
        assert_eq!(half_cuts(3).len(), 3);
    }

    #[test]
    fn ghz_measures() {
        let ghz = StateVector::from_real(3, &[S, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, S]).unwrap();
        assert!((ggm(&ghz).unwrap() - 0.5).abs() < 1e-15);
        assert!((avg_entanglement_entropy(&ghz).unwrap() - 1.0).abs() < 1e-12);
        assert!((avg_entanglement_entropy_bipartitions(&ghz).unwrap() - 1.0).abs() < 1e-12);
        assert!(ggm(&StateVector::basis(3, 0).unwrap()).unwrap().abs() < 1e-15);
    }
}
