use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gates::{apply_all1_controlled, apply_braid_r, apply_single, SingleQubitGate, Unitary};
use crate::qcore::{QubitSubset, StateVector};

use super::check_label;

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min || n > super::MAX_QUBITS {
        return Err(Error::InvalidSpec(format!(
            "n = {n} outside {min}..={}",
            super::MAX_QUBITS
        )));
    }
    Ok(())
}

/// `(|0 x₂…xₙ⟩ + (-1)^{x₁} |1 x̄₂…x̄ₙ⟩)/√2`, written out term by term.
pub fn bell_basis(n: usize, label: usize) -> Result<StateVector> {
    check_n(n, 1)?;
    check_label(n, label)?;
    let top = 1usize << (n - 1);
    let rest = label & (top - 1);
    let sign = if label & top != 0 { -1.0 } else { 1.0 };
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
    amps[rest] += Complex64::new(s, 0.0);
    amps[top | (!rest & (top - 1))] += Complex64::new(sign * s, 0.0);
    StateVector::new(n, amps)
}

/// `C(Z^{⊗n-1}) H^{⊗n} |label⟩` with qubit 1 as control.
pub fn graph_basis(n: usize, label: usize) -> Result<StateVector> {
    check_n(n, 2)?;
    let mut state = StateVector::basis(n, label)?;
    for q in 1..=n {
        state = apply_single(&state, &SingleQubitGate::H, q)?;
    }
    let control = QubitSubset::new(n, [1])?;
    let targets: Vec<usize> = (2..=n).collect();
    apply_all1_controlled(
        &state,
        &control,
        &targets,
        &Unitary::tensor_power(SingleQubitGate::Z, n - 1),
    )
}

/// `(R ⊗ I ⊗ …)(I ⊗ R ⊗ …)…(… ⊗ I ⊗ R)|label⟩`: the rightmost factor, `R` on
/// qubits `(n-1, n)`, acts first and `R` on `(1, 2)` last.
pub fn braid_basis(n: usize, label: usize) -> Result<StateVector> {
    check_n(n, 2)?;
    let mut state = StateVector::basis(n, label)?;
    for start in (1..n).rev() {
        state = apply_braid_r(&state, start)?;
    }
    Ok(state)
}
