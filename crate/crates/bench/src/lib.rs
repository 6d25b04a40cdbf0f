//! Shared workloads for the criterion benches.

use bellbasis::basisgen::generate_state;
use bellbasis::correlations::node_pair_state;
use bellbasis::{BasisSpec, ControlledFamily, DensityMatrix, PhaseId, StateVector};

/// `(n, n-1, CA1, P2)`: the widest control register for `n` qubits.
pub fn wide_spec(n: usize) -> BasisSpec {
    BasisSpec::new(n, n - 1, ControlledFamily::A1, PhaseId::P(2)).expect("n >= 3")
}

/// A label with mixed bits so no kernel takes a trivial path.
pub fn busy_state(n: usize) -> StateVector {
    let label = (0..n).step_by(2).fold(0usize, |acc, q| acc | 1 << q);
    generate_state(&wide_spec(n), label).expect("valid label")
}

/// Two-qubit marginal with nonzero discord, from `(4,3,CO1,P3)`.
pub fn discord_marginal() -> DensityMatrix {
    let spec = BasisSpec::new(4, 3, ControlledFamily::O1, PhaseId::P(3)).expect("valid spec");
    node_pair_state(&generate_state(&spec, 0).expect("label 0"), 1, 2).expect("pair")
}
