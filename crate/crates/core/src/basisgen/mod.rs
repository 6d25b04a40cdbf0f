//! Bell-like basis generation.
//!
//! A basis `(n, m, Cq, Pp)` maps each computational state `|x₁…xₙ⟩` through
//! three steps:
//!
//! 1. Hadamard on the `m` control qubits (qubits `1..=m` by default),
//! 2. the family-`q` controlled `X^{⊗(n-m)}` onto the remaining qubits,
//! 3. the phase operator `Pp` on the control register.
//!
//! Steps 2 and 3 commute because the phase only reads control bits. Each
//! output state is an equal-weight superposition of `2^m` computational
//! states with amplitudes `±1/√(2^m)`.

mod equivalence;
mod serial;
mod special;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use equivalence::{equivalence_up_to_sign_and_relabeling, EquivalenceReport, LabelMatch};
pub use serial::{BasisDocument, FlatBasis, FlatState, StateDocument, TermDocument};
pub use special::{bell_basis, braid_basis, graph_basis};

use crate::error::{Error, Result};
use crate::gates::{apply_family_flip, apply_phase, apply_single, ControlledFamily, PhaseId, SingleQubitGate};
use crate::qcore::{bitstring, inner_product, QubitSubset, StateVector};

/// Largest supported qubit count.
pub const MAX_QUBITS: usize = 14;

/// Orthonormality tolerance enforced by [`generate_basis`].
pub const ORTHONORMAL_TOL: f64 = 1e-12;

/// `(n, m, Cq, Pp)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisSpec {
    pub n: usize,
    pub m: usize,
    pub family: ControlledFamily,
    pub phase: PhaseId,
}

impl BasisSpec {
    pub fn new(n: usize, m: usize, family: ControlledFamily, phase: PhaseId) -> Result<Self> {
        let spec = Self { n, m, family, phase };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_QUBITS {
            return Err(Error::InvalidSpec(format!("n = {} outside 1..={MAX_QUBITS}", self.n)));
        }
        if self.m == 0 || self.m > self.n {
            return Err(Error::InvalidSpec(format!(
                "m = {} outside 1..=n (n = {})",
                self.m, self.n
            )));
        }
        if self.m < self.family.min_controls() {
            return Err(Error::InvalidSpec(format!(
                "family {} needs at least {} control qubits, have {}",
                self.family,
                self.family.min_controls(),
                self.m
            )));
        }
        self.phase.validate(self.m)
    }

    /// Every valid spec with the given `n` and `m < n`, in sweep order
    /// (m ascending, phase P0..Pm then Pz, family O1, AQ, A1).
    pub fn sweep(n: usize) -> Vec<BasisSpec> {
        let mut out = Vec::new();
        for m in 1..n {
            for phase in PhaseId::all_for(m) {
                for family in ControlledFamily::ALL {
                    if let Ok(spec) = BasisSpec::new(n, m, family, phase) {
                        out.push(spec);
                    }
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }
}

impl fmt::Display for BasisSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},C{},{})", self.n, self.m, self.family, self.phase)
    }
}

impl FromStr for BasisSpec {
    type Err = Error;

    /// Accepts `"(3,2,CA1,P0)"` or `"3,2,A1,P0"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected (n,m,Cq,Pp), got {s:?}")));
        }
        let num = |p: &str| {
            p.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {p:?} in {s:?}")))
        };
        BasisSpec::new(num(parts[0])?, num(parts[1])?, parts[2].parse()?, parts[3].parse()?)
    }
}

/// Order in which the controlled flip and the phase are applied after the
/// Hadamard layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StepOrder {
    #[default]
    FlipThenPhase,
    PhaseThenFlip,
}

fn check_label(n: usize, label: usize) -> Result<()> {
    if label >> n != 0 {
        return Err(Error::InvalidLabel { label, n_qubits: n });
    }
    Ok(())
}

/// Runs the three-step pipeline on `|label⟩` with qubits `1..=m` as controls.
pub fn generate_state(spec: &BasisSpec, label: usize) -> Result<StateVector> {
    generate_state_ordered(spec, label, StepOrder::default())
}

pub fn generate_state_ordered(spec: &BasisSpec, label: usize, order: StepOrder) -> Result<StateVector> {
    spec.validate()?;
    let controls = QubitSubset::range(spec.n, 1, spec.m)?;
    generate_state_with_controls(spec, label, &controls, order)
}

/// Same pipeline with an arbitrary control register; targets are the
/// remaining qubits in ascending order.
pub fn generate_state_with_controls(
    spec: &BasisSpec,
    label: usize,
    controls: &QubitSubset,
    order: StepOrder,
) -> Result<StateVector> {
    spec.validate()?;
    check_label(spec.n, label)?;
    if controls.n_qubits() != spec.n || controls.len() != spec.m {
        return Err(Error::InvalidSpec(format!(
            "control register {:?} does not match {spec}",
            controls.indices()
        )));
    }
    let targets: Vec<usize> = controls.complement().map(|c| c.indices().to_vec()).unwrap_or_default();

    let mut state = StateVector::basis(spec.n, label)?;
    for &q in controls.indices() {
        state = apply_single(&state, &SingleQubitGate::H, q)?;
    }
    let flip = |s: &StateVector| apply_family_flip(spec.family, s, controls, &targets);
    let phase = |s: &StateVector| apply_phase(s, spec.phase, controls);
    match order {
        StepOrder::FlipThenPhase => phase(&flip(&state)?),
        StepOrder::PhaseThenFlip => flip(&phase(&state)?),
    }
}

/// What produced an [`EntangledBasis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BasisKind {
    Generated(BasisSpec),
    Bell { n: usize },
    Graph { n: usize },
    Braid { n: usize },
}

impl BasisKind {
    pub fn n_qubits(&self) -> usize {
        match *self {
            BasisKind::Generated(spec) => spec.n,
            BasisKind::Bell { n } | BasisKind::Graph { n } | BasisKind::Braid { n } => n,
        }
    }

    /// Number of nonzero terms per state.
    pub fn terms_per_state(&self) -> usize {
        match *self {
            BasisKind::Generated(spec) => 1 << spec.m,
            BasisKind::Bell { .. } => 2,
            BasisKind::Graph { n } => 1 << n,
            BasisKind::Braid { n } => 1 << (n - 1),
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKind::Generated(spec) => write!(f, "{spec}"),
            BasisKind::Bell { n } => write!(f, "({n},Bell)"),
            BasisKind::Graph { n } => write!(f, "({n},Graph)"),
            BasisKind::Braid { n } => write!(f, "({n},Braid)"),
        }
    }
}

/// `2^n` states, the one at position `label` being the image of `|label⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct EntangledBasis {
    pub kind: BasisKind,
    pub states: Vec<StateVector>,
}

impl EntangledBasis {
    pub fn n_qubits(&self) -> usize {
        self.kind.n_qubits()
    }

    pub fn state(&self, label: usize) -> Option<&StateVector> {
        self.states.get(label)
    }

    pub fn label(&self, label: usize) -> String {
        bitstring(label, self.n_qubits())
    }

    fn build(kind: BasisKind, f: impl Fn(usize) -> Result<StateVector> + Send + Sync) -> Result<Self> {
        let n = kind.n_qubits();
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::InvalidSpec(format!("n = {n} outside 1..={MAX_QUBITS}")));
        }
        let states = (0..1usize << n).into_par_iter().map(f).collect::<Result<Vec<_>>>()?;
        let basis = Self { kind, states };
        let check = check_orthonormal(&basis.states, ORTHONORMAL_TOL);
        if !check.orthonormal {
            return Err(Error::NotOrthonormal(check.max_deviation));
        }
        Ok(basis)
    }

    pub fn braid(n: usize) -> Result<Self> {
        Self::build(BasisKind::Braid { n }, |x| braid_basis(n, x))
    }

    pub fn bell(n: usize) -> Result<Self> {
        Self::build(BasisKind::Bell { n }, |x| bell_basis(n, x))
    }

    pub fn graph(n: usize) -> Result<Self> {
        Self::build(BasisKind::Graph { n }, |x| graph_basis(n, x))
    }
}

/// Generates all `2^n` states of `spec` and verifies orthonormality.
pub fn generate_basis(spec: &BasisSpec) -> Result<EntangledBasis> {
    spec.validate()?;
    EntangledBasis::build(BasisKind::Generated(*spec), |x| generate_state(spec, x))
}

/// Outcome of a Gram-matrix check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthonormalityCheck {
    pub orthonormal: bool,
    /// `max |⟨i|j⟩ - δᵢⱼ|`.
    pub max_deviation: f64,
    /// Whether the states span the whole space (count equals dimension).
    pub complete: bool,
}

pub fn check_orthonormal(states: &[StateVector], tol: f64) -> OrthonormalityCheck {
    let mut dev: f64 = 0.0;
    let mut comparable = true;
    for (i, a) in states.iter().enumerate() {
        for (j, b) in states.iter().enumerate().skip(i) {
            match inner_product(a, b) {
                Ok(z) => {
                    let target = if i == j { 1.0 } else { 0.0 };
                    dev = dev.max((z.re - target).hypot(z.im));
                }
                Err(_) => comparable = false,
            }
        }
    }
    let complete = comparable && states.first().is_some_and(|s| s.dim() == states.len());
    OrthonormalityCheck {
        orthonormal: comparable && dev <= tol,
        max_deviation: if comparable { dev } else { f64::INFINITY },
        complete,
    }
}

/// Whether every amplitude is either 0 or has modulus `2^{-terms_log2/2}`,
/// with exactly `2^{terms_log2}` nonzero terms.
pub fn has_equal_weight_terms(state: &StateVector, n_terms: usize, tol: f64) -> bool {
    let mag = 1.0 / (n_terms as f64).sqrt();
    let mut count = 0;
    for a in state.amplitudes() {
        let r = a.norm();
        if r > tol {
            if (r - mag).abs() > tol {
                return false;
            }
            count += 1;
        }
    }
    count == n_terms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::ControlledFamily::{A1, AQ, O1};

    #[test]
    fn spec_validation() {
        assert!(BasisSpec::new(3, 2, A1, PhaseId::P(0)).is_ok());
        assert!(BasisSpec::new(3, 0, A1, PhaseId::P(0)).is_err());
        assert!(BasisSpec::new(3, 4, A1, PhaseId::P(0)).is_err());
        assert!(BasisSpec::new(3, 1, AQ, PhaseId::P(0)).is_err());
        assert!(BasisSpec::new(3, 2, O1, PhaseId::P(3)).is_err());
        assert!(BasisSpec::new(0, 0, O1, PhaseId::P(0)).is_err());
        assert!(BasisSpec::new(15, 2, O1, PhaseId::P(0)).is_err());
        assert!(BasisSpec::new(3, 3, O1, PhaseId::Z).is_ok());
    }

    #[test]
    fn spec_parse_and_display() {
        let spec: BasisSpec = "(3,2,CA1,P0)".parse().unwrap();
        assert_eq!(spec, BasisSpec::new(3, 2, A1, PhaseId::P(0)).unwrap());
        assert_eq!(spec.to_string(), "(3,2,CA1,P0)");
        assert_eq!("4, 3, O1, Pz".parse::<BasisSpec>().unwrap().phase, PhaseId::Z);
        assert!("(3,2,CA1)".parse::<BasisSpec>().is_err());
        assert!("(3,1,CAQ,P0)".parse::<BasisSpec>().is_err());
    }

    #[test]
    fn sweep_counts() {
        // n = 3: m = 1 has 3 phases × {O1, A1}; m = 2 has 4 phases × 3 families.
        assert_eq!(BasisSpec::sweep(3).len(), 6 + 12);
        assert!(BasisSpec::sweep(5).iter().all(|s| s.validate().is_ok()));
    }

    #[test]
    fn label_out_of_range() {
        let spec = BasisSpec::new(3, 2, A1, PhaseId::P(0)).unwrap();
        assert!(matches!(generate_state(&spec, 8), Err(Error::InvalidLabel { .. })));
    }

    #[test]
    fn custom_control_register() {
        // Controls {2, 3}, target 1: |000⟩ → |000⟩+|001⟩+|010⟩+|111⟩ for A1.
        let spec = BasisSpec::new(3, 2, A1, PhaseId::P(0)).unwrap();
        let controls = QubitSubset::new(3, [2, 3]).unwrap();
        let s = generate_state_with_controls(&spec, 0, &controls, StepOrder::default()).unwrap();
        assert_eq!(s.support(1e-12), vec![0b000, 0b001, 0b010, 0b111]);
        let wrong = QubitSubset::new(3, [2]).unwrap();
        assert!(generate_state_with_controls(&spec, 0, &wrong, StepOrder::default()).is_err());
    }

    #[test]
    fn orthonormality_check_flags_duplicates() {
        let spec = BasisSpec::new(3, 2, O1, PhaseId::P(0)).unwrap();
        let mut states = generate_basis(&spec).unwrap().states;
        let c = check_orthonormal(&states, 1e-12);
        assert!(c.orthonormal && c.complete && c.max_deviation < 1e-12);
        states[3] = states[2].clone();
        let c = check_orthonormal(&states, 1e-12);
        assert!(!c.orthonormal);
        assert!((c.max_deviation - 1.0).abs() < 1e-12);
    }
}
