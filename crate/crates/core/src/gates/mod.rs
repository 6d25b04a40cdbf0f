//! Gate kernels acting directly on amplitude indices.
//!
//! Every controlled operation is applied by testing and flipping bits of the
//! amplitude index, so a gate costs `O(2^n · 2^k)` for a `k`-qubit target
//! unitary and never materializes a `2^n × 2^n` matrix.

mod phase;

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use phase::{apply_phase, phase_exponent, phase_terms, PhaseId};

use crate::error::{Error, Result};
use crate::qcore::{qubit_bit, qubit_mask, QubitSubset, StateVector};

pub const UNITARY_TOL: f64 = 1e-12;

const fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// 2×2 unitary acting on one qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitGate([[Complex64; 2]; 2]);

impl SingleQubitGate {
    pub const I: Self = Self([[c(1.0), c(0.0)], [c(0.0), c(1.0)]]);
    pub const X: Self = Self([[c(0.0), c(1.0)], [c(1.0), c(0.0)]]);
    pub const Y: Self = Self([[c(0.0), Complex64::new(0.0, -1.0)], [Complex64::new(0.0, 1.0), c(0.0)]]);
    pub const Z: Self = Self([[c(1.0), c(0.0)], [c(0.0), c(-1.0)]]);
    pub const H: Self = Self([
        [c(std::f64::consts::FRAC_1_SQRT_2), c(std::f64::consts::FRAC_1_SQRT_2)],
        [c(std::f64::consts::FRAC_1_SQRT_2), c(-std::f64::consts::FRAC_1_SQRT_2)],
    ]);

    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let gate = Self(entries);
        let dev = Unitary::from(gate).unitarity_deviation();
        if dev > UNITARY_TOL {
            return Err(Error::NotUnitary(dev));
        }
        Ok(gate)
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.0
    }

    /// `self · other`.
    pub fn then_after(&self, other: &SingleQubitGate) -> SingleQubitGate {
        let (a, b) = (&self.0, &other.0);
        let mut out = [[c(0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        SingleQubitGate(out)
    }

    pub fn adjoint(&self) -> SingleQubitGate {
        let a = &self.0;
        SingleQubitGate([[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]])
    }
}

/// Dense unitary on `k` qubits; row/column index bits follow the order in
/// which target qubits are listed (first target = most significant bit).
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary {
    n_qubits: usize,
    matrix: DMatrix<Complex64>,
}

impl Unitary {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        let dim = matrix.nrows();
        if matrix.ncols() != dim || dim < 2 || !dim.is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: dim.next_power_of_two().max(2),
                found: matrix.ncols(),
            });
        }
        let u = Self {
            n_qubits: dim.trailing_zeros() as usize,
            matrix,
        };
        let dev = u.unitarity_deviation();
        if dev > UNITARY_TOL {
            return Err(Error::NotUnitary(dev));
        }
        Ok(u)
    }

    /// `gate^{⊗k}`.
    pub fn tensor_power(gate: SingleQubitGate, k: usize) -> Self {
        let single = Unitary::from(gate);
        (1..k.max(1)).fold(single.clone(), |acc, _| acc.kron(&single))
    }

    /// `self ⊗ other`.
    pub fn kron(&self, other: &Unitary) -> Unitary {
        Unitary {
            n_qubits: self.n_qubits + other.n_qubits,
            matrix: self.matrix.kronecker(&other.matrix),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn adjoint(&self) -> Unitary {
        Unitary {
            n_qubits: self.n_qubits,
            matrix: self.matrix.adjoint(),
        }
    }

    fn unitarity_deviation(&self) -> f64 {
        let prod = self.matrix.adjoint() * &self.matrix;
        let dim = prod.nrows();
        let mut dev: f64 = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                let target = if i == j { c(1.0) } else { c(0.0) };
                dev = dev.max((prod[(i, j)] - target).norm());
            }
        }
        dev
    }
}

impl From<SingleQubitGate> for Unitary {
    fn from(gate: SingleQubitGate) -> Self {
        let e = gate.0;
        Unitary {
            n_qubits: 1,
            matrix: DMatrix::from_row_slice(2, 2, &[e[0][0], e[0][1], e[1][0], e[1][1]]),
        }
    }
}

/// Condition under which a multiqubit controlled-U fires.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ControlledFamily {
    /// All controls are 1 (the usual `Cⁿ(U)`).
    A1,
    /// Odd number of controls are 1.
    O1,
    /// All controls are equal. Needs at least two controls: with a single
    /// control it would fire unconditionally. The two-control case
    /// `diag{X, I, I, X}` is accepted.
    AQ,
}

impl ControlledFamily {
    pub const ALL: [ControlledFamily; 3] = [Self::O1, Self::AQ, Self::A1];

    pub fn min_controls(self) -> usize {
        match self {
            Self::AQ => 2,
            _ => 1,
        }
    }

    /// Whether the gate fires for the given control bits.
    pub fn fires(self, bits: &[u8]) -> bool {
        match self {
            Self::A1 => bits.iter().all(|&b| b == 1),
            Self::O1 => bits.iter().fold(0, |acc, &b| acc ^ b) == 1,
            Self::AQ => bits.iter().all(|&b| b == bits[0]),
        }
    }

    /// Same test on control bits packed into an integer of width `m`.
    pub fn fires_packed(self, bits: usize, m: usize) -> bool {
        let all = (1usize << m) - 1;
        match self {
            Self::A1 => bits == all,
            Self::O1 => bits.count_ones() % 2 == 1,
            Self::AQ => bits == all || bits == 0,
        }
    }
}

impl fmt::Display for ControlledFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::A1 => "A1",
            Self::O1 => "O1",
            Self::AQ => "AQ",
        })
    }
}

impl FromStr for ControlledFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let t = t.strip_prefix('C').unwrap_or(&t);
        match t {
            "A1" | "ALL1" => Ok(Self::A1),
            "O1" | "ODD1" => Ok(Self::O1),
            "AQ" | "ALLQ" | "ALLEQUAL" => Ok(Self::AQ),
            _ => Err(Error::Parse(format!(
                "unknown controlled family {s:?} (expected A1, O1 or AQ)"
            ))),
        }
    }
}

/// The 4×4 braid operator
/// `R = (1/√2)[[1,0,0,1],[0,1,-1,0],[0,1,1,0],[-1,0,0,1]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BraidOperator;

impl BraidOperator {
    pub const ENTRIES: [[f64; 4]; 4] = [
        [1.0, 0.0, 0.0, 1.0],
        [0.0, 1.0, -1.0, 0.0],
        [0.0, 1.0, 1.0, 0.0],
        [-1.0, 0.0, 0.0, 1.0],
    ];

    pub fn unitary(&self) -> Unitary {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Unitary {
            n_qubits: 2,
            matrix: DMatrix::from_fn(4, 4, |i, j| c(Self::ENTRIES[i][j] * s)),
        }
    }
}

fn check_qubit(n_qubits: usize, q: usize) -> Result<()> {
    if q == 0 || q > n_qubits {
        return Err(Error::QubitOutOfRange { index: q, n_qubits });
    }
    Ok(())
}

fn check_targets(state: &StateVector, controls: &[usize], targets: &[usize]) -> Result<()> {
    let n = state.n_qubits();
    for (i, &t) in targets.iter().enumerate() {
        check_qubit(n, t)?;
        if targets[..i].contains(&t) {
            return Err(Error::DuplicateQubit(t));
        }
        if controls.contains(&t) {
            return Err(Error::Overlap(t));
        }
    }
    Ok(())
}

/// Applies `u` on `targets` to every amplitude block whose control bits
/// satisfy `fires`. Targets must not intersect `controls`.
fn controlled_kernel(
    state: &StateVector,
    controls: &[usize],
    targets: &[usize],
    u: &Unitary,
    fires: impl Fn(&[u8]) -> bool,
) -> Result<StateVector> {
    check_targets(state, controls, targets)?;
    let k = targets.len();
    if u.n_qubits() != k {
        return Err(Error::DimensionMismatch {
            expected: 1 << k,
            found: u.matrix().nrows(),
        });
    }
    let n = state.n_qubits();
    let masks: Vec<usize> = targets.iter().map(|&t| qubit_mask(n, t)).collect();
    let target_mask = masks.iter().fold(0, |a, m| a | m);
    let offsets: Vec<usize> = (0..1usize << k)
        .map(|a| {
            masks
                .iter()
                .enumerate()
                .filter(|(j, _)| (a >> (k - 1 - j)) & 1 == 1)
                .fold(0, |acc, (_, m)| acc | m)
        })
        .collect();

    let mut out = state.clone();
    let amps = out.amplitudes_mut();
    let src = state.amplitudes();
    let mut bits = vec![0u8; controls.len()];
    let mut block = vec![Complex64::new(0.0, 0.0); 1 << k];
    for base in (0..src.len()).filter(|i| i & target_mask == 0) {
        for (b, &q) in bits.iter_mut().zip(controls) {
            *b = qubit_bit(base, n, q);
        }
        if !fires(&bits) {
            continue;
        }
        for (v, &off) in block.iter_mut().zip(&offsets) {
            *v = src[base | off];
        }
        for (row, &off) in offsets.iter().enumerate() {
            amps[base | off] = (0..block.len()).map(|col| u.matrix()[(row, col)] * block[col]).sum();
        }
    }
    Ok(out)
}

/// `I ⊗ … ⊗ U ⊗ … ⊗ I` with `U` on `target`.
pub fn apply_single(state: &StateVector, gate: &SingleQubitGate, target: usize) -> Result<StateVector> {
    check_qubit(state.n_qubits(), target)?;
    let n = state.n_qubits();
    let mask = qubit_mask(n, target);
    let g = gate.entries();
    let mut out = state.clone();
    let src = state.amplitudes();
    let amps = out.amplitudes_mut();
    for i0 in (0..src.len()).filter(|i| i & mask == 0) {
        let i1 = i0 | mask;
        let (a0, a1) = (src[i0], src[i1]);
        amps[i0] = g[0][0] * a0 + g[0][1] * a1;
        amps[i1] = g[1][0] * a0 + g[1][1] * a1;
    }
    Ok(out)
}

/// Applies a dense unitary on the listed qubits (first listed = most significant).
pub fn apply_unitary(state: &StateVector, targets: &[usize], u: &Unitary) -> Result<StateVector> {
    controlled_kernel(state, &[], targets, u, |_| true)
}

/// `|x, y⟩ → |x, x ⊕ y⟩`.
pub fn apply_cnot(state: &StateVector, control: usize, target: usize) -> Result<StateVector> {
    let n = state.n_qubits();
    check_qubit(n, control)?;
    check_qubit(n, target)?;
    if control == target {
        return Err(Error::Overlap(control));
    }
    let (cm, tm) = (qubit_mask(n, control), qubit_mask(n, target));
    let src = state.amplitudes();
    let amps = (0..src.len())
        .map(|i| if i & cm != 0 { src[i ^ tm] } else { src[i] })
        .collect();
    Ok(StateVector::from_raw(n, amps))
}

/// `Cⁿ(U)`: `U` on `targets` when every control bit is 1.
pub fn apply_all1_controlled(
    state: &StateVector,
    controls: &QubitSubset,
    targets: &[usize],
    u: &Unitary,
) -> Result<StateVector> {
    controls.check_state(state)?;
    controlled_kernel(state, controls.indices(), targets, u, |b| ControlledFamily::A1.fires(b))
}

/// Odd-one controlled gate: each block unitary is applied to its own block
/// of targets when the XOR of the control bits is 1.
pub fn apply_odd1_controlled(
    state: &StateVector,
    controls: &QubitSubset,
    target_blocks: &[(Vec<usize>, Unitary)],
) -> Result<StateVector> {
    controls.check_state(state)?;
    let mut seen: Vec<usize> = Vec::new();
    for (block, _) in target_blocks {
        for &q in block {
            if seen.contains(&q) {
                return Err(Error::Overlap(q));
            }
            seen.push(q);
        }
    }
    // Blocks act on disjoint qubits and never touch the controls, so applying
    // them one after another under the same parity test equals their tensor product.
    let mut out = state.clone();
    for (block, u) in target_blocks {
        out = controlled_kernel(&out, controls.indices(), block, u, |b| ControlledFamily::O1.fires(b))?;
    }
    Ok(out)
}

/// All-equal controlled gate: `U` on `targets` when all control bits agree.
pub fn apply_allequal_controlled(
    state: &StateVector,
    controls: &QubitSubset,
    targets: &[usize],
    u: &Unitary,
) -> Result<StateVector> {
    controls.check_state(state)?;
    if controls.len() < ControlledFamily::AQ.min_controls() {
        return Err(Error::InvalidSpec(
            "all-equal controlled gate needs at least 2 control qubits".into(),
        ));
    }
    controlled_kernel(state, controls.indices(), targets, u, |b| ControlledFamily::AQ.fires(b))
}

/// Applies `X` to each of `targets` under the given family, with the target
/// register treated as one block for A1/AQ and one block per qubit for O1.
pub fn apply_family_flip(
    family: ControlledFamily,
    state: &StateVector,
    controls: &QubitSubset,
    targets: &[usize],
) -> Result<StateVector> {
    if targets.is_empty() {
        return Ok(state.clone());
    }
    match family {
        ControlledFamily::A1 => apply_all1_controlled(
            state,
            controls,
            targets,
            &Unitary::tensor_power(SingleQubitGate::X, targets.len()),
        ),
        ControlledFamily::AQ => apply_allequal_controlled(
            state,
            controls,
            targets,
            &Unitary::tensor_power(SingleQubitGate::X, targets.len()),
        ),
        ControlledFamily::O1 => {
            let blocks: Vec<(Vec<usize>, Unitary)> = targets
                .iter()
                .map(|&t| (vec![t], Unitary::from(SingleQubitGate::X)))
                .collect();
            apply_odd1_controlled(state, controls, &blocks)
        }
    }
}

/// `Z̃`: negates amplitudes whose listed qubits are all 1.
pub fn apply_multi_phase_z(state: &StateVector, qubits: &QubitSubset) -> Result<StateVector> {
    qubits.check_state(state)?;
    let n = state.n_qubits();
    let mask = qubits.indices().iter().fold(0, |m, &q| m | qubit_mask(n, q));
    let amps = state
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(i, &a)| if i & mask == mask { -a } else { a })
        .collect();
    Ok(StateVector::from_raw(n, amps))
}

/// `R` on qubits `(pair_start, pair_start + 1)`.
pub fn apply_braid_r(state: &StateVector, pair_start: usize) -> Result<StateVector> {
    let n = state.n_qubits();
    check_qubit(n, pair_start)?;
    check_qubit(n, pair_start + 1)?;
    apply_unitary(state, &[pair_start, pair_start + 1], &BraidOperator.unitary())
}
