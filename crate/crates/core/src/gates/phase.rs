use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qcore::{qubit_bit, QubitSubset, StateVector};

/// Diagonal `±1` operator on the control register.
///
/// `P(0)` does nothing, `P(1)` applies `Z` to every control, `P(p)` for
/// `2 ≤ p ≤ m` multiplies by `(-1)` raised to a sum of cyclic `p`-fold bit
/// products (see [`phase_terms`]) and `Z` is `C(Z^{⊗m-1})` with the first
/// control as control.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseId {
    P(usize),
    Z,
}

impl PhaseId {
    /// `P0, P1, …, Pm, Pz`.
    pub fn all_for(m: usize) -> Vec<PhaseId> {
        (0..=m).map(PhaseId::P).chain([PhaseId::Z]).collect()
    }

    pub fn validate(self, m: usize) -> Result<()> {
        match self {
            PhaseId::P(p) if p > m => Err(Error::InvalidSpec(format!(
                "phase P{p} needs at least {p} control qubits, have {m}"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for PhaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhaseId::P(p) => write!(f, "P{p}"),
            PhaseId::Z => write!(f, "Pz"),
        }
    }
}

impl FromStr for PhaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix(['P', 'p']).unwrap_or(t);
        if t.eq_ignore_ascii_case("z") {
            return Ok(PhaseId::Z);
        }
        t.parse::<usize>()
            .map(PhaseId::P)
            .map_err(|_| Error::Parse(format!("unknown phase {s:?} (expected P0..Pm or Pz)")))
    }
}

impl Serialize for PhaseId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PhaseId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Index sets (0-based control positions) whose bit products are summed in
/// the exponent of `P(p)`, for `2 ≤ p ≤ m`.
///
/// Windows of `p` cyclically consecutive positions start at `0, 1, …, m-p+1`,
/// so the last window wraps onto the first control (`x_{m-p+2} … x_m x_1`).
/// Windows equal as sets are kept once. For `p = 2` this is
/// `x₁x₂ + x₂x₃ + … + x_m x₁` and for `p = m` the single product of all bits.
pub fn phase_terms(p: usize, m: usize) -> Vec<Vec<usize>> {
    let mut terms: Vec<Vec<usize>> = Vec::new();
    if p < 2 || p > m {
        return terms;
    }
    for start in 0..=(m - p + 1) {
        let mut t: Vec<usize> = (0..p).map(|j| (start + j) % m).collect();
        t.sort_unstable();
        if !terms.contains(&t) {
            terms.push(t);
        }
    }
    terms
}

/// Exponent of `-1` contributed by the phase operator for control bits `y`.
pub fn phase_exponent(phase: PhaseId, m: usize, y: &[u8]) -> Result<u8> {
    if y.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: y.len(),
        });
    }
    phase.validate(m)?;
    let e = match phase {
        PhaseId::P(0) => 0,
        PhaseId::P(1) => y.iter().fold(0, |a, &b| a ^ b),
        PhaseId::P(p) => phase_terms(p, m)
            .iter()
            .fold(0, |a, t| a ^ t.iter().fold(1, |prod, &i| prod & y[i])),
        PhaseId::Z => match y.split_first() {
            Some((&first, rest)) => first & rest.iter().fold(0, |a, &b| a ^ b),
            None => 0,
        },
    };
    Ok(e)
}

/// Applies the phase operator with `controls` as the control register,
/// in the listed (ascending) order.
pub fn apply_phase(state: &StateVector, phase: PhaseId, controls: &QubitSubset) -> Result<StateVector> {
    controls.check_state(state)?;
    let m = controls.len();
    phase.validate(m)?;
    let n = state.n_qubits();
    // Exponent depends only on the control bits; tabulate it once.
    let table = (0..1usize << m)
        .map(|bits| {
            let y: Vec<u8> = (0..m).map(|i| ((bits >> (m - 1 - i)) & 1) as u8).collect();
            phase_exponent(phase, m, &y)
        })
        .collect::<Result<Vec<u8>>>()?;
    let mut out = state.clone();
    for (i, a) in out.amplitudes_mut().iter_mut().enumerate() {
        let bits = controls
            .indices()
            .iter()
            .fold(0, |acc, &q| (acc << 1) | qubit_bit(i, n, q) as usize);
        if table[bits] == 1 {
            *a = -*a;
        }
    }
    Ok(out)
}
