use serde::{Deserialize, Serialize};

use super::discord::{one_way_work_deficit, quantum_discord};
use super::measures::{concurrence_pure_cut, wootters_concurrence};
use super::MeasureConfig;
use crate::error::{Error, Result};
use crate::qcore::{partial_trace, von_neumann_entropy, DensityMatrix, QubitSubset, StateVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonogamyMeasure {
    Concurrence,
    Discord,
    Deficit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonogamyScore {
    pub measure: MonogamyMeasure,
    pub value: f64,
    /// `Q(node : rest)`.
    pub whole: f64,
    /// `Q(ρ_{node,j})` for every other qubit `j`, ascending in `j`.
    pub pairs: Vec<(usize, f64)>,
    /// `false` if any pairwise optimization hit its iteration budget.
    pub converged: bool,
}

/// Two-qubit reduced state of `node` and `other`, `node` first.
pub fn node_pair_state(state: &StateVector, node: usize, other: usize) -> Result<DensityMatrix> {
    let rho = partial_trace(state, &QubitSubset::new(state.n_qubits(), [node, other])?)?;
    if node < other {
        Ok(rho)
    } else {
        rho.swap_two_qubits()
    }
}

/// `δ_Q = Q(node : rest) - Σ_{j ≠ node} Q(ρ_{node,j})` for a pure state.
///
/// For the pure state the whole-cut value is closed form: `2√det ρ_node` for
/// concurrence and `S(ρ_node)` for discord and work deficit. With
/// `cfg.tangle` set, concurrences are squared on both sides.
pub fn monogamy_score(measure: MonogamyMeasure, state: &StateVector, cfg: &MeasureConfig) -> Result<MonogamyScore> {
    let n = state.n_qubits();
    if n < 3 {
        return Err(Error::InvalidSpec(format!(
            "monogamy needs at least 3 qubits, state has {n}"
        )));
    }
    let node = cfg.node;
    if node == 0 || node > n {
        return Err(Error::QubitOutOfRange {
            index: node,
            n_qubits: n,
        });
    }
    let power = |c: f64| if cfg.tangle { c * c } else { c };
    let whole = match measure {
        MonogamyMeasure::Concurrence => power(concurrence_pure_cut(state, node)?),
        MonogamyMeasure::Discord | MonogamyMeasure::Deficit => {
            von_neumann_entropy(&partial_trace(state, &QubitSubset::new(n, [node])?)?)?
        }
    };
    let mut pairs = Vec::with_capacity(n - 1);
    let mut converged = true;
    for j in (1..=n).filter(|&j| j != node) {
        let rho = node_pair_state(state, node, j)?;
        let q = match measure {
            MonogamyMeasure::Concurrence => power(wootters_concurrence(&rho)?),
            MonogamyMeasure::Discord => {
                let o = quantum_discord(&rho, cfg)?;
                converged &= o.converged;
                o.value
            }
            MonogamyMeasure::Deficit => {
                let o = one_way_work_deficit(&rho, cfg)?;
                converged &= o.converged;
                o.value
            }
        };
        pairs.push((j, q));
    }
    let value = whole - pairs.iter().map(|p| p.1).sum::<f64>();
    Ok(MonogamyScore {
        measure,
        value,
        whole,
        pairs,
        converged,
    })
}
