//! Serialized forms of an [`EntangledBasis`].
//!
//! [`BasisDocument`] lists each state as signed terms with a symbolic common
//! magnitude `"1/sqrt(2^k)"`; [`FlatBasis`] stores raw complex amplitudes as
//! `[re, im]` pairs and round-trips exactly.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{check_orthonormal, BasisKind, EntangledBasis, ORTHONORMAL_TOL};
use crate::error::{Error, Result};
use crate::qcore::{bitstring, parse_bitstring, StateVector};

const TERM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDocument {
    /// Computational state as a bitstring, qubit 1 first.
    pub index: String,
    pub sign: i8,
    /// Common magnitude, `"1/sqrt(2^k)"`.
    pub magnitude: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateDocument {
    pub label: String,
    pub terms: Vec<TermDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDocument {
    pub spec: BasisKind,
    pub states: Vec<StateDocument>,
}

fn parse_magnitude(s: &str) -> Result<f64> {
    let k = s
        .trim()
        .strip_prefix("1/sqrt(2^")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|k| k.parse::<i32>().ok())
        .ok_or_else(|| Error::Parse(format!("bad magnitude {s:?}, expected 1/sqrt(2^k)")))?;
    Ok(std::f64::consts::FRAC_1_SQRT_2.powi(k))
}

fn signed_terms(state: &StateVector) -> Result<Vec<TermDocument>> {
    let support = state.support(TERM_TOL);
    let count = support.len();
    if !count.is_power_of_two() {
        return Err(Error::Parse(format!("state has {count} terms, not a power of two")));
    }
    let k = count.trailing_zeros();
    let magnitude = 1.0 / (count as f64).sqrt();
    support
        .into_iter()
        .map(|i| {
            let a = state.amplitudes()[i];
            if a.im.abs() > TERM_TOL || (a.re.abs() - magnitude).abs() > TERM_TOL {
                return Err(Error::Parse(format!(
                    "amplitude {a} at {} is not ±1/sqrt(2^{k})",
                    bitstring(i, state.n_qubits())
                )));
            }
            Ok(TermDocument {
                index: bitstring(i, state.n_qubits()),
                sign: if a.re < 0.0 { -1 } else { 1 },
                magnitude: format!("1/sqrt(2^{k})"),
            })
        })
        .collect()
}

fn assemble(spec: BasisKind, labeled: Vec<(String, Vec<Complex64>)>) -> Result<EntangledBasis> {
    let n = spec.n_qubits();
    let dim = 1usize << n;
    let mut slots: Vec<Option<StateVector>> = vec![None; dim];
    for (label, amps) in labeled {
        let (index, width) = parse_bitstring(&label)?;
        if width != n {
            return Err(Error::InvalidLabel {
                label: index,
                n_qubits: n,
            });
        }
        if slots[index].is_some() {
            return Err(Error::Parse(format!("label {label} appears twice")));
        }
        slots[index] = Some(StateVector::new(n, amps)?);
    }
    let states = slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| Error::Parse(format!("missing label {}", bitstring(i, n)))))
        .collect::<Result<Vec<_>>>()?;
    let check = check_orthonormal(&states, ORTHONORMAL_TOL);
    if !check.orthonormal {
        return Err(Error::NotOrthonormal(check.max_deviation));
    }
    Ok(EntangledBasis { kind: spec, states })
}

impl BasisDocument {
    pub fn from_basis(basis: &EntangledBasis) -> Result<Self> {
        let states = basis
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| {
                Ok(StateDocument {
                    label: basis.label(i),
                    terms: signed_terms(s)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            spec: basis.kind,
            states,
        })
    }

    pub fn to_basis(&self) -> Result<EntangledBasis> {
        let n = self.spec.n_qubits();
        let labeled = self
            .states
            .iter()
            .map(|s| {
                let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
                for t in &s.terms {
                    let (index, width) = parse_bitstring(&t.index)?;
                    if width != n {
                        return Err(Error::InvalidLabel {
                            label: index,
                            n_qubits: n,
                        });
                    }
                    amps[index] += Complex64::new(f64::from(t.sign) * parse_magnitude(&t.magnitude)?, 0.0);
                }
                Ok((s.label.clone(), amps))
            })
            .collect::<Result<Vec<_>>>()?;
        assemble(self.spec, labeled)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlatState {
    pub label: String,
    pub amplitudes: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlatBasis {
    pub spec: BasisKind,
    pub n_qubits: usize,
    pub states: Vec<FlatState>,
}

impl FlatBasis {
    pub fn from_basis(basis: &EntangledBasis) -> Self {
        Self {
            spec: basis.kind,
            n_qubits: basis.n_qubits(),
            states: basis
                .states
                .iter()
                .enumerate()
                .map(|(i, s)| FlatState {
                    label: basis.label(i),
                    amplitudes: s.amplitudes().iter().map(|a| [a.re, a.im]).collect(),
                })
                .collect(),
        }
    }

    pub fn to_basis(&self) -> Result<EntangledBasis> {
        if self.n_qubits != self.spec.n_qubits() {
            return Err(Error::DimensionMismatch {
                expected: self.spec.n_qubits(),
                found: self.n_qubits,
            });
        }
        let labeled = self
            .states
            .iter()
            .map(|s| {
                (
                    s.label.clone(),
                    s.amplitudes.iter().map(|&[re, im]| Complex64::new(re, im)).collect(),
                )
            })
            .collect();
        assemble(self.spec, labeled)
    }
}
