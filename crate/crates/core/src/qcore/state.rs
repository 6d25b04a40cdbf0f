use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Norm tolerance accepted by [`StateVector::new`].
pub const NORM_TOL: f64 = 1e-12;

/// Bit of `index` that holds qubit `qubit` (1-based, qubit 1 is the most
/// significant bit).
#[inline]
pub fn qubit_mask(n_qubits: usize, qubit: usize) -> usize {
    1 << (n_qubits - qubit)
}

#[inline]
pub fn qubit_bit(index: usize, n_qubits: usize, qubit: usize) -> u8 {
    ((index >> (n_qubits - qubit)) & 1) as u8
}

/// Formats `index` as an `n_qubits`-character bitstring, qubit 1 first.
pub fn bitstring(index: usize, n_qubits: usize) -> String {
    (1..=n_qubits)
        .map(|q| if qubit_bit(index, n_qubits, q) == 1 { '1' } else { '0' })
        .collect()
}

/// Parses a bitstring such as `"0110"` into an amplitude index.
pub fn parse_bitstring(s: &str) -> Result<(usize, usize)> {
    if s.is_empty() || s.len() > 32 {
        return Err(Error::Parse(format!("bad bitstring {s:?}")));
    }
    let mut index = 0usize;
    for c in s.chars() {
        index <<= 1;
        match c {
            '0' => {}
            '1' => index |= 1,
            _ => return Err(Error::Parse(format!("bad bitstring {s:?}"))),
        }
    }
    Ok((index, s.len()))
}

/// Pure state of `n_qubits` qubits as `2^n` complex amplitudes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Builds a state, checking the length and the unit norm.
    pub fn new(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::InvalidSpec("state needs at least one qubit".into()));
        }
        let expected = 1usize << n_qubits;
        if amplitudes.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: amplitudes.len(),
            });
        }
        let state = Self { n_qubits, amplitudes };
        let norm = state.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(state)
    }

    pub fn from_real(n_qubits: usize, amplitudes: &[f64]) -> Result<Self> {
        Self::new(n_qubits, amplitudes.iter().map(|&a| Complex64::new(a, 0.0)).collect())
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > 30 {
            return Err(Error::InvalidSpec(format!("unsupported qubit count {n_qubits}")));
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::InvalidLabel { label: index, n_qubits });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n_qubits, amplitudes })
    }

    /// Skips validation; callers guarantee a unitary image of a valid state.
    pub(crate) fn from_raw(n_qubits: usize, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << n_qubits);
        Self { n_qubits, amplitudes }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Indices with non-negligible amplitude, ascending.
    pub fn support(&self, tol: f64) -> Vec<usize> {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > tol)
            .map(|(i, _)| i)
            .collect()
    }

    /// Largest entrywise distance to `other`.
    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.amplitudes.iter().enumerate() {
            if a.norm() < 1e-12 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if a.im.abs() < 1e-12 {
                write!(f, "{:.6}|{}⟩", a.re, bitstring(i, self.n_qubits))?;
            } else {
                write!(f, "({:.6}{:+.6}i)|{}⟩", a.re, a.im, bitstring(i, self.n_qubits))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Nonempty set of distinct 1-based qubit indices, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QubitSubset {
    n_qubits: usize,
    indices: Vec<usize>,
}

impl QubitSubset {
    pub fn new(n_qubits: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        if indices.is_empty() {
            return Err(Error::EmptySubset);
        }
        for &q in &indices {
            if q == 0 || q > n_qubits {
                return Err(Error::QubitOutOfRange { index: q, n_qubits });
            }
        }
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateQubit(w[0]));
        }
        Ok(Self { n_qubits, indices })
    }

    /// Qubits `first..=last`.
    pub fn range(n_qubits: usize, first: usize, last: usize) -> Result<Self> {
        Self::new(n_qubits, first..=last)
    }

    pub fn all(n_qubits: usize) -> Result<Self> {
        Self::new(n_qubits, 1..=n_qubits)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, qubit: usize) -> bool {
        self.indices.binary_search(&qubit).is_ok()
    }

    /// `None` when the subset already covers every qubit.
    pub fn complement(&self) -> Option<Self> {
        let rest: Vec<usize> = (1..=self.n_qubits).filter(|q| !self.contains(*q)).collect();
        if rest.is_empty() {
            None
        } else {
            Some(Self {
                n_qubits: self.n_qubits,
                indices: rest,
            })
        }
    }

    /// Packs the bits of `index` at these qubits, first listed qubit most significant.
    pub fn extract(&self, index: usize) -> usize {
        self.indices
            .iter()
            .fold(0, |acc, &q| (acc << 1) | qubit_bit(index, self.n_qubits, q) as usize)
    }

    pub(crate) fn check_state(&self, state: &StateVector) -> Result<()> {
        if self.n_qubits != state.n_qubits() {
            return Err(Error::DimensionMismatch {
                expected: state.n_qubits(),
                found: self.n_qubits,
            });
        }
        Ok(())
    }
}

/// `⟨a|b⟩`, conjugate-linear in `a`.
pub fn inner_product(a: &StateVector, b: &StateVector) -> Result<Complex64> {
    if a.n_qubits() != b.n_qubits() {
        return Err(Error::DimensionMismatch {
            expected: a.n_qubits(),
            found: b.n_qubits(),
        });
    }
    Ok(a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(x, y)| x.conj() * y)
        .sum())
}
