use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::qcore::StateVector;

/// Amplitude-wise tolerance for "equal up to ±1".
pub const EQUIVALENCE_TOL: f64 = 1e-10;

/// `a[from] == sign · b[to]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelMatch {
    pub from: usize,
    pub to: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub matched: bool,
    /// One entry per state of the first list, in label order; empty entries
    /// are omitted when the match fails.
    pub mapping: Vec<LabelMatch>,
    /// First label of the first list without a partner in the second.
    pub first_unmatched: Option<usize>,
}

impl EquivalenceReport {
    fn failed(mapping: Vec<LabelMatch>, first_unmatched: Option<usize>) -> Self {
        Self {
            matched: false,
            mapping,
            first_unmatched,
        }
    }

    /// Partner of `from`, if matched.
    pub fn partner(&self, from: usize) -> Option<LabelMatch> {
        self.mapping.iter().copied().find(|m| m.from == from)
    }
}

fn equal_up_to(a: &StateVector, b: &StateVector, sign: f64) -> bool {
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .all(|(x, y)| (x - y * sign).norm() <= EQUIVALENCE_TOL)
}

/// Pairs every state of `a` with a distinct state of `b` equal to it up to a
/// factor `±1`.
///
/// Candidates are bucketed by their support (indices with non-negligible
/// amplitude) and matched greedily; the sign is resolved by direct comparison.
pub fn equivalence_up_to_sign_and_relabeling(a: &[StateVector], b: &[StateVector]) -> EquivalenceReport {
    if a.len() != b.len() {
        return EquivalenceReport::failed(Vec::new(), (!a.is_empty()).then_some(0));
    }
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (j, s) in b.iter().enumerate() {
        buckets.entry(s.support(EQUIVALENCE_TOL)).or_default().push(j);
    }
    let mut used = vec![false; b.len()];
    let mut mapping = Vec::with_capacity(a.len());
    for (i, s) in a.iter().enumerate() {
        let found = buckets.get(&s.support(EQUIVALENCE_TOL)).and_then(|cands| {
            cands.iter().copied().filter(|&j| !used[j]).find_map(|j| {
                if b[j].n_qubits() != s.n_qubits() {
                    None
                } else if equal_up_to(s, &b[j], 1.0) {
                    Some((j, 1))
                } else if equal_up_to(s, &b[j], -1.0) {
                    Some((j, -1))
                } else {
                    None
                }
            })
        });
        match found {
            Some((j, sign)) => {
                used[j] = true;
                mapping.push(LabelMatch { from: i, to: j, sign });
            }
            None => return EquivalenceReport::failed(mapping, Some(i)),
        }
    }
    EquivalenceReport {
        matched: true,
        mapping,
        first_unmatched: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basisgen::{generate_basis, BasisSpec};

    #[test]
    fn basis_matches_itself_and_its_negation() {
        let spec: BasisSpec = "(3,2,CO1,P2)".parse().unwrap();
        let basis = generate_basis(&spec).unwrap().states;
        let r = equivalence_up_to_sign_and_relabeling(&basis, &basis);
        assert!(r.matched);
        assert!(r.mapping.iter().all(|m| m.from == m.to && m.sign == 1));

        let negated: Vec<StateVector> = basis
            .iter()
            .rev()
            .map(|s| StateVector::new(3, s.amplitudes().iter().map(|a| -a).collect()).unwrap())
            .collect();
        let r = equivalence_up_to_sign_and_relabeling(&basis, &negated);
        assert!(r.matched);
        assert_eq!(
            r.partner(0).unwrap(),
            LabelMatch {
                from: 0,
                to: 7,
                sign: -1
            }
        );
    }

    #[test]
    fn length_mismatch_is_not_matched() {
        let spec: BasisSpec = "(3,2,CO1,P2)".parse().unwrap();
        let basis = generate_basis(&spec).unwrap().states;
        let r = equivalence_up_to_sign_and_relabeling(&basis, &basis[..4]);
        assert!(!r.matched);
        assert_eq!(r.first_unmatched, Some(0));
    }
}
