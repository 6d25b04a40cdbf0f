#![allow(dead_code)]

#[path = "../fixtures/tables.rs"]
pub mod tables;

use bellbasis::qcore::{parse_bitstring, StateVector};
use bellbasis::{BasisSpec, ControlledFamily, PhaseId};
use num_complex::Complex64;

pub const FAMILIES: [ControlledFamily; 3] = [ControlledFamily::O1, ControlledFamily::AQ, ControlledFamily::A1];

/// Normalized state from unnormalized `±bitstring` terms.
pub fn state_from_terms(n: usize, terms: &[&str]) -> StateVector {
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
    let scale = 1.0 / (terms.len() as f64).sqrt();
    for t in terms {
        let (sign, bits) = t.split_at(1);
        let (index, width) = parse_bitstring(bits).unwrap();
        assert_eq!(width, n, "term {t}");
        amps[index] += Complex64::new(if sign == "-" { -scale } else { scale }, 0.0);
    }
    StateVector::new(n, amps).unwrap()
}

pub fn label(s: &str) -> usize {
    parse_bitstring(s.trim_start_matches(['+', '-'])).unwrap().0
}

pub fn sign(s: &str) -> i8 {
    if s.starts_with('-') {
        -1
    } else {
        1
    }
}

/// Printed table value and the tolerance it is held to: `5e-6` for entries
/// with six or more significant digits, `5e-2` for shorter ones.
pub fn printed(value: &str) -> (f64, f64) {
    let digits = value
        .trim_start_matches(['0', '.'])
        .chars()
        .filter(char::is_ascii_digit)
        .count();
    let tol = if digits >= 6 { 5e-6 } else { 5e-2 };
    (value.parse().unwrap(), tol)
}

/// Concrete `n` values a table row covers.
pub fn row_ns(row: &tables::CorrelationRow) -> Vec<usize> {
    match row.n {
        Some(n) => vec![n],
        None => vec![3, 4, 5],
    }
}

pub fn row_spec(n: usize, row: &tables::CorrelationRow, family: ControlledFamily) -> BasisSpec {
    let phase: PhaseId = row.phase.parse().unwrap();
    BasisSpec::new(n, row.m, family, phase).unwrap()
}
