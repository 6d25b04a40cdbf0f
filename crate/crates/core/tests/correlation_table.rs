//! Closed-form columns of the correlation table and the scaling laws behind
//! them. The optimized discord column is checked by the acceptance suite in
//! the cli crate.

mod common;

use bellbasis::basisgen::generate_state;
use bellbasis::correlations::{
    avg_entanglement_entropy, concurrence_pure_1_rest, eof_from_concurrence, ggm, log_negativity_pure, monogamy_score,
    MonogamyMeasure,
};
use bellbasis::qcore::{partial_trace, QubitSubset};
use bellbasis::{BasisSpec, ControlledFamily, MeasureConfig, PhaseId};
use common::tables::TABLE_CORRELATIONS;
use common::{printed, row_ns, row_spec, FAMILIES};

#[test]
fn closed_form_columns_match_printed_values() {
    let mut failures = Vec::new();
    for row in TABLE_CORRELATIONS {
        for n in row_ns(row) {
            for (k, family) in FAMILIES.into_iter().enumerate() {
                let Some(ggm_text) = row.ggm[k] else {
                    assert!(row.m < family.min_controls(), "NA only where the family is undefined");
                    continue;
                };
                let state = generate_state(&row_spec(n, row, family), 0).unwrap();
                let columns = [
                    ("ggm", ggm_text, ggm(&state).unwrap()),
                    (
                        "C",
                        row.concurrence[k].unwrap(),
                        concurrence_pure_1_rest(&state).unwrap(),
                    ),
                    (
                        "<S>",
                        row.avg_entropy[k].unwrap(),
                        avg_entanglement_entropy(&state).unwrap(),
                    ),
                ];
                for (name, text, got) in columns {
                    let (want, tol) = printed(text);
                    if (got - want).abs() > tol {
                        failures.push(format!(
                            "({n},{},{family},{}) {name}: {got} vs {text}",
                            row.m, row.phase
                        ));
                    }
                }
            }
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn delta_concurrence_column_is_one() {
    let cfg = MeasureConfig::default();
    for row in TABLE_CORRELATIONS {
        for n in row_ns(row) {
            let state = generate_state(&row_spec(n, row, ControlledFamily::O1), 0).unwrap();
            let s = monogamy_score(MonogamyMeasure::Concurrence, &state, &cfg).unwrap();
            let (want, tol) = printed(row.delta_concurrence_o1);
            assert!(
                (s.value - want).abs() <= tol.min(1e-10),
                "({n},{},{})",
                row.m,
                row.phase
            );
        }
    }
}

#[test]
fn proposition_sweep_up_to_six_qubits() {
    for n in 2..=6 {
        for m in 1..n {
            for phase in PhaseId::all_for(m) {
                let spec = BasisSpec::new(n, m, ControlledFamily::O1, phase).unwrap();
                for label in 0..1usize << n {
                    let state = generate_state(&spec, label).unwrap();
                    let c = concurrence_pure_1_rest(&state).unwrap();
                    assert!((c - 1.0).abs() < 1e-10, "{spec} label {label}: C = {c}");
                    let rho = partial_trace(&state, &QubitSubset::new(n, [1]).unwrap()).unwrap();
                    for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                        let want = if i == j { 0.5 } else { 0.0 };
                        assert!((rho.get(i, j).re - want).abs() < 1e-10 && rho.get(i, j).im.abs() < 1e-10);
                    }
                }
            }
        }
    }
}

#[test]
fn ggm_scaling_laws() {
    for n in 2..=5 {
        for spec in BasisSpec::sweep(n) {
            let xi = ggm(&generate_state(&spec, 0).unwrap()).unwrap();
            let want = match spec.family {
                ControlledFamily::O1 => 0.5,
                ControlledFamily::AQ => 0.5f64.powi(spec.m as i32 - 1),
                ControlledFamily::A1 => 0.5f64.powi(spec.m as i32),
            };
            assert!((xi - want).abs() < 1e-10, "{spec}: {xi}");
        }
    }
}

#[test]
fn unit_concurrence_gives_unit_eof_and_log_negativity() {
    assert_eq!(eof_from_concurrence(1.0).unwrap(), 1.0);
    let state = generate_state(&"(4,2,CO1,P2)".parse().unwrap(), 5).unwrap();
    assert_eq!(log_negativity_pure(&state).unwrap(), 1.0);
}

#[test]
fn documented_closed_form_examples() {
    assert!((eof_from_concurrence(0.866025).unwrap() - 0.811278).abs() < 5e-6);
    let s = generate_state(&"(4,3,CA1,P0)".parse().unwrap(), 0).unwrap();
    assert!((avg_entanglement_entropy(&s).unwrap() - 0.61106).abs() < 5e-6);
    let s = generate_state(&"(4,2,CO1,P0)".parse().unwrap(), 0).unwrap();
    assert!((avg_entanglement_entropy(&s).unwrap() - 1.4).abs() < 1e-12);
    let s = generate_state(&"(4,3,CAQ,Pz)".parse().unwrap(), 0).unwrap();
    let want = (1.0 + 3f64.sqrt() / 2.0).log2();
    assert!((want - 0.899969).abs() < 5e-7);
    assert!((log_negativity_pure(&s).unwrap() - want).abs() < 1e-12);
}

#[test]
fn every_state_of_a_basis_has_the_same_measures() {
    use bellbasis::correlations::{closed_form_measures, CLOSED_FORM_INVARIANCE_TOL, OPTIMIZED_INVARIANCE_TOL};
    let cfg = MeasureConfig::default();
    for n in 2..=4 {
        for spec in BasisSpec::sweep(n) {
            let reference = closed_form_measures(&generate_state(&spec, 0).unwrap(), &cfg).unwrap();
            let discord = |label| {
                let s = generate_state(&spec, label).unwrap();
                monogamy_score(MonogamyMeasure::Discord, &s, &cfg).unwrap().value
            };
            let d0 = (n == 3).then(|| discord(0));
            for label in 1..1usize << n {
                let got = closed_form_measures(&generate_state(&spec, label).unwrap(), &cfg).unwrap();
                let pairs = [
                    (reference.ggm, got.ggm),
                    (reference.concurrence, got.concurrence),
                    (reference.avg_entropy, got.avg_entropy),
                    (reference.eof, got.eof),
                    (reference.log_negativity, got.log_negativity),
                    (
                        reference.delta_concurrence.unwrap_or(0.0),
                        got.delta_concurrence.unwrap_or(0.0),
                    ),
                ];
                for (a, b) in pairs {
                    assert!((a - b).abs() <= CLOSED_FORM_INVARIANCE_TOL, "{spec} label {label}");
                }
                if let Some(d0) = d0 {
                    assert!(
                        (d0 - discord(label)).abs() <= OPTIMIZED_INVARIANCE_TOL,
                        "{spec} label {label}"
                    );
                }
            }
        }
    }
}
