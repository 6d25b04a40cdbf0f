//! Property suites bundled by the `verify` command.

use std::time::Instant;

use bellbasis::basisgen::{
    bell_basis, check_orthonormal, generate_state, generate_state_ordered, graph_basis, BasisSpec, StepOrder,
    ORTHONORMAL_TOL,
};
use bellbasis::correlations::{
    basis_report, closed_form_measures, concurrence_pure_1_rest, ggm, ClosedFormMeasures, CLOSED_FORM_INVARIANCE_TOL,
};
use bellbasis::gates::{apply_phase, apply_single, SingleQubitGate};
use bellbasis::qcore::{bitstring, partial_trace};
use bellbasis::{ControlledFamily, DensityMatrix, EntangledBasis, PhaseId, QubitSubset, StateVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::format::{csv_string, markdown_table, OutputFormat};
use crate::Outcome;

/// Failure messages kept per suite.
const MAX_REPORTED: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    /// Wall time; kept out of the serialized report so output is
    /// reproducible.
    #[serde(skip)]
    pub seconds: f64,
}

/// Collects the outcome of many independent checks.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(message());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }
}

fn run_suite(name: &str, body: impl FnOnce() -> anyhow::Result<Tally>) -> SuiteResult {
    let start = Instant::now();
    let (checks, mut failures) = match body() {
        Ok(t) => (t.checks, t.failures),
        Err(e) => (1, vec![format!("error: {e:#}")]),
    };
    let passed = failures.is_empty();
    let total = failures.len();
    failures.truncate(MAX_REPORTED);
    if total > MAX_REPORTED {
        failures.push(format!("... {} more", total - MAX_REPORTED));
    }
    SuiteResult {
        suite: name.into(),
        passed,
        checks,
        failures,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn specs(cfg: &RunConfig) -> Vec<BasisSpec> {
    (cfg.sweep_min_n..=cfg.sweep_max_n).flat_map(BasisSpec::sweep).collect()
}

fn basis_states(spec: &BasisSpec) -> anyhow::Result<Vec<StateVector>> {
    (0..spec.dim()).map(|l| Ok(generate_state(spec, l)?)).collect()
}

/// Per-spec checks run in parallel and merged in spec order.
fn per_spec(
    specs: &[BasisSpec],
    f: impl Fn(&BasisSpec) -> anyhow::Result<Tally> + Sync + Send,
) -> anyhow::Result<Tally> {
    let tallies: Vec<Tally> = specs.par_iter().map(f).collect::<anyhow::Result<_>>()?;
    Ok(tallies.into_iter().fold(Tally::default(), Tally::merge))
}

/// Negates the first nonzero amplitude.
fn sign_flip_fault(state: &StateVector) -> anyhow::Result<StateVector> {
    let mut amps = state.amplitudes().to_vec();
    if let Some(a) = amps.iter_mut().find(|a| a.norm() > 1e-12) {
        *a = -*a;
    }
    Ok(StateVector::new(state.n_qubits(), amps)?)
}

fn orthonormality(cfg: &RunConfig) -> anyhow::Result<Tally> {
    let specs = specs(cfg);
    let mut tally = per_spec(&specs, |spec| {
        let mut states = basis_states(spec)?;
        if cfg.inject_fault && spec == &specs[0] {
            states[0] = sign_flip_fault(&states[0])?;
        }
        let check = check_orthonormal(&states, ORTHONORMAL_TOL);
        let mut t = Tally::default();
        t.check(check.orthonormal && check.complete, || {
            format!("{spec}: Gram deviation {:.3e}", check.max_deviation)
        });
        Ok(t)
    })?;
    for n in cfg.sweep_min_n..=cfg.sweep_max_n {
        for (name, basis) in [
            ("Bell", EntangledBasis::bell(n)),
            ("graph", EntangledBasis::graph(n)),
            ("braid", EntangledBasis::braid(n)),
        ] {
            let ok = basis.is_ok_and(|b| check_orthonormal(&b.states, ORTHONORMAL_TOL).orthonormal);
            tally.check(ok, || format!("{name} basis n = {n} is not orthonormal"));
        }
    }
    Ok(tally)
}

fn proposition(cfg: &RunConfig) -> anyhow::Result<Tally> {
    let o1: Vec<BasisSpec> = specs(cfg)
        .into_iter()
        .filter(|s| s.family == ControlledFamily::O1)
        .collect();
    per_spec(&o1, |spec| {
        let mut t = Tally::default();
        let node = QubitSubset::new(spec.n, [1])?;
        for (label, state) in basis_states(spec)?.iter().enumerate() {
            let c = concurrence_pure_1_rest(state)?;
            let rho = partial_trace(state, &node)?;
            let mixed = rho.max_abs_diff(&DensityMatrix::maximally_mixed(1)) <= 1e-10;
            t.check((c - 1.0).abs() <= 1e-10 && mixed, || {
                format!("{spec} |{}⟩: C = {c}", bitstring(label, spec.n))
            });
        }
        Ok(t)
    })
}

fn ggm_scaling(cfg: &RunConfig) -> anyhow::Result<Tally> {
    per_spec(&specs(cfg), |spec| {
        let xi = ggm(&generate_state(spec, 0)?)?;
        let want = match spec.family {
            ControlledFamily::O1 => 0.5,
            ControlledFamily::AQ => 0.5f64.powi(spec.m as i32 - 1),
            ControlledFamily::A1 => 0.5f64.powi(spec.m as i32),
        };
        let mut t = Tally::default();
        t.check((xi - want).abs() <= 1e-10, || {
            format!("{spec}: ξ = {xi}, expected {want}")
        });
        Ok(t)
    })
}

fn closed_form_spread(a: &ClosedFormMeasures, b: &ClosedFormMeasures) -> f64 {
    let pairs = [
        (a.ggm, b.ggm),
        (a.concurrence, b.concurrence),
        (a.avg_entropy, b.avg_entropy),
        (a.avg_entropy_bipartitions, b.avg_entropy_bipartitions),
        (a.eof, b.eof),
        (a.log_negativity, b.log_negativity),
        (a.negativity, b.negativity),
        (a.delta_concurrence.unwrap_or(0.0), b.delta_concurrence.unwrap_or(0.0)),
    ];
    pairs.iter().map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn invariance(cfg: &RunConfig) -> anyhow::Result<Tally> {
    per_spec(&specs(cfg), |spec| {
        let mut t = Tally::default();
        let states = basis_states(spec)?;
        let reference = closed_form_measures(&states[0], &cfg.measure)?;
        for (label, state) in states.iter().enumerate().skip(1) {
            let spread = closed_form_spread(&reference, &closed_form_measures(state, &cfg.measure)?);
            t.check(spread <= CLOSED_FORM_INVARIANCE_TOL, || {
                format!(
                    "{spec} |{}⟩ differs from |0…⟩ by {spread:.3e}",
                    bitstring(label, spec.n)
                )
            });
        }
        if !cfg.skip_optimized {
            // Compares seeded labels against label 0, optimized scores included.
            let report = basis_report(spec, &cfg.measure, true);
            t.check(report.is_ok(), || format!("{spec}: {}", report.unwrap_err()));
        }
        Ok(t)
    })
}

fn step_commutation(cfg: &RunConfig) -> anyhow::Result<Tally> {
    per_spec(&specs(cfg), |spec| {
        let mut t = Tally::default();
        for label in 0..spec.dim() {
            let a = generate_state_ordered(spec, label, StepOrder::FlipThenPhase)?;
            let b = generate_state_ordered(spec, label, StepOrder::PhaseThenFlip)?;
            t.check(a == b, || {
                format!("{spec} |{}⟩: steps do not commute", bitstring(label, spec.n))
            });
        }
        Ok(t)
    })
}

fn phase_involution(cfg: &RunConfig) -> anyhow::Result<Tally> {
    per_spec(&specs(cfg), |spec| {
        let mut t = Tally::default();
        let controls = QubitSubset::range(spec.n, 1, spec.m)?;
        for (label, state) in basis_states(spec)?.iter().enumerate() {
            let twice = apply_phase(&apply_phase(state, spec.phase, &controls)?, spec.phase, &controls)?;
            t.check(&twice == state, || {
                format!("{spec} |{}⟩: phase is not an involution", bitstring(label, spec.n))
            });
        }
        Ok(t)
    })
}

fn p2_equals_pz(cfg: &RunConfig) -> anyhow::Result<Tally> {
    let mut t = Tally::default();
    for n in cfg.sweep_min_n.max(3)..=cfg.sweep_max_n {
        for family in [ControlledFamily::O1, ControlledFamily::AQ, ControlledFamily::A1] {
            let a = BasisSpec::new(n, 2, family, PhaseId::P(2))?;
            let b = BasisSpec::new(n, 2, family, PhaseId::Z)?;
            let same = basis_states(&a)? == basis_states(&b)?;
            t.check(same, || format!("{a} and {b} differ"));
        }
    }
    Ok(t)
}

fn special_cases(cfg: &RunConfig) -> anyhow::Result<Tally> {
    let mut t = Tally::default();
    for n in cfg.sweep_min_n..=cfg.sweep_max_n {
        for family in [ControlledFamily::A1, ControlledFamily::O1] {
            let spec = BasisSpec::new(n, 1, family, PhaseId::P(0))?;
            for label in 0..spec.dim() {
                let diff = bell_basis(n, label)?.max_abs_diff(&generate_state(&spec, label)?);
                t.check(diff <= 1e-12, || {
                    format!("Bell |{}⟩ differs from {spec}: {diff:.3e}", bitstring(label, n))
                });
            }
        }
    }
    // (Z ⊗ ZH)|B00⟩ = |G11⟩.
    let b00 = bell_basis(2, 0)?;
    let zh = SingleQubitGate::Z.then_after(&SingleQubitGate::H);
    let lhs = apply_single(&apply_single(&b00, &SingleQubitGate::Z, 1)?, &zh, 2)?;
    let diff = lhs.max_abs_diff(&graph_basis(2, 0b11)?);
    t.check(diff <= 1e-12, || {
        format!("(Z⊗ZH)|B00⟩ differs from |G11⟩ by {diff:.3e}")
    });
    Ok(t)
}

pub fn run_suites(cfg: &RunConfig) -> Vec<SuiteResult> {
    vec![
        run_suite("orthonormality", || orthonormality(cfg)),
        run_suite("proposition", || proposition(cfg)),
        run_suite("ggm-scaling", || ggm_scaling(cfg)),
        run_suite("measure-invariance", || invariance(cfg)),
        run_suite("step-commutation", || step_commutation(cfg)),
        run_suite("phase-involution", || phase_involution(cfg)),
        run_suite("p2-equals-pz", || p2_equals_pz(cfg)),
        run_suite("special-cases", || special_cases(cfg)),
    ]
}

pub fn cmd_verify(cfg: &RunConfig) -> anyhow::Result<Outcome> {
    let results = run_suites(cfg);
    let success = results.iter().all(|r| r.passed);
    let status = |r: &SuiteResult| if r.passed { "pass" } else { "FAIL" }.to_string();
    let output = match cfg.format {
        OutputFormat::Json => serde_json::to_string_pretty(&results)? + "\n",
        OutputFormat::Csv => csv_string(
            &["suite", "passed", "checks", "failures"],
            &results
                .iter()
                .map(|r| {
                    vec![
                        r.suite.clone(),
                        r.passed.to_string(),
                        r.checks.to_string(),
                        r.failures.join("; "),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
        OutputFormat::Markdown => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        r.suite.clone(),
                        status(r),
                        r.checks.to_string(),
                        r.failures.len().to_string(),
                    ]
                })
                .collect();
            let mut out = markdown_table(&["suite", "result", "checks", "failures"], &rows);
            for r in results.iter().filter(|r| !r.passed) {
                out.push_str(&format!("\n{}:\n", r.suite));
                for f in &r.failures {
                    out.push_str(&format!("- {f}\n"));
                }
            }
            out
        }
    };
    let diagnostics = results
        .iter()
        .map(|r| format!("{:<20} {:>4} {:>8.2} s\n", r.suite, status(r), r.seconds))
        .collect();
    Ok(Outcome {
        output,
        success,
        diagnostics,
    })
}
