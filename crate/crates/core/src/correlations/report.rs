use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::measures::{
    avg_entanglement_entropy, avg_entanglement_entropy_bipartitions, concurrence_pure_1_rest, eof_from_concurrence,
    ggm, log_negativity_pure, negativity_pure,
};
use super::monogamy::{monogamy_score, MonogamyMeasure};
use super::{MeasureConfig, MeasuredParty};
use crate::basisgen::{generate_state, BasisSpec};
use crate::error::{Error, Result};
use crate::qcore::{bitstring, StateVector};

/// Allowed spread of a closed-form measure across the states of one basis.
pub const CLOSED_FORM_INVARIANCE_TOL: f64 = 1e-9;
/// Allowed spread of an optimized monogamy score across the states of one
/// basis.
pub const OPTIMIZED_INVARIANCE_TOL: f64 = 2e-3;

/// Measures with an exact formula for pure states.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormMeasures {
    pub ggm: f64,
    pub concurrence: f64,
    pub avg_entropy: f64,
    pub avg_entropy_bipartitions: f64,
    pub eof: f64,
    pub log_negativity: f64,
    pub negativity: f64,
    /// Concurrence monogamy score; `None` below three qubits.
    pub delta_concurrence: Option<f64>,
}

impl ClosedFormMeasures {
    fn named(&self) -> [(&'static str, Option<f64>); 8] {
        [
            ("ggm", Some(self.ggm)),
            ("concurrence", Some(self.concurrence)),
            ("avg_entropy", Some(self.avg_entropy)),
            ("avg_entropy_bipartitions", Some(self.avg_entropy_bipartitions)),
            ("eof", Some(self.eof)),
            ("log_negativity", Some(self.log_negativity)),
            ("negativity", Some(self.negativity)),
            ("delta_concurrence", self.delta_concurrence),
        ]
    }
}

pub fn closed_form_measures(state: &StateVector, cfg: &MeasureConfig) -> Result<ClosedFormMeasures> {
    let concurrence = concurrence_pure_1_rest(state)?;
    let delta_concurrence = if state.n_qubits() >= 3 {
        Some(monogamy_score(MonogamyMeasure::Concurrence, state, cfg)?.value)
    } else {
        None
    };
    Ok(ClosedFormMeasures {
        ggm: ggm(state)?,
        concurrence,
        avg_entropy: avg_entanglement_entropy(state)?,
        avg_entropy_bipartitions: avg_entanglement_entropy_bipartitions(state)?,
        eof: eof_from_concurrence(concurrence)?,
        log_negativity: log_negativity_pure(state)?,
        negativity: negativity_pure(state)?,
        delta_concurrence,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct OptimizedScores {
    discord: f64,
    deficit: f64,
    converged: bool,
}

fn optimized_scores(state: &StateVector, cfg: &MeasureConfig) -> Result<OptimizedScores> {
    let d = monogamy_score(MonogamyMeasure::Discord, state, cfg)?;
    let w = monogamy_score(MonogamyMeasure::Deficit, state, cfg)?;
    Ok(OptimizedScores {
        discord: d.value,
        deficit: w.value,
        converged: d.converged && w.converged,
    })
}

/// How the numbers in a [`CorrelationReport`] were defined and computed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Conventions {
    /// `"subsets"`: mean over every subset of size ≤ ⌊n/2⌋.
    pub avg_entropy: String,
    pub monogamy_node: usize,
    pub measured_party: MeasuredParty,
    /// `"unsquared"` or `"squared"`.
    pub concurrence_score: String,
    pub theta_steps: usize,
    pub phi_steps: usize,
    pub refine_tol: f64,
    /// Labels whose measures were compared with the reported ones.
    pub invariance_labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub spec: BasisSpec,
    /// Label of the state the values were computed on.
    pub label: String,
    pub ggm: f64,
    pub concurrence: f64,
    pub avg_entropy: f64,
    pub avg_entropy_bipartitions: f64,
    pub eof: f64,
    pub log_negativity: f64,
    pub negativity: f64,
    pub delta_concurrence: Option<f64>,
    pub delta_discord: Option<f64>,
    pub delta_deficit: Option<f64>,
    pub warnings: Vec<String>,
    pub conventions: Conventions,
}

fn sample_labels(n: usize, cfg: &MeasureConfig) -> Vec<usize> {
    let others = (1usize << n) - 1;
    let amount = cfg.invariance_samples.min(others);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut picked: Vec<usize> = rand::seq::index::sample(&mut rng, others, amount)
        .into_iter()
        .map(|i| i + 1)
        .collect();
    picked.sort_unstable();
    picked
}

fn check_close(measure: &'static str, (a, va): (usize, f64), (b, vb): (usize, f64), n: usize, tol: f64) -> Result<()> {
    if (va - vb).abs() > tol {
        return Err(Error::InvarianceViolation {
            measure,
            a: bitstring(a, n),
            b: bitstring(b, n),
            va,
            vb,
        });
    }
    Ok(())
}

/// Computes every measure on the label-0 state of `spec` and checks that a
/// few other seeded labels give the same values.
///
/// With `optimized` unset the discord and work-deficit scores are skipped
/// and reported as `None`.
pub fn basis_report(spec: &BasisSpec, cfg: &MeasureConfig, optimized: bool) -> Result<CorrelationReport> {
    spec.validate()?;
    cfg.validate()?;
    let n = spec.n;
    let mut labels = vec![0];
    labels.extend(sample_labels(n, cfg));

    let per_label: Vec<(ClosedFormMeasures, Option<OptimizedScores>)> = labels
        .par_iter()
        .map(|&label| {
            let state = generate_state(spec, label)?;
            let closed = closed_form_measures(&state, cfg)?;
            let opt = if optimized && n >= 3 {
                Some(optimized_scores(&state, cfg)?)
            } else {
                None
            };
            Ok((closed, opt))
        })
        .collect::<Result<_>>()?;

    let (reference, reference_opt) = per_label[0];
    let mut warnings = Vec::new();
    for (&label, (closed, opt)) in labels.iter().zip(&per_label).skip(1) {
        for ((name, va), (_, vb)) in reference.named().into_iter().zip(closed.named()) {
            if let (Some(va), Some(vb)) = (va, vb) {
                check_close(name, (0, va), (label, vb), n, CLOSED_FORM_INVARIANCE_TOL)?;
            }
        }
        if let (Some(r), Some(o)) = (reference_opt, opt) {
            check_close(
                "delta_discord",
                (0, r.discord),
                (label, o.discord),
                n,
                OPTIMIZED_INVARIANCE_TOL,
            )?;
            check_close(
                "delta_deficit",
                (0, r.deficit),
                (label, o.deficit),
                n,
                OPTIMIZED_INVARIANCE_TOL,
            )?;
        }
    }
    for (&label, (_, opt)) in labels.iter().zip(&per_label) {
        if matches!(opt, Some(o) if !o.converged) {
            warnings.push(format!(
                "measurement search hit its iteration budget for label {}",
                bitstring(label, n)
            ));
        }
    }

    Ok(CorrelationReport {
        spec: *spec,
        label: bitstring(0, n),
        ggm: reference.ggm,
        concurrence: reference.concurrence,
        avg_entropy: reference.avg_entropy,
        avg_entropy_bipartitions: reference.avg_entropy_bipartitions,
        eof: reference.eof,
        log_negativity: reference.log_negativity,
        negativity: reference.negativity,
        delta_concurrence: reference.delta_concurrence,
        delta_discord: reference_opt.map(|o| o.discord),
        delta_deficit: reference_opt.map(|o| o.deficit),
        warnings,
        conventions: Conventions {
            avg_entropy: "subsets".into(),
            monogamy_node: cfg.node,
            measured_party: cfg.measured_party,
            concurrence_score: if cfg.tangle { "squared" } else { "unsquared" }.into(),
            theta_steps: cfg.theta_steps,
            phi_steps: cfg.phi_steps,
            refine_tol: cfg.refine_tol,
            invariance_labels: labels.iter().map(|&l| bitstring(l, n)).collect(),
        },
    })
}
