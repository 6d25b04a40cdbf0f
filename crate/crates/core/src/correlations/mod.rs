//! Entanglement and quantum-correlation measures of pure multiqubit states
//! and their two-qubit reductions.

mod discord;
mod measures;
mod monogamy;
mod report;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use discord::{
    measured_conditional, measurement_basis, minimize_on_sphere, one_way_work_deficit, quantum_discord, Optimized,
    MAX_REFINE_ITERATIONS,
};
pub use measures::{
    avg_entanglement_entropy, avg_entanglement_entropy_bipartitions, concurrence_pure_1_rest, concurrence_pure_cut,
    eof_from_concurrence, ggm, half_cuts, log_negativity_pure, negativity_partial_transpose, negativity_pure,
    wootters_concurrence,
};
pub use monogamy::{monogamy_score, node_pair_state, MonogamyMeasure, MonogamyScore};
pub use report::{
    basis_report, closed_form_measures, ClosedFormMeasures, Conventions, CorrelationReport, CLOSED_FORM_INVARIANCE_TOL,
    OPTIMIZED_INVARIANCE_TOL,
};

/// Which qubit of a two-qubit reduction `ρ_{node,j}` is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasuredParty {
    #[default]
    Node,
    Partner,
}

impl std::fmt::Display for MeasuredParty {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Node => "node",
            Self::Partner => "partner",
        })
    }
}

impl std::str::FromStr for MeasuredParty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "node" => Ok(Self::Node),
            "partner" => Ok(Self::Partner),
            other => Err(Error::Parse(format!("unknown measured party {other:?}"))),
        }
    }
}

/// Smallest grid accepted for the measurement-direction search.
pub const MIN_THETA_STEPS: usize = 16;
pub const MIN_PHI_STEPS: usize = 32;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MeasureConfig {
    pub theta_steps: usize,
    pub phi_steps: usize,
    /// Refinement stops once the search step is below this angle.
    pub refine_tol: f64,
    pub measured_party: MeasuredParty,
    /// Node qubit of the monogamy scores.
    pub node: usize,
    /// Square concurrences in the concurrence monogamy score.
    pub tangle: bool,
    /// Seed for choosing the extra labels used in the invariance check.
    pub seed: u64,
    /// How many extra labels are compared against label 0.
    pub invariance_samples: usize,
}

impl Default for MeasureConfig {
    fn default() -> Self {
        Self {
            theta_steps: 64,
            phi_steps: 128,
            refine_tol: 1e-6,
            measured_party: MeasuredParty::Node,
            node: 1,
            tangle: false,
            seed: 0,
            invariance_samples: 3,
        }
    }
}

impl MeasureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.theta_steps < MIN_THETA_STEPS || self.phi_steps < MIN_PHI_STEPS {
            return Err(Error::InvalidSpec(format!(
                "grid {}x{} is below the minimum {MIN_THETA_STEPS}x{MIN_PHI_STEPS}",
                self.theta_steps, self.phi_steps
            )));
        }
        if !(self.refine_tol > 0.0 && self.refine_tol.is_finite()) {
            return Err(Error::Domain {
                value: self.refine_tol,
                domain: "(0, ∞)",
            });
        }
        if self.node == 0 {
            return Err(Error::QubitOutOfRange { index: 0, n_qubits: 0 });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(MeasureConfig::default().validate().is_ok());
        let small = MeasureConfig {
            theta_steps: 8,
            ..Default::default()
        };
        assert!(small.validate().is_err());
        let bad_tol = MeasureConfig {
            refine_tol: 0.0,
            ..Default::default()
        };
        assert!(bad_tol.validate().is_err());
        assert_eq!("Partner".parse::<MeasuredParty>().unwrap(), MeasuredParty::Partner);
    }
}
