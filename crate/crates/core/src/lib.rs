//! Multiqubit controlled-unitary gates, Bell-like orthonormal entangled
//! bases built from them, and the quantum-correlation measures used to
//! compare those bases.
//!
//! * [`qcore`]: state vectors, density matrices, partial trace, entropies.
//! * [`gates`]: index-space gate kernels, including the all-one, odd-one and
//!   all-equal controlled families, the multiqubit phase gate and the braid
//!   operator.
//! * [`basisgen`]: the Hadamard / controlled-flip / phase pipeline that turns
//!   the computational basis into a `2^m`-term entangled basis, plus the
//!   Bell, graph and braid constructions and equivalence checks.
//! * [`correlations`]: concurrence, entanglement of formation,
//!   log-negativity, GGM, average entanglement entropy, discord, work-deficit
//!   and monogamy scores.

pub mod basisgen;
pub mod correlations;
pub mod error;
pub mod gates;
pub mod qcore;

pub use basisgen::{BasisSpec, EntangledBasis, EquivalenceReport};
pub use correlations::{CorrelationReport, MeasureConfig};
pub use error::{Error, Result};
pub use gates::{ControlledFamily, PhaseId};
pub use qcore::{DensityMatrix, QubitSubset, StateVector};
