//! Measurement-based correlations of two-qubit states: quantum discord and
//! one-way work deficit, both minimized over rank-one projective measurements
//! `{|v₀⟩⟨v₀|, |v₁⟩⟨v₁|}` on one qubit.
//!
//! A measurement direction is `(θ, φ)` with
//! `|v₀⟩ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩` and `|v₁⟩ ⟂ |v₀⟩`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::measures::require_two_qubit;
use super::{MeasureConfig, MeasuredParty};
use crate::error::Result;
use crate::qcore::{hermitian_eigenvalues, spectrum_entropy, DensityMatrix};

/// Pattern-search iteration budget after the grid stage.
pub const MAX_REFINE_ITERATIONS: usize = 10_000;

/// Result of a minimization over measurement directions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Optimized {
    pub value: f64,
    pub theta: f64,
    pub phi: f64,
    /// `false` when the refinement budget ran out before the step fell below
    /// the requested tolerance.
    pub converged: bool,
}

/// Minimizes `f(θ, φ)`: exhaustive grid first, then a compass search that
/// halves its step until it drops below `cfg.refine_tol`.
///
/// The grid has `theta_steps` points on `[0, π]` (both poles included) and
/// `phi_steps` points on `[0, 2π)`. Ties keep the earliest grid point, so the
/// result is deterministic.
pub fn minimize_on_sphere(cfg: &MeasureConfig, f: impl Fn(f64, f64) -> f64) -> Optimized {
    use std::f64::consts::PI;
    let nt = cfg.theta_steps.max(2);
    let np = cfg.phi_steps.max(1);
    let dt = PI / (nt - 1) as f64;
    let dp = 2.0 * PI / np as f64;

    let (mut theta, mut phi, mut best) = (0.0, 0.0, f64::INFINITY);
    for i in 0..nt {
        let t = i as f64 * dt;
        for j in 0..np {
            let p = j as f64 * dp;
            let v = f(t, p);
            if v < best {
                (theta, phi, best) = (t, p, v);
            }
        }
    }

    let (mut st, mut sp) = (dt, dp);
    let mut iterations = 0;
    while st.max(sp) >= cfg.refine_tol {
        if iterations == MAX_REFINE_ITERATIONS {
            return Optimized {
                value: best,
                theta,
                phi,
                converged: false,
            };
        }
        iterations += 1;
        let mut moved = false;
        for (t, p) in [
            (theta + st, phi),
            (theta - st, phi),
            (theta, phi + sp),
            (theta, phi - sp),
        ] {
            let v = f(t, p);
            if v < best {
                (theta, phi, best) = (t, p, v);
                moved = true;
            }
        }
        if !moved {
            st /= 2.0;
            sp /= 2.0;
        }
    }
    Optimized {
        value: best,
        theta,
        phi,
        converged: true,
    }
}

/// The two measurement vectors for direction `(θ, φ)`.
pub fn measurement_basis(theta: f64, phi: f64) -> [[Complex64; 2]; 2] {
    let (s, c) = (theta / 2.0).sin_cos();
    let e = Complex64::from_polar(1.0, phi);
    [[Complex64::new(c, 0.0), e * s], [-e.conj() * s, Complex64::new(c, 0.0)]]
}

/// Entropy of a 2×2 Hermitian PSD block `[[a, b], [b*, d]]` after division
/// by its trace, weighted by that trace: `p · S(σ/p)`.
fn weighted_block_entropy(a: f64, d: f64, b: Complex64) -> (f64, f64) {
    let p = a + d;
    if p <= 0.0 {
        return (0.0, 0.0);
    }
    let gap = ((a - d).powi(2) + 4.0 * b.norm_sqr()).sqrt();
    let l0 = ((p + gap) / 2.0 / p).clamp(0.0, 1.0);
    let l1 = ((p - gap) / 2.0 / p).clamp(0.0, 1.0);
    (p, p * spectrum_entropy(&[l0, l1]))
}

/// Outcome probabilities and `Σ_k p_k S(σ_k)` for measuring the first qubit
/// of a two-qubit `rho` along `(θ, φ)`; `σ_k` is the normalized state of the
/// second qubit after outcome `k`.
pub fn measured_conditional(rho: &DensityMatrix, theta: f64, phi: f64) -> ([f64; 2], f64) {
    let v = measurement_basis(theta, phi);
    let m = rho.matrix();
    let mut probs = [0.0; 2];
    let mut cond = 0.0;
    for (k, vk) in v.iter().enumerate() {
        // σ_k[b, b'] = Σ_{a,a'} conj(v[a]) ρ[(a,b),(a',b')] v[a'].
        let block = |b: usize, bp: usize| {
            let mut acc = Complex64::new(0.0, 0.0);
            for a in 0..2 {
                for ap in 0..2 {
                    acc += vk[a].conj() * m[(2 * a + b, 2 * ap + bp)] * vk[ap];
                }
            }
            acc
        };
        let (p, s) = weighted_block_entropy(block(0, 0).re, block(1, 1).re, block(0, 1));
        probs[k] = p;
        cond += s;
    }
    (probs, cond)
}

fn oriented(rho: &DensityMatrix, party: MeasuredParty) -> Result<DensityMatrix> {
    require_two_qubit(rho)?;
    match party {
        MeasuredParty::Node => Ok(rho.clone()),
        MeasuredParty::Partner => rho.swap_two_qubits(),
    }
}

/// Quantum discord with the measurement on `cfg.measured_party`:
/// `S(ρ_M) - S(ρ) + min Σ_k p_k S(σ_k)`.
///
/// `Node` measures the first qubit of `rho` and `Partner` the second.
pub fn quantum_discord(rho: &DensityMatrix, cfg: &MeasureConfig) -> Result<Optimized> {
    let rho = oriented(rho, cfg.measured_party)?;
    let s_total = spectrum_entropy(&hermitian_eigenvalues(&rho)?);
    let m = rho.matrix();
    let s_measured = weighted_block_entropy(
        (m[(0, 0)] + m[(1, 1)]).re,
        (m[(2, 2)] + m[(3, 3)]).re,
        m[(0, 2)] + m[(1, 3)],
    )
    .1;
    let mut out = minimize_on_sphere(cfg, |t, p| measured_conditional(&rho, t, p).1);
    out.value = (s_measured - s_total + out.value).max(0.0);
    Ok(out)
}

/// One-way work deficit: `min S(Σ_k Π_k ρ Π_k) - S(ρ)`, the entropy increase
/// caused by dephasing the measured qubit. The dephased entropy is
/// `H(p) + Σ_k p_k S(σ_k)`.
pub fn one_way_work_deficit(rho: &DensityMatrix, cfg: &MeasureConfig) -> Result<Optimized> {
    let rho = oriented(rho, cfg.measured_party)?;
    let s_total = spectrum_entropy(&hermitian_eigenvalues(&rho)?);
    let mut out = minimize_on_sphere(cfg, |t, p| {
        let (probs, cond) = measured_conditional(&rho, t, p);
        spectrum_entropy(&probs) + cond
    });
    out.value = (out.value - s_total).max(0.0);
    Ok(out)
}
