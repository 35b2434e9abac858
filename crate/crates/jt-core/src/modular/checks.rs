//! Verification checks on modular pairs and their standard subspaces: the
//! KMS boundary identity at β = 2π, J-positivity, the OS-transform isometry
//! onto `H^J`, the Hardy-strip embedding, and the modular-invariance
//! rigidity search.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use super::antilinear::Antilinear;
use super::pair::{
    orthonormal_columns, random_modular_pair, standard_from_pair, ModularPair,
    StandardSubspace,
};
use crate::error::{JtError, Result};
use crate::linalg::herm_eigen;

fn ip(u: &DVector<Complex64>, v: &DVector<Complex64>) -> Complex64 {
    u.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum()
}

/// Max KMS defect `|⟨ξ, Δ·Δ^{−it/2π}η⟩ − conj(⟨ξ, Δ^{−it/2π}η⟩)|` over the
/// basis of `V` and the time grid; this is the boundary identity
/// `φ(t + 2πi) = conj(φ(t))` of the β = 2π KMS condition.
pub fn kms_check(pair: &ModularPair, v: &StandardSubspace, t_grid: &[f64]) -> Result<f64> {
    let basis = v.complex_basis();
    let mut max_defect: f64 = 0.0;
    for &t in t_grid {
        let ut = pair.delta_power(Complex64::new(0.0, -t / (2.0 * std::f64::consts::PI)));
        let shifted = &pair.delta * &ut;
        for xi in &basis {
            for eta in &basis {
                let lhs = ip(xi, &(&shifted * eta));
                let rhs = ip(xi, &(&ut * eta)).conj();
                max_defect = max_defect.max((lhs - rhs).norm());
            }
        }
    }
    Ok(max_defect)
}

/// Minimum of `Re⟨ξ, Jξ⟩` over random `ξ ∈ V` (expected ≥ 0), together with
/// the largest imaginary part seen (the pairing is real on `V`).
pub fn j_positivity_check(
    v: &StandardSubspace,
    j: &Antilinear,
    samples: usize,
    seed: u64,
) -> (f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_re = f64::INFINITY;
    let mut max_im: f64 = 0.0;
    for _ in 0..samples {
        let xi = v.random_vector(&mut rng);
        let val = ip(&xi, &j.apply(&xi));
        let scale = ip(&xi, &xi).re.max(1e-300);
        min_re = min_re.min(val.re / scale);
        max_im = max_im.max(val.im.abs() / scale);
    }
    (min_re, max_im)
}

/// Max OS-isometry defect `|‖Δ^{1/4}v‖² − ⟨v, Jv⟩|` over sampled `v ∈ V`,
/// including the distance of `Δ^{1/4}v` from the J-fixed real subspace.
pub fn os_isometry_check(
    pair: &ModularPair,
    v: &StandardSubspace,
    samples: usize,
    seed: u64,
) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quarter = pair.delta_power(Complex64::new(0.25, 0.0));
    let mut max_defect: f64 = 0.0;
    for _ in 0..samples {
        let xi = v.random_vector(&mut rng);
        let scale = ip(&xi, &xi).re.max(1e-300);
        let mapped = &quarter * &xi;
        let lhs = ip(&mapped, &mapped).re;
        let rhs = ip(&xi, &pair.j.apply(&xi)).re;
        max_defect = max_defect.max((lhs - rhs).abs() / scale);
        // Δ^{1/4}v must be J-fixed
        let fix_defect = (pair.j.apply(&mapped) - &mapped).norm() / scale.sqrt();
        max_defect = max_defect.max(fix_defect);
    }
    Ok(max_defect)
}

/// `f(z) = Δ^{−iz/2π} ξ` on the closed strip `0 ≤ Im z ≤ π`.
///
/// At the endpoints `(f(0), f(πi)) = (ξ, Δ^{1/2}ξ)`, and for `ξ ∈ V` the
/// endpoint is `Jξ`.
pub fn hardy_embed(
    pair: &ModularPair,
    xi: &DVector<Complex64>,
    z: Complex64,
) -> Result<DVector<Complex64>> {
    if z.im < -1e-12 || z.im > std::f64::consts::PI + 1e-12 {
        return Err(JtError::Domain(format!(
            "z = {z} outside the closed strip 0 ≤ Im z ≤ π"
        )));
    }
    let w = Complex64::new(0.0, -1.0) * z / (2.0 * std::f64::consts::PI);
    Ok(pair.delta_power(w) * xi)
}

/// Result of the modular-invariance rigidity search.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RigiditySearch {
    pub trials: usize,
    /// Trials where the orbit-generated subspace was standard.
    pub standard_trials: usize,
    /// Standard trials where it failed to coincide with the ambient one
    /// (expected 0).
    pub counterexamples: usize,
    pub max_distance: f64,
    pub max_invariance_defect: f64,
}

/// Search for a strict modular-invariant inclusion of standard subspaces.
///
/// Each trial generates `V₂` from a random modular pair, spans `V₁` by
/// modular orbits `Δ^{it}ξ` of random `ξ ∈ V₂` (so `V₁ ⊆ V₂` is invariant
/// under the modular group by construction), and asserts that whenever `V₁`
/// is standard it already equals `V₂`.
pub fn rigidity_search(n: usize, trials: usize, seed: u64) -> Result<RigiditySearch> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t_orbit: Vec<f64> = (0..(4 * n + 3)).map(|k| -3.0 + k as f64 * 0.41).collect();
    let mut standard_trials = 0;
    let mut counterexamples = 0;
    let mut max_distance: f64 = 0.0;
    let mut max_inv_defect: f64 = 0.0;
    for _ in 0..trials {
        let pair = random_modular_pair(n, &mut rng);
        let v2 = standard_from_pair(&pair)?;
        let n_gen = n / 2 + 1;
        let mut span = DMatrix::zeros(2 * n, n_gen * t_orbit.len());
        let mut col = 0;
        for _ in 0..n_gen {
            let xi = v2.random_vector(&mut rng);
            for &t in &t_orbit {
                let ut = pair.delta_power(Complex64::new(0.0, t));
                let w = super::antilinear::realify_vector(&(&ut * &xi));
                span.set_column(col, &w);
                col += 1;
            }
        }
        let basis = orthonormal_columns(&span, 1e-8);
        let v1 = StandardSubspace {
            ambient_dim: n,
            basis,
        };
        // certify modular invariance of V₁ on a verification grid
        for &t in &[-1.3, 0.7, 2.9] {
            let ut = pair.delta_power(Complex64::new(0.0, t));
            for k in 0..v1.real_dim() {
                let xi = super::antilinear::complexify_vector(&v1.basis.column(k).clone_owned());
                max_inv_defect = max_inv_defect.max(v1.distance(&(&ut * &xi)));
            }
        }
        if v1.real_dim() == n && v1.validate_standard().is_ok() {
            standard_trials += 1;
            let d = v1.subspace_distance(&v2);
            max_distance = max_distance.max(d);
            if d > 1e-6 {
                counterexamples += 1;
            }
        }
    }
    Ok(RigiditySearch {
        trials,
        standard_trials,
        counterexamples,
        max_distance,
        max_invariance_defect: max_inv_defect,
    })
}

/// J-positivity characterization (both `V` and `V'` are J-positive only for
/// the true modular conjugation): returns (min over V, min over V') for a
/// candidate conjugation.
pub fn j_positivity_pair(
    v: &StandardSubspace,
    j: &Antilinear,
    samples: usize,
    seed: u64,
) -> (f64, f64) {
    let vp = super::pair::symplectic_complement(v);
    let (min_v, _) = j_positivity_check(v, j, samples, seed);
    let (min_vp, _) = j_positivity_check(&vp, j, samples, seed ^ 0x9e3779b9);
    (min_v, min_vp)
}

/// Defect of `Δ^{it}V = V` over a time grid (Lemma: the modular group
/// preserves its own standard subspace).
pub fn modular_flow_invariance(pair: &ModularPair, v: &StandardSubspace, t_grid: &[f64]) -> f64 {
    let mut max_defect: f64 = 0.0;
    for &t in t_grid {
        let ut = pair.delta_power(Complex64::new(0.0, t));
        for xi in v.complex_basis() {
            max_defect = max_defect.max(v.distance(&(&ut * &xi)));
        }
    }
    max_defect
}

/// Convenience: spectrum of a hermitian matrix (descending).
pub fn herm_spectrum(m: &DMatrix<Complex64>) -> Vec<f64> {
    herm_eigen(m).0.iter().copied().collect()
}
