//! Discretized unitary representation on `L²((0,∞), Γ(s)^{−1}λ^{s−1}dλ)`:
//! translations act by `e^{iλx}`, the conjugation by entrywise complex
//! conjugation, and the standard subspace is generated by
//! `ξ_φ = e^{−πis/4} φ̃` for real bumps `φ` supported in the wedge `(0,∞)`.
//!
//! The grid is geometric in λ with quadrature weights equal to the exact
//! measure of geometric-midpoint cells (the first cell reaches down to 0, the
//! last is truncated at `Λmax`), so the weights are positive and sum to the
//! full truncated mass.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{JtError, Result};
use crate::quad::{fourier, gamma, TestFn};

/// Ratio of the smallest grid node to `Λmax`.
const LAMBDA_MIN_RATIO: f64 = 5e-7;

#[derive(Debug, Clone)]
pub struct DiscreteRep1D {
    pub s: f64,
    pub lambda_max: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl DiscreteRep1D {
    /// Build the grid: `n` geometric nodes in `(0, Λmax]` with exact cell
    /// measures as weights.
    pub fn build(s: f64, n: usize, lambda_max: f64) -> Result<DiscreteRep1D> {
        if s <= 0.0 {
            return Err(JtError::InvalidParameter("s must be positive".into()));
        }
        if n < 16 {
            return Err(JtError::InvalidParameter("need at least 16 grid nodes".into()));
        }
        if lambda_max <= 0.0 {
            return Err(JtError::InvalidParameter("Λmax must be positive".into()));
        }
        let lambda_min = lambda_max * LAMBDA_MIN_RATIO;
        let ratio = (lambda_max / lambda_min).powf(1.0 / (n - 1) as f64);
        let nodes: Vec<f64> = (0..n).map(|j| lambda_min * ratio.powi(j as i32)).collect();
        let g = gamma(s);
        let mass = |a: f64, b: f64| (b.powf(s) - a.powf(s)) / (s * g);
        let mut weights = Vec::with_capacity(n);
        for j in 0..n {
            let lo = if j == 0 { 0.0 } else { (nodes[j - 1] * nodes[j]).sqrt() };
            let hi = if j == n - 1 {
                lambda_max
            } else {
                (nodes[j] * nodes[j + 1]).sqrt()
            };
            weights.push(mass(lo, hi));
        }
        Ok(DiscreteRep1D {
            s,
            lambda_max,
            nodes,
            weights,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Weighted inner product `Σ w_j conj(f_j) g_j` (linear in the second
    /// argument).
    pub fn inner(&self, f: &[Complex64], g: &[Complex64]) -> Complex64 {
        self.weights
            .iter()
            .zip(f.iter().zip(g.iter()))
            .map(|(&w, (a, b))| a.conj() * b * w)
            .sum()
    }

    pub fn norm(&self, f: &[Complex64]) -> f64 {
        self.inner(f, f).re.max(0.0).sqrt()
    }

    /// The translation operator: multiplication by `e^{iλx}`.
    pub fn translate(&self, x: f64, f: &[Complex64]) -> Vec<Complex64> {
        self.nodes
            .iter()
            .zip(f.iter())
            .map(|(&l, v)| (Complex64::i() * (l * x)).exp() * v)
            .collect()
    }

    /// The conjugation `J` (entrywise, since `τ = −1` acts trivially on the
    /// half-line spectrum).
    pub fn conjugate(&self, f: &[Complex64]) -> Vec<Complex64> {
        f.iter().map(|v| v.conj()).collect()
    }

    fn require_wedge_support(&self, phi: &TestFn, positive: bool) -> Result<()> {
        let (a, b) = phi.support();
        let ok = if positive { a >= 0.0 } else { b <= 0.0 };
        if !ok {
            return Err(JtError::Domain(format!(
                "support ({a}, {b}) is not inside the {} wedge",
                if positive { "(0, ∞)" } else { "(−∞, 0)" }
            )));
        }
        Ok(())
    }

    /// Generator `ξ_φ = e^{−πis/4} φ̃` of the standard subspace, for real
    /// `φ` supported in `(0, ∞)`.
    pub fn generator(&self, phi: &TestFn) -> Result<Vec<Complex64>> {
        self.require_wedge_support(phi, true)?;
        let twist = Complex64::new(0.0, -std::f64::consts::PI * self.s / 4.0).exp();
        Ok(self
            .nodes
            .iter()
            .map(|&l| twist * fourier(phi, Complex64::new(l, 0.0)))
            .collect())
    }

    /// Generator `ξ'_ψ = e^{+πis/4} ψ̃` of the symplectic complement, for
    /// real `ψ` supported in `(−∞, 0)`.
    pub fn dual_generator(&self, psi: &TestFn) -> Result<Vec<Complex64>> {
        self.require_wedge_support(psi, false)?;
        let twist = Complex64::new(0.0, std::f64::consts::PI * self.s / 4.0).exp();
        Ok(self
            .nodes
            .iter()
            .map(|&l| twist * fourier(psi, Complex64::new(l, 0.0)))
            .collect())
    }

    /// Analytic continuation `ξ_z(λ) = e^{−πis/4} e^{zs/2} φ̃(λe^z)` of the
    /// modular orbit of a generator, for `0 ≤ Im z ≤ π`, by fresh quadrature
    /// of `∫ e^{iλ e^z x} φ(x) dx`.
    pub fn orbit_continuation(&self, phi: &TestFn, z: Complex64) -> Result<Vec<Complex64>> {
        self.require_wedge_support(phi, true)?;
        if z.im < -1e-12 || z.im > std::f64::consts::PI + 1e-12 {
            return Err(JtError::Domain(format!(
                "z = {z} outside the closed strip 0 ≤ Im z ≤ π"
            )));
        }
        let twist = Complex64::new(0.0, -std::f64::consts::PI * self.s / 4.0).exp();
        let growth = (z * (self.s / 2.0)).exp();
        let ez = z.exp();
        Ok(self
            .nodes
            .iter()
            .map(|&l| twist * growth * fourier(phi, ez * l))
            .collect())
    }

    /// Residual of the endpoint identity `ξ_{πi} = Jξ`, relative to `‖ξ‖`.
    pub fn endpoint_residual(&self, phi: &TestFn) -> Result<f64> {
        let xi = self.generator(phi)?;
        let end = self.orbit_continuation(phi, Complex64::new(0.0, std::f64::consts::PI))?;
        let jxi = self.conjugate(&xi);
        let diff: Vec<Complex64> = end.iter().zip(jxi.iter()).map(|(a, b)| a - b).collect();
        Ok(self.norm(&diff) / self.norm(&xi).max(1e-300))
    }

    /// Largest pointwise modulus of the continuation over a strip grid,
    /// versus the bound `e^{sπ/2} ‖φ‖_1`.
    pub fn continuation_bound_defect(&self, phi: &TestFn) -> Result<f64> {
        let bound = (self.s * std::f64::consts::PI / 2.0).exp() * phi.l1_norm();
        let mut worst: f64 = 0.0;
        for j in 0..=8 {
            let z = Complex64::new(0.3, j as f64 * std::f64::consts::PI / 8.0);
            let xi = self.orbit_continuation(phi, z)?;
            let sup = xi.iter().map(|v| v.norm()).fold(0.0, f64::max);
            worst = worst.max(sup - bound);
        }
        Ok(worst)
    }

    /// `|Im⟨ξ_φ, ξ'_ψ⟩|` for a wedge generator and a complement generator;
    /// the analytic value is 0.
    pub fn symplectic_orthogonality(&self, phi: &TestFn, psi: &TestFn) -> Result<f64> {
        let xi = self.generator(phi)?;
        let eta = self.dual_generator(psi)?;
        Ok(self.inner(&xi, &eta).im.abs())
    }

    /// `|Im⟨ξ_φ, ξ_ψ⟩|` for two wedge generators: the same-side control,
    /// which does not vanish (V is not isotropic).
    pub fn same_side_pairing(&self, phi: &TestFn, psi: &TestFn) -> Result<f64> {
        let xi = self.generator(phi)?;
        let eta = self.generator(psi)?;
        Ok(self.inner(&xi, &eta).im.abs())
    }

    /// Residual `‖U(x)ξ_φ − ξ_{φ(·−x)}‖ / ‖ξ_φ‖`; the shifted support must
    /// stay inside the wedge.
    pub fn wedge_semigroup_residual(&self, phi: &TestFn, x: f64) -> Result<f64> {
        if phi.poly_m != 0 {
            return Err(JtError::InvalidParameter(
                "the shift identity needs a plain bump (no monomial factor)".into(),
            ));
        }
        let (a, b) = phi.support();
        if a + x < 0.0 {
            return Err(JtError::Domain(format!(
                "shifted support ({}, {}) leaves the wedge (0, ∞)",
                a + x,
                b + x
            )));
        }
        let xi = self.generator(phi)?;
        let moved = self.translate(x, &xi);
        let shifted = TestFn::bump(a + x, b + x);
        let xi_shift = self.generator(&shifted)?;
        let diff: Vec<Complex64> = moved
            .iter()
            .zip(xi_shift.iter())
            .map(|(u, v)| u - v)
            .collect();
        Ok(self.norm(&diff) / self.norm(&xi).max(1e-300))
    }
}

/// Support-control pairing `μ̃_s(ψ^* ∗ φ)` for `φ, ψ` supported in `(0, ∞)`,
/// by dedicated quadrature: `∫_0^Λ conj(ψ̃) φ̃ dμ_s`.
#[derive(Debug, Clone, Serialize)]
pub struct SuppControl {
    pub s: f64,
    /// `Im μ̃_s(ψ^* ∗ φ)`; bounded by the s ∈ 2ℤ criterion when the supports
    /// avoid the origin-difference set.
    pub im_pairing: f64,
    /// Defect of the scalar hermiticity identity
    /// `μ̃_s(ψ^*∗φ) = conj(μ̃_s(φ^*∗ψ))`.
    pub hermiticity_defect: f64,
}

pub fn supp_control_pairing(s: f64, phi: &TestFn, psi: &TestFn) -> Result<SuppControl> {
    for f in [phi, psi] {
        let (a, b) = f.support();
        if a < 0.0 {
            return Err(JtError::Domain(format!(
                "support ({a}, {b}) is not inside the wedge (0, ∞)"
            )));
        }
    }
    let pair = |f: &TestFn, g: &TestFn| -> Complex64 {
        let gs = gamma(s);
        let lambda_max = TestFn::product_tail_cutoff(f, g, s, 1e-9).max(16.0);
        let xmax = {
            let (a1, b1) = f.support();
            let (a2, b2) = g.support();
            a1.abs().max(b1.abs()).max(a2.abs()).max(b2.abs())
        };
        let inner = crate::quad::gl_integrate(
            |v| {
                let lam = v * v;
                fourier(g, Complex64::new(lam, 0.0)).conj()
                    * fourier(f, Complex64::new(lam, 0.0))
                    * (2.0 * v.powf(2.0 * s - 1.0))
            },
            0.0,
            1.0,
            24,
        );
        let panels = ((lambda_max - 1.0) * xmax / 5.0).ceil() as usize + 8;
        let outer = crate::quad::gl_integrate(
            |lam| {
                fourier(g, Complex64::new(lam, 0.0)).conj()
                    * fourier(f, Complex64::new(lam, 0.0))
                    * lam.powf(s - 1.0)
            },
            1.0,
            lambda_max,
            panels,
        );
        (inner + outer) / gs
    };
    let forward = pair(phi, psi);
    let backward = pair(psi, phi);
    Ok(SuppControl {
        s,
        im_pairing: forward.im,
        hermiticity_defect: (forward - backward.conj()).norm(),
    })
}
