//! Modular pairs `(Δ, J)`, standard subspaces, and the bijection between
//! them through the Tomita operator `T = JΔ^{1/2}`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::prelude::*;

use super::antilinear::{
    complexify_vector, realified_i, realify_antilinear, realify_vector, Antilinear,
};
use crate::error::{JtError, Result};
use crate::linalg::herm_eigen;

/// A finite-dimensional modular pair: `Δ ≻ 0` hermitian and a conjugation
/// `J` with `JΔJ = Δ^{−1}`.
#[derive(Debug, Clone)]
pub struct ModularPair {
    pub delta: DMatrix<Complex64>,
    pub j: Antilinear,
}

impl ModularPair {
    pub fn new(delta: DMatrix<Complex64>, j: Antilinear) -> Result<ModularPair> {
        let pair = ModularPair { delta, j };
        pair.validate(1e-10)?;
        Ok(pair)
    }

    pub fn dim(&self) -> usize {
        self.delta.nrows()
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        let n = self.dim();
        if self.j.dim() != n {
            return Err(JtError::Validation("Δ and J dimensions differ".into()));
        }
        let herm = (&self.delta - self.delta.map(|z| z.conj()).transpose()).norm();
        if herm > tol * (1.0 + self.delta.norm()) {
            return Err(JtError::Validation(format!(
                "Δ is not hermitian: defect {herm:.3e}"
            )));
        }
        let (vals, _) = herm_eigen(&self.delta);
        if vals.iter().any(|&l| l <= 0.0) {
            return Err(JtError::Validation("Δ is not positive definite".into()));
        }
        let invol = self.j.involution_defect();
        if invol > tol * n as f64 {
            return Err(JtError::Validation(format!(
                "J² ≠ 1: defect {invol:.3e}"
            )));
        }
        let anti = self.j.antiunitary_defect();
        if anti > tol * n as f64 {
            return Err(JtError::Validation(format!(
                "J is not antiunitary: defect {anti:.3e}"
            )));
        }
        // JΔJ = Δ^{−1}, tested in the product form (JΔJ)Δ = 1 to keep the
        // defect scale independent of the conditioning of Δ; J∘Δ∘J is
        // linear with matrix m_J conj(Δ) conj(m_J)
        let jdj = &self.j.m * self.delta.map(|z| z.conj()) * self.j.m.map(|z| z.conj());
        let defect = (&jdj * &self.delta - DMatrix::<Complex64>::identity(n, n)).norm();
        if defect > tol * (1.0 + self.delta.norm()) {
            return Err(JtError::Validation(format!(
                "modular relation JΔJ = Δ^{{−1}} fails: defect {defect:.3e}"
            )));
        }
        Ok(())
    }

    /// `Δ^w` by functional calculus, for complex `w`.
    pub fn delta_power(&self, w: Complex64) -> DMatrix<Complex64> {
        let (vals, vecs) = herm_eigen(&self.delta);
        let n = self.dim();
        let mut out = DMatrix::zeros(n, n);
        for k in 0..n {
            let lw = (w * vals[k].ln()).exp();
            let col = vecs.column(k);
            for i in 0..n {
                for j in 0..n {
                    out[(i, j)] += lw * col[i] * col[j].conj();
                }
            }
        }
        out
    }

    /// The Tomita operator `T = J Δ^{1/2}`.
    pub fn tomita(&self) -> Antilinear {
        self.j
            .post_compose_linear(&self.delta_power(Complex64::new(0.5, 0.0)))
    }
}

/// A standard subspace, stored as an orthonormal real basis of `V` inside
/// the realification ℝ^{2N}.
#[derive(Debug, Clone)]
pub struct StandardSubspace {
    /// Complex dimension `N` of the ambient space.
    pub ambient_dim: usize,
    /// `2N × N` real matrix with orthonormal columns spanning `V` over ℝ.
    pub basis: DMatrix<f64>,
}

impl StandardSubspace {
    /// Build from real spanning vectors (realified, as columns); validates
    /// `V ∩ iV = {0}` and `V + iV = ℂ^N`.
    pub fn from_real_span(ambient_dim: usize, span: &DMatrix<f64>) -> Result<StandardSubspace> {
        let basis = orthonormal_columns(span, 1e-9);
        let v = StandardSubspace {
            ambient_dim,
            basis,
        };
        v.validate_standard()?;
        Ok(v)
    }

    /// Real span without the standardness requirement (used for closed real
    /// subspaces that may be degenerate).
    pub fn from_real_span_unchecked(ambient_dim: usize, span: &DMatrix<f64>) -> StandardSubspace {
        StandardSubspace {
            ambient_dim,
            basis: orthonormal_columns(span, 1e-9),
        }
    }

    pub fn real_dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn validate_standard(&self) -> Result<()> {
        let n = self.ambient_dim;
        if self.real_dim() != n {
            return Err(JtError::Validation(format!(
                "V has real dimension {} but standardness needs {n}",
                self.real_dim()
            )));
        }
        // V + iV = ℂ^N and V ∩ iV = 0 both amount to [B | J₀B] having
        // full rank 2N
        let j0 = realified_i(n);
        let mut big = DMatrix::zeros(2 * n, 2 * n);
        big.view_mut((0, 0), (2 * n, n)).copy_from(&self.basis);
        big.view_mut((0, n), (2 * n, n)).copy_from(&(j0 * &self.basis));
        let gram = big.transpose() * &big;
        let (vals, _) = crate::linalg::sym_eigen(&gram);
        let smin = vals[vals.len() - 1].max(0.0).sqrt();
        if smin < 1e-8 {
            return Err(JtError::Validation(format!(
                "V ∩ iV ≠ {{0}}: smallest singular value of [B | iB] is {smin:.3e}"
            )));
        }
        Ok(())
    }

    /// Basis as complex vectors.
    pub fn complex_basis(&self) -> Vec<DVector<Complex64>> {
        (0..self.real_dim())
            .map(|k| complexify_vector(&self.basis.column(k).clone_owned()))
            .collect()
    }

    /// A random element of `V` with standard normal coefficients.
    pub fn random_vector(&self, rng: &mut impl Rng) -> DVector<Complex64> {
        let coef = DVector::from_fn(self.real_dim(), |_, _| {
            rng.sample::<f64, _>(rand_distr::StandardNormal)
        });
        complexify_vector(&(&self.basis * coef))
    }

    /// Distance from `v` to the subspace (in the realified metric, relative).
    pub fn distance(&self, v: &DVector<Complex64>) -> f64 {
        let w = realify_vector(v);
        let proj = &self.basis * (self.basis.transpose() * &w);
        (w.clone() - proj).norm() / w.norm().max(1e-300)
    }

    /// Principal-angle distance `‖P_V − P_W‖_F` between subspaces.
    pub fn subspace_distance(&self, other: &StandardSubspace) -> f64 {
        let p1 = &self.basis * self.basis.transpose();
        let p2 = &other.basis * other.basis.transpose();
        (p1 - p2).norm()
    }

    /// Apply a complex-linear unitary to the subspace.
    pub fn apply_linear(&self, u: &DMatrix<Complex64>) -> StandardSubspace {
        let r = super::antilinear::realify_linear(u);
        StandardSubspace {
            ambient_dim: self.ambient_dim,
            basis: orthonormal_columns(&(r * &self.basis), 1e-12),
        }
    }

    /// Apply an antilinear operator to the subspace.
    pub fn apply_antilinear(&self, a: &Antilinear) -> StandardSubspace {
        let r = realify_antilinear(a);
        StandardSubspace {
            ambient_dim: self.ambient_dim,
            basis: orthonormal_columns(&(r * &self.basis), 1e-12),
        }
    }
}

/// Rank-revealing column orthonormalization: pivoted modified Gram–Schmidt
/// with two re-orthogonalization passes.
pub fn orthonormal_columns(m: &DMatrix<f64>, tol: f64) -> DMatrix<f64> {
    let rows = m.nrows();
    let mut work: Vec<DVector<f64>> = (0..m.ncols()).map(|j| m.column(j).clone_owned()).collect();
    let scale = work.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut basis: Vec<DVector<f64>> = Vec::new();
    loop {
        let Some((pivot, norm)) = work
            .iter()
            .enumerate()
            .map(|(j, c)| (j, c.norm()))
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        else {
            break;
        };
        if norm <= tol * scale.max(1.0) {
            break;
        }
        let mut q = work.swap_remove(pivot);
        for _ in 0..2 {
            for b in &basis {
                let c = b.dot(&q);
                q -= b * c;
            }
        }
        let qn = q.norm();
        if qn <= tol * scale.max(1.0) {
            continue;
        }
        q /= qn;
        for c in work.iter_mut() {
            let coef = q.dot(c);
            *c -= &q * coef;
        }
        basis.push(q);
    }
    let mut out = DMatrix::zeros(rows, basis.len());
    for (j, b) in basis.iter().enumerate() {
        out.set_column(j, b);
    }
    out
}

/// `V = Fix(JΔ^{1/2})`, the standard subspace of a modular pair.
pub fn standard_from_pair(pair: &ModularPair) -> Result<StandardSubspace> {
    pair.validate(1e-8)?;
    let n = pair.dim();
    let t = pair.tomita();
    // (1 + T)/2 projects onto Fix(T) since T² = 1
    let rt = realify_antilinear(&t);
    let p = (DMatrix::identity(2 * n, 2 * n) + rt) * 0.5;
    let v = StandardSubspace {
        ambient_dim: n,
        basis: orthonormal_columns(&p, 1e-9),
    };
    v.validate_standard()?;
    Ok(v)
}

/// Reconstruct the modular pair of a standard subspace: build `T` (+1 on V,
/// −1 on iV), then polar-decompose `T = JΔ^{1/2}`.
pub fn modular_objects(v: &StandardSubspace) -> Result<ModularPair> {
    v.validate_standard()?;
    let n = v.ambient_dim;
    let j0 = realified_i(n);
    let ib = &j0 * &v.basis;
    let mut full = DMatrix::zeros(2 * n, 2 * n);
    full.view_mut((0, 0), (2 * n, n)).copy_from(&v.basis);
    full.view_mut((0, n), (2 * n, n)).copy_from(&ib);
    let inv = full.clone().try_inverse().ok_or_else(|| {
        JtError::Validation("V is not standard: realified basis is singular".into())
    })?;
    let mut sign = DMatrix::identity(2 * n, 2 * n);
    for k in n..2 * n {
        sign[(k, k)] = -1.0;
    }
    let t_real = &full * sign * inv;
    // antilinear part: T_real = [[X, Y], [Y, −X]] represents M = X + iY
    let x = t_real.view((0, 0), (n, n)).clone_owned();
    let y = t_real.view((0, n), (n, n)).clone_owned();
    let anti_defect = (t_real.view((n, 0), (n, n)).clone_owned() - &y).norm()
        + (t_real.view((n, n), (n, n)).clone_owned() + &x).norm();
    if anti_defect > 1e-8 * (1.0 + t_real.norm()) {
        return Err(JtError::Validation(format!(
            "reconstructed T is not antilinear: defect {anti_defect:.3e}"
        )));
    }
    let m_t = DMatrix::from_fn(n, n, |i, j| Complex64::new(x[(i, j)], y[(i, j)]));
    let t = Antilinear::new(m_t);
    // Δ = T*T (linear, positive); J = T Δ^{−1/2}
    let delta = {
        let m = t.adjoint().compose_antilinear(&t);
        // symmetrize against rounding
        (&m + m.map(|z| z.conj()).transpose()) * Complex64::new(0.5, 0.0)
    };
    let pair_delta = delta;
    let (vals, vecs) = herm_eigen(&pair_delta);
    let mut inv_sqrt = DMatrix::zeros(n, n);
    for k in 0..n {
        if vals[k] <= 0.0 {
            return Err(JtError::Validation(
                "reconstructed Δ is not positive definite".into(),
            ));
        }
        let w = vals[k].powf(-0.5);
        let col = vecs.column(k);
        for i in 0..n {
            for j in 0..n {
                inv_sqrt[(i, j)] += Complex64::new(w, 0.0) * col[i] * col[j].conj();
            }
        }
    }
    let j = t.post_compose_linear(&inv_sqrt);
    ModularPair::new(pair_delta, j)
}

/// Symplectic complement `V' = {v : Im⟨w, v⟩ = 0 ∀ w ∈ V}`.
///
/// In the realification, `Im⟨w, v⟩ = (J₀ w_ℝ) · v_ℝ`, so `V'` is the
/// euclidean orthogonal complement of `J₀ V`.
pub fn symplectic_complement(v: &StandardSubspace) -> StandardSubspace {
    let n = v.ambient_dim;
    let j0 = realified_i(n);
    // J₀B has orthonormal columns (J₀ is orthogonal), so the complement is
    // the range of the exact projector 1 − (J₀B)(J₀B)ᵀ
    let jb = j0 * &v.basis;
    let q = DMatrix::identity(2 * n, 2 * n) - &jb * jb.transpose();
    StandardSubspace {
        ambient_dim: n,
        basis: orthonormal_columns(&q, 1e-9),
    }
}

/// Random modular pair with log-uniform reciprocal spectrum.
///
/// `Δ = u·diag(spec)·u*` with the spectrum sampled as reciprocal pairs
/// `(λ, 1/λ)`, and `J = u S conj(u* ·)` where `S` swaps the paired
/// eigenvectors; this satisfies `JΔJ = Δ^{−1}` by construction.
pub fn random_modular_pair(n: usize, rng: &mut impl Rng) -> ModularPair {
    // random unitary from the QR of a complex gaussian matrix
    let g = DMatrix::from_fn(n, n, |_, _| {
        Complex64::new(
            rng.sample::<f64, _>(rand_distr::StandardNormal),
            rng.sample::<f64, _>(rand_distr::StandardNormal),
        )
    });
    let qr = g.qr();
    let u = qr.q();
    let mut spec = vec![1.0f64; n];
    let mut swap = DMatrix::<Complex64>::zeros(n, n);
    let mut k = 0;
    while k + 1 < n {
        let lambda = 10f64.powf(rng.gen_range(-2.0..2.0));
        spec[k] = lambda;
        spec[k + 1] = 1.0 / lambda;
        swap[(k, k + 1)] = Complex64::new(1.0, 0.0);
        swap[(k + 1, k)] = Complex64::new(1.0, 0.0);
        k += 2;
    }
    if n % 2 == 1 {
        swap[(n - 1, n - 1)] = Complex64::new(1.0, 0.0);
    }
    let d = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(spec[i], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let ustar = u.map(|z| z.conj()).transpose();
    let delta = &u * d * &ustar;
    let delta = (&delta + delta.map(|z| z.conj()).transpose()) * Complex64::new(0.5, 0.0);
    let m_j = &u * swap * u.transpose();
    ModularPair::new(delta, Antilinear::new(m_j)).expect("construction satisfies the invariants")
}
