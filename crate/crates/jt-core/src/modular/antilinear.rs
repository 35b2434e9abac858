//! Antilinear operators on ℂ^N, kept as `(matrix, conjugation)` pairs:
//! `A v = M · conj(v)`. Composition with linear maps and adjoints follow the
//! explicit rules below, so `T = J Δ^{1/2}` stays exact.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// The antilinear map `v ↦ m · conj(v)`.
#[derive(Debug, Clone)]
pub struct Antilinear {
    pub m: DMatrix<Complex64>,
}

impl Antilinear {
    pub fn new(m: DMatrix<Complex64>) -> Self {
        assert_eq!(m.nrows(), m.ncols());
        Antilinear { m }
    }

    /// Entrywise conjugation.
    pub fn conjugation(n: usize) -> Self {
        Antilinear {
            m: DMatrix::identity(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn apply(&self, v: &DVector<Complex64>) -> DVector<Complex64> {
        &self.m * v.map(|z| z.conj())
    }

    /// `L ∘ A` for linear `L`: matrix `L m`.
    pub fn pre_compose_linear(&self, l: &DMatrix<Complex64>) -> Antilinear {
        Antilinear { m: l * &self.m }
    }

    /// `A ∘ L` for linear `L`: matrix `m · conj(L)`.
    pub fn post_compose_linear(&self, l: &DMatrix<Complex64>) -> Antilinear {
        Antilinear {
            m: &self.m * l.map(|z| z.conj()),
        }
    }

    /// `A ∘ B` for antilinear `B` is linear with matrix `m_A · conj(m_B)`.
    pub fn compose_antilinear(&self, other: &Antilinear) -> DMatrix<Complex64> {
        &self.m * other.m.map(|z| z.conj())
    }

    /// Adjoint in the convention `⟨A*ξ, η⟩ = ⟨Aη, ξ⟩`: matrix `mᵀ`.
    pub fn adjoint(&self) -> Antilinear {
        Antilinear {
            m: self.m.transpose(),
        }
    }

    /// `‖A² − 1‖`, zero for involutions.
    pub fn involution_defect(&self) -> f64 {
        let sq = self.compose_antilinear(self);
        (sq - DMatrix::<Complex64>::identity(self.dim(), self.dim())).norm()
    }

    /// `‖A*A − 1‖`, zero for antiunitaries.
    pub fn antiunitary_defect(&self) -> f64 {
        let sq = self.adjoint().compose_antilinear(self);
        (sq - DMatrix::<Complex64>::identity(self.dim(), self.dim())).norm()
    }
}

/// Realify ℂ^N as ℝ^{2N} via `v ↦ (Re v; Im v)`.
pub fn realify_vector(v: &DVector<Complex64>) -> DVector<f64> {
    let n = v.len();
    DVector::from_fn(2 * n, |i, _| if i < n { v[i].re } else { v[i - n].im })
}

pub fn complexify_vector(w: &DVector<f64>) -> DVector<Complex64> {
    let n = w.len() / 2;
    DVector::from_fn(n, |i, _| Complex64::new(w[i], w[i + n]))
}

/// Real 2N×2N representation of a linear complex matrix.
pub fn realify_linear(m: &DMatrix<Complex64>) -> DMatrix<f64> {
    let n = m.nrows();
    let mut r = DMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            r[(i, j)] = m[(i, j)].re;
            r[(i + n, j + n)] = m[(i, j)].re;
            r[(i, j + n)] = -m[(i, j)].im;
            r[(i + n, j)] = m[(i, j)].im;
        }
    }
    r
}

/// Real 2N×2N representation of an antilinear operator.
pub fn realify_antilinear(a: &Antilinear) -> DMatrix<f64> {
    let n = a.dim();
    let mut r = DMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            r[(i, j)] = a.m[(i, j)].re;
            r[(i + n, j + n)] = -a.m[(i, j)].re;
            r[(i, j + n)] = a.m[(i, j)].im;
            r[(i + n, j)] = a.m[(i, j)].im;
        }
    }
    r
}

/// The realified multiplication by `i`.
pub fn realified_i(n: usize) -> DMatrix<f64> {
    let mut j0 = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        j0[(k, k + n)] = -1.0;
        j0[(k + n, k)] = 1.0;
    }
    j0
}
