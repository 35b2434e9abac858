//! Positive definiteness of the upper-half-plane kernels
//! `K_s(z, w) = ((z − conj(w))/i)^{−s}`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{JtError, Result};
use crate::linalg::herm_eigen;

/// Gram matrix of `K_s` at upper-half-plane points, with its smallest
/// eigenvalue (relative to the spectral norm).
pub fn kernel_gram(s: f64, points: &[Complex64]) -> Result<(DMatrix<Complex64>, f64, f64)> {
    if s <= 0.0 {
        return Err(JtError::InvalidParameter("s must be positive".into()));
    }
    for (i, z) in points.iter().enumerate() {
        if z.im <= 0.0 {
            return Err(JtError::Domain(format!(
                "point {i} = {z} is not in the open upper half plane"
            )));
        }
    }
    let n = points.len();
    let mut g = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            // (z − conj(w))/i = −i(z − conj(w)) has positive real part, so
            // the principal power is the right branch
            let base = (points[i] - points[j].conj()) * Complex64::new(0.0, -1.0);
            g[(i, j)] = base.powf(-s);
        }
    }
    let (vals, _) = herm_eigen(&g);
    let max = vals.iter().fold(0.0f64, |m, &l| m.max(l.abs()));
    let min = vals.iter().fold(f64::INFINITY, |m, &l| m.min(l));
    Ok((g, min, max))
}
