//! Pierce decomposition relative to a Jordan frame.
//!
//! For a frame `c_1, …, c_r` the algebra splits as
//! `E = ⊕_j ℝc_j ⊕ ⊕_{i<j} E_ij` with
//! `E_ij = {v : c_i v = v/2, c_j v = v/2}`. The projections are polynomial
//! expressions in the commuting operators `L(c_j)`, whose spectra are
//! `{0, 1/2, 1}`.

use nalgebra::DMatrix;

use super::{Algebra, Element};
use crate::error::{JtError, Result};

/// One orthogonal projection of the Pierce decomposition.
#[derive(Debug, Clone)]
pub struct PierceProjection {
    /// Block indices; `i == j` labels the line `ℝ c_i`.
    pub i: usize,
    pub j: usize,
    pub matrix: DMatrix<f64>,
}

impl PierceProjection {
    pub fn dimension(&self) -> usize {
        self.matrix.trace().round() as usize
    }
}

/// Check the frame invariants, naming the first violated identity.
pub fn validate_frame(a: &Algebra, frame: &[Element], tol: f64) -> Result<()> {
    if frame.len() != a.rank() {
        return Err(JtError::Validation(format!(
            "frame must have {} members, got {}",
            a.rank(),
            frame.len()
        )));
    }
    let mut sum = Element::zeros(a.dim());
    for (j, c) in frame.iter().enumerate() {
        a.check_element(c)?;
        let idem = a.product(c, c)?.sub(c).norm();
        if idem > tol {
            return Err(JtError::Validation(format!(
                "frame member {j} is not idempotent: |c²−c| = {idem:.3e} > {tol:.1e}"
            )));
        }
        let trace = a.jordan_trace(c)?;
        if (trace - 1.0).abs() > 1e3 * tol {
            return Err(JtError::Validation(format!(
                "frame member {j} is not primitive: tr = {trace}"
            )));
        }
        for (k, c2) in frame.iter().enumerate().skip(j + 1) {
            let orth = a.product(c, c2)?.norm();
            if orth > tol {
                return Err(JtError::Validation(format!(
                    "frame members {j},{k} are not orthogonal: |c_{j}c_{k}| = {orth:.3e} > {tol:.1e}"
                )));
            }
        }
        sum = sum.add(c);
    }
    let complete = sum.sub(&a.unit()).norm();
    if complete > tol {
        return Err(JtError::Validation(format!(
            "frame is not complete: |Σc_j − e| = {complete:.3e} > {tol:.1e}"
        )));
    }
    Ok(())
}

/// All Pierce projections for a valid frame: `r` rank-one blocks followed by
/// the `E_ij` blocks in lexicographic order.
pub fn pierce_projections(
    a: &Algebra,
    frame: &[Element],
    tol: f64,
) -> Result<Vec<PierceProjection>> {
    validate_frame(a, frame, tol)?;
    let r = a.rank();
    let n = a.dim();
    let id = DMatrix::<f64>::identity(n, n);
    let l: Vec<DMatrix<f64>> = frame
        .iter()
        .map(|c| a.left_mult(c))
        .collect::<Result<_>>()?;

    let mut out = Vec::with_capacity(r + r * (r - 1) / 2);
    // ℝc_j: spectral projection of L(c_j) onto eigenvalue 1, via t(2t−1)
    for (j, lj) in l.iter().enumerate() {
        let p = lj * (lj * 2.0 - &id);
        out.push(PierceProjection { i: j, j, matrix: p });
    }
    // E_ij: product of the ½-eigenprojections 4t(1−t) of L(c_i) and L(c_j)
    for i in 0..r {
        for j in (i + 1)..r {
            let qi = &l[i] * (&id - &l[i]) * 4.0;
            let qj = &l[j] * (&id - &l[j]) * 4.0;
            out.push(PierceProjection {
                i,
                j,
                matrix: qi * qj,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jalg::{spectral_decompose, Family};
    use approx::assert_abs_diff_eq;
    use nalgebra::DVector;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sym3_canonical_block_dimensions() {
        let a = Algebra::new(Family::SymReal, 3).unwrap();
        let frame = a.canonical_frame();
        let projs = pierce_projections(&a, &frame, 1e-9).unwrap();
        assert_eq!(projs.len(), 6);
        for p in &projs {
            let want = if p.i == p.j { 1 } else { a.pierce_dim() };
            assert_eq!(p.dimension(), want, "block ({},{})", p.i, p.j);
        }
    }

    #[test]
    fn minkowski_offdiagonal_dimension_is_d() {
        let a = Algebra::new(Family::Minkowski, 4).unwrap();
        let frame = a.canonical_frame();
        let projs = pierce_projections(&a, &frame, 1e-9).unwrap();
        let off = projs.iter().find(|p| p.i != p.j).unwrap();
        assert_eq!(off.dimension(), 2);
    }

    #[test]
    fn projections_are_orthogonal_resolution_of_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for a in [
            Algebra::new(Family::SymReal, 3).unwrap(),
            Algebra::new(Family::HermComplex, 2).unwrap(),
            Algebra::new(Family::HermQuaternion, 2).unwrap(),
            Algebra::new(Family::Minkowski, 5).unwrap(),
        ] {
            // random frame from the spectrum of a random element
            let x = Element(DVector::from_fn(a.dim(), |_, _| {
                rng.sample::<f64, _>(rand_distr::StandardNormal)
            }));
            let frame = spectral_decompose(&a, &x, 1e-9).unwrap().frame;
            let projs = pierce_projections(&a, &frame, 1e-7).unwrap();
            let n = a.dim();
            let mut sum = DMatrix::<f64>::zeros(n, n);
            for (u, p) in projs.iter().enumerate() {
                assert_abs_diff_eq!(&p.matrix * &p.matrix, p.matrix.clone(), epsilon = 1e-8);
                sum += &p.matrix;
                for q in projs.iter().skip(u + 1) {
                    assert!((&p.matrix * &q.matrix).norm() < 1e-8);
                }
            }
            assert_abs_diff_eq!(sum, DMatrix::identity(n, n), epsilon = 1e-8);
            let total: usize = projs.iter().map(|p| p.dimension()).sum();
            assert_eq!(total, n);
        }
    }

    #[test]
    fn invalid_frame_is_named() {
        let a = Algebra::new(Family::SymReal, 2).unwrap();
        let mut frame = a.canonical_frame();
        frame[0] = frame[0].scaled(2.0); // breaks idempotency
        let err = pierce_projections(&a, &frame, 1e-9).unwrap_err();
        assert!(err.to_string().contains("idempotent"));
    }
}
