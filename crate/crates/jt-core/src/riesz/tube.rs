//! `μ̃_s(z) = Δ(−iz)^{−s}` on the tube, its boundary values on `E^×`, and the
//! multiplicative identity `(−i)^{rs} Δ^s μ̃_s = 1`.

use num_complex::Complex64;

use crate::error::{JtError, Result};
use crate::jalg::{spectral_decompose, Algebra, ComplexElement, ConePosition, Element};
use crate::quad::neville_extrapolate;
use crate::wedge::tube_membership;

const TOL: f64 = 1e-9;

/// Holomorphic branch data for `Δ(−iz)` with the argument tracked
/// continuously from the base point `ie` (where `Δ(−i·ie) = Δ(e) = 1`).
struct Branch {
    log_abs: f64,
    arg: f64,
}

/// Track `Δ(−iz(t))` along the straight segment from `ie` to `z`.
///
/// The tube is convex and `Δ` is zero-free on it, so any path yields the same
/// branch; steps are halved whenever the argument increment exceeds π/4. The
/// quaternionic family tracks the determinant of its complex embedding and
/// halves the logarithm at the end.
fn track_branch(a: &Algebra, z: &ComplexElement) -> Result<Branch> {
    let n = a.dim();
    let base = {
        let e = a.unit();
        ComplexElement::from_parts(&Element::zeros(n), &e)
    };
    let det_at = |t: f64| -> Result<Complex64> {
        let mut w = nalgebra::DVector::zeros(n);
        for i in 0..n {
            let zt = base.0[i] * (1.0 - t) + z.0[i] * t;
            // −i·zt
            w[i] = zt * Complex64::new(0.0, -1.0);
        }
        let (v, _) = a.det_data(&ComplexElement(w))?;
        if !v.is_finite() || v.norm() < 1e-280 {
            return Err(JtError::Numerical(format!(
                "determinant collapsed to {v} along the branch path; \
                 the path left the zero-free region"
            )));
        }
        Ok(v)
    };
    let (_, mult) = a.det_data(&base)?;
    let mut t = 0.0;
    let mut prev = det_at(0.0)?;
    let mut log_abs = prev.norm().ln();
    let mut arg = 0.0;
    let mut step = 0.125f64;
    let mut iterations = 0usize;
    while t < 1.0 {
        iterations += 1;
        if iterations > 200_000 {
            return Err(JtError::Numerical(
                "branch tracking failed to converge within the step budget".into(),
            ));
        }
        let tn = (t + step).min(1.0);
        let cur = det_at(tn)?;
        let ratio = cur / prev;
        let dphi = ratio.arg();
        if dphi.abs() > std::f64::consts::FRAC_PI_4 && step > 1e-12 {
            step *= 0.5;
            continue;
        }
        arg += dphi;
        log_abs = cur.norm().ln();
        prev = cur;
        t = tn;
        if dphi.abs() < std::f64::consts::FRAC_PI_8 / 2.0 {
            step = (step * 1.5).min(0.125);
        }
    }
    let m = mult as f64;
    Ok(Branch {
        log_abs: log_abs / m,
        arg: arg / m,
    })
}

/// `μ̃_s(z) = Δ(−iz)^{−s}` for `z` in the open tube, normalized by
/// `μ̃_s(ie) = 1`.
pub fn tilde_mu_tube(a: &Algebra, s: f64, z: &ComplexElement) -> Result<Complex64> {
    a.check_complex_element(z)?;
    if tube_membership(a, z, TOL)? != ConePosition::Interior {
        return Err(JtError::Domain(
            "z is not in the open tube E + iC0; Im z must be interior to the cone".into(),
        ));
    }
    let br = track_branch(a, z)?;
    Ok(Complex64::new(0.0, -s * br.arg).exp() * (-s * br.log_abs).exp())
}

/// Boundary value `μ̃_s(x) = |Δ(x)|^{−s} e^{ind(x)·sπi/2}` on invertible `x`.
pub fn tilde_mu_boundary(a: &Algebra, s: f64, x: &Element) -> Result<Complex64> {
    let sd = spectral_decompose(a, x, TOL)?;
    let cl = crate::jalg::classification_from(a, &sd);
    if !cl.invertible {
        let min = sd
            .values
            .iter()
            .fold(f64::INFINITY, |m, &l| m.min(l.abs()));
        return Err(JtError::Domain(format!(
            "x is not invertible at tolerance {TOL:.1e}: smallest |spectral value| = {min:.3e}"
        )));
    }
    let log_abs_det: f64 = sd.values.iter().map(|l| l.abs().ln()).sum();
    let phase = cl.index as f64 * s * std::f64::consts::FRAC_PI_2;
    Ok(Complex64::new(0.0, phase).exp() * (-s * log_abs_det).exp())
}

/// Richardson-extrapolated limit of `μ̃_s(x + iεe)` as `ε → 0`.
///
/// The ladder starts at a quarter of the smallest `|spectral value|`, which
/// is the convergence radius of `ε ↦ Π (ε − iλ_j)^{−s}`.
pub fn boundary_from_tube_limit(a: &Algebra, s: f64, x: &Element) -> Result<Complex64> {
    let sd = spectral_decompose(a, x, TOL)?;
    let min = sd
        .values
        .iter()
        .fold(f64::INFINITY, |m, &l| m.min(l.abs()));
    if min <= TOL * sd.scale() {
        return Err(JtError::Domain(
            "x is numerically non-invertible; no boundary limit".into(),
        ));
    }
    let e = a.unit();
    let eps0 = 0.25 * min;
    let mut hs = Vec::new();
    let mut ys = Vec::new();
    for j in 0..7 {
        let eps = eps0 / 2f64.powi(j);
        let z = ComplexElement::from_parts(x, &e.scaled(eps));
        hs.push(eps);
        ys.push(tilde_mu_tube(a, s, &z)?);
    }
    Ok(neville_extrapolate(&hs, &ys))
}

/// Residual of the identity `(−i)^{rs} Δ(x)^s μ̃_s(x) = 1` for integer `s`.
pub fn mult_identity_residual(a: &Algebra, s: u32, x: &Element) -> Result<f64> {
    let sd = spectral_decompose(a, x, TOL)?;
    let cl = crate::jalg::classification_from(a, &sd);
    if !cl.invertible {
        return Err(JtError::Domain("x must be invertible".into()));
    }
    let log_abs_det: f64 = sd.values.iter().map(|l| l.abs().ln()).sum();
    let mu = Complex64::new(0.0, cl.index as f64 * s as f64 * std::f64::consts::FRAC_PI_2).exp()
        * (-(s as f64) * log_abs_det).exp();
    let rs = (a.rank() as u32 * s) as i32;
    let phase = Complex64::new(0.0, -1.0).powi(rs);
    let value = phase * cl.det.powi(s as i32) * mu;
    Ok((value - Complex64::new(1.0, 0.0)).norm())
}
