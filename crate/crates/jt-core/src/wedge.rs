//! Boost generators `h_k`, their eigenspace geometry, the involution
//! `τ = e^{πih}`, the tube `𝒯 = E + iC⁰`, and the wedge domains `W(h_k)`.
//!
//! For a Jordan frame `c_1, …, c_r` and `k ∈ {0, …, r}`,
//! `h_k = L(c_1+⋯+c_k) − L(c_{k+1}+⋯+c_r)` is diagonalizable with eigenvalues
//! `{−1, 0, 1}`, so its eigenprojections are quadratic polynomials in `h` and
//! `τ = 1 − 2h²`. The wedge is `W = C_+⁰ ⊕ C_−⁰ ⊕ E_0(h)` where `C_±` are the
//! positive/negative cones of the rank-`k` and rank-`(r−k)` subalgebras
//! `E_{±1}(h)`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{JtError, Result};
use crate::jalg::{
    cone_position, spectral_decompose, validate_frame, Algebra, ComplexElement,
    ConePosition, Element,
};

/// A boost generator `h_k` together with its eigenprojections and `τ`.
#[derive(Debug, Clone)]
pub struct BoostConfig {
    pub algebra: Algebra,
    pub frame: Vec<Element>,
    pub k: usize,
    pub h: DMatrix<f64>,
    pub p_plus: DMatrix<f64>,
    pub p_zero: DMatrix<f64>,
    pub p_minus: DMatrix<f64>,
    pub tau: DMatrix<f64>,
}

/// Membership verdict for the wedge `W(h_k)`, with the component data that
/// decides it.
#[derive(Debug, Clone)]
pub struct WedgeVerdict {
    pub in_wedge: bool,
    pub x_plus: Element,
    pub x_zero: Element,
    pub x_minus: Element,
    /// Position of `x_1` in the cone of the subalgebra `E_1(h)`.
    pub plus_position: ConePosition,
    /// Position of `−x_{−1}` in the cone of the subalgebra `E_{−1}(h)`.
    pub minus_position: ConePosition,
}

/// Counts from the sampled axiom-(A3) audit.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomAudit {
    pub samples: usize,
    pub flow_violations: usize,
    pub tau_violations: usize,
}

impl BoostConfig {
    pub fn new(a: &Algebra, frame: &[Element], k: usize, tol: f64) -> Result<BoostConfig> {
        validate_frame(a, frame, tol)?;
        if k > a.rank() {
            return Err(JtError::InvalidParameter(format!(
                "k = {k} out of range 0..={}",
                a.rank()
            )));
        }
        let n = a.dim();
        let mut pos = Element::zeros(n);
        let mut neg = Element::zeros(n);
        for (j, c) in frame.iter().enumerate() {
            if j < k {
                pos = pos.add(c);
            } else {
                neg = neg.add(c);
            }
        }
        let h = a.left_mult(&pos)? - a.left_mult(&neg)?;
        // spectrum ⊆ {−1, 0, 1} is equivalent to h³ = h for diagonalizable h
        let hsq = &h * &h;
        let cubic = (&hsq * &h - &h).norm();
        if cubic > 1e-10 * (1.0 + h.norm()) {
            return Err(JtError::Numerical(format!(
                "h_k fails h³ = h by {cubic:.3e}; spectrum not in {{−1,0,1}}"
            )));
        }
        let id = DMatrix::identity(n, n);
        let p_plus = (&hsq + &h) * 0.5;
        let p_minus = (&hsq - &h) * 0.5;
        let p_zero = &id - &hsq;
        let tau = &id - &hsq * 2.0;
        Ok(BoostConfig {
            algebra: a.clone(),
            frame: frame.to_vec(),
            k,
            h,
            p_plus,
            p_zero,
            p_minus,
            tau,
        })
    }

    /// `(dim E_1, dim E_0, dim E_{−1})`; matches the Pierce block count
    /// `(k + k(k−1)d/2, k(r−k)d, (r−k) + (r−k)(r−k−1)d/2)`.
    pub fn eigenspace_dims(&self) -> (usize, usize, usize) {
        let d1 = self.p_plus.trace().round() as usize;
        let d0 = self.p_zero.trace().round() as usize;
        let dm = self.p_minus.trace().round() as usize;
        (d1, d0, dm)
    }

    /// Split `x = x_1 + x_0 + x_{−1}` along the `h`-eigenspaces.
    pub fn components(&self, x: &Element) -> Result<(Element, Element, Element)> {
        self.algebra.check_element(x)?;
        Ok((
            Element(&self.p_plus * &x.0),
            Element(&self.p_zero * &x.0),
            Element(&self.p_minus * &x.0),
        ))
    }

    pub fn apply_tau(&self, x: &Element) -> Result<Element> {
        self.algebra.check_element(x)?;
        Ok(Element(&self.tau * &x.0))
    }

    /// `e^{zh} x = e^z x_1 + x_0 + e^{−z} x_{−1}`.
    pub fn flow(&self, z: Complex64, x: &Element) -> Result<ComplexElement> {
        let (x1, x0, xm) = self.components(x)?;
        let (ez, emz) = (z.exp(), (-z).exp());
        let n = self.algebra.dim();
        let mut v = DVector::zeros(n);
        for i in 0..n {
            v[i] = ez * x1.0[i] + Complex64::new(x0.0[i], 0.0) + emz * xm.0[i];
        }
        Ok(ComplexElement(v))
    }

    /// Same flow through the matrix exponential of `z·h`; an independent
    /// route used for cross-checks.
    pub fn flow_via_expm(&self, z: Complex64, x: &Element) -> Result<ComplexElement> {
        self.algebra.check_element(x)?;
        let hz = crate::linalg::complexify(&self.h).map(|w| w * z);
        let e = crate::linalg::expm(&hz);
        Ok(ComplexElement(e * x.complexify().0))
    }

    /// Wedge membership via the eigenspace components and the subalgebra
    /// cone tests.
    pub fn wedge_membership(&self, x: &Element, tol: f64) -> Result<WedgeVerdict> {
        let (x1, x0, xm) = self.components(x)?;
        let r = self.algebra.rank();
        let plus_position = subalgebra_cone_position(&self.algebra, &x1, self.k, tol)?;
        let minus_position =
            subalgebra_cone_position(&self.algebra, &xm.scaled(-1.0), r - self.k, tol)?;
        Ok(WedgeVerdict {
            in_wedge: plus_position == ConePosition::Interior
                && minus_position == ConePosition::Interior,
            x_plus: x1,
            x_zero: x0,
            x_minus: xm,
            plus_position,
            minus_position,
        })
    }

    /// Wedge membership by sampling `e^{zh}x` on a strip grid and testing
    /// tube membership. Since only `Im z` matters, the grid is
    /// `Im z = jπ/8`, `j = 1..=7`.
    pub fn wedge_membership_strip_sampled(&self, x: &Element, tol: f64) -> Result<bool> {
        for j in 1..=7 {
            let z = Complex64::new(0.0, j as f64 * std::f64::consts::PI / 8.0);
            let w = self.flow(z, x)?;
            if tube_membership(&self.algebra, &w, tol)? != ConePosition::Interior {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sampled audit of axiom (A3): `e^{th} C = C` at `t ∈ {±1, ±2}` and
    /// `−τ(C) = C`, on random squares.
    pub fn audit_a3(&self, samples: usize, seed: u64, tol: f64) -> Result<AxiomAudit> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = &self.algebra;
        let mut flow_violations = 0;
        let mut tau_violations = 0;
        for _ in 0..samples {
            let x = random_square(a, &mut rng)?;
            for t in [-2.0, -1.0, 1.0, 2.0] {
                let y = self.flow(Complex64::new(t, 0.0), &x)?.re();
                if cone_position(a, &y, tol)? == ConePosition::Outside {
                    flow_violations += 1;
                }
            }
            let y = self.apply_tau(&x)?.scaled(-1.0);
            if cone_position(a, &y, tol)? == ConePosition::Outside {
                tau_violations += 1;
            }
        }
        Ok(AxiomAudit {
            samples,
            flow_violations,
            tau_violations,
        })
    }

    /// Randomized audit of the projection lemma: for `x ∈ C`,
    /// `p_1(x) ∈ C_+`, `−p_{−1}(x) ∈ C_−`, and `(p_1 + p_{−1})(x) ∈ C ∩ E^−`.
    /// Returns the violation count (expected 0).
    pub fn projection_cone_check(&self, samples: usize, seed: u64, tol: f64) -> Result<usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = &self.algebra;
        let mut violations = 0;
        for _ in 0..samples {
            let x = random_square(a, &mut rng)?;
            let (x1, _, xm) = self.components(&x)?;
            // closed-cone membership in the subalgebras: p_1(x) ∈ C_+ and
            // p_{−1}(x) ∈ −C_−, both positive cones
            if subalgebra_cone_position(a, &x1, self.k, tol)? == ConePosition::Outside {
                violations += 1;
            }
            if subalgebra_cone_position(a, &xm, a.rank() - self.k, tol)? == ConePosition::Outside {
                violations += 1;
            }
            if cone_position(a, &x1.add(&xm), tol)? == ConePosition::Outside {
                violations += 1;
            }
        }
        Ok(violations)
    }

    /// Serializable summary (frame, k, dims, audit data).
    pub fn summary(&self, audit: Option<AxiomAudit>) -> BoostSummary {
        let (d1, d0, dm) = self.eigenspace_dims();
        BoostSummary {
            algebra: self.algebra.label(),
            k: self.k,
            frame: self
                .frame
                .iter()
                .map(|c| c.0.iter().copied().collect())
                .collect(),
            dim_plus: d1,
            dim_zero: d0,
            dim_minus: dm,
            trace_h: self.h.trace(),
            audit,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoostSummary {
    pub algebra: String,
    pub k: usize,
    pub frame: Vec<Vec<f64>>,
    pub dim_plus: usize,
    pub dim_zero: usize,
    pub dim_minus: usize,
    pub trace_h: f64,
    pub audit: Option<AxiomAudit>,
}

/// A random square `y²`, i.e. a random element of the closed cone `C`.
pub fn random_square(a: &Algebra, rng: &mut impl Rng) -> Result<Element> {
    let y = Element(DVector::from_fn(a.dim(), |_, _| {
        rng.sample::<f64, _>(rand_distr::StandardNormal)
    }));
    a.product(&y, &y)
}

/// Matrix trace of the assembled `h_k`; equals `(2k−r)·n/r`.
pub fn trace_h(a: &Algebra, k: usize) -> Result<f64> {
    let cfg = BoostConfig::new(a, &a.canonical_frame(), k, 1e-9)?;
    Ok(cfg.h.trace())
}

/// The closed-form trace `(2k−r)·n/r`.
pub fn trace_h_formula(a: &Algebra, k: usize) -> f64 {
    (2.0 * k as f64 - a.rank() as f64) * a.dim() as f64 / a.rank() as f64
}

/// Membership of `z` in the tube `𝒯 = E + iC⁰`, via the cone position of
/// `Im z`.
pub fn tube_membership(a: &Algebra, z: &ComplexElement, tol: f64) -> Result<ConePosition> {
    a.check_complex_element(z)?;
    cone_position(a, &z.im(), tol)
}

/// Position of an element of the subalgebra `E_1(h_k)` (of rank `sub_rank`)
/// relative to that subalgebra's closed positive cone.
///
/// The element's spectrum inside the subalgebra is its full-algebra spectrum
/// minus `r − sub_rank` zeros, so interiority amounts to having exactly
/// `sub_rank` strictly positive values and none negative.
fn subalgebra_cone_position(
    a: &Algebra,
    x: &Element,
    sub_rank: usize,
    tol: f64,
) -> Result<ConePosition> {
    if sub_rank == 0 {
        // the zero algebra: its cone is {0}, which is its own interior
        let scale = x.norm().max(1.0);
        return Ok(if x.norm() <= tol * scale {
            ConePosition::Interior
        } else {
            ConePosition::Outside
        });
    }
    let sd = spectral_decompose(a, x, tol)?;
    let thresh = tol * sd.scale();
    let npos = sd.values.iter().filter(|&&l| l > thresh).count();
    let nneg = sd.values.iter().filter(|&&l| l < -thresh).count();
    Ok(if nneg > 0 {
        ConePosition::Outside
    } else if npos == sub_rank {
        ConePosition::Interior
    } else {
        ConePosition::Boundary
    })
}

/// Orbit–wedge criterion: `Aut(E)x` meets `W(h_k)` iff `x` is invertible of
/// index `2k − r`, equivalently `rank x_+ = k` and `rank x_− = r − k`. Both
/// routes are evaluated; disagreement is a numerical failure.
pub fn orbit_meets_wedge(a: &Algebra, x: &Element, k: usize, tol: f64) -> Result<bool> {
    if k > a.rank() {
        return Err(JtError::InvalidParameter(format!(
            "k = {k} out of range 0..={}",
            a.rank()
        )));
    }
    let sd = spectral_decompose(a, x, tol)?;
    let cl = crate::jalg::classification_from(a, &sd);
    let via_index = cl.invertible && cl.index == 2 * k as i64 - a.rank() as i64;
    let thresh = tol * sd.scale();
    let rank_pos = sd.values.iter().filter(|&&l| l > thresh).count();
    let rank_neg = sd.values.iter().filter(|&&l| l < -thresh).count();
    let via_rank = rank_pos == k && rank_neg == a.rank() - k;
    if via_index != via_rank {
        return Err(JtError::Numerical(format!(
            "orbit-wedge routes disagree: index test {via_index}, rank test {via_rank}"
        )));
    }
    Ok(via_index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jalg::Family;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn mink4() -> Algebra {
        Algebra::new(Family::Minkowski, 4).unwrap()
    }

    fn cfg(a: &Algebra, k: usize) -> BoostConfig {
        BoostConfig::new(a, &a.canonical_frame(), k, 1e-9).unwrap()
    }

    #[test]
    fn minkowski_boost_eigenspaces() {
        let a = mink4();
        let c = cfg(&a, 1);
        let (d1, d0, dm) = c.eigenspace_dims();
        assert_eq!((d1, d0, dm), (1, 2, 1));
        // E_{±1} = ℝ(e_0 ± e_1)
        let ep = Element::from_slice(&[1.0, 1.0, 0.0, 0.0]);
        let em = Element::from_slice(&[1.0, -1.0, 0.0, 0.0]);
        assert_abs_diff_eq!(&c.p_plus * &ep.0, ep.0, epsilon = 1e-12);
        assert_abs_diff_eq!(&c.p_minus * &em.0, em.0, epsilon = 1e-12);
        let e2 = Element::from_slice(&[0.0, 0.0, 1.0, 0.0]);
        assert_abs_diff_eq!(&c.p_zero * &e2.0, e2.0, epsilon = 1e-12);
    }

    #[test]
    fn sym3_k2_eigenspace_dims() {
        let a = Algebra::new(Family::SymReal, 3).unwrap();
        let c = cfg(&a, 2);
        assert_eq!(c.eigenspace_dims(), (3, 2, 1));
    }

    #[test]
    fn k_equals_r_gives_full_plus_space() {
        let a = Algebra::new(Family::SymReal, 3).unwrap();
        let c = cfg(&a, 3);
        let (d1, d0, dm) = c.eigenspace_dims();
        assert_eq!((d1, d0, dm), (6, 0, 0));
        // W(h_r) = C⁰
        let e = a.unit();
        assert!(c.wedge_membership(&e, 1e-9).unwrap().in_wedge);
        let x = Element::from_slice(&[2.0, -1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(!c.wedge_membership(&x, 1e-9).unwrap().in_wedge);
    }

    #[test]
    fn trace_formula_examples() {
        let sym3 = Algebra::new(Family::SymReal, 3).unwrap();
        assert_abs_diff_eq!(trace_h(&sym3, 2).unwrap(), 2.0, epsilon = 1e-10);
        let a = mink4();
        assert_abs_diff_eq!(trace_h(&a, 2).unwrap(), 4.0, epsilon = 1e-10);
        assert_abs_diff_eq!(trace_h(&a, 1).unwrap(), 0.0, epsilon = 1e-10);
    }

    #[test]
    fn flow_examples() {
        let a = mink4();
        let c = cfg(&a, 1);
        let x = Element::from_slice(&[0.5, -0.25, 1.0, 0.0]);
        // z = 0 is the identity
        let w = c.flow(Complex64::new(0.0, 0.0), &x).unwrap();
        assert_abs_diff_eq!(w.re().0, x.0, epsilon = 1e-14);
        assert!(w.im().norm() < 1e-14);

        // x = c_1 − c_2 at z = πi/2 lands at i·e
        let frame = a.canonical_frame();
        let x = frame[0].sub(&frame[1]);
        let w = c.flow(Complex64::new(0.0, PI / 2.0), &x).unwrap();
        assert!(w.re().norm() < 1e-12);
        assert_abs_diff_eq!(w.im().0, a.unit().0, epsilon = 1e-12);

        // z = πi is τ
        let y = Element::from_slice(&[0.3, 0.7, -0.2, 0.9]);
        let w = c.flow(Complex64::new(0.0, PI), &y).unwrap();
        assert_abs_diff_eq!(w.re().0, c.apply_tau(&y).unwrap().0, epsilon = 1e-12);
        assert!(w.im().norm() < 1e-12);
    }

    #[test]
    fn flow_matches_matrix_exponential() {
        let a = Algebra::new(Family::HermComplex, 2).unwrap();
        let c = cfg(&a, 1);
        let x = Element::from_slice(&[1.0, -0.5, 0.3, 0.8]);
        for z in [
            Complex64::new(0.7, 1.1),
            Complex64::new(-1.3, 2.9),
            Complex64::new(0.0, PI),
        ] {
            let w1 = c.flow(z, &x).unwrap();
            let w2 = c.flow_via_expm(z, &x).unwrap();
            for (u, v) in w1.0.iter().zip(w2.0.iter()) {
                assert!((u - v).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn tau_at_pi_i_as_matrices() {
        for a in [mink4(), Algebra::new(Family::SymReal, 3).unwrap()] {
            for k in 0..=a.rank() {
                let c = cfg(&a, k);
                let hz = crate::linalg::complexify(&c.h).map(|w| w * Complex64::new(0.0, PI));
                let e = crate::linalg::expm(&hz);
                for i in 0..a.dim() {
                    for j in 0..a.dim() {
                        assert!((e[(i, j)] - Complex64::new(c.tau[(i, j)], 0.0)).norm() < 1e-12);
                    }
                }
                // τ² = 1
                assert_abs_diff_eq!(
                    &c.tau * &c.tau,
                    DMatrix::identity(a.dim(), a.dim()),
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn tube_membership_examples() {
        let a = mink4();
        let ie = ComplexElement::from_parts(&Element::zeros(4), &a.unit());
        assert_eq!(
            tube_membership(&a, &ie, 1e-9).unwrap(),
            ConePosition::Interior
        );
        let real = Element::from_slice(&[1.0, 2.0, 3.0, 4.0]).complexify();
        assert_eq!(
            tube_membership(&a, &real, 1e-9).unwrap(),
            ConePosition::Boundary
        );
        let lightlike = ComplexElement::from_parts(
            &Element::from_slice(&[0.3, 0.0, 0.0, 0.0]),
            &Element::from_slice(&[1.0, 1.0, 0.0, 0.0]),
        );
        assert_eq!(
            tube_membership(&a, &lightlike, 1e-9).unwrap(),
            ConePosition::Boundary
        );
    }

    #[test]
    fn wedge_membership_examples() {
        let a = mink4();
        let c = cfg(&a, 1);
        // the standard right wedge contains e_1
        let x = Element::from_slice(&[0.0, 1.0, 0.0, 0.0]);
        let v = c.wedge_membership(&x, 1e-9).unwrap();
        assert!(v.in_wedge);
        // e is not in W(h_1): its E_{−1} component is c_2, on the wrong side
        let v = c.wedge_membership(&a.unit(), 1e-9).unwrap();
        assert!(!v.in_wedge);
        assert_eq!(v.plus_position, ConePosition::Interior);
        assert_eq!(v.minus_position, ConePosition::Outside);
    }

    #[test]
    fn wedge_strip_sampling_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for a in [
            mink4(),
            Algebra::new(Family::SymReal, 3).unwrap(),
            Algebra::new(Family::HermComplex, 2).unwrap(),
        ] {
            for k in 0..=a.rank() {
                let c = cfg(&a, k);
                for _ in 0..40 {
                    let x = Element(DVector::from_fn(a.dim(), |_, _| {
                        rng.sample::<f64, _>(rand_distr::StandardNormal)
                    }));
                    let direct = c.wedge_membership(&x, 1e-9).unwrap().in_wedge;
                    let sampled = c.wedge_membership_strip_sampled(&x, 1e-9).unwrap();
                    assert_eq!(direct, sampled, "{} k={k}", a.label());
                }
            }
        }
    }

    #[test]
    fn orbit_meets_wedge_examples() {
        let a = mink4();
        let x = Element::from_slice(&[0.0, 1.0, 0.0, 0.0]);
        assert!(orbit_meets_wedge(&a, &x, 1, 1e-9).unwrap());
        assert!(!orbit_meets_wedge(&a, &a.unit(), 1, 1e-9).unwrap());
        assert!(orbit_meets_wedge(&a, &a.unit(), 2, 1e-9).unwrap());
        let sym3 = Algebra::new(Family::SymReal, 3).unwrap();
        assert!(!orbit_meets_wedge(&sym3, &sym3.unit(), 1, 1e-9).unwrap());
        assert!(orbit_meets_wedge(&sym3, &sym3.unit(), 3, 1e-9).unwrap());
    }

    #[test]
    fn a3_audit_and_projection_checks_pass() {
        for a in [mink4(), Algebra::new(Family::SymReal, 3).unwrap()] {
            for k in 0..=a.rank() {
                let c = cfg(&a, k);
                let audit = c.audit_a3(100, 7, 1e-9).unwrap();
                assert_eq!(audit.flow_violations, 0, "{} k={k}", a.label());
                assert_eq!(audit.tau_violations, 0);
                assert_eq!(c.projection_cone_check(200, 8, 1e-9).unwrap(), 0);
            }
        }
    }

    #[test]
    fn flow_preserves_cone_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let a = Algebra::new(Family::SymReal, 3).unwrap();
        let c = cfg(&a, 1);
        for _ in 0..50 {
            let x = random_square(&a, &mut rng).unwrap();
            let t: f64 = rng.gen_range(-3.0..3.0);
            let y = c.flow(Complex64::new(t, 0.0), &x).unwrap().re();
            let sd = spectral_decompose(&a, &y, 1e-9).unwrap();
            let scale = sd.scale();
            for l in sd.values {
                assert!(l >= -1e-9 * scale);
            }
        }
    }
}
