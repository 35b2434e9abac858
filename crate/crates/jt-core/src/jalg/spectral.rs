//! Spectral decomposition, classification, and cone membership.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use super::{Algebra, Element, Family};
use crate::error::{JtError, Result};
use crate::linalg::{herm_eigen, sym_eigen};

/// Spectral data `x = Σ λ_j c̃_j` with a Jordan frame realizing the values.
#[derive(Debug, Clone)]
pub struct SpectralData {
    /// Spectral values, sorted descending.
    pub values: Vec<f64>,
    /// The Jordan frame `c̃_1, …, c̃_r`.
    pub frame: Vec<Element>,
    /// Tolerance the decomposition was validated against.
    pub tol: f64,
}

impl SpectralData {
    /// Scale used by the zero-eigenvalue test: `max(1, |λ|_max)`.
    pub fn scale(&self) -> f64 {
        self.values.iter().fold(1.0_f64, |m, &l| m.max(l.abs()))
    }

    /// Reassemble `Σ λ_j c̃_j`.
    pub fn reconstruct(&self) -> Element {
        let n = self.frame[0].len();
        let mut v = DVector::zeros(n);
        for (l, c) in self.values.iter().zip(&self.frame) {
            v += &c.0 * *l;
        }
        Element(v)
    }
}

/// Classification of an element by its spectrum.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub det: f64,
    pub trace: f64,
    pub rank: usize,
    pub index: i64,
    pub invertible: bool,
    #[serde(skip)]
    pub pos_part: Element,
    #[serde(skip)]
    pub neg_part: Element,
    /// Tolerance used for the zero test (an eigenvalue is zero iff
    /// `|λ| ≤ tol · max(1, |λ|_max)`).
    pub tol: f64,
    pub scale: f64,
}

/// Position of an element relative to the closed cone `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConePosition {
    Interior,
    Boundary,
    Outside,
}

/// Spectral decomposition of `x`, deterministic for fixed input.
pub fn spectral_decompose(a: &Algebra, x: &Element, tol: f64) -> Result<SpectralData> {
    a.check_element(x)?;
    if tol <= 0.0 {
        return Err(JtError::InvalidParameter("tolerance must be positive".into()));
    }
    let sd = match a.family() {
        Family::Minkowski => minkowski_spectral(a, x),
        Family::SymReal => sym_spectral(a, x),
        Family::HermComplex => herm_spectral(a, x),
        Family::HermQuaternion => quat_spectral(a, x)?,
        Family::Octonion => {
            return Err(JtError::Unsupported(
                "no element arithmetic for the octonion algebra".into(),
            ))
        }
    };
    validate_spectral(a, x, &sd, tol)?;
    Ok(SpectralData { tol, ..sd })
}

fn minkowski_spectral(a: &Algebra, x: &Element) -> SpectralData {
    let n = a.dim();
    let x0 = x.0[0];
    let spatial = x.0.rows(1, n - 1).clone_owned();
    let rho = spatial.norm();
    // unit direction; canonical e_1 when the spatial part vanishes
    let dir = if rho > 0.0 {
        spatial / rho
    } else {
        let mut d = DVector::zeros(n - 1);
        d[0] = 1.0;
        d
    };
    let mut c1 = DVector::zeros(n);
    let mut c2 = DVector::zeros(n);
    c1[0] = 0.5;
    c2[0] = 0.5;
    for k in 1..n {
        c1[k] = 0.5 * dir[k - 1];
        c2[k] = -0.5 * dir[k - 1];
    }
    SpectralData {
        values: vec![x0 + rho, x0 - rho],
        frame: vec![Element(c1), Element(c2)],
        tol: 0.0,
    }
}

fn sym_spectral(a: &Algebra, x: &Element) -> SpectralData {
    let m = a
        .embed_complex(&x.complexify())
        .expect("embedding exists")
        .map(|z| z.re);
    let (vals, vecs) = sym_eigen(&m);
    let mut frame = Vec::with_capacity(a.rank());
    for j in 0..a.rank() {
        let v = vecs.column(j).clone_owned();
        let p = &v * v.transpose();
        frame.push(a.project_hermitian(&p.map(|x| Complex64::new(x, 0.0))));
    }
    SpectralData {
        values: vals.iter().copied().collect(),
        frame,
        tol: 0.0,
    }
}

fn herm_spectral(a: &Algebra, x: &Element) -> SpectralData {
    let r = a.rank();
    let m = a.embed_complex(&x.complexify()).expect("embedding exists");
    let (vals, vecs) = herm_eigen(&m);
    let mut frame = Vec::with_capacity(r);
    for j in 0..r {
        let v = vecs.column(j);
        let mut p = DMatrix::zeros(r, r);
        for i in 0..r {
            for k in 0..r {
                p[(i, k)] = v[i] * v[k].conj();
            }
        }
        frame.push(a.project_hermitian(&p));
    }
    SpectralData {
        values: vals.iter().copied().collect(),
        frame,
        tol: 0.0,
    }
}

/// Quaternionic structure `J_q v = Ω v̄` on the 2r-dimensional embedding space.
fn quat_partner(v: &DVector<Complex64>) -> DVector<Complex64> {
    let n = v.len();
    let mut w = DVector::zeros(n);
    for b in 0..n / 2 {
        w[2 * b] = v[2 * b + 1].conj();
        w[2 * b + 1] = -v[2 * b].conj();
    }
    w
}

fn quat_spectral(a: &Algebra, x: &Element) -> Result<SpectralData> {
    let r = a.rank();
    let m = a.embed_complex(&x.complexify())?;
    let (vals, vecs) = herm_eigen(&m);
    // each Jordan eigenvalue shows up twice; keep one representative per
    // quaternionic line, deflating the J_q-partner of everything accepted
    let mut kept: Vec<(f64, DVector<Complex64>)> = Vec::with_capacity(r);
    let mut deflate: Vec<DVector<Complex64>> = Vec::with_capacity(2 * r);
    for k in 0..2 * r {
        if kept.len() == r {
            break;
        }
        let mut v = vecs.column(k).clone_owned();
        for d in &deflate {
            let coef: Complex64 = d.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
            for i in 0..v.len() {
                let di = d[i];
                v[i] -= coef * di;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.5 {
            let v = v / Complex64::new(norm, 0.0);
            let partner = quat_partner(&v);
            deflate.push(v.clone());
            deflate.push(partner);
            kept.push((vals[k], v));
        }
    }
    if kept.len() != r {
        return Err(JtError::Numerical(
            "failed to pair the quaternionic spectrum".into(),
        ));
    }
    let mut frame = Vec::with_capacity(r);
    let mut values = Vec::with_capacity(r);
    for (l, v) in kept {
        let partner = quat_partner(&v);
        let mut p = DMatrix::zeros(2 * r, 2 * r);
        for i in 0..2 * r {
            for j in 0..2 * r {
                p[(i, j)] = v[i] * v[j].conj() + partner[i] * partner[j].conj();
            }
        }
        frame.push(a.project_hermitian(&p));
        values.push(l);
    }
    Ok(SpectralData {
        values,
        frame,
        tol: 0.0,
    })
}

fn validate_spectral(a: &Algebra, x: &Element, sd: &SpectralData, tol: f64) -> Result<()> {
    let scale = sd.scale();
    let check = tol.max(1e-12) * 100.0 * scale.max(1.0);
    for (j, c) in sd.frame.iter().enumerate() {
        let idem = a.product(c, c)?.sub(c).norm();
        if idem > check {
            return Err(JtError::Numerical(format!(
                "frame member {j} fails idempotency: residual {idem:.3e}"
            )));
        }
        for (k, c2) in sd.frame.iter().enumerate().skip(j + 1) {
            let orth = a.product(c, c2)?.norm();
            if orth > check {
                return Err(JtError::Numerical(format!(
                    "frame members {j},{k} fail orthogonality: residual {orth:.3e}"
                )));
            }
        }
    }
    let resid = sd.reconstruct().sub(x).norm();
    if resid > check {
        return Err(JtError::Numerical(format!(
            "spectral reconstruction residual {resid:.3e} exceeds tolerance"
        )));
    }
    Ok(())
}

/// Classify `x` by determinant, trace, rank, index and signed parts.
pub fn classify(a: &Algebra, x: &Element, tol: f64) -> Result<Classification> {
    let sd = spectral_decompose(a, x, tol)?;
    Ok(classification_from(a, &sd))
}

/// Classification from existing spectral data (no second eigensolve).
pub fn classification_from(a: &Algebra, sd: &SpectralData) -> Classification {
    let tol = sd.tol;
    let scale = sd.scale();
    let thresh = tol * scale;
    let mut det = 1.0;
    let mut trace = 0.0;
    let mut rank = 0usize;
    let mut index = 0i64;
    let mut pos = Element::zeros(a.dim());
    let mut neg = Element::zeros(a.dim());
    for (l, c) in sd.values.iter().zip(&sd.frame) {
        det *= l;
        trace += l;
        if l.abs() > thresh {
            rank += 1;
            if *l > 0.0 {
                index += 1;
                pos = pos.add(&c.scaled(*l));
            } else {
                index -= 1;
                neg = neg.add(&c.scaled(-*l));
            }
        }
    }
    Classification {
        det,
        trace,
        rank,
        index,
        invertible: rank == a.rank(),
        pos_part: pos,
        neg_part: neg,
        tol,
        scale,
    }
}

/// Membership of `x` in the closed symmetric cone `C = {y² : y ∈ E}`.
///
/// Decided from the spectrum and cross-checked against positive definiteness
/// of `L(x)`; the two routes disagreeing beyond tolerance is a numerical
/// failure.
pub fn cone_position(a: &Algebra, x: &Element, tol: f64) -> Result<ConePosition> {
    let sd = spectral_decompose(a, x, tol)?;
    let thresh = tol * sd.scale();
    let min = sd.values.iter().cloned().fold(f64::INFINITY, f64::min);
    let verdict = if min > thresh {
        ConePosition::Interior
    } else if min >= -thresh {
        ConePosition::Boundary
    } else {
        ConePosition::Outside
    };
    // cross-check: C⁰ is exactly where L(x) is strictly positive
    let l = a.left_mult(x)?;
    let (lvals, _) = sym_eigen(&l);
    let lmin = lvals[lvals.len() - 1];
    let consistent = match verdict {
        ConePosition::Interior => lmin > -thresh,
        ConePosition::Outside => lmin < thresh,
        ConePosition::Boundary => lmin.abs() <= 0.75 * sd.scale(),
    };
    if !consistent {
        return Err(JtError::Numerical(format!(
            "cone verdict {verdict:?} inconsistent with min eig of L(x) = {lmin:.3e}"
        )));
    }
    Ok(verdict)
}
