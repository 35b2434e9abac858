//! Euclidean Jordan algebra arithmetic for the classical simple families.
//!
//! Supported families: `Sym_r(ℝ)`, `Herm_r(ℂ)`, `Herm_r(ℍ)` (through its
//! complex 2r×2r embedding) and the Minkowski algebras `ℝ^{1,n-1}`. Elements
//! are stored as coordinate vectors in a fixed basis chosen so that the trace
//! form is the euclidean dot product for the matrix families (off-diagonal
//! entries carry a √2) and `L(x)` is literally a symmetric matrix.

mod pierce;
mod spectral;

pub use pierce::{pierce_projections, validate_frame, PierceProjection};
pub use spectral::{classification_from, classify, cone_position, spectral_decompose, Classification, ConePosition, SpectralData};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{JtError, Result};

pub const DEFAULT_TOL: f64 = 1e-9;

/// The classical simple euclidean Jordan algebra families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    SymReal,
    HermComplex,
    HermQuaternion,
    Minkowski,
    /// `Herm_3(𝐎)`; rejected at construction, only its `(r, d)` data is used
    /// by the parity formulas elsewhere.
    Octonion,
}

impl Family {
    pub fn label(&self) -> &'static str {
        match self {
            Family::SymReal => "sym",
            Family::HermComplex => "herm",
            Family::HermQuaternion => "quat",
            Family::Minkowski => "mink",
            Family::Octonion => "octonion",
        }
    }
}

/// An element of the algebra: a coordinate vector in the declared basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Element(pub DVector<f64>);

/// An element of the complexification `E_ℂ = E + iE`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexElement(pub DVector<Complex64>);

impl Element {
    pub fn from_slice(coords: &[f64]) -> Self {
        Element(DVector::from_column_slice(coords))
    }

    pub fn zeros(n: usize) -> Self {
        Element(DVector::zeros(n))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 0
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn scaled(&self, t: f64) -> Element {
        Element(&self.0 * t)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element(&self.0 - &other.0)
    }

    pub fn complexify(&self) -> ComplexElement {
        ComplexElement(self.0.map(|x| Complex64::new(x, 0.0)))
    }
}

impl ComplexElement {
    pub fn from_parts(re: &Element, im: &Element) -> Self {
        assert_eq!(re.len(), im.len());
        let mut v = DVector::zeros(re.len());
        for i in 0..re.len() {
            v[i] = Complex64::new(re.0[i], im.0[i]);
        }
        ComplexElement(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 0
    }

    pub fn re(&self) -> Element {
        Element(self.0.map(|z| z.re))
    }

    pub fn im(&self) -> Element {
        Element(self.0.map(|z| z.im))
    }
}

/// Descriptor of a simple euclidean Jordan algebra plus its coordinate basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Algebra {
    family: Family,
    rank: usize,
    pierce_dim: usize,
    dim: usize,
}

impl Algebra {
    /// Construct an algebra descriptor.
    ///
    /// `size` is the rank for the matrix families and the ambient dimension
    /// `n` for Minkowski space (so `mink:4` is `ℝ^{1,3}`).
    pub fn new(family: Family, size: usize) -> Result<Algebra> {
        match family {
            Family::Octonion => Err(JtError::Unsupported(
                "exceptional algebra Herm_3(O) has no associative matrix model; \
                 use the formula-only parity interface instead"
                    .into(),
            )),
            Family::Minkowski => {
                if size < 3 {
                    return Err(JtError::InvalidParameter(format!(
                        "Minkowski algebra needs ambient dimension n >= 3 \
                         (n = 2 gives the non-simple algebra R^(1,1)); got n = {size}"
                    )));
                }
                Ok(Algebra {
                    family,
                    rank: 2,
                    pierce_dim: size - 2,
                    dim: size,
                })
            }
            _ => {
                if size < 1 {
                    return Err(JtError::InvalidParameter(format!(
                        "matrix algebra needs rank >= 1, got {size}"
                    )));
                }
                let r = size;
                let d = match family {
                    Family::SymReal => 1,
                    Family::HermComplex => 2,
                    Family::HermQuaternion => 4,
                    _ => unreachable!(),
                };
                let dim = r + r * (r - 1) / 2 * d;
                Ok(Algebra {
                    family,
                    rank: r,
                    pierce_dim: d,
                    dim,
                })
            }
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn pierce_dim(&self) -> usize {
        self.pierce_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Display label like `sym:3` or `mink:4`.
    pub fn label(&self) -> String {
        match self.family {
            Family::Minkowski => format!("mink:{}", self.dim),
            f => format!("{}:{}", f.label(), self.rank),
        }
    }

    pub fn check_element(&self, x: &Element) -> Result<()> {
        if x.len() != self.dim {
            return Err(JtError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(())
    }

    pub fn check_complex_element(&self, z: &ComplexElement) -> Result<()> {
        if z.len() != self.dim {
            return Err(JtError::DimensionMismatch {
                expected: self.dim,
                got: z.len(),
            });
        }
        Ok(())
    }

    /// The unit element `e`.
    pub fn unit(&self) -> Element {
        let mut v = DVector::zeros(self.dim);
        match self.family {
            Family::Minkowski => v[0] = 1.0,
            _ => {
                for j in 0..self.rank {
                    v[j] = 1.0;
                }
            }
        }
        Element(v)
    }

    /// The canonical Jordan frame: `c_j = E_jj` for the matrix families and
    /// `c_{1,2} = (1, ±1, 0, …)/2` for Minkowski space.
    pub fn canonical_frame(&self) -> Vec<Element> {
        match self.family {
            Family::Minkowski => {
                let mut c1 = DVector::zeros(self.dim);
                let mut c2 = DVector::zeros(self.dim);
                c1[0] = 0.5;
                c1[1] = 0.5;
                c2[0] = 0.5;
                c2[1] = -0.5;
                vec![Element(c1), Element(c2)]
            }
            _ => (0..self.rank)
                .map(|j| {
                    let mut v = DVector::zeros(self.dim);
                    v[j] = 1.0;
                    Element(v)
                })
                .collect(),
        }
    }

    /// Jordan product `x ∘ y`.
    pub fn product(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        match self.family {
            Family::Minkowski => {
                let n = self.dim;
                let mut out = DVector::zeros(n);
                let (x0, y0) = (x.0[0], y.0[0]);
                let mut dot = x0 * y0;
                for k in 1..n {
                    dot += x.0[k] * y.0[k];
                    out[k] = x0 * y.0[k] + y0 * x.0[k];
                }
                out[0] = dot;
                Ok(Element(out))
            }
            _ => {
                let a = self.embed_complex(&x.complexify())?;
                let b = self.embed_complex(&y.complexify())?;
                let m = (&a * &b + &b * &a) * Complex64::new(0.5, 0.0);
                Ok(self.project_hermitian(&m))
            }
        }
    }

    /// The multiplication operator `L(x)` as an `n×n` real matrix.
    pub fn left_mult(&self, x: &Element) -> Result<DMatrix<f64>> {
        self.check_element(x)?;
        let n = self.dim;
        let mut l = DMatrix::zeros(n, n);
        for j in 0..n {
            let mut basis = DVector::zeros(n);
            basis[j] = 1.0;
            let col = self.product(x, &Element(basis))?;
            l.set_column(j, &col.0);
        }
        Ok(l)
    }

    /// The quadratic representation `P(x) = 2 L(x)² − L(x²)`.
    pub fn quad_rep(&self, x: &Element) -> Result<DMatrix<f64>> {
        let l = self.left_mult(x)?;
        let lsq = self.left_mult(&self.product(x, x)?)?;
        Ok(&l * &l * 2.0 - lsq)
    }

    /// The trace form `(x, y) = tr(x ∘ y)`.
    pub fn trace_form(&self, x: &Element, y: &Element) -> Result<f64> {
        self.check_element(x)?;
        self.check_element(y)?;
        let dot = x.0.dot(&y.0);
        Ok(match self.family {
            Family::Minkowski => 2.0 * dot,
            _ => dot,
        })
    }

    /// The Jordan trace `tr(x) = Σ λ_j`.
    pub fn jordan_trace(&self, x: &Element) -> Result<f64> {
        self.trace_form(x, &self.unit())
    }

    /// Holomorphic determinant data at `z ∈ E_ℂ`.
    ///
    /// Returns `(value, multiplicity)` with `value = Δ(z)^multiplicity`; the
    /// quaternionic family reports the determinant of its complex embedding,
    /// which is the square of the Jordan determinant.
    pub fn det_data(&self, z: &ComplexElement) -> Result<(Complex64, u32)> {
        self.check_complex_element(z)?;
        match self.family {
            Family::Minkowski => {
                let mut q = z.0[0] * z.0[0];
                for k in 1..self.dim {
                    q -= z.0[k] * z.0[k];
                }
                Ok((q, 1))
            }
            Family::HermQuaternion => {
                let m = self.embed_complex(z)?;
                Ok((m.lu().determinant(), 2))
            }
            _ => {
                let m = self.embed_complex(z)?;
                Ok((m.lu().determinant(), 1))
            }
        }
    }

    /// Jordan determinant of a real element, `Δ(x) = Π λ_j`.
    pub fn det(&self, x: &Element) -> Result<f64> {
        let (v, mult) = self.det_data(&x.complexify())?;
        Ok(match mult {
            1 => v.re,
            2 => {
                // value = Δ(x)²; the sign of Δ is (−1)^{#negative eigenvalues},
                // recovered from the spectrum
                let sd = spectral_decompose(self, x, DEFAULT_TOL)?;
                let sign = sd
                    .values
                    .iter()
                    .map(|&l| if l < 0.0 { -1.0 } else { 1.0 })
                    .product::<f64>();
                sign * v.re.abs().sqrt()
            }
            _ => unreachable!(),
        })
    }

    /// Size of the matrix embedding (`r`, `2r`, or 0 for Minkowski).
    pub fn embed_size(&self) -> usize {
        match self.family {
            Family::SymReal | Family::HermComplex => self.rank,
            Family::HermQuaternion => 2 * self.rank,
            _ => 0,
        }
    }

    /// Complex-linear matrix embedding `Σ z_k B_k` of the coordinates,
    /// used for products, determinants, and spectral work.
    pub fn embed_complex(&self, z: &ComplexElement) -> Result<DMatrix<Complex64>> {
        self.check_complex_element(z)?;
        let s2 = std::f64::consts::SQRT_2.recip();
        match self.family {
            Family::SymReal => {
                let r = self.rank;
                let mut m = DMatrix::zeros(r, r);
                for j in 0..r {
                    m[(j, j)] = z.0[j];
                }
                let mut k = r;
                for i in 0..r {
                    for j in (i + 1)..r {
                        let v = z.0[k] * s2;
                        m[(i, j)] = v;
                        m[(j, i)] = v;
                        k += 1;
                    }
                }
                Ok(m)
            }
            Family::HermComplex => {
                let r = self.rank;
                let mut m = DMatrix::zeros(r, r);
                for j in 0..r {
                    m[(j, j)] = z.0[j];
                }
                let mut k = r;
                let i_unit = Complex64::i();
                for i in 0..r {
                    for j in (i + 1)..r {
                        let re = z.0[k] * s2;
                        let im = z.0[k + 1] * s2;
                        m[(i, j)] = re + i_unit * im;
                        m[(j, i)] = re - i_unit * im;
                        k += 2;
                    }
                }
                Ok(m)
            }
            Family::HermQuaternion => {
                let r = self.rank;
                let mut m = DMatrix::zeros(2 * r, 2 * r);
                for j in 0..r {
                    m[(2 * j, 2 * j)] = z.0[j];
                    m[(2 * j + 1, 2 * j + 1)] = z.0[j];
                }
                let mut k = r;
                let iu = Complex64::i();
                for i in 0..r {
                    for j in (i + 1)..r {
                        // quaternion q = a + bi + cj + dk as the 2×2 block
                        // [[a+bi, c+di], [−c+di, a−bi]]
                        let (a, b, c, d) =
                            (z.0[k] * s2, z.0[k + 1] * s2, z.0[k + 2] * s2, z.0[k + 3] * s2);
                        m[(2 * i, 2 * j)] = a + iu * b;
                        m[(2 * i, 2 * j + 1)] = c + iu * d;
                        m[(2 * i + 1, 2 * j)] = -c + iu * d;
                        m[(2 * i + 1, 2 * j + 1)] = a - iu * b;
                        // the block below the diagonal is the conjugate
                        // transpose for real coordinates, extended
                        // complex-linearly so the embedding stays holomorphic
                        m[(2 * j, 2 * i)] = a - iu * b;
                        m[(2 * j, 2 * i + 1)] = -c - iu * d;
                        m[(2 * j + 1, 2 * i)] = c - iu * d;
                        m[(2 * j + 1, 2 * i + 1)] = a + iu * b;
                        k += 4;
                    }
                }
                Ok(m)
            }
            _ => Err(JtError::Unsupported(format!(
                "no matrix embedding for {:?}",
                self.family
            ))),
        }
    }

    /// Pull a hermitian matrix in the embedding image back to coordinates.
    pub fn project_hermitian(&self, m: &DMatrix<Complex64>) -> Element {
        let s2 = std::f64::consts::SQRT_2;
        let mut coords = DVector::zeros(self.dim);
        match self.family {
            Family::SymReal | Family::HermComplex => {
                let r = self.rank;
                for j in 0..r {
                    coords[j] = m[(j, j)].re;
                }
                let mut k = r;
                for i in 0..r {
                    for j in (i + 1)..r {
                        let sym = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
                        coords[k] = sym.re * s2;
                        if self.family == Family::HermComplex {
                            coords[k + 1] = sym.im * s2;
                            k += 2;
                        } else {
                            k += 1;
                        }
                    }
                }
            }
            Family::HermQuaternion => {
                let r = self.rank;
                for j in 0..r {
                    coords[j] = (m[(2 * j, 2 * j)].re + m[(2 * j + 1, 2 * j + 1)].re) * 0.5;
                }
                let mut k = r;
                for i in 0..r {
                    for j in (i + 1)..r {
                        let q00 = (m[(2 * i, 2 * j)] + m[(2 * j, 2 * i)].conj()) * 0.5;
                        let q01 = (m[(2 * i, 2 * j + 1)] + m[(2 * j + 1, 2 * i)].conj()) * 0.5;
                        let q10 = (m[(2 * i + 1, 2 * j)] + m[(2 * j, 2 * i + 1)].conj()) * 0.5;
                        let q11 =
                            (m[(2 * i + 1, 2 * j + 1)] + m[(2 * j + 1, 2 * i + 1)].conj()) * 0.5;
                        // invert the block parametrization
                        let a = (q00.re + q11.re) * 0.5;
                        let b = (q00.im - q11.im) * 0.5;
                        let c = (q01.re - q10.re) * 0.5;
                        let d = (q01.im + q10.im) * 0.5;
                        coords[k] = a * s2;
                        coords[k + 1] = b * s2;
                        coords[k + 2] = c * s2;
                        coords[k + 3] = d * s2;
                        k += 4;
                    }
                }
            }
            _ => unreachable!("project_hermitian is for matrix families"),
        }
        Element(coords)
    }

    /// Apply a permutation automorphism of the canonical frame.
    ///
    /// For the matrix families this is simultaneous row/column permutation;
    /// for Minkowski the transposition `c_1 ↔ c_2` is the reflection
    /// `x_1 ↦ −x_1`.
    pub fn frame_permutation(&self, x: &Element, perm: &[usize]) -> Result<Element> {
        self.check_element(x)?;
        if perm.len() != self.rank {
            return Err(JtError::InvalidParameter(
                "permutation length must equal the rank".into(),
            ));
        }
        match self.family {
            Family::Minkowski => {
                let mut v = x.0.clone();
                if perm[0] == 1 {
                    v[1] = -v[1];
                }
                Ok(Element(v))
            }
            _ => {
                let m = self.embed_complex(&x.complexify())?;
                let block = if self.family == Family::HermQuaternion { 2 } else { 1 };
                let sz = self.embed_size();
                let mut p = DMatrix::<Complex64>::zeros(sz, sz);
                for (i, &pi) in perm.iter().enumerate() {
                    for b in 0..block {
                        p[(block * pi + b, block * i + b)] = Complex64::new(1.0, 0.0);
                    }
                }
                let permuted = &p * m * p.transpose();
                Ok(self.project_hermitian(&permuted))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    pub fn random_element(a: &Algebra, rng: &mut impl Rng) -> Element {
        Element(DVector::from_fn(a.dim(), |_, _| {
            rng.sample::<f64, _>(rand_distr::StandardNormal)
        }))
    }

    fn all_families(max_rank: usize) -> Vec<Algebra> {
        let mut out = Vec::new();
        for r in 1..=max_rank {
            out.push(Algebra::new(Family::SymReal, r).unwrap());
            out.push(Algebra::new(Family::HermComplex, r).unwrap());
            out.push(Algebra::new(Family::HermQuaternion, r).unwrap());
        }
        for n in [3, 4, 5] {
            out.push(Algebra::new(Family::Minkowski, n).unwrap());
        }
        out
    }

    #[test]
    fn constructor_examples() {
        let a = Algebra::new(Family::SymReal, 3).unwrap();
        assert_eq!((a.dim(), a.pierce_dim()), (6, 1));
        let a = Algebra::new(Family::Minkowski, 4).unwrap();
        assert_eq!((a.rank(), a.dim(), a.pierce_dim()), (2, 4, 2));
        let a = Algebra::new(Family::HermComplex, 2).unwrap();
        assert_eq!((a.dim(), a.pierce_dim()), (4, 2));
        let a = Algebra::new(Family::HermQuaternion, 3).unwrap();
        assert_eq!(a.dim(), 3 + 3 * 4);
    }

    #[test]
    fn octonion_and_degenerate_minkowski_rejected() {
        assert!(matches!(
            Algebra::new(Family::Octonion, 3),
            Err(JtError::Unsupported(_))
        ));
        assert!(Algebra::new(Family::Minkowski, 2).is_err());
        assert!(Algebra::new(Family::SymReal, 0).is_err());
    }

    #[test]
    fn minkowski_product_examples() {
        let a = Algebra::new(Family::Minkowski, 4).unwrap();
        let e = a.unit();
        let x = Element::from_slice(&[0.3, -1.0, 2.0, 0.5]);
        assert_abs_diff_eq!(a.product(&e, &x).unwrap().0, x.0, epsilon = 1e-15);
        let v = Element::from_slice(&[0.0, 1.0, 0.0, 0.0]);
        assert_abs_diff_eq!(a.product(&v, &v).unwrap().0, e.0, epsilon = 1e-15);
    }

    #[test]
    fn canonical_frame_is_orthogonal_idempotents() {
        for a in all_families(4) {
            let frame = a.canonical_frame();
            let e = a.unit();
            let mut sum = Element::zeros(a.dim());
            for (i, c) in frame.iter().enumerate() {
                let csq = a.product(c, c).unwrap();
                assert_abs_diff_eq!(csq.0, c.0, epsilon = 1e-14);
                sum = sum.add(c);
                for c2 in frame.iter().skip(i + 1) {
                    assert!(a.product(c, c2).unwrap().norm() < 1e-14);
                }
            }
            assert_abs_diff_eq!(sum.0, e.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn left_mult_of_unit_is_identity() {
        for a in all_families(3) {
            let l = a.left_mult(&a.unit()).unwrap();
            assert_abs_diff_eq!(l, DMatrix::identity(a.dim(), a.dim()), epsilon = 1e-13);
            let p = a.quad_rep(&a.unit()).unwrap();
            assert_abs_diff_eq!(p, DMatrix::identity(a.dim(), a.dim()), epsilon = 1e-13);
        }
    }

    #[test]
    fn minkowski_l_of_frame_eigenvalues() {
        // eigenvalues of L(c_1) are 1, 0 and 1/2 with multiplicities 1, 1, d
        let a = Algebra::new(Family::Minkowski, 4).unwrap();
        let c1 = &a.canonical_frame()[0];
        let l = a.left_mult(c1).unwrap();
        let (vals, _) = crate::linalg::sym_eigen(&l);
        let mut v: Vec<f64> = vals.iter().copied().collect();
        v.sort_by(|x, y| y.partial_cmp(x).unwrap());
        assert_abs_diff_eq!(v[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[1], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(v[2], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(v[3], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn power_associativity_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for a in all_families(4) {
            for _ in 0..20 {
                let x = random_element(&a, &mut rng);
                let y = random_element(&a, &mut rng);
                let scale = x.norm().max(1.0).powi(3) * y.norm().max(1.0);
                let xsq = a.product(&x, &x).unwrap();
                let lhs = a.product(&x, &a.product(&xsq, &y).unwrap()).unwrap();
                let rhs = a.product(&xsq, &a.product(&x, &y).unwrap()).unwrap();
                assert!(lhs.sub(&rhs).norm() <= 1e-10 * scale);
            }
        }
    }

    #[test]
    fn trace_form_is_associative_and_l_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for a in all_families(4) {
            for _ in 0..10 {
                let x = random_element(&a, &mut rng);
                let y = random_element(&a, &mut rng);
                let z = random_element(&a, &mut rng);
                let lhs = a.trace_form(&a.product(&x, &y).unwrap(), &z).unwrap();
                let rhs = a.trace_form(&y, &a.product(&x, &z).unwrap()).unwrap();
                let scale = x.norm() * y.norm() * z.norm() + 1.0;
                assert!((lhs - rhs).abs() <= 1e-10 * scale);
                let l = a.left_mult(&x).unwrap();
                assert!((&l - l.transpose()).norm() <= 1e-10 * (x.norm() + 1.0));
            }
        }
    }

    #[test]
    fn embedding_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for a in all_families(4) {
            if a.family() == Family::Minkowski {
                continue;
            }
            for _ in 0..5 {
                let x = random_element(&a, &mut rng);
                let m = a.embed_complex(&x.complexify()).unwrap();
                let back = a.project_hermitian(&m);
                assert_abs_diff_eq!(back.0, x.0, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn frame_permutation_preserves_product_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for a in all_families(3) {
            let r = a.rank();
            let mut perm: Vec<usize> = (0..r).collect();
            perm.reverse();
            let x = random_element(&a, &mut rng);
            let y = random_element(&a, &mut rng);
            // automorphism property: σ(x∘y) = σ(x)∘σ(y)
            let lhs = a
                .frame_permutation(&a.product(&x, &y).unwrap(), &perm)
                .unwrap();
            let rhs = a
                .product(
                    &a.frame_permutation(&x, &perm).unwrap(),
                    &a.frame_permutation(&y, &perm).unwrap(),
                )
                .unwrap();
            assert!(lhs.sub(&rhs).norm() < 1e-12 * (1.0 + x.norm() * y.norm()));
        }
    }

    #[test]
    fn minkowski_det_is_lorentz_form() {
        let a = Algebra::new(Family::Minkowski, 4).unwrap();
        let x = Element::from_slice(&[3.0, 1.0, 2.0, 0.0]);
        assert_abs_diff_eq!(a.det(&x).unwrap(), 9.0 - 5.0, epsilon = 1e-12);
    }
}
