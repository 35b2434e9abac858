//! Dense linear-algebra helpers shared by the algebra and modular modules.
//!
//! Everything here is small and deterministic: eigensolvers return values in
//! descending order with a fixed sign convention so that repeated runs on the
//! same input produce identical output.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Eigendecomposition of a real symmetric matrix by cyclic Jacobi sweeps.
///
/// Jacobi is deterministic and remains accurate on (nearly) degenerate
/// spectra, where shifted-QL implementations can return orthonormal vectors
/// that are not eigenvectors. Returns `(values, vectors)` with values sorted
/// descending and each eigenvector scaled so its largest-magnitude entry is
/// positive.
pub fn sym_eigen(a: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "sym_eigen wants a square matrix");
    let mut b = a.clone();
    let mut v = DMatrix::<f64>::identity(n, n);
    let scale = max_abs(a).max(1e-300);
    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(b[(p, q)].abs());
            }
        }
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = b[(p, q)];
                if apq.abs() <= 1e-18 * scale {
                    continue;
                }
                let tau = (b[(q, q)] - b[(p, p)]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // B ← GᵀBG and V ← VG for the (p,q) rotation G
                for k in 0..n {
                    let bkp = b[(k, p)];
                    let bkq = b[(k, q)];
                    b[(k, p)] = c * bkp - s * bkq;
                    b[(k, q)] = s * bkp + c * bkq;
                }
                for k in 0..n {
                    let bpk = b[(p, k)];
                    let bqk = b[(q, k)];
                    b[(p, k)] = c * bpk - s * bqk;
                    b[(q, k)] = s * bpk + c * bqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| b[(j, j)].partial_cmp(&b[(i, i)]).unwrap());
    let mut values = DVector::zeros(n);
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        values[dst] = b[(src, src)];
        let mut col = v.column(src).clone_owned();
        canonical_sign_real(&mut col);
        vectors.set_column(dst, &col);
    }
    (values, vectors)
}

fn canonical_sign_real(v: &mut DVector<f64>) {
    let mut imax = 0;
    for i in 0..v.len() {
        if v[i].abs() > v[imax].abs() {
            imax = i;
        }
    }
    if v[imax] < 0.0 {
        *v = -v.clone();
    }
}

/// Eigendecomposition of a complex hermitian matrix.
///
/// Implemented through the real 2n×2n representation
/// `[[X, -Y], [Y, X]]` of `A = X + iY`, whose spectrum is that of `A` with
/// every eigenvalue doubled. The complex eigenvectors are recovered by
/// deflating the conjugate partner `(−b; a)` of each accepted real
/// eigenvector `(a; b)`.
pub fn herm_eigen(a: &DMatrix<Complex64>) -> (DVector<f64>, DMatrix<Complex64>) {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "herm_eigen wants a square matrix");
    if n == 0 {
        return (DVector::zeros(0), DMatrix::zeros(0, 0));
    }
    let mut r = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = a[(i, j)];
            r[(i, j)] = z.re;
            r[(i + n, j + n)] = z.re;
            r[(i, j + n)] = -z.im;
            r[(i + n, j)] = z.im;
        }
    }
    let (rvals, rvecs) = sym_eigen(&r);

    // accept one complex vector per conjugate pair, deflating against the
    // span of everything already accepted; inside (near-)degenerate clusters
    // a single pass with a fixed threshold can miss a direction, so retry
    // with progressively lower thresholds before completing the basis
    let mut accepted: Vec<(f64, DVector<Complex64>)> = Vec::with_capacity(n);
    for threshold in [0.5, 0.25, 0.05, 1e-3] {
        if accepted.len() == n {
            break;
        }
        for k in 0..2 * n {
            if accepted.len() == n {
                break;
            }
            let w = rvecs.column(k);
            let mut v = DVector::<Complex64>::zeros(n);
            for i in 0..n {
                v[i] = Complex64::new(w[i], w[i + n]);
            }
            for _ in 0..2 {
                for (_, col) in &accepted {
                    let coef: Complex64 =
                        col.iter().zip(v.iter()).map(|(c, x)| c.conj() * x).sum();
                    for i in 0..n {
                        let c = col[i];
                        v[i] -= coef * c;
                    }
                }
            }
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > threshold {
                let mut v = v / Complex64::new(norm, 0.0);
                canonical_sign_complex(&mut v);
                accepted.push((rvals[k], v));
            }
        }
    }
    // any residual deficiency sits in a numerically null cluster; complete
    // with whatever is orthogonal and assign the Rayleigh quotient
    let mut probe = 0usize;
    while accepted.len() < n && probe < n {
        let mut v = DVector::<Complex64>::zeros(n);
        v[probe] = Complex64::new(1.0, 0.0);
        probe += 1;
        for _ in 0..2 {
            for (_, col) in &accepted {
                let coef: Complex64 = col.iter().zip(v.iter()).map(|(c, x)| c.conj() * x).sum();
                for i in 0..n {
                    let c = col[i];
                    v[i] -= coef * c;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            let mut v = v / Complex64::new(norm, 0.0);
            canonical_sign_complex(&mut v);
            let av = a * &v;
            let rq: Complex64 = v.iter().zip(av.iter()).map(|(x, y)| x.conj() * y).sum();
            accepted.push((rq.re, v));
        }
    }
    assert_eq!(accepted.len(), n, "failed to extract a full complex eigenbasis");
    accepted.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
    let mut values = DVector::zeros(n);
    let mut vectors = DMatrix::<Complex64>::zeros(n, n);
    for (k, (l, v)) in accepted.iter().enumerate() {
        values[k] = *l;
        vectors.set_column(k, v);
    }
    (values, vectors)
}

fn canonical_sign_complex(v: &mut DVector<Complex64>) {
    let mut imax = 0;
    for i in 0..v.len() {
        if v[i].norm_sqr() > v[imax].norm_sqr() {
            imax = i;
        }
    }
    let z = v[imax];
    if z.norm() > 0.0 {
        let phase = z / Complex64::new(z.norm(), 0.0);
        *v *= phase.conj();
    }
}

/// `exp(A)` for a complex square matrix, by scaling and squaring with a
/// Taylor series on the scaled matrix.
pub fn expm(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    let norm = a.iter().map(|z| z.norm()).fold(0.0, f64::max) * n as f64;
    let s = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let b = a.map(|z| z / Complex64::new(2f64.powi(s as i32), 0.0));
    let mut term = DMatrix::<Complex64>::identity(n, n);
    let mut sum = DMatrix::<Complex64>::identity(n, n);
    for k in 1..=24 {
        term = (&term * &b) / Complex64::new(k as f64, 0.0);
        sum += &term;
        if term.iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-18 {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// Promote a real matrix to a complex one.
pub fn complexify(a: &DMatrix<f64>) -> DMatrix<Complex64> {
    a.map(|x| Complex64::new(x, 0.0))
}

/// Hermitian adjoint.
pub fn adjoint(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a.map(|z| z.conj()).transpose()
}

/// Largest absolute entry, a cheap scale proxy.
pub fn max_abs(a: &DMatrix<f64>) -> f64 {
    a.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

/// Orthonormalize the columns of `b` over ℝ, dropping near-dependent ones.
pub fn orthonormalize_real(b: &DMatrix<f64>, tol: f64) -> DMatrix<f64> {
    let m = b.nrows();
    let mut cols: Vec<DVector<f64>> = Vec::new();
    for j in 0..b.ncols() {
        let mut v = b.column(j).clone_owned();
        for _ in 0..2 {
            for c in &cols {
                let coef = c.dot(&v);
                v -= c * coef;
            }
        }
        let norm = v.norm();
        if norm > tol {
            cols.push(v / norm);
        }
    }
    let mut out = DMatrix::zeros(m, cols.len());
    for (j, c) in cols.iter().enumerate() {
        out.set_column(j, c);
    }
    out
}
