//! Smooth compactly supported test functions and the quadrature routines
//! used to pair them with distributions.
//!
//! Test functions are monomial multiples of the standard bump
//! `exp(−1/(1−t²))` rescaled to a stated support. They are evaluated
//! analytically wherever a quadrature rule needs them, and their Taylor
//! coefficients at the origin are available in closed form for the
//! δ-coefficient fits.

use num_complex::Complex64;

/// 16-point Gauss–Legendre rule on [−1, 1].
const GL_X: [f64; 8] = [
    0.095012509837637440185,
    0.281603550779258913230,
    0.458016777657227386342,
    0.617876244402643748447,
    0.755404408355003033895,
    0.865631202387831743880,
    0.944575023073232576078,
    0.989400934991649932596,
];
const GL_W: [f64; 8] = [
    0.189450610455068496285,
    0.182603415044923588867,
    0.169156519395002538189,
    0.149595988816576732081,
    0.124628971255533872052,
    0.095158511682492784810,
    0.062253523938647892863,
    0.027152459411754094852,
];

/// Integrate `f` over `[a, b]` with `panels` composite 16-point GL panels.
pub fn gl_integrate<F>(mut f: F, a: f64, b: f64, panels: usize) -> Complex64
where
    F: FnMut(f64) -> Complex64,
{
    let panels = panels.max(1);
    let h = (b - a) / panels as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * h;
        let half = 0.5 * h;
        for k in 0..8 {
            let dx = half * GL_X[k];
            sum += (f(mid + dx) + f(mid - dx)) * (GL_W[k] * half);
        }
    }
    sum
}

/// Real-valued wrapper around [`gl_integrate`].
pub fn gl_integrate_real<F>(mut f: F, a: f64, b: f64, panels: usize) -> f64
where
    F: FnMut(f64) -> f64,
{
    gl_integrate(|x| Complex64::new(f(x), 0.0), a, b, panels).re
}

/// Γ(s) for s > 0.
pub fn gamma(s: f64) -> f64 {
    libm::tgamma(s)
}

/// A test function `amp · x^m · exp(−1/(1−t²))`, `t = (2x−a−b)/(b−a)`,
/// supported on the open interval `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestFn {
    pub a: f64,
    pub b: f64,
    pub poly_m: u32,
    pub amp: f64,
}

impl TestFn {
    pub fn bump(a: f64, b: f64) -> TestFn {
        assert!(b > a, "support must be a nonempty interval");
        TestFn {
            a,
            b,
            poly_m: 0,
            amp: 1.0,
        }
    }

    /// `x^m` times a bump, used by the δ-coefficient fits.
    pub fn poly_bump(m: u32, a: f64, b: f64) -> TestFn {
        TestFn {
            poly_m: m,
            ..TestFn::bump(a, b)
        }
    }

    pub fn support(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let t = (2.0 * x - self.a - self.b) / (self.b - self.a);
        if t <= -1.0 || t >= 1.0 {
            return 0.0;
        }
        let core = (-1.0 / (1.0 - t * t)).exp();
        self.amp * x.powi(self.poly_m as i32) * core
    }

    /// Uniform samples over the support, endpoints included.
    pub fn samples(&self, n: usize) -> Vec<(f64, f64)> {
        (0..n)
            .map(|k| {
                let x = self.a + (self.b - self.a) * k as f64 / (n - 1) as f64;
                (x, self.eval(x))
            })
            .collect()
    }

    pub fn l1_norm(&self) -> f64 {
        gl_integrate_real(|x| self.eval(x).abs(), self.a, self.b, 64)
    }

    /// `‖φ^{(k)}‖_1`, from central finite differences. Only a bound-quality
    /// estimate is needed; the step shrinks with the order just enough to
    /// keep rounding noise below the truncation error.
    pub fn deriv_l1(&self, k: usize) -> f64 {
        let n: usize = (4096usize >> k).max(192);
        let h = (self.b - self.a) / n as f64;
        let mut sum = 0.0;
        for j in 0..=n {
            let x = self.a + j as f64 * h;
            sum += self.deriv_fd(x, k, h).abs() * h;
        }
        sum
    }

    /// Truncation point `Λ` such that
    /// `∫_Λ^∞ |φ̃(λ)| λ^{s−1} dλ / Γ(s) ≤ tol`, using the decay bounds
    /// `|φ̃(λ)| ≤ ‖φ^{(2k)}‖_1 / λ^{2k}` over a range of orders and keeping
    /// the best.
    pub fn fourier_tail_cutoff(&self, s: f64, tol: f64) -> f64 {
        let g = gamma(s);
        let mut best = f64::INFINITY;
        for k in 1..=6usize {
            // tail ≤ d_{2k} Λ^{−p} / (p Γ(s)) with p = 2k − s
            let p = 2.0 * k as f64 - s;
            if p < 0.5 {
                continue;
            }
            let d = self.deriv_l1(2 * k);
            let lam = (d / (p * g * tol)).powf(1.0 / p);
            best = best.min(lam);
        }
        best.max(8.0)
    }

    /// Truncation point for a product integral
    /// `∫_Λ^∞ |f̃(λ) g̃(λ)| λ^{s−1} dλ / Γ(s) ≤ tol`, combining decay bounds
    /// of both factors.
    pub fn product_tail_cutoff(f: &TestFn, g: &TestFn, s: f64, tol: f64) -> f64 {
        let gam = gamma(s);
        let df: Vec<f64> = (1..=6).map(|k| f.deriv_l1(2 * k)).collect();
        let dg: Vec<f64> = (1..=6).map(|k| g.deriv_l1(2 * k)).collect();
        let mut best = f64::INFINITY;
        for (j, dfj) in df.iter().enumerate() {
            for (k, dgk) in dg.iter().enumerate() {
                let p = 2.0 * (j + k + 2) as f64 - s;
                if p < 0.5 {
                    continue;
                }
                let lam = (dfj * dgk / (p * gam * tol)).powf(1.0 / p);
                best = best.min(lam);
            }
        }
        best.max(8.0)
    }

    fn deriv_fd(&self, x: f64, k: usize, h: f64) -> f64 {
        if k == 0 {
            return self.eval(x);
        }
        (self.deriv_fd(x + 0.5 * h, k - 1, h) - self.deriv_fd(x - 0.5 * h, k - 1, h)) / h
    }

    /// Exact `φ^{(q)}(0)` for a support symmetric around the origin.
    pub fn deriv_at_zero(&self, q: usize) -> f64 {
        assert!(
            (self.a + self.b).abs() < 1e-12 * (self.b - self.a),
            "closed-form Taylor data needs a symmetric support"
        );
        let m = self.poly_m as usize;
        if q < m {
            return 0.0;
        }
        let j = q - m;
        let h = 0.5 * (self.b - self.a);
        let coeffs = bump_taylor(j + 1);
        let mut fact = 1.0;
        for i in 1..=q {
            fact *= i as f64;
        }
        self.amp * fact * coeffs[j] / h.powi(j as i32)
    }
}

/// Taylor coefficients at 0 of `exp(−1/(1−t²))` on (−1, 1).
///
/// With `g(t) = −1/(1−t²) = −Σ t^{2j}` (constant term −1), the coefficients
/// of `exp(g)` follow the series recurrence `n f_n = Σ_k k g_k f_{n−k}`.
fn bump_taylor(len: usize) -> Vec<f64> {
    let n = len.max(1);
    let mut g = vec![0.0; n];
    for (j, gj) in g.iter_mut().enumerate() {
        if j % 2 == 0 {
            *gj = -1.0;
        }
    }
    let mut f = vec![0.0; n];
    f[0] = (-1.0f64).exp();
    for i in 1..n {
        let mut acc = 0.0;
        for k in 1..=i {
            acc += k as f64 * g[k] * f[i - k];
        }
        f[i] = acc / i as f64;
    }
    f
}

/// `φ̃(c) = ∫ e^{icx} φ(x) dx` for complex frequency `c`, by panel GL with
/// the panel count tied to the total phase variation over the support.
pub fn fourier(phi: &TestFn, c: Complex64) -> Complex64 {
    let (a, b) = phi.support();
    let panels = ((c.norm() * (b - a) / 4.0).ceil() as usize).max(8) + 8;
    gl_integrate(
        |x| {
            let v = phi.eval(x);
            if v == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                (Complex64::i() * c * x).exp() * v
            }
        },
        a,
        b,
        panels,
    )
}

/// `∫ φ(x) (−i(x+iε))^{−s} dx` for ε > 0.
///
/// The substitution `x = ε sinh u` flattens the ε-scale peak at the origin:
/// `−i(x+iε) = ε(1 − i sinh u)` stays in the right half plane, so the
/// principal power applies throughout.
pub fn eps_boundary_pairing(phi: &TestFn, s: f64, eps: f64) -> Complex64 {
    let (a, b) = phi.support();
    let r = a.abs().max(b.abs());
    let u_max = (r / eps).asinh();
    let panels = (2.5 * u_max).ceil() as usize + 8;
    gl_integrate(
        |u| {
            let sh = u.sinh();
            let x = eps * sh;
            let v = phi.eval(x);
            if v == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let base = Complex64::new(1.0, -sh);
            let w = base.powf(-s) * eps.powf(-s);
            w * (v * eps * u.cosh())
        },
        -u_max,
        u_max,
        panels,
    )
}

/// Polynomial (Neville) extrapolation of `(h_i, y_i)` to `h → 0`.
pub fn neville_extrapolate(hs: &[f64], ys: &[Complex64]) -> Complex64 {
    assert_eq!(hs.len(), ys.len());
    let n = hs.len();
    let mut tab: Vec<Complex64> = ys.to_vec();
    for level in 1..n {
        for i in 0..n - level {
            let num = tab[i + 1] * hs[i] - tab[i] * hs[i + level];
            tab[i] = num / (hs[i] - hs[i + level]);
        }
    }
    tab[0]
}
