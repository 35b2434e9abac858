//! The three standard subspaces of the multiplier space: `V_K` from the
//! skew part of `Λ`, and its twists `V_K^♯ = e^{−πiΛ_+/2} V_K`,
//! `V_K^♭ = e^{πiΛ_+/2} V_K'`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::antilinear::Antilinear;
use super::pair::{symplectic_complement, StandardSubspace};
use crate::error::{JtError, Result};
use crate::linalg::{adjoint, expm};

/// The twisted triple built from a normal operator `Λ = Λ_+ + Λ_−` and a
/// commuting conjugation `J_K`.
#[derive(Debug, Clone)]
pub struct TwistedTriple {
    pub lambda: DMatrix<Complex64>,
    pub lambda_plus: DMatrix<Complex64>,
    pub lambda_minus: DMatrix<Complex64>,
    pub j: Antilinear,
    pub delta: DMatrix<Complex64>,
    pub v: StandardSubspace,
    pub v_sharp: StandardSubspace,
    pub v_flat: StandardSubspace,
    /// Whether `V^♯ = V^♭` (decided by subspace distance).
    pub sharp_equals_flat: bool,
    /// Largest defect among the Tomita-operator identities.
    pub identity_defect: f64,
}

/// `V^♯ = V^♭` iff `e^{2πiΛ} = 1`, i.e. `Λ = Λ_+` with integer spectrum.
pub fn sharp_flat_criterion(lambda: &DMatrix<Complex64>) -> bool {
    let n = lambda.nrows();
    let e = expm(&lambda.map(|z| z * Complex64::new(0.0, 2.0 * std::f64::consts::PI)));
    (e - DMatrix::<Complex64>::identity(n, n)).norm() < 1e-9 * n as f64
}

pub fn twisted_subspaces(lambda: &DMatrix<Complex64>, j: &Antilinear) -> Result<TwistedTriple> {
    let n = lambda.nrows();
    if lambda.ncols() != n || j.dim() != n {
        return Err(JtError::Validation("Λ and J_K dimensions differ".into()));
    }
    let lambda_plus = (lambda + adjoint(lambda)) * Complex64::new(0.5, 0.0);
    let lambda_minus = (lambda - adjoint(lambda)) * Complex64::new(0.5, 0.0);
    let comm = (&lambda_plus * &lambda_minus - &lambda_minus * &lambda_plus).norm();
    if comm > 1e-10 * (1.0 + lambda.norm()) {
        return Err(JtError::Validation(format!(
            "Λ is not normal: [Λ_+, Λ_−] has norm {comm:.3e}"
        )));
    }
    // the conjugation must commute with both parts: J∘Λ_± = Λ_±∘J, i.e.
    // m_J conj(Λ_±) = Λ_± m_J
    for (name, part) in [("Λ_+", &lambda_plus), ("Λ_−", &lambda_minus)] {
        let defect = (&j.m * part.map(|z| z.conj()) - part * &j.m).norm();
        if defect > 1e-10 * (1.0 + part.norm()) {
            return Err(JtError::Validation(format!(
                "J_K fails to commute with {name}: defect {defect:.3e}"
            )));
        }
    }

    let pi = std::f64::consts::PI;
    let phase = |m: &DMatrix<Complex64>, t: f64| expm(&m.map(|z| z * Complex64::new(0.0, t)));
    let delta = phase(&lambda_minus, 2.0 * pi);
    // T_K = J e^{πiΛ_−} = J Δ^{1/2}
    let t_k = j.post_compose_linear(&phase(&lambda_minus, pi));
    let invol = t_k.involution_defect();
    if invol > 1e-9 * n as f64 {
        return Err(JtError::Validation(format!(
            "T_K is not an involution (defect {invol:.3e})"
        )));
    }
    let rt = super::antilinear::realify_antilinear(&t_k);
    let p = (DMatrix::identity(2 * n, 2 * n) + rt) * 0.5;
    let v = StandardSubspace::from_real_span(n, &p)?;
    let v_prime = symplectic_complement(&v);

    let v_sharp = v.apply_linear(&phase(&lambda_plus, -pi / 2.0));
    let v_flat = v_prime.apply_linear(&phase(&lambda_plus, pi / 2.0));

    // Tomita-operator identities
    let mut defect: f64 = 0.0;
    // T^♯ = e^{−πiΛ_+/2} T_K e^{πiΛ_+/2} = T_K e^{πiΛ_+} = J e^{πiΛ} = e^{−πiΛ} J
    let t_sharp = t_k
        .post_compose_linear(&phase(&lambda_plus, pi / 2.0))
        .pre_compose_linear(&phase(&lambda_plus, -pi / 2.0));
    let alt1 = t_k.post_compose_linear(&phase(&lambda_plus, pi));
    let alt2 = j.post_compose_linear(&phase(lambda, pi));
    let alt3 = j.pre_compose_linear(&phase(lambda, -pi));
    defect = defect.max((&t_sharp.m - &alt1.m).norm());
    defect = defect.max((&t_sharp.m - &alt2.m).norm());
    defect = defect.max((&t_sharp.m - &alt3.m).norm());
    // T^♭ = J e^{−πiΛ} = e^{πiΛ} J
    let t_flat = j.post_compose_linear(&phase(lambda, -pi));
    let alt4 = j.pre_compose_linear(&phase(lambda, pi));
    defect = defect.max((&t_flat.m - &alt4.m).norm());
    // J V^♯ = V^♭
    defect = defect.max(v_sharp.apply_antilinear(j).subspace_distance(&v_flat));
    // (V^♯)' = e^{−iπΛ_+} V^♭
    let lhs = symplectic_complement(&v_sharp);
    let rhs = v_flat.apply_linear(&phase(&lambda_plus, -pi));
    defect = defect.max(lhs.subspace_distance(&rhs));

    let by_distance = v_sharp.subspace_distance(&v_flat) < 1e-9;
    let by_criterion = sharp_flat_criterion(lambda);
    if by_distance != by_criterion {
        return Err(JtError::Numerical(format!(
            "sharp/flat equality verdicts disagree: distance {} vs criterion {}",
            by_distance, by_criterion
        )));
    }

    Ok(TwistedTriple {
        lambda: lambda.clone(),
        lambda_plus,
        lambda_minus,
        j: j.clone(),
        delta,
        v,
        v_sharp,
        v_flat,
        sharp_equals_flat: by_distance,
        identity_defect: defect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DVector;

    fn scalar_lambda(l: Complex64) -> DMatrix<Complex64> {
        DMatrix::from_element(1, 1, l)
    }

    fn real_line(n: usize) -> StandardSubspace {
        let mut span = DMatrix::zeros(2 * n, n);
        for k in 0..n {
            span[(k, k)] = 1.0;
        }
        StandardSubspace::from_real_span(n, &span).unwrap()
    }

    #[test]
    fn odd_integer_lambda_rotates_to_imaginary_axis() {
        // K = ℂ, Λ = 3: V^♯ = e^{−3πi/2}ℝ = iℝ = V^♭
        let j = Antilinear::conjugation(1);
        let t = twisted_subspaces(&scalar_lambda(Complex64::new(3.0, 0.0)), &j).unwrap();
        assert!(t.sharp_equals_flat);
        assert!(t.identity_defect < 1e-10);
        let i_line = {
            let mut span = DMatrix::zeros(2, 1);
            span[(1, 0)] = 1.0;
            StandardSubspace::from_real_span(1, &span).unwrap()
        };
        assert!(t.v_sharp.subspace_distance(&i_line) < 1e-10);
        assert!(t.v_flat.subspace_distance(&i_line) < 1e-10);
        // but they differ from V_K = ℝ
        assert!(t.v_sharp.subspace_distance(&real_line(1)) > 1.0);
    }

    #[test]
    fn even_integer_lambda_fixes_real_line() {
        let j = Antilinear::conjugation(1);
        let t = twisted_subspaces(&scalar_lambda(Complex64::new(2.0, 0.0)), &j).unwrap();
        assert!(t.sharp_equals_flat);
        assert!(t.v_sharp.subspace_distance(&real_line(1)) < 1e-10);
        assert!(t.v_flat.subspace_distance(&real_line(1)) < 1e-10);
    }

    #[test]
    fn non_integer_lambda_separates_sharp_and_flat() {
        let j = Antilinear::conjugation(1);
        let t = twisted_subspaces(&scalar_lambda(Complex64::new(0.5, 0.0)), &j).unwrap();
        assert!(!t.sharp_equals_flat);
        assert!(t.identity_defect < 1e-10);
    }

    #[test]
    fn skew_lambda_on_c_is_rejected_but_criterion_decides() {
        // Λ = i on ℂ does not commute with entrywise conjugation, so the
        // triple construction must refuse it; the Lemma-2.2 criterion still
        // reports V^♯ ≠ V^♭ since Λ ≠ Λ_+.
        let j = Antilinear::conjugation(1);
        let lam = scalar_lambda(Complex64::new(0.0, 1.0));
        let err = twisted_subspaces(&lam, &j).unwrap_err();
        assert!(err.to_string().contains("commute"));
        assert!(!sharp_flat_criterion(&lam));
    }

    #[test]
    fn matrix_skew_lambda_full_construction() {
        // on ℂ² the real rotation generator is skew, commutes with
        // entrywise conjugation, and has non-integer (imaginary) spectrum
        let j = Antilinear::conjugation(2);
        let lam = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        );
        let t = twisted_subspaces(&lam, &j).unwrap();
        assert!(!t.sharp_equals_flat);
        assert!(t.identity_defect < 1e-9);
        // Λ = Λ_−, so V^♯ = V_K and V^♭ = V_K'
        assert!(t.v_sharp.subspace_distance(&t.v) < 1e-10);
        // Δ_K = e^{2πiΛ_−} has eigenvalues e^{±2π}
        let spec = super::super::checks::herm_spectrum(&t.delta);
        let want = (2.0 * std::f64::consts::PI).exp();
        assert!((spec[0] - want).abs() < 1e-8 * want);
        assert!((spec[1] - 1.0 / want).abs() < 1e-10);
        // a vector of V_K is fixed by T_K(z) = conj(e^{πiΛ_−} z)
        let xi = t.v.complex_basis()[0].clone();
        let tk = j.post_compose_linear(&expm(
            &t.lambda_minus.map(|z| z * Complex64::new(0.0, std::f64::consts::PI)),
        ));
        let res: DVector<Complex64> = tk.apply(&xi) - &xi;
        assert!(res.norm() < 1e-10);
    }

    #[test]
    fn non_normal_lambda_is_rejected() {
        let j = Antilinear::conjugation(2);
        let lam = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(2.0, 0.0),
            ],
        );
        assert!(twisted_subspaces(&lam, &j).is_err());
    }
}
