//! Batch verification suites: randomized modular-pair audits and the
//! discretized 1D representation checks. Shared by the CLI and the
//! acceptance tests.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::modular::{
    j_positivity_check, kms_check, modular_objects, os_isometry_check, random_modular_pair,
    rigidity_search, standard_from_pair, symplectic_complement,
};
use crate::quad::TestFn;
use crate::report::CheckResult;

/// Run the randomized modular property suite on `trials` random pairs of
/// dimension 2..=`dim_max`.
pub fn run_modular_suite(dim_max: usize, trials: usize, seed: u64) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut round_trip: f64 = 0.0;
    let mut kms: f64 = 0.0;
    let mut os: f64 = 0.0;
    let mut jpos_min = f64::INFINITY;
    let mut jv_defect: f64 = 0.0;
    let mut duality_involution: f64 = 0.0;
    let t_grid = [-2.0, -1.0, -0.3, 0.0, 0.7, 1.5, 2.0];
    for trial in 0..trials {
        let n = rng.gen_range(2..=dim_max.max(2));
        let pair = random_modular_pair(n, &mut rng);
        let v = standard_from_pair(&pair)?;
        let back = modular_objects(&v)?;
        let d = (&back.delta - &pair.delta).norm() / (1.0 + pair.delta.norm())
            + (&back.j.m - &pair.j.m).norm() / (1.0 + pair.j.m.norm());
        round_trip = round_trip.max(d);
        kms = kms.max(kms_check(&pair, &v, &t_grid)?);
        os = os.max(os_isometry_check(&pair, &v, 40, seed ^ trial as u64)?);
        let (jmin, _) = j_positivity_check(&v, &pair.j, 40, seed ^ (trial as u64).rotate_left(17));
        jpos_min = jpos_min.min(jmin);
        let vp = symplectic_complement(&v);
        jv_defect = jv_defect.max(vp.subspace_distance(&v.apply_antilinear(&pair.j)));
        duality_involution =
            duality_involution.max(symplectic_complement(&vp).subspace_distance(&v));
    }
    let rigidity = rigidity_search(dim_max.min(6), (trials / 10).max(5), seed ^ 0xabcdef)?;
    Ok(vec![
        CheckResult::new(
            "bijection-round-trip",
            format!("{trials} random pairs, dim <= {dim_max}"),
            round_trip,
            1e-8,
        ),
        CheckResult::new("kms-beta-2pi", format!("t in {t_grid:?}"), kms, 1e-10),
        CheckResult::new("os-isometry", "40 samples per pair", os, 1e-10),
        CheckResult::new(
            "j-positivity",
            "min Re<xi, J xi> over V samples",
            (-jpos_min).max(0.0),
            1e-10,
        ),
        CheckResult::new("complement-is-jv", "V' = JV", jv_defect, 1e-8),
        CheckResult::new(
            "duality-involution",
            "(V')' = V",
            duality_involution,
            1e-8,
        ),
        CheckResult::boolean(
            "rigidity-no-counterexample",
            format!(
                "{} searches, {} standard, max distance {:.3e}",
                rigidity.trials, rigidity.standard_trials, rigidity.max_distance
            ),
            rigidity.counterexamples == 0 && rigidity.standard_trials > 0,
        ),
    ])
}

fn fmt_trend(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.3e}")).collect::<Vec<_>>().join(", ")
}

/// Random bump supported inside `(0.2, 5)`.
pub fn random_wedge_bump(rng: &mut impl Rng) -> TestFn {
    let a = rng.gen_range(0.2..3.0);
    let w = rng.gen_range(0.3..2.0);
    TestFn::bump(a, a + w)
}

/// Results of the 1D representation suite at one grid size, with the
/// convergence trend of the symplectic residual across coarser grids.
pub fn run_rep1d_suite(
    s: f64,
    grid: usize,
    lambda_max: f64,
    bumps: usize,
    seed: u64,
) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(TestFn, TestFn)> = (0..bumps)
        .map(|_| {
            let phi = random_wedge_bump(&mut rng);
            let psi = random_wedge_bump(&mut rng);
            // complement generators live on the reflected side
            (phi, TestFn::bump(-psi.b, -psi.a))
        })
        .collect();

    let grids: Vec<usize> = [grid / 8, grid / 4, grid / 2, grid]
        .iter()
        .copied()
        .filter(|&g| g >= 16)
        .collect();
    let mut sym_trend = Vec::new();
    let mut endpoint_final: f64 = 0.0;
    let mut shift_final: f64 = 0.0;
    let mut group_law: f64 = 0.0;
    for &g in &grids {
        let rep = crate::modular::DiscreteRep1D::build(s, g, lambda_max)?;
        let mut sym: f64 = 0.0;
        let mut endpoint: f64 = 0.0;
        for (phi, psi) in &pairs {
            sym = sym.max(rep.symplectic_orthogonality(phi, psi)?);
            endpoint = endpoint.max(rep.endpoint_residual(phi)?);
        }
        sym_trend.push(sym);
        if g == grid {
            endpoint_final = endpoint;
            for (phi, _) in pairs.iter().take(4) {
                shift_final = shift_final.max(rep.wedge_semigroup_residual(phi, 1.3)?);
            }
            // U(x)U(y) = U(x+y) on a sample vector
            let f: Vec<num_complex::Complex64> = rep
                .nodes
                .iter()
                .map(|&l| num_complex::Complex64::new((-l).exp(), (-l / 3.0).exp()))
                .collect();
            let fxy = rep.translate(0.9, &rep.translate(1.4, &f));
            let direct = rep.translate(2.3, &f);
            let diff: Vec<num_complex::Complex64> = fxy
                .iter()
                .zip(direct.iter())
                .map(|(a, b)| a - b)
                .collect();
            group_law = rep.norm(&diff) / rep.norm(&f);
        }
    }
    let monotone = sym_trend.windows(2).all(|w| w[1] < w[0]);
    Ok(vec![
        CheckResult::new(
            "endpoint-identity",
            format!("s={s}, grid={grid}, {bumps} bumps"),
            endpoint_final,
            1e-6,
        ),
        CheckResult::new(
            "symplectic-orthogonality",
            format!("s={s}, grid={grid}, trend [{}] over grids {grids:?}", fmt_trend(&sym_trend)),
            *sym_trend.last().unwrap(),
            1e-4,
        ),
        CheckResult::boolean(
            "symplectic-residual-monotone",
            format!("trend [{}]", fmt_trend(&sym_trend)),
            monotone,
        ),
        CheckResult::new("wedge-semigroup-shift", "x = 1.3", shift_final, 1e-8),
        CheckResult::new("translation-group-law", "U(0.9)U(1.4) = U(2.3)", group_law, 1e-12),
    ])
}
