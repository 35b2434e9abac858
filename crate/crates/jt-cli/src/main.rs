//! `jt` — command-line surface for the Jordan-algebra / Riesz-distribution /
//! modular-theory laboratory.
//!
//! Exit codes: 0 all checks pass, 1 a verification check failed, 2 usage or
//! validation error. Reports are deterministic for a fixed config and seed.

mod parse;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use jt_core::jalg::{classify, Algebra};
use jt_core::modular::{kernel_gram, DiscreteRep1D};
use jt_core::rational::parse_rat;
use jt_core::report::{CheckResult, Report};
use jt_core::riesz::{
    self, support_report, support_report_csv, tilde_mu_boundary, tilde_mu_tube, wedge_duality_check,
};
use jt_core::suite::{run_modular_suite, run_rep1d_suite};
use jt_core::wedge::{orbit_meets_wedge, trace_h, trace_h_formula, BoostConfig};
use jt_core::JtError;

use parse::{parse_algebra, parse_element, AlgebraSpec};

#[derive(Parser)]
#[command(name = "jt", version, about = "euclidean Jordan algebras, wedge domains, Riesz boundary values, and a standard-subspace laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format for the report.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Also write the report to this path.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral classification of an element: det, trace, rank, index.
    Classify {
        /// Algebra, e.g. sym:3, herm:2, quat:3, mink:4.
        #[arg(long)]
        algebra: String,
        /// Element coordinates: `a,b,c,…` or `diag:a,b,c` in the canonical frame.
        #[arg(long)]
        element: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Boost configuration h_k, eigenspace dimensions, wedge membership, axiom audit.
    Wedge {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        k: usize,
        /// Optional element to test for wedge membership.
        #[arg(long)]
        element: Option<String>,
        /// Sample count for the axiom-(A3) and projection audits.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Evaluate the Riesz distribution μ̃_s at a boundary or tube point.
    RieszEval {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        s: String,
        /// Real part of the evaluation point.
        #[arg(long)]
        element: String,
        /// Imaginary part; when present the point is evaluated inside the tube.
        #[arg(long)]
        imag: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Support analysis of Im μ̃_s over the invertible components.
    SupportReport {
        #[arg(long)]
        algebra: String,
        /// Riesz parameter; exact rationals like 2/3 are honored.
        #[arg(long)]
        s: Option<String>,
        /// Sweep `start..end:step` over s (rational endpoints and step).
        #[arg(long)]
        scan: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// The three wedge-duality predicates of the support theorem for one k.
    WedgeDuality {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        s: String,
        /// Specific k; all k when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Randomized modular property suites and the discretized 1D model.
    ModularVerify {
        /// Maximum ambient dimension of the random pairs.
        #[arg(long, default_value_t = 6)]
        dim: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Run the 1D representation suite instead, e.g. `--rep1d s=1`.
        #[arg(long)]
        rep1d: Option<String>,
        #[arg(long, default_value_t = 2048)]
        grid: usize,
        #[arg(long, default_value_t = 200.0)]
        lambda_max: f64,
        #[arg(long, default_value_t = 8)]
        bumps: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Build the discretized 1D representation and run its checks.
    Rep1d {
        #[arg(long)]
        s: String,
        #[arg(long, default_value_t = 2048)]
        grid: usize,
        #[arg(long, default_value_t = 200.0)]
        lambda_max: f64,
        #[arg(long, default_value_t = 8)]
        bumps: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Also verify kernel positive definiteness at this many random
        /// upper-half-plane points.
        #[arg(long, default_value_t = 50)]
        kernel_points: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn main() -> ExitCode {
    init_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Cap rayon parallelism with JT_THREADS.
fn init_threads() {
    if let Ok(v) = std::env::var("JT_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn emit(out: &OutputOpts, json: String, csv: Option<String>) -> Result<(), JtError> {
    let text = match out.format {
        Format::Json => json,
        Format::Csv => csv.unwrap_or_else(|| "csv output not available for this command\n".into()),
    };
    println!("{text}");
    if let Some(path) = &out.output {
        std::fs::write(path, &text)
            .map_err(|e| JtError::InvalidParameter(format!("cannot write {path:?}: {e}")))?;
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialization cannot fail")
}

fn run(cli: Cli) -> Result<bool, JtError> {
    match cli.command {
        Command::Classify {
            algebra,
            element,
            tol,
            out,
        } => {
            let a = require_elements(parse_algebra(&algebra)?)?;
            let x = parse_element(&a, &element)?;
            let cl = classify(&a, &x, tol)?;
            let sd = jt_core::jalg::spectral_decompose(&a, &x, tol)?;
            let payload = serde_json::json!({
                "algebra": a.label(),
                "element": x.0.iter().copied().collect::<Vec<f64>>(),
                "spectral_values": sd.values,
                "classification": cl,
                "tolerance": tol,
            });
            let csv = format!(
                "algebra,det,trace,rank,index,invertible,tol\n{},{},{},{},{},{},{}\n",
                a.label(),
                cl.det,
                cl.trace,
                cl.rank,
                cl.index,
                cl.invertible,
                tol
            );
            emit(&out, to_json(&payload), Some(csv))?;
            Ok(true)
        }
        Command::Wedge {
            algebra,
            k,
            element,
            samples,
            seed,
            tol,
            out,
        } => {
            let a = require_elements(parse_algebra(&algebra)?)?;
            let cfg = BoostConfig::new(&a, &a.canonical_frame(), k, tol)?;
            let audit = cfg.audit_a3(samples, seed, tol)?;
            let violations = cfg.projection_cone_check(samples, seed ^ 1, tol)?;
            let trace = trace_h(&a, k)?;
            let mut checks = vec![
                CheckResult::new(
                    "trace-formula",
                    format!("tr h_{k} vs (2k-r)n/r"),
                    (trace - trace_h_formula(&a, k)).abs(),
                    1e-10,
                ),
                CheckResult::boolean(
                    "axiom-a3-audit",
                    format!("{samples} samples, seed {seed}"),
                    audit.flow_violations == 0 && audit.tau_violations == 0,
                ),
                CheckResult::boolean(
                    "projection-cone-lemma",
                    format!("{samples} samples"),
                    violations == 0,
                ),
            ];
            let mut membership = None;
            if let Some(el) = element {
                let x = parse_element(&a, &el)?;
                let verdict = cfg.wedge_membership(&x, tol)?;
                let sampled = cfg.wedge_membership_strip_sampled(&x, tol)?;
                checks.push(CheckResult::boolean(
                    "wedge-route-agreement",
                    "eigenspace test vs strip sampling",
                    verdict.in_wedge == sampled,
                ));
                checks.push(CheckResult::boolean(
                    "orbit-wedge-criterion",
                    "index test matches rank test",
                    orbit_meets_wedge(&a, &x, k, tol).is_ok(),
                ));
                membership = Some(serde_json::json!({
                    "in_wedge": verdict.in_wedge,
                    "plus_position": verdict.plus_position,
                    "minus_position": verdict.minus_position,
                }));
            }
            let report = Report::new(format!("wedge --algebra {} --k {k}", a.label()), Some(seed), checks);
            let payload = serde_json::json!({
                "report": report,
                "boost": cfg.summary(Some(audit)),
                "membership": membership,
            });
            let pass = report.all_pass;
            emit(&out, to_json(&payload), None)?;
            Ok(pass)
        }
        Command::RieszEval {
            algebra,
            s,
            element,
            imag,
            out,
        } => {
            let a = require_elements(parse_algebra(&algebra)?)?;
            let srat = parse_rat(&s)?;
            let pa = riesz::ParityAlgebra::from(&a);
            if !riesz::riesz_admissible(&pa, srat) {
                return Err(JtError::InvalidParameter(format!(
                    "s = {s} is outside the Wallach set {{0, d/2, …, (r-1)d/2}} ∪ ((r-1)d/2, ∞) \
                     for {} (d = {})",
                    a.label(),
                    a.pierce_dim()
                )));
            }
            let sf = jt_core::rational::to_f64(srat);
            let x = parse_element(&a, &element)?;
            let value = match imag {
                Some(im) => {
                    let y = parse_element(&a, &im)?;
                    let z = jt_core::jalg::ComplexElement::from_parts(&x, &y);
                    tilde_mu_tube(&a, sf, &z)?
                }
                None => tilde_mu_boundary(&a, sf, &x)?,
            };
            let payload = serde_json::json!({
                "algebra": a.label(),
                "s": srat.to_string(),
                "value": { "re": value.re, "im": value.im },
            });
            emit(&out, to_json(&payload), None)?;
            Ok(true)
        }
        Command::SupportReport {
            algebra,
            s,
            scan,
            out,
        } => {
            let pa = parse_algebra(&algebra)?.parity();
            let svals = match (s, scan) {
                (Some(s), None) => vec![parse_rat(&s)?],
                (None, Some(spec)) => parse::parse_scan(&spec)?,
                _ => {
                    return Err(JtError::InvalidParameter(
                        "provide exactly one of --s or --scan".into(),
                    ))
                }
            };
            let reports = svals
                .into_iter()
                .map(|s| support_report(&pa, s))
                .collect::<Result<Vec<_>, _>>()?;
            let json = if reports.len() == 1 {
                to_json(&reports[0])
            } else {
                to_json(&reports)
            };
            let csv = reports.iter().map(support_report_csv).collect::<String>();
            emit(&out, json, Some(csv))?;
            Ok(true)
        }
        Command::WedgeDuality { algebra, s, k, out } => {
            let pa = parse_algebra(&algebra)?.parity();
            let srat = parse_rat(&s)?;
            let ks: Vec<usize> = match k {
                Some(k) => vec![k],
                None => (0..=pa.rank).collect(),
            };
            let rows = ks
                .into_iter()
                .map(|k| wedge_duality_check(&pa, srat, k))
                .collect::<Result<Vec<_>, _>>()?;
            let consistent = rows.iter().all(|r| r.consistent);
            let payload = serde_json::json!({
                "algebra": pa.name,
                "s": srat.to_string(),
                "rows": rows,
                "consistent": consistent,
            });
            emit(&out, to_json(&payload), None)?;
            Ok(consistent)
        }
        Command::ModularVerify {
            dim,
            trials,
            seed,
            rep1d,
            grid,
            lambda_max,
            bumps,
            out,
        } => {
            let checks = match rep1d {
                Some(spec) => {
                    let s = parse::parse_keyed_s(&spec)?;
                    run_rep1d_suite(s, grid, lambda_max, bumps, seed)?
                }
                None => run_modular_suite(dim, trials, seed)?,
            };
            let report = Report::new("modular-verify", Some(seed), checks);
            let pass = report.all_pass;
            emit(&out, to_json(&report), Some(report_csv(&report)))?;
            Ok(pass)
        }
        Command::Rep1d {
            s,
            grid,
            lambda_max,
            bumps,
            seed,
            kernel_points,
            out,
        } => {
            let sf = jt_core::rational::to_f64(parse_rat(&s)?);
            let rep = DiscreteRep1D::build(sf, grid, lambda_max)?;
            let mut checks = run_rep1d_suite(sf, grid, lambda_max, bumps, seed)?;
            // kernel positivity at pseudo-random points derived from the seed
            let points: Vec<Complex64> = {
                use rand::prelude::*;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
                (0..kernel_points)
                    .map(|_| Complex64::new(rng.gen_range(-5.0..5.0), rng.gen_range(0.05..4.0)))
                    .collect()
            };
            let (_, min_eig, max_eig) = kernel_gram(sf, &points)?;
            checks.push(CheckResult::new(
                "kernel-positivity",
                format!("{kernel_points} points, s={sf}"),
                (-min_eig).max(0.0),
                1e-10 * max_eig,
            ));
            let report = Report::new(format!("rep1d --s {s} --grid {grid}"), Some(seed), checks);
            let pass = report.all_pass;
            let payload = serde_json::json!({
                "report": report,
                "grid": { "nodes": rep.len(), "lambda_max": rep.lambda_max },
            });
            emit(&out, to_json(&payload), Some(report_csv(&report)))?;
            Ok(pass)
        }
    }
}

fn require_elements(spec: AlgebraSpec) -> Result<Algebra, JtError> {
    match spec {
        AlgebraSpec::Concrete(a) => Ok(a),
        AlgebraSpec::FormulaOnly(_) => Err(JtError::Unsupported(
            "exceptional algebra unsupported: octonion descriptors are formula-only \
             (support-report and wedge-duality accept them)"
                .into(),
        )),
    }
}

fn report_csv(report: &Report) -> String {
    let mut out = String::from("check,parameters,defect,tolerance,pass\n");
    for c in &report.checks {
        out.push_str(&format!(
            "{},\"{}\",{},{},{}\n",
            c.check, c.parameters, c.defect, c.tolerance, c.pass
        ));
    }
    out
}
