//! Command-line front end.
//!
//! Four subcommands: `critical` (critical points via the circulant route),
//! `verify` (run selected checks on one polynomial), `ensemble` (batch
//! verification with persistent JSONL/CSV reports), and `inspect` (dump the
//! intermediate matrices). Exit codes are a stable contract: 0 success,
//! 2 usage or parse failure, 3 numerical failure, 4 check failure.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::circulant::Circulant;
use crate::differentiator::{b_matrices, critical_points};
use crate::ensemble::{run_suite_to_dir, CheckKind, EnsembleConfig, Family};
use crate::error::{Error, Result};
use crate::inequalities::{
    debruin_sharma_check, power_sums, quartic_centered_check, quartic_general_check,
    schoenberg_check, schur_check,
};
use crate::json::{to_pairs, CirculantJson, DenseMatrixJson, PolynomialJson, RootSetJson};
use crate::majorization::{kyfan_check, thm12_check, thm13_check, weyl_domination, PhiTransform};
use crate::poly::{roots_oracle, RootSet};
use crate::tolerance::Tolerances;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "circ",
    about = "Critical points of polynomials via circulant submatrices, with inequality and majorization verification",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the critical points of a polynomial from its roots or
    /// coefficients.
    Critical {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run verification checks on a single polynomial.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated check names, or "all".
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        /// Scalar tolerance; scaled internally per check degree.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Generate a random ensemble and batch-verify it.
    Ensemble {
        /// Family: gaussian, unit-circle, collinear, real-positive,
        /// multiple-roots, near-collinear.
        #[arg(long, default_value = "gaussian")]
        family: String,
        /// Gaussian std deviation per component (gaussian family).
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        /// Pin unit-circle roots to the exact roots of unity.
        #[arg(long, default_value_t = false)]
        equispaced: bool,
        /// Line direction for the collinear family (inline complex).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
        /// Line offset for the collinear family (inline complex).
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        beta: String,
        /// Lower root bound (real-positive family).
        #[arg(long, default_value_t = 0.5)]
        lo: f64,
        /// Upper root bound (real-positive family).
        #[arg(long, default_value_t = 4.0)]
        hi: f64,
        /// Multiplicity pattern, e.g. "2,1" (multiple-roots family).
        #[arg(long, default_value = "2,1", value_delimiter = ',')]
        pattern: Vec<usize>,
        /// Noise amplitude (near-collinear family).
        #[arg(long, default_value_t = 1e-6)]
        noise: f64,
        /// Degree range "min..max" or a single degree.
        #[arg(long, default_value = "2..16")]
        degree: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// PRNG seed; the CIRC_SEED environment variable overrides it.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        /// Directory for ensemble.jsonl and summary.csv.
        #[arg(long, default_value = ".")]
        output: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
        /// JSON config file; overrides the family/degree/count/seed flags.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Print intermediate matrices for a polynomial.
    Inspect {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        show: ShowKind,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Inline roots, comma separated; entries like "2", "1.5i", "3-0.25i".
    #[arg(long, allow_hyphen_values = true)]
    roots: Option<String>,
    /// Inline monic coefficients, ascending degree, same entry syntax.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// JSON file holding {"roots": [[re,im],...]} or {"coeffs": [[re,im],...]}.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ShowKind {
    Circulant,
    Submatrix,
    Gram,
    B,
    Btilde,
}

/// Entry point for the `circ` binary.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run(args, &mut out, &mut err)
}

/// Testable entry point: parses `args` (including `argv[0]`) and writes to
/// the given streams, returning the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version requests are success, anything else is usage.
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::RootsNonConvergence { .. }
        | Error::EigNonConvergence { .. }
        | Error::NotHermitian { .. }
        | Error::NotCentered { .. }
        | Error::NonPositiveRoot(_) => EXIT_NUMERICAL,
        _ => EXIT_USAGE,
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Critical { input } => cmd_critical(&input, out),
        Command::Verify { input, checks, tol } => cmd_verify(&input, &checks, tol, out, err),
        Command::Ensemble {
            family,
            sigma,
            equispaced,
            alpha,
            beta,
            lo,
            hi,
            pattern,
            noise,
            degree,
            count,
            seed,
            checks,
            output,
            tol,
            config,
        } => {
            let cfg = if let Some(path) = config {
                let text = std::fs::read_to_string(path)?;
                serde_json::from_str(&text)?
            } else {
                let family = parse_family(
                    &family, sigma, equispaced, &alpha, &beta, lo, hi, &pattern, noise,
                )?;
                let (degree_min, degree_max) = parse_degree_range(&degree)?;
                EnsembleConfig {
                    family,
                    degree_min,
                    degree_max,
                    count,
                    seed,
                    tolerances: tol.map_or_else(Tolerances::default, Tolerances::from_scalar),
                }
            };
            cmd_ensemble(cfg, &checks, &output, out)
        }
        Command::Inspect { input, show } => cmd_inspect(&input, show, out),
    }
}

#[derive(Serialize)]
struct CriticalOutput {
    critical_points: Vec<[f64; 2]>,
    verification_residual: f64,
}

fn cmd_critical(input: &InputArgs, out: &mut dyn Write) -> Result<i32> {
    let roots = resolve_input(input, 2)?;
    let result = critical_points(&roots)?;
    let payload = CriticalOutput {
        critical_points: to_pairs(&result.critical_points.values),
        verification_residual: result.verification_residual,
    };
    writeln!(out, "{}", serde_json::to_string(&payload)?)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    input: &InputArgs,
    check_names: &[String],
    tol: Option<f64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let roots = resolve_input(input, 2)?;
    let tol = tol.map_or_else(Tolerances::default, Tolerances::from_scalar);
    let checks = expand_checks(check_names)?;
    let ps = power_sums(&roots);
    let centered = ps.s1.norm() / ps.n as f64 <= tol.quadratic * roots.scale();
    let positive = roots
        .roots()
        .iter()
        .all(|z| z.im.abs() <= 1e-12 * roots.scale() && z.re > 0.0);

    let mut reports: Vec<serde_json::Value> = Vec::new();
    let mut failures: Vec<String> = Vec::new();
    for kind in checks {
        let verdict = match kind {
            CheckKind::Schoenberg => {
                inequality_value(schoenberg_check(&roots, &tol)?, &roots, &tol)
            }
            CheckKind::QuarticGeneral => {
                inequality_value(quartic_general_check(&roots, &tol)?, &roots, &tol)
            }
            CheckKind::QuarticCentered => {
                if !centered {
                    writeln!(
                        err,
                        "warning: skipping quartic_centered (mass centre nonzero)"
                    )?;
                    continue;
                }
                inequality_value(quartic_centered_check(&roots, &tol)?, &roots, &tol)
            }
            CheckKind::DebruinSharma => {
                if !centered {
                    writeln!(
                        err,
                        "warning: skipping debruin_sharma (mass centre nonzero)"
                    )?;
                    continue;
                }
                inequality_value(debruin_sharma_check(&roots, &tol)?, &roots, &tol)
            }
            CheckKind::Schur => inequality_value(schur_check(&roots, &tol)?, &roots, &tol),
            CheckKind::KyFan => majorization_value("kyfan", kyfan_check(&roots, &tol)?),
            CheckKind::Thm12Identity => majorization_value(
                "thm12_identity",
                thm12_check(&roots, &PhiTransform::Identity, &tol)?,
            ),
            CheckKind::Thm12Power2 => majorization_value(
                "thm12_power2",
                thm12_check(&roots, &PhiTransform::Power { p: 2.0 }, &tol)?,
            ),
            CheckKind::Thm12Power4 => majorization_value(
                "thm12_power4",
                thm12_check(&roots, &PhiTransform::Power { p: 4.0 }, &tol)?,
            ),
            CheckKind::Thm13 => {
                if !positive {
                    writeln!(err, "warning: skipping thm13 (roots not real positive)")?;
                    continue;
                }
                majorization_value("thm13", thm13_check(&roots, &PhiTransform::Identity, &tol)?)
            }
            CheckKind::Weyl => {
                let ok = weyl_domination(&roots, &tol)?;
                serde_json::json!({"name": "weyl", "pass": ok})
            }
            CheckKind::DerivativeIdentity => {
                let residual = crate::differentiator::verify_derivative_identity(&roots)?;
                serde_json::json!({
                    "name": "derivative_identity",
                    "residual": residual,
                    "pass": residual <= tol.residual,
                })
            }
            CheckKind::NormalityEquivalence => {
                let normal = crate::differentiator::is_submatrix_normal(&roots, tol.normality)?;
                let collinear = crate::inequalities::collinearity(&roots, tol.collinearity);
                serde_json::json!({
                    "name": "normality_equivalence",
                    "normal": normal,
                    "collinear": collinear,
                    "pass": normal == collinear,
                })
            }
        };
        if !verdict
            .get("pass")
            .and_then(|p| p.as_bool())
            .unwrap_or(false)
        {
            failures.push(
                verdict
                    .get("name")
                    .and_then(|n| n.as_str())
                    .unwrap_or("?")
                    .to_string(),
            );
        }
        reports.push(verdict);
    }
    writeln!(out, "{}", serde_json::to_string(&reports)?)?;
    if failures.is_empty() {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "failed checks: {}", failures.join(", "))?;
        Ok(EXIT_CHECK_FAILED)
    }
}

fn inequality_value(
    rep: crate::inequalities::InequalityReport,
    roots: &RootSet,
    tol: &Tolerances,
) -> serde_json::Value {
    let pass = rep.passes(roots, tol);
    let mut v = serde_json::to_value(&rep).expect("report serializes");
    v.as_object_mut()
        .expect("object")
        .insert("pass".into(), serde_json::Value::Bool(pass));
    v
}

fn majorization_value(
    name: &str,
    rep: crate::majorization::MajorizationReport,
) -> serde_json::Value {
    let mut v = serde_json::to_value(&rep).expect("report serializes");
    let obj = v.as_object_mut().expect("object");
    obj.insert("name".into(), serde_json::Value::String(name.into()));
    obj.insert("pass".into(), serde_json::Value::Bool(rep.holds));
    v
}

#[derive(Serialize)]
struct EnsembleOutput {
    jsonl: String,
    csv: String,
    count: usize,
    failures: usize,
}

fn cmd_ensemble(
    mut cfg: EnsembleConfig,
    check_names: &[String],
    output: &Path,
    out: &mut dyn Write,
) -> Result<i32> {
    if let Ok(seed) = std::env::var("CIRC_SEED") {
        cfg.seed = seed
            .parse()
            .map_err(|_| Error::Parse(format!("CIRC_SEED is not a u64: {seed}")))?;
    }
    let checks = expand_checks(check_names)?;
    let (jsonl, csv, summary) = run_suite_to_dir(&cfg, &checks, output)?;
    let payload = EnsembleOutput {
        jsonl: jsonl.display().to_string(),
        csv: csv.display().to_string(),
        count: summary.count,
        failures: summary.total_failures(),
    };
    writeln!(out, "{}", serde_json::to_string(&payload)?)?;
    if summary.total_failures() == 0 {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_CHECK_FAILED)
    }
}

fn cmd_inspect(input: &InputArgs, show: ShowKind, out: &mut dyn Write) -> Result<i32> {
    let min_degree = match show {
        ShowKind::Circulant | ShowKind::Gram => 1,
        _ => 2,
    };
    let roots = resolve_input(input, min_degree)?;
    let circ = Circulant::from_spectrum(&roots);
    let payload = match show {
        ShowKind::Circulant => serde_json::to_string(&CirculantJson::from(&circ))?,
        ShowKind::Gram => serde_json::to_string(&CirculantJson::from(&circ.gram()))?,
        ShowKind::Submatrix => {
            let sub = circ.leading_submatrix()?;
            serde_json::to_string(&DenseMatrixJson::from(&sub))?
        }
        ShowKind::B => {
            let (b, _) = b_matrices(&circ)?;
            serde_json::to_string(&DenseMatrixJson::from(&b))?
        }
        ShowKind::Btilde => {
            let (_, bt) = b_matrices(&circ)?;
            serde_json::to_string(&DenseMatrixJson::from(&bt))?
        }
    };
    writeln!(out, "{payload}")?;
    Ok(EXIT_OK)
}

fn expand_checks(names: &[String]) -> Result<Vec<CheckKind>> {
    if names.iter().any(|n| n == "all") {
        return Ok(CheckKind::ALL.to_vec());
    }
    names.iter().map(|n| CheckKind::from_str(n)).collect()
}

#[allow(clippy::too_many_arguments)]
fn parse_family(
    family: &str,
    sigma: f64,
    equispaced: bool,
    alpha: &str,
    beta: &str,
    lo: f64,
    hi: f64,
    pattern: &[usize],
    noise: f64,
) -> Result<Family> {
    match family {
        "gaussian" | "gaussian-roots" => Ok(Family::GaussianRoots { sigma }),
        "unit-circle" => Ok(Family::UnitCircle { equispaced }),
        "collinear" => {
            let a = parse_complex(alpha)?;
            let b = parse_complex(beta)?;
            Ok(Family::Collinear {
                alpha: [a.re, a.im],
                beta: [b.re, b.im],
            })
        }
        "real-positive" => Ok(Family::RealPositive { lo, hi }),
        "multiple-roots" => Ok(Family::MultipleRoots {
            pattern: pattern.to_vec(),
        }),
        "near-collinear" => Ok(Family::NearCollinear { noise }),
        other => Err(Error::Parse(format!("unknown family '{other}'"))),
    }
}

fn parse_degree_range(s: &str) -> Result<(usize, usize)> {
    let parse_one = |t: &str| -> Result<usize> {
        t.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree '{t}'")))
    };
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse_one(lo)?, parse_one(hi)?)),
        None => {
            let d = parse_one(s)?;
            Ok((d, d))
        }
    }
}

fn resolve_input(input: &InputArgs, min_degree: usize) -> Result<RootSet> {
    let mut sources = 0;
    if input.roots.is_some() {
        sources += 1;
    }
    if input.coeffs.is_some() {
        sources += 1;
    }
    if input.input.is_some() {
        sources += 1;
    }
    if sources != 1 {
        return Err(Error::Parse(
            "exactly one of --roots, --coeffs, --input is required".into(),
        ));
    }
    let roots = if let Some(spec) = &input.roots {
        RootSet::new(parse_complex_list(spec)?)?
    } else if let Some(spec) = &input.coeffs {
        let p = crate::poly::Polynomial::monic_from(&parse_complex_list(spec)?)?;
        roots_oracle(&p, 1e-12, 2000)?
    } else {
        let path = input.input.as_ref().unwrap();
        let text = std::fs::read_to_string(path)?;
        let value: serde_json::Value = serde_json::from_str(&text)?;
        if value.get("roots").is_some() {
            let parsed: RootSetJson = serde_json::from_value(value)?;
            parsed.into_root_set()?
        } else if value.get("coeffs").is_some() {
            let parsed: PolynomialJson = serde_json::from_value(value)?;
            roots_oracle(&parsed.into_polynomial()?, 1e-12, 2000)?
        } else {
            return Err(Error::Parse(
                "input file must contain \"roots\" or \"coeffs\"".into(),
            ));
        }
    };
    if roots.len() < min_degree {
        return Err(Error::DegreeTooSmall {
            degree: roots.len(),
            min: min_degree,
        });
    }
    Ok(roots)
}

/// Parses one inline complex entry: `a`, `bi`, `a+bi`, with optional signs
/// and exponents; whitespace is ignored.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    let parse_f64 = |t: &str, whole: &str| -> Result<f64> {
        t.parse()
            .map_err(|_| Error::Parse(format!("bad complex literal '{whole}'")))
    };
    if let Some(body) = compact.strip_suffix(['i', 'I']) {
        // Find the sign separating the real part from the imaginary part:
        // the last '+'/'-' that is neither leading nor an exponent sign.
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let ch = bytes[idx];
            if (ch == b'+' || ch == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_str.is_empty() {
            0.0
        } else {
            parse_f64(re_str, &compact)?
        };
        let im = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => parse_f64(other, &compact)?,
        };
        Ok(Complex64::new(re, im))
    } else {
        Ok(Complex64::new(parse_f64(&compact, &compact)?, 0.0))
    }
}

/// Parses a comma-separated list of inline complex entries.
pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>> {
    s.split(',').map(parse_complex).collect()
}
