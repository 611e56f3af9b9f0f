//! Random root-set families, a batch verification runner, and persistent
//! reports.
//!
//! Generation is driven by a SplitMix64 stream so that identical
//! `(config, seed)` pairs reproduce byte-identical JSONL output within one
//! build. The runner executes a selected set of checks on every instance,
//! writes one JSONL record per instance, and aggregates a per-check summary
//! (pass/fail counts, minimum slack, equality cases, and anomalies where
//! equality held without collinear roots).

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circulant::Circulant;
use crate::differentiator::critical_points;
use crate::error::{Error, Result};
use crate::inequalities::{
    collinearity, collinearity_defect, debruin_sharma_with_lhs, quartic_centered_with_lhs,
    quartic_general_with_lhs, schoenberg_with_lhs, schur_with_lhs, InequalityReport,
};
use crate::json::to_pairs;
use crate::linalg::normality_defect;
use crate::majorization::{
    eta_values, hermitian_part_eigenvalues, rank_one_structure_ok, weak_majorizes, PhiTransform,
};
use crate::poly::RootSet;
use crate::tolerance::Tolerances;

/// Named, stable 64-bit generator (SplitMix64). Documented so results can be
/// reproduced statistically by other implementations.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Standard normal via Box-Muller.
    pub fn next_gaussian(&mut self) -> f64 {
        let mut u1 = self.next_f64();
        while u1 == 0.0 {
            u1 = self.next_f64();
        }
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (TAU * u2).cos()
    }

    pub fn next_complex_gaussian(&mut self) -> Complex64 {
        Complex64::new(self.next_gaussian(), self.next_gaussian())
    }

    /// Uniform in `[lo, hi)`.
    pub fn next_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

/// Root-set families.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// Independent complex Gaussians with standard deviation `sigma` per
    /// component.
    GaussianRoots { sigma: f64 },
    /// Points on the unit circle; `equispaced` pins them to the exact n-th
    /// roots of unity.
    UnitCircle { equispaced: bool },
    /// `alpha * t_j + beta` with real Gaussian `t_j`.
    Collinear { alpha: [f64; 2], beta: [f64; 2] },
    /// Uniform real roots in `[lo, hi]`, `lo > 0`.
    RealPositive { lo: f64, hi: f64 },
    /// Gaussian base roots repeated with multiplicities cycled from
    /// `pattern`. Multiplicities above 3 make critical-point clusters too
    /// ill-conditioned for the matching tolerances, so they are rejected.
    MultipleRoots { pattern: Vec<usize> },
    /// Random line plus complex Gaussian noise of amplitude `noise`.
    NearCollinear { noise: f64 },
}

impl Family {
    fn validate(&self) -> Result<()> {
        match self {
            Family::GaussianRoots { sigma } if *sigma <= 0.0 => {
                Err(Error::InvalidConfig("sigma must be positive".into()))
            }
            Family::RealPositive { lo, hi } if *lo <= 0.0 || hi < lo => Err(Error::InvalidConfig(
                "real_positive needs 0 < lo <= hi".into(),
            )),
            Family::MultipleRoots { pattern } => {
                if pattern.iter().any(|&m| m == 0 || m > 3) {
                    return Err(Error::InvalidConfig(
                        "multiplicity pattern entries must be 1..=3".into(),
                    ));
                }
                Ok(())
            }
            Family::NearCollinear { noise } if *noise < 0.0 => {
                Err(Error::InvalidConfig("noise must be nonnegative".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Configuration of one ensemble run.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EnsembleConfig {
    #[serde(flatten)]
    pub family: Family,
    pub degree_min: usize,
    pub degree_max: usize,
    pub count: usize,
    pub seed: u64,
    #[serde(default)]
    pub tolerances: Tolerances,
}

impl EnsembleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.count < 1 {
            return Err(Error::InvalidConfig("count must be at least 1".into()));
        }
        if self.degree_min < 2 || self.degree_min > self.degree_max || self.degree_max > 64 {
            return Err(Error::InvalidConfig(
                "degree range must satisfy 2 <= min <= max <= 64".into(),
            ));
        }
        self.family.validate()
    }
}

/// Deterministic stream of root sets.
pub struct EnsembleStream {
    rng: SplitMix64,
    config: EnsembleConfig,
    produced: usize,
}

impl Iterator for EnsembleStream {
    type Item = RootSet;

    fn next(&mut self) -> Option<RootSet> {
        if self.produced >= self.config.count {
            return None;
        }
        self.produced += 1;
        let span = self.config.degree_max - self.config.degree_min + 1;
        let n = self.config.degree_min + (self.rng.next_u64() % span as u64) as usize;
        Some(sample_family(&self.config.family, n, &mut self.rng))
    }
}

/// Root-set generator for a validated config; identical seeds produce
/// identical streams.
pub fn generate(config: &EnsembleConfig) -> Result<EnsembleStream> {
    config.validate()?;
    Ok(EnsembleStream {
        rng: SplitMix64::new(config.seed),
        config: config.clone(),
        produced: 0,
    })
}

/// One sample of `n` roots from a family.
pub fn sample_family(family: &Family, n: usize, rng: &mut SplitMix64) -> RootSet {
    let values: Vec<Complex64> = match family {
        Family::GaussianRoots { sigma } => (0..n)
            .map(|_| rng.next_complex_gaussian() * *sigma)
            .collect(),
        Family::UnitCircle { equispaced } => {
            if *equispaced {
                (0..n)
                    .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / n as f64))
                    .collect()
            } else {
                (0..n)
                    .map(|_| Complex64::from_polar(1.0, TAU * rng.next_f64()))
                    .collect()
            }
        }
        Family::Collinear { alpha, beta } => {
            let a = Complex64::new(alpha[0], alpha[1]);
            let b = Complex64::new(beta[0], beta[1]);
            (0..n).map(|_| a * rng.next_gaussian() + b).collect()
        }
        Family::RealPositive { lo, hi } => (0..n)
            .map(|_| Complex64::new(rng.next_range(*lo, *hi), 0.0))
            .collect(),
        Family::MultipleRoots { pattern } => {
            let pattern = if pattern.is_empty() {
                vec![2usize, 1]
            } else {
                pattern.clone()
            };
            let mut values = Vec::with_capacity(n);
            let mut slot = 0;
            while values.len() < n {
                let m = pattern[slot % pattern.len()].min(n - values.len());
                let base = rng.next_complex_gaussian();
                for _ in 0..m {
                    values.push(base);
                }
                slot += 1;
            }
            values
        }
        Family::NearCollinear { noise } => {
            let dir = Complex64::from_polar(1.0, TAU * rng.next_f64());
            let offset = rng.next_complex_gaussian();
            (0..n)
                .map(|_| dir * rng.next_gaussian() + offset + rng.next_complex_gaussian() * *noise)
                .collect()
        }
    };
    RootSet::new(values).expect("n >= 2 guaranteed by config validation")
}

/// The verifiable claims the runner knows how to exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Schoenberg,
    QuarticGeneral,
    QuarticCentered,
    DebruinSharma,
    Schur,
    KyFan,
    Thm12Identity,
    Thm12Power2,
    Thm12Power4,
    Thm13,
    Weyl,
    DerivativeIdentity,
    NormalityEquivalence,
}

impl CheckKind {
    pub const ALL: [CheckKind; 13] = [
        CheckKind::Schoenberg,
        CheckKind::QuarticGeneral,
        CheckKind::QuarticCentered,
        CheckKind::DebruinSharma,
        CheckKind::Schur,
        CheckKind::KyFan,
        CheckKind::Thm12Identity,
        CheckKind::Thm12Power2,
        CheckKind::Thm12Power4,
        CheckKind::Thm13,
        CheckKind::Weyl,
        CheckKind::DerivativeIdentity,
        CheckKind::NormalityEquivalence,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Schoenberg => "schoenberg",
            CheckKind::QuarticGeneral => "quartic_general",
            CheckKind::QuarticCentered => "quartic_centered",
            CheckKind::DebruinSharma => "debruin_sharma",
            CheckKind::Schur => "schur",
            CheckKind::KyFan => "kyfan",
            CheckKind::Thm12Identity => "thm12_identity",
            CheckKind::Thm12Power2 => "thm12_power2",
            CheckKind::Thm12Power4 => "thm12_power4",
            CheckKind::Thm13 => "thm13",
            CheckKind::Weyl => "weyl",
            CheckKind::DerivativeIdentity => "derivative_identity",
            CheckKind::NormalityEquivalence => "normality_equivalence",
        }
    }
}

impl FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .iter()
            .find(|k| k.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown check '{s}'")))
    }
}

/// Outcome of one check on one instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collinear: Option<bool>,
    pub anomaly: bool,
}

impl CheckRecord {
    fn from_inequality(kind: CheckKind, rep: &InequalityReport, pass: bool) -> Self {
        CheckRecord {
            check: kind.name().to_string(),
            lhs: rep.lhs,
            rhs: rep.rhs,
            slack: rep.slack,
            pass,
            equality: Some(rep.equality),
            collinear: Some(rep.collinear),
            anomaly: rep.anomaly(),
        }
    }

    fn failed(kind: CheckKind) -> Self {
        CheckRecord {
            check: kind.name().to_string(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NEG_INFINITY,
            pass: false,
            equality: None,
            collinear: None,
            anomaly: false,
        }
    }
}

/// Per-check aggregate.
#[derive(Debug, Clone, Serialize)]
pub struct CheckStats {
    pub pass: usize,
    pub fail: usize,
    pub min_slack: f64,
    pub max_residual: f64,
    pub equality_count: usize,
    pub anomalies: Vec<AnomalyRecord>,
}

/// An instance where equality held without collinear roots, kept verbatim so
/// it can be replayed.
#[derive(Debug, Clone, Serialize)]
pub struct AnomalyRecord {
    pub index: usize,
    pub roots: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnsembleSummary {
    pub count: usize,
    pub checks: BTreeMap<String, CheckStats>,
}

impl EnsembleSummary {
    pub fn total_failures(&self) -> usize {
        self.checks.values().map(|s| s.fail).sum()
    }

    /// CSV with the stable header `check,pass,fail,min_slack`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,pass,fail,min_slack\n");
        for (name, stats) in &self.checks {
            out.push_str(&format!(
                "{},{},{},{}\n",
                name, stats.pass, stats.fail, stats.min_slack
            ));
        }
        out
    }
}

#[derive(Serialize)]
struct InstanceRecord<'a> {
    index: usize,
    degree: usize,
    roots: Vec<[f64; 2]>,
    checks: &'a [CheckRecord],
}

/// Runs the selected checks over every generated instance, streaming one
/// JSONL record per instance into `jsonl` when provided. Check failures are
/// recorded in the summary, never thrown; only I/O and configuration errors
/// surface as `Err`.
pub fn run_suite(
    config: &EnsembleConfig,
    checks: &[CheckKind],
    mut jsonl: Option<&mut dyn Write>,
) -> Result<EnsembleSummary> {
    config.validate()?;
    let effective: Vec<CheckKind> = checks
        .iter()
        .copied()
        .filter(|k| {
            // Positivity-restricted checks only run on positive families.
            *k != CheckKind::Thm13 || matches!(config.family, Family::RealPositive { .. })
        })
        .collect();
    let tol = config.tolerances;
    let mut stats: BTreeMap<String, CheckStats> = BTreeMap::new();
    for (index, roots) in generate(config)?.enumerate() {
        let records = evaluate_instance(&roots, &effective, &tol)
            .unwrap_or_else(|_| effective.iter().map(|&k| CheckRecord::failed(k)).collect());
        for rec in &records {
            let entry = stats.entry(rec.check.clone()).or_insert(CheckStats {
                pass: 0,
                fail: 0,
                min_slack: f64::INFINITY,
                max_residual: 0.0,
                equality_count: 0,
                anomalies: Vec::new(),
            });
            if rec.pass {
                entry.pass += 1;
            } else {
                entry.fail += 1;
            }
            if rec.slack < entry.min_slack {
                entry.min_slack = rec.slack;
            }
            if rec.check == CheckKind::DerivativeIdentity.name() && rec.lhs.is_finite() {
                entry.max_residual = entry.max_residual.max(rec.lhs.abs());
            }
            if rec.equality == Some(true) {
                entry.equality_count += 1;
            }
            if rec.anomaly {
                entry.anomalies.push(AnomalyRecord {
                    index,
                    roots: to_pairs(roots.roots()),
                });
            }
        }
        if let Some(w) = jsonl.as_deref_mut() {
            let record = InstanceRecord {
                index,
                degree: roots.len(),
                roots: to_pairs(roots.roots()),
                checks: &records,
            };
            serde_json::to_writer(&mut *w, &record)?;
            w.write_all(b"\n")?;
        }
    }
    Ok(EnsembleSummary {
        count: config.count,
        checks: stats,
    })
}

/// Runs the suite and persists `ensemble.jsonl` plus `summary.csv` under
/// `dir`. Returns the two paths with the summary.
pub fn run_suite_to_dir(
    config: &EnsembleConfig,
    checks: &[CheckKind],
    dir: &Path,
) -> Result<(PathBuf, PathBuf, EnsembleSummary)> {
    std::fs::create_dir_all(dir)?;
    let jsonl_path = dir.join("ensemble.jsonl");
    let csv_path = dir.join("summary.csv");
    let mut file = std::io::BufWriter::new(std::fs::File::create(&jsonl_path)?);
    let summary = run_suite(config, checks, Some(&mut file))?;
    file.flush()?;
    std::fs::write(&csv_path, summary.to_csv())?;
    Ok((jsonl_path, csv_path, summary))
}

/// Evaluates the selected checks on one root set.
pub fn evaluate_instance(
    roots: &RootSet,
    checks: &[CheckKind],
    tol: &Tolerances,
) -> Result<Vec<CheckRecord>> {
    let needs_w = checks.iter().any(|k| {
        matches!(
            k,
            CheckKind::Schoenberg
                | CheckKind::QuarticGeneral
                | CheckKind::QuarticCentered
                | CheckKind::DebruinSharma
                | CheckKind::Schur
                | CheckKind::KyFan
                | CheckKind::Thm12Identity
                | CheckKind::Thm12Power2
                | CheckKind::Thm12Power4
                | CheckKind::DerivativeIdentity
        )
    });
    let w = if needs_w {
        Some(critical_points(roots)?)
    } else {
        None
    };
    let sums = w.as_ref().map(|res| {
        let mut s2 = 0.0;
        let mut s4 = 0.0;
        for v in &res.critical_points.values {
            let r2 = v.norm_sqr();
            s2 += r2;
            s4 += r2 * r2;
        }
        (s2, s4)
    });
    let needs_eta = checks.iter().any(|k| {
        matches!(
            k,
            CheckKind::Thm12Identity
                | CheckKind::Thm12Power2
                | CheckKind::Thm12Power4
                | CheckKind::Thm13
                | CheckKind::Weyl
        )
    });
    let eta = if needs_eta {
        Some(eta_values(roots)?)
    } else {
        None
    };

    let mut records = Vec::with_capacity(checks.len());
    for &kind in checks {
        let record = match kind {
            CheckKind::Schoenberg => {
                let rep = schoenberg_with_lhs(roots, sums.unwrap().0, tol);
                let pass = rep.passes(roots, tol);
                CheckRecord::from_inequality(kind, &rep, pass)
            }
            CheckKind::QuarticGeneral => {
                let rep = quartic_general_with_lhs(roots, sums.unwrap().1, tol);
                let pass = rep.passes(roots, tol);
                CheckRecord::from_inequality(kind, &rep, pass)
            }
            CheckKind::QuarticCentered | CheckKind::DebruinSharma => {
                // Centered variants run on the mass-centre-projected roots;
                // critical points translate along, so the shifted moduli are
                // reused rather than recomputed.
                let mu = roots.mass_center();
                let centered = roots.centered();
                let sum4: f64 = w
                    .as_ref()
                    .unwrap()
                    .critical_points
                    .values
                    .iter()
                    .map(|v| (v - mu).norm_sqr().powi(2))
                    .sum();
                let rep = if kind == CheckKind::QuarticCentered {
                    quartic_centered_with_lhs(&centered, sum4, tol)
                } else {
                    debruin_sharma_with_lhs(&centered, sum4, tol)
                };
                match rep {
                    Ok(rep) => {
                        let pass = rep.passes(&centered, tol);
                        CheckRecord::from_inequality(kind, &rep, pass)
                    }
                    Err(_) => CheckRecord::failed(kind),
                }
            }
            CheckKind::Schur => {
                let rep = schur_with_lhs(roots, sums.unwrap().0, tol);
                let pass = rep.passes(roots, tol);
                CheckRecord::from_inequality(kind, &rep, pass)
            }
            CheckKind::KyFan => {
                let left: Vec<f64> = w
                    .as_ref()
                    .unwrap()
                    .critical_points
                    .values
                    .iter()
                    .map(|v| v.re)
                    .collect();
                match hermitian_part_eigenvalues(roots) {
                    Ok(right) => majorization_record(kind, &left, &right, tol),
                    Err(_) => CheckRecord::failed(kind),
                }
            }
            CheckKind::Thm12Identity | CheckKind::Thm12Power2 | CheckKind::Thm12Power4 => {
                let phi = match kind {
                    CheckKind::Thm12Identity => PhiTransform::Identity,
                    CheckKind::Thm12Power2 => PhiTransform::Power { p: 2.0 },
                    _ => PhiTransform::Power { p: 4.0 },
                };
                let left: Vec<f64> = w
                    .as_ref()
                    .unwrap()
                    .critical_points
                    .values
                    .iter()
                    .map(|v| phi.apply(v.norm()))
                    .collect();
                let right: Vec<f64> = eta
                    .as_ref()
                    .unwrap()
                    .iter()
                    .map(|&e| phi.apply(e.sqrt()))
                    .collect();
                majorization_record(kind, &left, &right, tol)
            }
            CheckKind::Thm13 => {
                let circ = Circulant::from_spectrum(roots);
                match circ
                    .leading_submatrix()
                    .and_then(|sub| crate::linalg::eig_hermitian(&sub, 1e-8))
                {
                    Ok(xi) => {
                        let right: Vec<f64> =
                            eta.as_ref().unwrap().iter().map(|&e| e.sqrt()).collect();
                        majorization_record(kind, &xi, &right, tol)
                    }
                    Err(_) => CheckRecord::failed(kind),
                }
            }
            CheckKind::Weyl => {
                // Squared comparison: sigma_i^2 = eig_i(C_{n-1} C*_{n-1})
                // against eta_i, avoiding the sqrt noise floor near zero.
                let circ = Circulant::from_spectrum(roots);
                let outcome = circ
                    .leading_submatrix()
                    .and_then(|sub| {
                        let gram = sub.mul(&sub.adjoint())?;
                        crate::linalg::eig_hermitian(&gram, 1e-10)
                    })
                    .and_then(|sigma_sq| {
                        let structure = rank_one_structure_ok(roots, 1e-10)?;
                        Ok((sigma_sq, structure))
                    });
                match outcome {
                    Ok((sigma_sq, structure)) => {
                        let eta = eta.as_ref().unwrap();
                        let scale_sq = eta.first().map_or(1.0, |&e| e.max(1.0));
                        let mut min_slack = f64::INFINITY;
                        for (s2, e) in sigma_sq.iter().zip(eta.iter()) {
                            min_slack = min_slack.min(e - s2);
                        }
                        let pointwise = min_slack >= -tol.majorization * scale_sq;
                        CheckRecord {
                            check: kind.name().to_string(),
                            lhs: sigma_sq.first().map_or(0.0, |&s| s.max(0.0).sqrt()),
                            rhs: eta.first().map_or(0.0, |&e| e.sqrt()),
                            slack: min_slack,
                            pass: pointwise && structure,
                            equality: None,
                            collinear: None,
                            anomaly: false,
                        }
                    }
                    Err(_) => CheckRecord::failed(kind),
                }
            }
            CheckKind::DerivativeIdentity => {
                // The coefficient-route residual holds its threshold up to
                // degree 20; beyond that the recursion's conditioning
                // dominates, so higher degrees are not recorded.
                if roots.len() > 20 {
                    continue;
                }
                let residual = w.as_ref().unwrap().verification_residual;
                let pass = residual.is_finite() && residual <= tol.residual;
                CheckRecord {
                    check: kind.name().to_string(),
                    lhs: residual,
                    rhs: tol.residual,
                    slack: tol.residual - residual,
                    pass,
                    equality: None,
                    collinear: None,
                    anomaly: false,
                }
            }
            CheckKind::NormalityEquivalence => {
                let circ = Circulant::from_spectrum(roots);
                match circ
                    .leading_submatrix()
                    .and_then(|sub| normality_defect(&sub))
                {
                    Ok(rho) => {
                        let d = collinearity_defect(roots);
                        // Both defects are scale-free and linear in the
                        // distance from the collinear manifold; fail only on
                        // decisive disagreement across the tolerance band.
                        let decisive_mismatch =
                            (d <= 1e-9 && rho >= 1e-5) || (rho <= 1e-9 && d >= 1e-5);
                        CheckRecord {
                            check: kind.name().to_string(),
                            lhs: d,
                            rhs: rho,
                            slack: 0.0,
                            pass: !decisive_mismatch,
                            equality: None,
                            collinear: Some(collinearity(roots, tol.collinearity)),
                            anomaly: false,
                        }
                    }
                    Err(_) => CheckRecord::failed(kind),
                }
            }
        };
        records.push(record);
    }
    Ok(records)
}

fn majorization_record(
    kind: CheckKind,
    left: &[f64],
    right: &[f64],
    tol: &Tolerances,
) -> CheckRecord {
    match weak_majorizes(left, right, tol.majorization) {
        Ok(rep) => {
            let min_slack = rep
                .prefix_slacks
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min);
            CheckRecord {
                check: kind.name().to_string(),
                lhs: rep.left.iter().sum(),
                rhs: rep.right.iter().sum(),
                slack: min_slack,
                pass: rep.holds,
                equality: None,
                collinear: None,
                anomaly: false,
            }
        }
        Err(_) => CheckRecord::failed(kind),
    }
}
