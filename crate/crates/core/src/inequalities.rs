//! Scalar inequalities bounding power sums of critical points, with their
//! right-hand sides computed from root data and cross-checked against
//! matrix-trace routes.
//!
//! All right-hand sides reduce to the power sums `s1 = sum l_j`,
//! `s2 = sum l_j^2`, `m2 = sum |l_j|^2`, `m4 = sum |l_j|^4`. Equality cases
//! are detected with homogeneity-correct thresholds and cross-flagged against
//! a collinearity test so that equality-without-collinearity anomalies can be
//! surfaced rather than silently asserted away.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circulant::Circulant;
use crate::differentiator::critical_points;
use crate::error::{Error, Result};
use crate::poly::RootSet;
use crate::tolerance::Tolerances;

/// Shared accumulator for every right-hand-side formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerSums {
    pub s1: Complex64,
    pub s2: Complex64,
    pub m2: f64,
    pub m4: f64,
    pub n: usize,
}

/// Exact power sums of the root multiset.
pub fn power_sums(roots: &RootSet) -> PowerSums {
    let mut s1 = Complex64::new(0.0, 0.0);
    let mut s2 = Complex64::new(0.0, 0.0);
    let mut m2 = 0.0;
    let mut m4 = 0.0;
    for &z in roots.roots() {
        s1 += z;
        s2 += z * z;
        let r2 = z.norm_sqr();
        m2 += r2;
        m4 += r2 * r2;
    }
    PowerSums {
        s1,
        s2,
        m2,
        m4,
        n: roots.len(),
    }
}

/// Which inequality a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityName {
    Schoenberg,
    QuarticGeneral,
    QuarticCentered,
    DebruinSharma,
    Schur,
}

impl InequalityName {
    /// Homogeneity degree of both sides.
    pub fn order(&self) -> i32 {
        match self {
            InequalityName::Schoenberg | InequalityName::Schur => 2,
            _ => 4,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            InequalityName::Schoenberg => "schoenberg",
            InequalityName::QuarticGeneral => "quartic_general",
            InequalityName::QuarticCentered => "quartic_centered",
            InequalityName::DebruinSharma => "debruin_sharma",
            InequalityName::Schur => "schur",
        }
    }
}

/// Verdict for one inequality on one input.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InequalityReport {
    pub name: InequalityName,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; nonnegative up to tolerance when the inequality holds.
    pub slack: f64,
    /// Whether the slack vanishes at the homogeneity-correct threshold.
    pub equality: bool,
    /// Whether the roots lie on one straight line.
    pub collinear: bool,
}

impl InequalityReport {
    fn build(name: InequalityName, lhs: f64, rhs: f64, roots: &RootSet, tol: &Tolerances) -> Self {
        let scale = roots.scale();
        let eq_tol = match name.order() {
            2 => tol.quadratic * scale.powi(2),
            _ => tol.quartic * scale.powi(4),
        };
        let slack = rhs - lhs;
        InequalityReport {
            name,
            lhs,
            rhs,
            slack,
            equality: slack.abs() <= eq_tol,
            collinear: collinearity(roots, tol.collinearity),
        }
    }

    /// Whether the inequality holds up to the violation threshold.
    pub fn passes(&self, roots: &RootSet, tol: &Tolerances) -> bool {
        let scale = roots.scale();
        let viol = match self.name.order() {
            2 => tol.violation_q2(scale),
            _ => tol.violation_q4(scale),
        };
        self.slack >= -viol
    }

    /// Equality held although the roots are not collinear.
    pub fn anomaly(&self) -> bool {
        self.equality && !self.collinear
    }
}

/// Sum of squared critical-point moduli, computed through the circulant
/// submatrix route.
pub fn sum_abs_w(roots: &RootSet) -> Result<(f64, f64)> {
    let result = critical_points(roots)?;
    let mut sum2 = 0.0;
    let mut sum4 = 0.0;
    for w in &result.critical_points.values {
        let r2 = w.norm_sqr();
        sum2 += r2;
        sum4 += r2 * r2;
    }
    Ok((sum2, sum4))
}

/// Quadratic bound: `sum |w_k|^2 <= |s1|^2/n^2 + (n-2)/n * m2`, equality
/// exactly on collinear root sets.
pub fn schoenberg_check(roots: &RootSet, tol: &Tolerances) -> Result<InequalityReport> {
    let (sum2, _) = sum_abs_w(roots)?;
    Ok(schoenberg_with_lhs(roots, sum2, tol))
}

pub fn schoenberg_with_lhs(roots: &RootSet, sum_w2: f64, tol: &Tolerances) -> InequalityReport {
    let ps = power_sums(roots);
    let n = ps.n as f64;
    let rhs = ps.s1.norm_sqr() / (n * n) + (n - 2.0) / n * ps.m2;
    InequalityReport::build(InequalityName::Schoenberg, sum_w2, rhs, roots, tol)
}

/// Quartic bound for arbitrary complex roots. The five-term right-hand side
/// equals `Tr(B B~)` identically; the third term carries
/// `|s2/n - s1^2/n^2|^2`, the square of the full `sum c_k c_{n-k}` series.
pub fn quartic_general_check(roots: &RootSet, tol: &Tolerances) -> Result<InequalityReport> {
    let (_, sum4) = sum_abs_w(roots)?;
    Ok(quartic_general_with_lhs(roots, sum4, tol))
}

pub fn quartic_general_with_lhs(
    roots: &RootSet,
    sum_w4: f64,
    tol: &Tolerances,
) -> InequalityReport {
    let rhs = quartic_general_rhs(roots);
    InequalityReport::build(InequalityName::QuarticGeneral, sum_w4, rhs, roots, tol)
}

/// Root-data form of `Tr(B B~)`.
pub fn quartic_general_rhs(roots: &RootSet) -> f64 {
    let ps = power_sums(roots);
    let n = ps.n as f64;
    let c0 = ps.s1 / n;
    let t1 = (n - 6.0) / n * ps.m4;
    let t2 = ps.m2 * ps.m2 / (n * n);
    let t3 = (ps.s2 / n - (ps.s1 * ps.s1) / (n * n)).norm_sqr();
    let t4 = 2.0 / n
        * roots
            .roots()
            .iter()
            .map(|&z| z.norm_sqr() * (z + c0).norm_sqr())
            .sum::<f64>();
    let t5 = -4.0 / (n * n * n) * ps.m2 * ps.s1.norm_sqr();
    t1 + t2 + t3 + t4 + t5
}

/// Quartic bound for centered roots (`s1 = 0`):
/// `(n-4)/n * m4 + m2^2/n^2 + |s2|^2/n^2`.
pub fn quartic_centered_check(roots: &RootSet, tol: &Tolerances) -> Result<InequalityReport> {
    let (_, sum4) = sum_abs_w(roots)?;
    quartic_centered_with_lhs(roots, sum4, tol)
}

pub fn quartic_centered_with_lhs(
    roots: &RootSet,
    sum_w4: f64,
    tol: &Tolerances,
) -> Result<InequalityReport> {
    let ps = require_centered(roots, tol)?;
    let n = ps.n as f64;
    let rhs = (n - 4.0) / n * ps.m4 + ps.m2 * ps.m2 / (n * n) + ps.s2.norm_sqr() / (n * n);
    Ok(InequalityReport::build(
        InequalityName::QuarticCentered,
        sum_w4,
        rhs,
        roots,
        tol,
    ))
}

/// The weaker conjectured bound for centered roots:
/// `(n-4)/n * m4 + 2 m2^2/n^2`. Always at least the centered bound, since
/// `|s2| <= m2`.
pub fn debruin_sharma_check(roots: &RootSet, tol: &Tolerances) -> Result<InequalityReport> {
    let (_, sum4) = sum_abs_w(roots)?;
    debruin_sharma_with_lhs(roots, sum4, tol)
}

pub fn debruin_sharma_with_lhs(
    roots: &RootSet,
    sum_w4: f64,
    tol: &Tolerances,
) -> Result<InequalityReport> {
    let ps = require_centered(roots, tol)?;
    let n = ps.n as f64;
    let rhs = (n - 4.0) / n * ps.m4 + 2.0 * ps.m2 * ps.m2 / (n * n);
    Ok(InequalityReport::build(
        InequalityName::DebruinSharma,
        sum_w4,
        rhs,
        roots,
        tol,
    ))
}

fn require_centered(roots: &RootSet, tol: &Tolerances) -> Result<PowerSums> {
    let ps = power_sums(roots);
    let center = ps.s1.norm() / ps.n as f64;
    if center > tol.quadratic * roots.scale() {
        return Err(Error::NotCentered {
            mass_center: center,
        });
    }
    Ok(ps)
}

/// Trace bound on the submatrix itself:
/// `sum |w_k|^2 <= Tr(C_{n-1} C*_{n-1}) = (n-1)|c_0|^2 + (n-2) sum_{k>=1} |c_k|^2`,
/// with equality exactly when the submatrix is normal (collinear roots).
pub fn schur_check(roots: &RootSet, tol: &Tolerances) -> Result<InequalityReport> {
    let (sum2, _) = sum_abs_w(roots)?;
    Ok(schur_with_lhs(roots, sum2, tol))
}

pub fn schur_with_lhs(roots: &RootSet, sum_w2: f64, tol: &Tolerances) -> InequalityReport {
    let circ = Circulant::from_spectrum(roots);
    let c = circ.first_row();
    let n = c.len() as f64;
    let rhs =
        (n - 1.0) * c[0].norm_sqr() + (n - 2.0) * c[1..].iter().map(|z| z.norm_sqr()).sum::<f64>();
    InequalityReport::build(InequalityName::Schur, sum_w2, rhs, roots, tol)
}

/// `Tr(B B~)` from the circulant coefficients alone:
/// `a_0^2 + (n-4) e_0 + |sum c_k c_{n-k}|^2 + 2 a_0 |c_0|^2 + 2 sum a_k
/// [c_0 conj(c_k) + conj(c_0) c_{n-k}]`, with `e_0 = sum |a_k|^2` the
/// diagonal of `A A*`. The imaginary part of the accumulated sum is rounding
/// noise and is dropped.
pub fn trace_bb(circulant: &Circulant) -> Result<f64> {
    let n = circulant.dim();
    if n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, min: 2 });
    }
    let c = circulant.first_row();
    let a = circulant.gram();
    let a_row = a.first_row();
    let a0 = a_row[0].re;
    let e0: f64 = a_row.iter().map(|z| z.norm_sqr()).sum();
    let cross: Complex64 = (1..n).map(|k| c[k] * c[n - k]).sum();
    let mut acc = Complex64::new(
        a0 * a0 + (n as f64 - 4.0) * e0 + cross.norm_sqr() + 2.0 * a0 * c[0].norm_sqr(),
        0.0,
    );
    for k in 1..n {
        acc += 2.0 * a_row[k] * (c[0] * c[k].conj() + c[0].conj() * c[n - k]);
    }
    Ok(acc.re)
}

/// Collinearity through the centered second moment: with `mu = s1/n`,
/// `|sum (l-mu)^2| = sum |l-mu|^2` holds exactly when all the roots lie on
/// one straight line; the degenerate all-equal case counts as collinear.
pub fn collinearity(roots: &RootSet, tol: f64) -> bool {
    let (t_abs, s) = centered_moments(roots);
    let scale = roots.scale();
    if s <= tol * scale * scale {
        return true;
    }
    t_abs >= (1.0 - tol) * s
}

/// Scale-free linear collinearity defect: `sqrt(1 - |T|/S)` with the
/// centered moments `T = sum (l-mu)^2`, `S = sum |l-mu|^2`; zero for
/// degenerate (all-equal) root sets. Linear in the distance from the
/// collinear manifold, which makes it comparable to the normality defect.
pub fn collinearity_defect(roots: &RootSet) -> f64 {
    let (t_abs, s) = centered_moments(roots);
    let scale = roots.scale();
    if s <= f64::EPSILON * scale * scale {
        return 0.0;
    }
    (1.0 - t_abs / s).max(0.0).sqrt()
}

fn centered_moments(roots: &RootSet) -> (f64, f64) {
    let mu = roots.mass_center();
    let mut t = Complex64::new(0.0, 0.0);
    let mut s = 0.0;
    for &z in roots.roots() {
        let d = z - mu;
        t += d * d;
        s += d.norm_sqr();
    }
    (t.norm(), s)
}
