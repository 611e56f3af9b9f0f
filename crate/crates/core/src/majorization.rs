//! Weak majorization of critical points against singular-value data.
//!
//! The comparisons here run through the same circulant machinery: the real
//! parts of the critical points against the spectrum of the Hermitian part's
//! submatrix, moduli of critical points against the square roots of the
//! critical points of the squared-moduli polynomial, and the pointwise Weyl
//! domination of the submatrix singular values that underlies the latter.

use serde::{Deserialize, Serialize};

use crate::circulant::Circulant;
use crate::differentiator::critical_points;
use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, DenseMatrix};
use crate::poly::RootSet;
use crate::tolerance::Tolerances;

/// Increasing transforms `[0, inf) -> R` whose composition with `exp` is
/// convex; exactly the class under which weak log-majorization transfers to
/// weak majorization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PhiTransform {
    Identity,
    /// `t -> t^p` for `p > 0`.
    Power {
        p: f64,
    },
    /// `t -> ln(t + eps)` for `eps > 0`.
    ShiftedLog {
        eps: f64,
    },
}

impl PhiTransform {
    pub fn apply(&self, t: f64) -> f64 {
        match self {
            PhiTransform::Identity => t,
            PhiTransform::Power { p } => t.powf(*p),
            PhiTransform::ShiftedLog { eps } => (t + eps).ln(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            PhiTransform::Identity => "identity".into(),
            PhiTransform::Power { p } => format!("power({p})"),
            PhiTransform::ShiftedLog { eps } => format!("shifted_log({eps})"),
        }
    }
}

/// Prefix-sum comparison of two descending rearrangements.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MajorizationReport {
    /// Left vector, sorted descending.
    pub left: Vec<f64>,
    /// Right vector, sorted descending.
    pub right: Vec<f64>,
    /// `sum right[..=m] - sum left[..=m]` for each prefix.
    pub prefix_slacks: Vec<f64>,
    /// All prefix slacks nonnegative up to tolerance.
    pub holds: bool,
    /// Weak majorization plus equal totals.
    pub strong: bool,
}

/// Checks whether `b` weakly majorizes `a`: every descending prefix sum of
/// `a` is bounded by the matching prefix sum of `b`.
pub fn weak_majorizes(a: &[f64], b: &[f64], tol: f64) -> Result<MajorizationReport> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut left = a.to_vec();
    let mut right = b.to_vec();
    left.sort_by(|x, y| y.total_cmp(x));
    right.sort_by(|x, y| y.total_cmp(x));
    let scale = left
        .iter()
        .chain(right.iter())
        .map(|x| x.abs())
        .fold(1.0, f64::max);
    let mut prefix_slacks = Vec::with_capacity(left.len());
    let mut acc = 0.0;
    for (l, r) in left.iter().zip(right.iter()) {
        acc += r - l;
        prefix_slacks.push(acc);
    }
    let holds = prefix_slacks.iter().all(|&s| s >= -tol * scale);
    let strong = holds && prefix_slacks.last().is_none_or(|&s| s.abs() <= tol * scale);
    Ok(MajorizationReport {
        left,
        right,
        prefix_slacks,
        holds,
        strong,
    })
}

/// Real parts of the critical points are weakly majorized by the critical
/// points of the real-part polynomial, via the Hermitian part
/// `H_{n-1} = (C_{n-1} + C*_{n-1})/2`.
pub fn kyfan_check(roots: &RootSet, tol: &Tolerances) -> Result<MajorizationReport> {
    let result = critical_points(roots)?;
    let left: Vec<f64> = result.critical_points.values.iter().map(|w| w.re).collect();
    let right = hermitian_part_eigenvalues(roots)?;
    weak_majorizes(&left, &right, tol.majorization)
}

/// Spectrum of `H_{n-1}`, descending: the critical points of the polynomial
/// whose roots are the real parts of the input roots.
pub fn hermitian_part_eigenvalues(roots: &RootSet) -> Result<Vec<f64>> {
    let circ = Circulant::from_spectrum(roots);
    let h_sub = circ.hermitian_part().leading_submatrix()?;
    eig_hermitian(&h_sub, 1e-8)
}

/// Critical points of the squared-moduli polynomial: eigenvalues of the
/// leading submatrix of the gram circulant, clamped at zero (they are
/// critical points of a polynomial with nonnegative roots, so negatives are
/// rounding noise).
pub fn eta_values(roots: &RootSet) -> Result<Vec<f64>> {
    let circ = Circulant::from_spectrum(roots);
    let a_sub = circ.gram().leading_submatrix()?;
    let eta = eig_hermitian(&a_sub, 1e-8)?;
    Ok(eta.into_iter().map(|x| x.max(0.0)).collect())
}

/// `(Phi(|w_k|)) <_w (Phi(sqrt(eta_k)))` for the given transform.
pub fn thm12_check(
    roots: &RootSet,
    phi: &PhiTransform,
    tol: &Tolerances,
) -> Result<MajorizationReport> {
    let result = critical_points(roots)?;
    let left: Vec<f64> = result
        .critical_points
        .values
        .iter()
        .map(|w| phi.apply(w.norm()))
        .collect();
    let right: Vec<f64> = eta_values(roots)?
        .into_iter()
        .map(|e| phi.apply(e.sqrt()))
        .collect();
    weak_majorizes(&left, &right, tol.majorization)
}

/// Pointwise Weyl domination `sigma_i(C_{n-1}) <= sqrt(eta_i)` for all `i`,
/// both sorted descending. Stronger than the majorization it implies.
/// Checked in squared form (`sigma_i^2 <= eta_i`): squaring avoids the
/// square-root amplification that the `M M*` singular-value route suffers
/// near zero.
pub fn weyl_domination(roots: &RootSet, tol: &Tolerances) -> Result<bool> {
    let circ = Circulant::from_spectrum(roots);
    let sub = circ.leading_submatrix()?;
    let sigma_sq = eig_hermitian(&sub.mul(&sub.adjoint())?, 1e-10)?;
    let eta = eta_values(roots)?;
    let scale_sq = eta.first().map_or(1.0, |&e| e.max(1.0));
    Ok(sigma_sq
        .iter()
        .zip(eta.iter())
        .all(|(&s2, &e)| s2 <= e + tol.majorization * scale_sq))
}

/// Structural facts behind Weyl domination: the gram submatrix minus
/// `C_{n-1} C*_{n-1}` is the rank-one positive matrix `v v*` with
/// `v_l = c_{n-l}`.
#[derive(Debug, Clone)]
pub struct RankOneDefect {
    /// Second singular value of the difference; rank one means ~0.
    pub second_singular: f64,
    /// Smallest eigenvalue of the difference; PSD means >= -eps.
    pub min_eigenvalue: f64,
    /// Largest entry deviation from the outer product `v v*`.
    pub outer_mismatch: f64,
}

pub fn rank_one_defect(roots: &RootSet) -> Result<RankOneDefect> {
    let circ = Circulant::from_spectrum(roots);
    let n = circ.dim();
    if n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, min: 2 });
    }
    let sub = circ.leading_submatrix()?;
    let a_sub = circ.gram().leading_submatrix()?;
    let b = sub.mul(&sub.adjoint())?;
    let diff = a_sub.sub(&b)?;
    // The difference is Hermitian, so its singular values are the absolute
    // eigenvalues; the Hermitian route keeps tiny ones at eps accuracy.
    let eigs = eig_hermitian(&diff, 1e-6)?;
    let mut svs: Vec<f64> = eigs.iter().map(|e| e.abs()).collect();
    svs.sort_by(|a, b| b.total_cmp(a));
    let c = circ.first_row();
    let mut outer_mismatch: f64 = 0.0;
    for l in 1..n {
        for k in 1..n {
            let expected = c[n - l] * c[n - k].conj();
            outer_mismatch = outer_mismatch.max((diff[(l - 1, k - 1)] - expected).norm());
        }
    }
    Ok(RankOneDefect {
        second_singular: svs.get(1).copied().unwrap_or(0.0),
        min_eigenvalue: eigs.last().copied().unwrap_or(0.0),
        outer_mismatch,
    })
}

/// Rank-one PSD structure of the gram defect, within homogeneity-correct
/// tolerances.
pub fn rank_one_structure_ok(roots: &RootSet, tol: f64) -> Result<bool> {
    let defect = rank_one_defect(roots)?;
    let s2 = roots.scale().powi(2);
    Ok(defect.second_singular <= tol * s2
        && defect.min_eigenvalue >= -tol * s2
        && defect.outer_mismatch <= 1e-10 * s2)
}

/// For real positive roots: critical points of the root polynomial are
/// weakly majorized by square roots of the critical points of the
/// squared-root polynomial, after any admissible transform.
pub fn thm13_check(
    roots: &RootSet,
    phi: &PhiTransform,
    tol: &Tolerances,
) -> Result<MajorizationReport> {
    let scale = roots.scale();
    for &z in roots.roots() {
        if z.im.abs() > 1e-12 * scale || z.re <= 0.0 {
            return Err(Error::NonPositiveRoot(z));
        }
    }
    let circ = Circulant::from_spectrum(roots);
    let sub = circ.leading_submatrix()?;
    let xi = eig_hermitian(&sub, 1e-8)?;
    let left: Vec<f64> = xi.iter().map(|&x| phi.apply(x.max(0.0))).collect();
    let right: Vec<f64> = eta_values(roots)?
        .into_iter()
        .map(|e| phi.apply(e.sqrt()))
        .collect();
    weak_majorizes(&left, &right, tol.majorization)
}

/// Helper used by the submatrix-for-Hermitian-part identity: a dense matrix
/// equal to `(M + M*)/2`.
pub fn hermitian_part_dense(m: &DenseMatrix) -> Result<DenseMatrix> {
    let adj = m.adjoint();
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(i, j)] = (m[(i, j)] + adj[(i, j)]) * 0.5;
        }
    }
    Ok(out)
}
