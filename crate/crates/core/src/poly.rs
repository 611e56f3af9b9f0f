//! Complex polynomial arithmetic, canonical root ordering, and an
//! Aberth–Ehrlich root finder used as an independent oracle.
//!
//! Polynomials are stored as ascending coefficient vectors with the leading
//! coefficient pinned to exactly 1. Root sets carry a canonical arrangement:
//! modulus descending, ties broken by principal argument ascending in
//! `[0, 2pi)`, remaining ties by insertion order. The canonical arrangement is
//! what makes the root-set-to-circulant map a function.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Relative gap below which two moduli are treated as tied during canonical
/// ordering. Exact float comparison is too brittle: a DFT round trip perturbs
/// equal moduli by a few ulps and would otherwise let that noise override the
/// argument tiebreak.
const MODULUS_TIE_TOL: f64 = 1e-12;

/// Monic complex polynomial, coefficients ascending by degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds from an ascending coefficient vector whose last entry must be
    /// exactly 1. Degree must be at least 1.
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyInput);
        }
        if coeffs.len() == 1 {
            return Err(Error::ConstantPolynomial);
        }
        let lead = *coeffs.last().unwrap();
        if lead != Complex64::new(1.0, 0.0) {
            return Err(Error::NotMonic(lead));
        }
        Ok(Self { coeffs })
    }

    /// Builds from a general coefficient vector by dividing through by the
    /// leading coefficient.
    pub fn monic_from(coeffs: &[Complex64]) -> Result<Self> {
        let lead = match coeffs.last() {
            None => return Err(Error::EmptyInput),
            Some(&l) => l,
        };
        if coeffs.len() == 1 {
            return Err(Error::ConstantPolynomial);
        }
        if lead == Complex64::new(0.0, 0.0) {
            return Err(Error::NotMonic(lead));
        }
        let mut v: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
        *v.last_mut().unwrap() = Complex64::new(1.0, 0.0);
        Ok(Self { coeffs: v })
    }

    /// Monic expansion of the product of `(z - lambda_j)`.
    pub fn from_roots(roots: &RootSet) -> Self {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &r in roots.roots() {
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= r * c;
            }
            coeffs = next;
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    /// Coefficient vector of the derivative: entry `k` is `(k+1) * coeff[k+1]`.
    /// The result is not monic; its leading coefficient equals the degree.
    pub fn derivative(&self) -> Vec<Complex64> {
        derivative_coeffs(&self.coeffs).expect("degree >= 1 by invariant")
    }

    /// Derivative normalized to a monic polynomial. Errors when the
    /// derivative is constant (input degree 1).
    pub fn derivative_monic(&self) -> Result<Polynomial> {
        Polynomial::monic_from(&self.derivative())
    }
}

/// Derivative of a general ascending coefficient vector.
pub fn derivative_coeffs(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    if coeffs.len() < 2 {
        return Err(Error::ConstantPolynomial);
    }
    Ok(coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect())
}

/// Horner evaluation of an ascending coefficient vector.
pub fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Multiset of roots in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    roots: Vec<Complex64>,
}

impl RootSet {
    /// Canonicalizes and wraps a non-empty list of roots.
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self {
            roots: canonical_order(&values),
        })
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Per-instance scale factor `max(1, max |lambda_j|)` used to make
    /// tolerances homogeneity-correct.
    pub fn scale(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(1.0, f64::max)
    }

    /// Translated copy `lambda_j + beta`, re-canonicalized.
    pub fn translate(&self, beta: Complex64) -> RootSet {
        RootSet::new(self.roots.iter().map(|&z| z + beta).collect()).expect("non-empty")
    }

    /// Mass centre `(1/n) * sum lambda_j`.
    pub fn mass_center(&self) -> Complex64 {
        self.roots.iter().sum::<Complex64>() / self.roots.len() as f64
    }

    /// Centered copy with the mass centre translated to zero.
    pub fn centered(&self) -> RootSet {
        self.translate(-self.mass_center())
    }
}

/// Principal argument mapped to `[0, 2pi)`.
fn principal_arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a < 0.0 {
        a + TAU
    } else {
        a
    }
}

/// Stable sort by (modulus descending, argument ascending in `[0, 2pi)`,
/// insertion order). Moduli within a relative `1e-12` of each other are
/// grouped as ties so the argument tiebreak engages.
pub fn canonical_order(values: &[Complex64]) -> Vec<Complex64> {
    let n = values.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        values[b]
            .norm()
            .total_cmp(&values[a].norm())
            .then(a.cmp(&b))
    });
    let scale = values.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let tie = MODULUS_TIE_TOL * scale;
    let mut out = Vec::with_capacity(n);
    let mut start = 0;
    for i in 1..=n {
        let boundary = i == n || values[idx[i - 1]].norm() - values[idx[i]].norm() > tie;
        if boundary {
            let mut group = idx[start..i].to_vec();
            group.sort_by(|&a, &b| {
                principal_arg(values[a])
                    .total_cmp(&principal_arg(values[b]))
                    .then(a.cmp(&b))
            });
            out.extend(group.into_iter().map(|k| values[k]));
            start = i;
        }
    }
    out
}

/// Simultaneous-iteration (Aberth–Ehrlich) root finder.
///
/// Returns all roots of `p` as a canonical root set. Exactly-zero trailing
/// coefficients are deflated first, so polynomials like `z^n` report their
/// zero roots exactly. Convergence is per-root: a root is accepted once its
/// Aberth correction falls below `tol * (1 + |z|)` or its residual falls
/// below the Horner running-error bound.
pub fn roots_oracle(p: &Polynomial, tol: f64, max_iter: usize) -> Result<RootSet> {
    let coeffs = p.coeffs();
    // Deflate exact zero roots: strip leading (low-order) zero coefficients.
    let zeros = coeffs
        .iter()
        .take_while(|c| c.re == 0.0 && c.im == 0.0)
        .count();
    let reduced = &coeffs[zeros..];
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let d = reduced.len() - 1;
    if d == 1 {
        roots.push(-reduced[0]);
        return RootSet::new(roots);
    }
    if d > 0 {
        roots.extend(aberth(reduced, tol, max_iter)?);
    }
    RootSet::new(roots)
}

fn aberth(coeffs: &[Complex64], tol: f64, max_iter: usize) -> Result<Vec<Complex64>> {
    let d = coeffs.len() - 1;
    let deriv = derivative_coeffs(coeffs).expect("degree >= 2 here");
    // Initial guesses on a root-enclosing circle, rotated by a fixed
    // 0.37 rad offset so symmetric polynomials do not stall. The radius is
    // the Cauchy bound capped by the Fujiwara bound: the Cauchy bound alone
    // grows with the largest coefficient and overflows |z|^d at moderate
    // degrees.
    let cauchy = 1.0 + coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let fujiwara = 2.0
        * (1..=d)
            .map(|k| coeffs[d - k].norm().powf(1.0 / k as f64))
            .fold(0.0, f64::max);
    let radius = cauchy.min(fujiwara).max(1e-3);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / d as f64 + 0.37))
        .collect();
    let mut converged = vec![false; d];
    let mut best_residual = f64::INFINITY;

    for _ in 0..max_iter {
        let mut max_residual: f64 = 0.0;
        let mut all_done = true;
        for i in 0..d {
            if converged[i] {
                continue;
            }
            let zi = z[i];
            if !zi.re.is_finite() || !zi.im.is_finite() {
                // Rescue a blown-up iterate back onto the enclosing circle.
                z[i] = Complex64::from_polar(radius * 0.73, TAU * i as f64 / d as f64 + 1.13);
                all_done = false;
                continue;
            }
            let pv = horner(coeffs, zi);
            max_residual = max_residual.max(pv.norm());
            // Horner running error bound: sum |c_k| |z|^k.
            let mut bound = 0.0;
            let mut pw = 1.0;
            let r = zi.norm();
            for c in coeffs {
                bound += c.norm() * pw;
                pw *= r;
            }
            if pv.norm() <= 8.0 * d as f64 * f64::EPSILON * bound {
                converged[i] = true;
                continue;
            }
            let dv = horner(&deriv, zi);
            let newton = if dv.norm() == 0.0 {
                // Stationary point hit exactly: nudge off it.
                z[i] += Complex64::new(1e-6 * radius, 1e-6 * radius);
                all_done = false;
                continue;
            } else {
                pv / dv
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    let diff = zi - zj;
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let delta = if denom.norm() < 1e-300 {
                newton
            } else {
                newton / denom
            };
            z[i] = zi - delta;
            if delta.norm() <= tol * (1.0 + zi.norm()) {
                converged[i] = true;
            } else {
                all_done = false;
            }
        }
        best_residual = best_residual.min(max_residual);
        if all_done {
            return Ok(z);
        }
    }
    if converged.iter().all(|&c| c) {
        return Ok(z);
    }
    Err(Error::RootsNonConvergence {
        iterations: max_iter,
        residual: best_residual,
    })
}

/// Aberth–Ehrlich iteration targeting the critical points of the polynomial
/// with the given roots, evaluating through root sums instead of expanded
/// coefficients.
///
/// The Newton ratio for `p'` is `p'/p'' = S1 / (S1^2 - S2)` with
/// `S1 = sum m_j/(z - l_j)` and `S2 = sum m_j/(z - l_j)^2`, so the expanded
/// coefficient vector never appears. At degree 25 and beyond the coefficient
/// representation of `p'` carries root condition numbers far above `1/eps`
/// (tiny backward errors move clustered critical points at the 1e-1 level),
/// while the root-sum route stays conditioned like the roots themselves.
/// Exact multiple roots are deflated first: a root of multiplicity `m` is
/// itself a critical point of multiplicity `m-1`.
pub fn derivative_roots_oracle(roots: &RootSet, tol: f64, max_iter: usize) -> Result<RootSet> {
    let n = roots.len();
    if n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, min: 2 });
    }
    // Exact-duplicate grouping.
    let mut distinct: Vec<(Complex64, usize)> = Vec::new();
    for &z in roots.roots() {
        match distinct.iter_mut().find(|(w, _)| *w == z) {
            Some((_, m)) => *m += 1,
            None => distinct.push((z, 1)),
        }
    }
    let mut found: Vec<Complex64> = Vec::with_capacity(n - 1);
    for &(z, m) in &distinct {
        for _ in 1..m {
            found.push(z);
        }
    }
    let free = distinct.len() - 1;
    if free == 0 {
        return RootSet::new(found);
    }

    // Candidates on a circle enclosing the convex hull of the roots
    // (Gauss-Lucas puts every critical point inside it).
    let centroid = roots.mass_center();
    let spread = roots
        .roots()
        .iter()
        .map(|z| (z - centroid).norm())
        .fold(0.0, f64::max);
    let radius = 1.05 * spread + 1e-3;
    let mut z: Vec<Complex64> = (0..free)
        .map(|k| centroid + Complex64::from_polar(radius, TAU * k as f64 / free as f64 + 0.37))
        .collect();
    let mut converged = vec![false; free];
    let mut best_residual = f64::INFINITY;

    for _ in 0..max_iter {
        let mut all_done = true;
        let mut max_residual: f64 = 0.0;
        for i in 0..free {
            if converged[i] {
                continue;
            }
            let zi = z[i];
            let mut s1 = Complex64::new(0.0, 0.0);
            let mut s2 = Complex64::new(0.0, 0.0);
            let mut mag = 0.0;
            let mut collided = false;
            for &(r, m) in &distinct {
                let diff = zi - r;
                if diff.norm() == 0.0 {
                    collided = true;
                    break;
                }
                let inv = diff.inv();
                s1 += inv * m as f64;
                s2 += inv * inv * m as f64;
                mag += m as f64 * inv.norm();
            }
            if collided {
                z[i] = zi + Complex64::new(1e-6 * (1.0 + radius), 1e-6 * (1.0 + radius));
                all_done = false;
                continue;
            }
            if mag > 0.0 {
                max_residual = max_residual.max(s1.norm() / mag);
            }
            // Cancellation floor of the root-sum evaluation.
            if s1.norm() <= 8.0 * n as f64 * f64::EPSILON * mag {
                converged[i] = true;
                continue;
            }
            let curvature = s1 * s1 - s2;
            if curvature.norm() == 0.0 {
                z[i] = zi + Complex64::new(1e-6 * (1.0 + radius), -1e-6 * (1.0 + radius));
                all_done = false;
                continue;
            }
            let newton = s1 / curvature;
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (k, &zk) in z.iter().enumerate() {
                if k != i {
                    let diff = zi - zk;
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            // Deflated multiple-root critical points repel as well.
            for &(r, m) in &distinct {
                if m > 1 {
                    let diff = zi - r;
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv() * (m - 1) as f64;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let delta = if denom.norm() < 1e-300 {
                newton
            } else {
                newton / denom
            };
            z[i] = zi - delta;
            if delta.norm() <= tol * (1.0 + zi.norm()) {
                converged[i] = true;
            } else {
                all_done = false;
            }
        }
        best_residual = best_residual.min(max_residual);
        if all_done {
            found.extend(z);
            return RootSet::new(found);
        }
    }
    if converged.iter().all(|&c| c) {
        found.extend(z);
        return RootSet::new(found);
    }
    Err(Error::RootsNonConvergence {
        iterations: max_iter,
        residual: best_residual,
    })
}

/// A bijection between two equally sized multisets of complex numbers and the
/// maximum pairwise distance under it.
#[derive(Debug, Clone)]
pub struct Matching {
    /// Pairs of indices `(i, j)` matching `a[i]` with `b[j]`.
    pub pairs: Vec<(usize, usize)>,
    pub max_distance: f64,
}

/// Minimal-bottleneck bijection between two multisets.
///
/// A greedy global-nearest pass seeds the answer; a feasibility search over
/// candidate distances (perfect matching on the thresholded bipartite graph)
/// then refines it to the optimal bottleneck. The greedy maximum is an upper
/// bound on the optimum, so it bounds the search from above.
pub fn match_multisets(a: &[Complex64], b: &[Complex64]) -> Result<Matching> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len();
    if n == 0 {
        return Ok(Matching {
            pairs: vec![],
            max_distance: 0.0,
        });
    }
    let dist = |i: usize, j: usize| (a[i] - b[j]).norm();

    // Greedy pass: repeatedly take the globally closest unmatched pair.
    let mut edges: Vec<(f64, usize, usize)> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            edges.push((dist(i, j), i, j));
        }
    }
    edges.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut used_a = vec![false; n];
    let mut used_b = vec![false; n];
    let mut greedy_max: f64 = 0.0;
    let mut taken = 0;
    for &(d, i, j) in &edges {
        if !used_a[i] && !used_b[j] {
            used_a[i] = true;
            used_b[j] = true;
            greedy_max = greedy_max.max(d);
            taken += 1;
            if taken == n {
                break;
            }
        }
    }

    // Bottleneck refinement: binary search candidate thresholds for a
    // perfect matching using only edges within threshold.
    let mut candidates: Vec<f64> = edges.iter().map(|e| e.0).collect();
    candidates.dedup();
    let hi_idx = candidates.partition_point(|&d| d <= greedy_max);
    let mut lo = 0usize;
    let mut hi = hi_idx.saturating_sub(1);
    let mut best: Option<Vec<usize>> = None;
    while lo <= hi {
        let mid = (lo + hi) / 2;
        match perfect_matching_within(a, b, candidates[mid]) {
            Some(m) => {
                best = Some(m);
                if mid == 0 {
                    break;
                }
                hi = mid - 1;
            }
            None => {
                lo = mid + 1;
            }
        }
    }
    let assignment = match best {
        Some(m) => m,
        None => perfect_matching_within(a, b, greedy_max)
            .expect("greedy threshold always admits a perfect matching"),
    };
    let pairs: Vec<(usize, usize)> = assignment
        .iter()
        .enumerate()
        .map(|(j, &i)| (i, j))
        .collect();
    let max_distance = pairs.iter().map(|&(i, j)| dist(i, j)).fold(0.0, f64::max);
    Ok(Matching {
        pairs,
        max_distance,
    })
}

/// Kuhn's augmenting-path matching restricted to edges with distance <=
/// `threshold`. Returns, for each b-index, the matched a-index.
fn perfect_matching_within(a: &[Complex64], b: &[Complex64], threshold: f64) -> Option<Vec<usize>> {
    let n = a.len();
    let mut match_b: Vec<Option<usize>> = vec![None; n];
    fn try_augment(
        i: usize,
        a: &[Complex64],
        b: &[Complex64],
        threshold: f64,
        visited: &mut [bool],
        match_b: &mut [Option<usize>],
    ) -> bool {
        for j in 0..b.len() {
            if !visited[j] && (a[i] - b[j]).norm() <= threshold {
                visited[j] = true;
                let free = match match_b[j] {
                    None => true,
                    Some(prev) => try_augment(prev, a, b, threshold, visited, match_b),
                };
                if free {
                    match_b[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    for i in 0..n {
        let mut visited = vec![false; n];
        if !try_augment(i, a, b, threshold, &mut visited, &mut match_b) {
            return None;
        }
    }
    Some(match_b.into_iter().map(|m| m.unwrap()).collect())
}
