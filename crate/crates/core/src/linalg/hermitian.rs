//! Hermitian eigenvalues: Householder tridiagonalization, then implicit QL
//! with Wilkinson shifts on the real symmetric tridiagonal form.

use num_complex::Complex64;

use super::DenseMatrix;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Eigenvalues of a (numerically) Hermitian matrix, unordered.
pub(super) fn eigenvalues(m: &DenseMatrix) -> Result<Vec<f64>> {
    let n = m.rows();
    if n == 1 {
        return Ok(vec![m[(0, 0)].re]);
    }
    let (mut d, mut e) = tridiagonalize(m);
    ql_implicit(&mut d, &mut e)?;
    Ok(d)
}

/// Reduces to Hermitian tridiagonal form and returns the real diagonal `d`
/// plus subdiagonal magnitudes `e` (a diagonal phase similarity makes the
/// off-diagonal entries real without touching the spectrum).
fn tridiagonalize(m: &DenseMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = m.rows();
    let mut a = m.clone();
    for k in 0..n.saturating_sub(2) {
        let len = n - k - 1;
        let mut v: Vec<Complex64> = (0..len).map(|i| a[(k + 1 + i, k)]).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let tail: f64 = v[1..].iter().map(|z| z.norm_sqr()).sum();
        if tail == 0.0 {
            continue;
        }
        let phase = if v[0].norm() > 0.0 {
            v[0] / v[0].norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        v[0] += phase * norm;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        let beta = 2.0 / vnorm2;
        // Two-sided Hermitian update restricted to the trailing block plus
        // the coupling column k. Left then right keeps it simple and O(n^2).
        for j in k..n {
            let mut s = ZERO;
            for i in 0..len {
                s += v[i].conj() * a[(k + 1 + i, j)];
            }
            s *= beta;
            for i in 0..len {
                let upd = v[i] * s;
                a[(k + 1 + i, j)] -= upd;
            }
        }
        for i in k..n {
            let mut s = ZERO;
            for j in 0..len {
                s += a[(i, k + 1 + j)] * v[j];
            }
            s *= beta;
            for j in 0..len {
                let upd = s * v[j].conj();
                a[(i, k + 1 + j)] -= upd;
            }
        }
        for i in k + 2..n {
            a[(i, k)] = ZERO;
            a[(k, i)] = ZERO;
        }
    }
    let d: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    let e: Vec<f64> = (0..n - 1).map(|i| a[(i + 1, i)].norm()).collect();
    (d, e)
}

/// Implicit QL with Wilkinson shift on a real symmetric tridiagonal matrix;
/// eigenvalues land in `d`. `e` holds the n-1 subdiagonal entries.
fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    // Norm-level floor for the deflation test: a purely relative test never
    // fires when the local diagonal entries vanish while the off-diagonals
    // sit at rounding-noise level (rank-deficient inputs).
    let anorm = (0..n)
        .map(|i| d[i].abs() + if i < n - 1 { e[i].abs() } else { 0.0 })
        .fold(0.0f64, f64::max);
    let floor = f64::EPSILON * anorm;
    // Work with an e-buffer of length n (trailing slot is scratch).
    let mut ee = vec![0.0; n];
    ee[..n - 1].copy_from_slice(e);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if ee[m].abs() <= (f64::EPSILON * dd).max(floor) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::EigNonConvergence { sweeps: 50 });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * ee[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + ee[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflowed = false;
            for i in (l..m).rev() {
                let mut f = s * ee[i];
                let b = c * ee[i];
                r = f.hypot(g);
                ee[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    ee[m] = 0.0;
                    underflowed = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                f = (d[i] - g) * s + 2.0 * c * b;
                p = s * f;
                d[i + 1] = g + p;
                g = c * f - b;
            }
            if underflowed {
                continue;
            }
            d[l] -= p;
            ee[l] = g;
            ee[m] = 0.0;
        }
    }
    e.copy_from_slice(&ee[..n - 1]);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_hermitian_3x3() {
        // Eigenvalues computed against the characteristic polynomial oracle.
        let m = DenseMatrix::from_rows(&[
            vec![c64(2.0, 0.0), c64(1.0, 1.0), c64(0.0, -2.0)],
            vec![c64(1.0, -1.0), c64(-1.0, 0.0), c64(0.5, 0.0)],
            vec![c64(0.0, 2.0), c64(0.5, 0.0), c64(3.0, 0.0)],
        ])
        .unwrap();
        let mut eigs = eigenvalues(&m).unwrap();
        eigs.sort_by(f64::total_cmp);
        let p = super::super::char_poly(&m).unwrap();
        for &x in &eigs {
            let v = p.evaluate(Complex64::new(x, 0.0)).norm();
            assert!(v < 1e-10, "residual {v} at {x}");
        }
        let sum: f64 = eigs.iter().sum();
        assert!((sum - 4.0).abs() < 1e-12); // trace
    }

    #[test]
    fn rank_one_matrix_converges() {
        // v v* has one nonzero eigenvalue; the deflation test must fire on
        // noise-level off-diagonals even though the local diagonals vanish.
        let n = 60;
        let v: Vec<Complex64> = (0..n)
            .map(|k| {
                let t = k as f64 * 0.37;
                c64(t.sin() * 1.3, t.cos() * 0.7)
            })
            .collect();
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = v[i] * v[j].conj();
            }
        }
        let mut eigs = eigenvalues(&m).unwrap();
        eigs.sort_by(|a, b| b.total_cmp(a));
        let norm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        assert!((eigs[0] - norm2).abs() <= 1e-12 * norm2);
        for &e in &eigs[1..] {
            assert!(e.abs() <= 1e-12 * norm2);
        }
    }

    #[test]
    fn already_tridiagonal() {
        let m = DenseMatrix::from_rows(&[
            vec![c64(1.0, 0.0), c64(2.0, 0.0), c64(0.0, 0.0)],
            vec![c64(2.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0)],
            vec![c64(0.0, 0.0), c64(2.0, 0.0), c64(1.0, 0.0)],
        ])
        .unwrap();
        let mut eigs = eigenvalues(&m).unwrap();
        eigs.sort_by(f64::total_cmp);
        // 1 + 2*sqrt(2)*cos(k pi / 4), k = 1..3 -> {1 - 2, 1, 1 + 2}
        let expected = [1.0 - 2.0 * 2.0f64.sqrt(), 1.0, 1.0 + 2.0 * 2.0f64.sqrt()];
        for (a, b) in eigs.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }
}
