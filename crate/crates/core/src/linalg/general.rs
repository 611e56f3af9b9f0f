//! General complex eigenvalues: Householder Hessenberg reduction followed by
//! implicit single-shift QR with Wilkinson shifts and ulp-scale deflation.

use num_complex::Complex64;

use super::DenseMatrix;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Returns the eigenvalue multiset (unordered) and a relative backward-error
/// estimate: the largest subdiagonal entry discarded at deflation, divided by
/// the Frobenius norm of the input.
pub(super) fn eigenvalues(m: &DenseMatrix) -> Result<(Vec<Complex64>, f64)> {
    let n = m.rows();
    let fro = m.frobenius_norm();
    if n == 1 {
        return Ok((vec![m[(0, 0)]], 0.0));
    }
    let mut h = m.clone();
    hessenberg(&mut h);
    let mut neglected_max: f64 = 0.0;
    let mut values = Vec::with_capacity(n);

    let max_sweeps = 30 * n;
    let mut sweeps_total = 0usize;
    let mut hi = n - 1;
    let mut its_here = 0usize;

    loop {
        // Deflation scan: find the start of the active block ending at hi.
        // The relative test carries a norm-level floor so blocks whose local
        // diagonal vanishes still deflate once the subdiagonal is noise.
        let mut lo = hi;
        while lo > 0 {
            let mut s = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if s < f64::EPSILON * fro {
                s = fro.max(f64::MIN_POSITIVE);
            }
            let sub = h[(lo, lo - 1)].norm();
            if sub <= f64::EPSILON * s {
                neglected_max = neglected_max.max(sub);
                h[(lo, lo - 1)] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            values.push(h[(hi, hi)]);
            if hi == 0 {
                break;
            }
            hi -= 1;
            its_here = 0;
            continue;
        }

        sweeps_total += 1;
        its_here += 1;
        if sweeps_total > max_sweeps {
            return Err(Error::EigNonConvergence { sweeps: max_sweeps });
        }

        let shift = if its_here.is_multiple_of(10) {
            // Exceptional shift to break rare cycling.
            h[(hi, hi)] + Complex64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };

        // Implicit single-shift bulge chase over the active block.
        let mut x = h[(lo, lo)] - shift;
        let mut y = h[(lo + 1, lo)];
        for k in lo..hi {
            let (c, s) = givens(x, y);
            if k > lo {
                let r = Complex64::new(c, 0.0) * h[(k, k - 1)] + s * h[(k + 1, k - 1)];
                h[(k, k - 1)] = r;
                h[(k + 1, k - 1)] = ZERO;
            }
            // Left rotation on rows k, k+1.
            for j in k..=hi {
                let t1 = h[(k, j)];
                let t2 = h[(k + 1, j)];
                h[(k, j)] = Complex64::new(c, 0.0) * t1 + s * t2;
                h[(k + 1, j)] = -s.conj() * t1 + Complex64::new(c, 0.0) * t2;
            }
            // Right rotation on columns k, k+1.
            let last_row = (k + 2).min(hi);
            for i in lo..=last_row {
                let t1 = h[(i, k)];
                let t2 = h[(i, k + 1)];
                h[(i, k)] = Complex64::new(c, 0.0) * t1 + s.conj() * t2;
                h[(i, k + 1)] = -s * t1 + Complex64::new(c, 0.0) * t2;
            }
            if k + 1 < hi {
                x = h[(k + 1, k)];
                y = h[(k + 2, k)];
            }
        }
    }

    let residual = if fro > 0.0 { neglected_max / fro } else { 0.0 };
    Ok((values, residual))
}

/// In-place Householder reduction to upper Hessenberg form.
fn hessenberg(h: &mut DenseMatrix) {
    let n = h.rows();
    for k in 0..n.saturating_sub(2) {
        // Reflector zeroing column k below the subdiagonal.
        let m = n - k - 1;
        let mut v: Vec<Complex64> = (0..m).map(|i| h[(k + 1 + i, k)]).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let tail = v[1..].iter().map(|z| z.norm_sqr()).sum::<f64>();
        if tail == 0.0 && v[0].im == 0.0 {
            continue; // already in Hessenberg position with a real pivot
        }
        let phase = if v[0].norm() > 0.0 {
            v[0] / v[0].norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        v[0] += phase * norm;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;
        // Left: rows k+1..n, all columns k..n.
        for j in k..n {
            let mut s = ZERO;
            for i in 0..m {
                s += v[i].conj() * h[(k + 1 + i, j)];
            }
            s *= beta;
            for i in 0..m {
                let upd = v[i] * s;
                h[(k + 1 + i, j)] -= upd;
            }
        }
        // Right: all rows, columns k+1..n.
        for i in 0..n {
            let mut s = ZERO;
            for j in 0..m {
                s += h[(i, k + 1 + j)] * v[j];
            }
            s *= beta;
            for j in 0..m {
                let upd = s * v[j].conj();
                h[(i, k + 1 + j)] -= upd;
            }
        }
        // The sub-subdiagonal entries are now exact zeros mathematically.
        for i in k + 2..n {
            h[(i, k)] = ZERO;
        }
    }
}

/// Eigenvalue of the trailing 2x2 block closest to its bottom-right entry,
/// computed cancellation-free.
fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let q = (a - d) * 0.5;
    let bc = b * c;
    if q == ZERO && bc == ZERO {
        return d;
    }
    let mut r = (q * q + bc).sqrt();
    // Pick the sign that keeps |q + r| large.
    if q.re * r.re + q.im * r.im < 0.0 {
        r = -r;
    }
    let denom = q + r;
    if denom.norm() < f64::MIN_POSITIVE {
        return d;
    }
    d - bc / denom
}

/// Complex Givens rotation with real cosine: `[c s; -conj(s) c] [x; y] = [r; 0]`.
fn givens(x: Complex64, y: Complex64) -> (f64, Complex64) {
    let yn = y.norm();
    if yn == 0.0 {
        return (1.0, ZERO);
    }
    let xn = x.norm();
    if xn == 0.0 {
        return (0.0, y.conj() / yn);
    }
    let norm = xn.hypot(yn);
    let c = xn / norm;
    let s = x * y.conj() / (xn * norm);
    (c, s)
}
