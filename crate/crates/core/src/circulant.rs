//! Circulant matrices and their exact spectral calculus.
//!
//! A circulant is stored as its first row `(c_0, ..., c_{n-1})`; the dense
//! matrix has entry `(k, l) = c_{(l-k) mod n}`. Its eigenvalues are the
//! associated polynomial `f(x) = c_0 + c_1 x + ... + c_{n-1} x^{n-1}`
//! evaluated at the n-th roots of unity `w_k = exp(2 pi i k / n)`, with the
//! eigenvector for `f(w_k)` being the Vandermonde column of `w_k`. Fixing the
//! canonical arrangement of eigenvalues makes the spectrum-to-circulant map
//! one-to-one, which is what `from_spectrum` implements.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::poly::RootSet;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Circulant matrix in first-row representation.
#[derive(Debug, Clone, PartialEq)]
pub struct Circulant {
    first_row: Vec<Complex64>,
}

impl Circulant {
    pub fn new(first_row: Vec<Complex64>) -> Result<Self> {
        if first_row.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self { first_row })
    }

    pub fn first_row(&self) -> &[Complex64] {
        &self.first_row
    }

    pub fn dim(&self) -> usize {
        self.first_row.len()
    }

    /// Eigenvalues in transform order: entry `j` is `f(w_j)`.
    pub fn spectrum_raw(&self) -> Vec<Complex64> {
        dft(&self.first_row, Direction::Forward)
    }

    /// Eigenvalues as a canonically ordered root set.
    pub fn spectrum(&self) -> RootSet {
        RootSet::new(self.spectrum_raw()).expect("circulant is non-empty")
    }

    /// The unique circulant whose spectrum is the given canonical root set:
    /// `c_k = (1/n) sum_j w_{j-1}^{-k} lambda_j`. Coefficient components
    /// below the transform noise floor are snapped to exact zero so that
    /// structurally sparse circulants (the cyclic shift for roots of unity,
    /// scalar matrices for equal roots) come out exactly sparse.
    pub fn from_spectrum(roots: &RootSet) -> Circulant {
        let n = roots.len();
        let mut row = dft(roots.roots(), Direction::Inverse);
        let inv = 1.0 / n as f64;
        for c in &mut row {
            *c *= inv;
        }
        let snap = 32.0 * n as f64 * f64::EPSILON * roots.scale();
        for c in &mut row {
            if c.re.abs() <= snap {
                c.re = 0.0;
            }
            if c.im.abs() <= snap {
                c.im = 0.0;
            }
        }
        Circulant { first_row: row }
    }

    /// Product of two circulants: circular convolution of first rows.
    pub fn multiply(&self, other: &Circulant) -> Result<Circulant> {
        let n = self.dim();
        if n != other.dim() {
            return Err(Error::SizeMismatch {
                left: n,
                right: other.dim(),
            });
        }
        let mut row = vec![ZERO; n];
        for (m, &x) in self.first_row.iter().enumerate() {
            if x == ZERO {
                continue;
            }
            for (j, &y) in other.first_row.iter().enumerate() {
                row[(m + j) % n] += x * y;
            }
        }
        Ok(Circulant { first_row: row })
    }

    /// Adjoint circulant: first row `(conj c_0, conj c_{n-1}, ..., conj c_1)`.
    /// Its eigenvalues are the conjugated eigenvalues of `self`.
    pub fn adjoint(&self) -> Circulant {
        let n = self.dim();
        let row = (0..n).map(|k| self.first_row[(n - k) % n].conj()).collect();
        Circulant { first_row: row }
    }

    /// Gram circulant `A = C C*` from the closed-form first-row entries
    /// `a_0 = sum |c_j|^2` and
    /// `a_k = sum_{j<k} c_j conj(c_{n-k+j}) + sum_{j<n-k} c_{k+j} conj(c_j)`.
    /// Its eigenvalues are `|lambda_j|^2`.
    pub fn gram(&self) -> Circulant {
        let n = self.dim();
        let c = &self.first_row;
        let mut row = vec![ZERO; n];
        row[0] = Complex64::new(c.iter().map(|z| z.norm_sqr()).sum(), 0.0);
        for k in 1..n {
            let mut a = ZERO;
            for j in 0..k {
                a += c[j] * c[n - k + j].conj();
            }
            for j in 0..n - k {
                a += c[k + j] * c[j].conj();
            }
            row[k] = a;
        }
        Circulant { first_row: row }
    }

    /// Reflection property: `c_0` real and `c_{n-k} = conj(c_k)`, which holds
    /// exactly when the circulant is self-adjoint, equivalently when all its
    /// eigenvalues are real.
    pub fn is_selfadjoint(&self, tol: f64) -> bool {
        let n = self.dim();
        let c = &self.first_row;
        if c[0].im.abs() > tol {
            return false;
        }
        let scale = c.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for k in 1..n {
            if (c[n - k] - c[k].conj()).norm() > tol * scale {
                return false;
            }
        }
        true
    }

    /// The unique positive semidefinite square root of `C C*`: the circulant
    /// whose eigenvalue at `w_j` is `|f(w_j)|`. Self-adjoint by construction
    /// and squaring to `gram` exactly in the functional calculus.
    pub fn sqrt_gram(&self) -> Circulant {
        let n = self.dim();
        let moduli: Vec<Complex64> = self
            .spectrum_raw()
            .iter()
            .map(|z| Complex64::new(z.norm(), 0.0))
            .collect();
        let scale = moduli.iter().map(|z| z.re).fold(1.0, f64::max);
        let mut row = dft(&moduli, Direction::Inverse);
        let inv = 1.0 / n as f64;
        let snap = 32.0 * n as f64 * f64::EPSILON * scale;
        for c in &mut row {
            *c *= inv;
            if c.re.abs() <= snap {
                c.re = 0.0;
            }
            if c.im.abs() <= snap {
                c.im = 0.0;
            }
        }
        Circulant { first_row: row }
    }

    /// Dense form, entry `(k, l) = c_{(l-k) mod n}`.
    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.dim();
        let mut m = DenseMatrix::zeros(n, n);
        for k in 0..n {
            for l in 0..n {
                m[(k, l)] = self.first_row[(n + l - k) % n];
            }
        }
        m
    }

    /// Leading principal `(n-1) x (n-1)` submatrix of the dense form.
    pub fn leading_submatrix(&self) -> Result<DenseMatrix> {
        let n = self.dim();
        if n < 2 {
            return Err(Error::DegreeTooSmall { degree: n, min: 2 });
        }
        let mut m = DenseMatrix::zeros(n - 1, n - 1);
        for k in 0..n - 1 {
            for l in 0..n - 1 {
                m[(k, l)] = self.first_row[(n + l - k) % n];
            }
        }
        Ok(m)
    }

    /// The Hermitian part `(C + C*)/2`, a circulant whose eigenvalues are the
    /// real parts of the eigenvalues of `C` at matching transform indices.
    pub fn hermitian_part(&self) -> Circulant {
        let adj = self.adjoint();
        let row = self
            .first_row
            .iter()
            .zip(adj.first_row.iter())
            .map(|(a, b)| (a + b) * 0.5)
            .collect();
        Circulant { first_row: row }
    }
}

enum Direction {
    /// Positive-exponent transform: `X_j = sum_k x_k w^{jk}`.
    Forward,
    /// Negative-exponent transform (unnormalized): `X_k = sum_j x_j w^{-jk}`.
    Inverse,
}

/// DFT with the sign convention fixed by `Direction`. Radix-2 FFT when the
/// length is a power of two, direct evaluation otherwise.
fn dft(x: &[Complex64], dir: Direction) -> Vec<Complex64> {
    let n = x.len();
    let sign = match dir {
        Direction::Forward => 1.0,
        Direction::Inverse => -1.0,
    };
    if n.is_power_of_two() && n > 1 {
        let mut buf = x.to_vec();
        fft_radix2(&mut buf, sign);
        return buf;
    }
    let mut out = vec![ZERO; n];
    for (j, slot) in out.iter_mut().enumerate() {
        let mut acc = ZERO;
        for (k, &v) in x.iter().enumerate() {
            let angle = sign * TAU * ((j * k) % n) as f64 / n as f64;
            acc += v * Complex64::from_polar(1.0, angle);
        }
        *slot = acc;
    }
    out
}

/// Iterative radix-2 Cooley-Tukey, in place. `sign` is the twiddle exponent
/// sign (+1 forward under this crate's convention).
fn fft_radix2(buf: &mut [Complex64], sign: f64) {
    let n = buf.len();
    // Bit-reversal permutation.
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let ang = sign * TAU / len as f64;
        let wlen = Complex64::from_polar(1.0, ang);
        let mut i = 0;
        while i < n {
            let mut w = Complex64::new(1.0, 0.0);
            for k in 0..len / 2 {
                let u = buf[i + k];
                let v = buf[i + k + len / 2] * w;
                buf[i + k] = u + v;
                buf[i + k + len / 2] = u - v;
                w *= wlen;
            }
            i += len;
        }
        len <<= 1;
    }
}
