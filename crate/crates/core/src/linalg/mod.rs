//! Dense complex matrix kernel: general and Hermitian eigensolvers, singular
//! values, characteristic polynomials, and trace utilities.
//!
//! Everything here is sized for desk scale (n up to a few hundred). The
//! general eigensolver reduces to Hessenberg form and runs an implicit
//! single-shift complex QR iteration; the Hermitian path tridiagonalizes with
//! Householder reflectors and finishes with an implicit QL sweep. The
//! characteristic polynomial goes through the Faddeev–LeVerrier recursion so
//! it stays independent of either eigensolver.

mod general;
mod hermitian;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{canonical_order, Polynomial};

/// Hard limit for the Faddeev–LeVerrier recursion; its O(n^4) cost and
/// conditioning degrade past this.
pub const CHAR_POLY_MAX_DIM: usize = 64;

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds from row-major data. Errors when the entry count disagrees
    /// with the shape.
    pub fn from_data(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::SizeMismatch {
                left: data.len(),
                right: rows * cols,
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Convenience constructor from nested rows (used heavily in tests).
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::SizeMismatch { left: r, right: c });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn adjoint(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SizeMismatch {
                left: self.data.len(),
                right: other.data.len(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, factor: Complex64) -> DenseMatrix {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Eigenvalues in canonical order plus a backward-error estimate (the largest
/// subdiagonal mass discarded during deflation, relative to the matrix norm).
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub values: Vec<Complex64>,
    pub residual: f64,
}

/// Eigenvalues of a general square complex matrix.
///
/// Hessenberg reduction followed by implicit single-shift QR with Wilkinson
/// shifts; deflation when a subdiagonal entry drops below ulp scale. `tol` is
/// the acceptable relative backward error; the iteration deflates far below
/// any sensible `tol`, so this only guards against a degenerate request.
pub fn eig_general(m: &DenseMatrix, tol: f64) -> Result<Spectrum> {
    let n = m.require_square()?;
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let (values, residual) = general::eigenvalues(m)?;
    if residual > tol {
        return Err(Error::EigNonConvergence { sweeps: 30 * n });
    }
    Ok(Spectrum {
        values: canonical_order(&values),
        residual,
    })
}

/// Eigenvalues of a self-adjoint matrix, returned real and descending.
///
/// The input must satisfy `||M - M*||_F <= tol * ||M||_F`. Householder
/// tridiagonalization followed by implicit QL with Wilkinson shifts.
pub fn eig_hermitian(m: &DenseMatrix, tol: f64) -> Result<Vec<f64>> {
    let n = m.require_square()?;
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let defect = m.sub(&m.adjoint())?.frobenius_norm();
    if defect > tol * m.frobenius_norm().max(f64::MIN_POSITIVE) {
        return Err(Error::NotHermitian {
            defect: defect / m.frobenius_norm().max(f64::MIN_POSITIVE),
        });
    }
    let mut values = hermitian::eigenvalues(m)?;
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Singular values, descending: square roots of the eigenvalues of `M M*`,
/// clamped at zero. Going through `M M*` squares the condition number, which
/// is acceptable at desk scale.
pub fn singular_values(m: &DenseMatrix) -> Result<Vec<f64>> {
    m.require_square()?;
    let gram = m.mul(&m.adjoint())?;
    let eigs = eig_hermitian(&gram, 1e-10)?;
    Ok(eigs.into_iter().map(|x| x.max(0.0).sqrt()).collect())
}

/// Monic characteristic polynomial `det(zI - M)` by the Faddeev–LeVerrier
/// recursion, with the matrix pre-scaled by its RMS norm to keep the trace
/// magnitudes balanced. Independent of the eigensolvers.
pub fn char_poly(m: &DenseMatrix) -> Result<Polynomial> {
    let n = m.require_square()?;
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n > CHAR_POLY_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            dim: n,
            max: CHAR_POLY_MAX_DIM,
        });
    }
    let s = {
        let raw = m.frobenius_norm() / (n as f64).sqrt();
        if raw > 0.0 {
            raw
        } else {
            1.0
        }
    };
    let a = m.scale(Complex64::new(1.0 / s, 0.0));
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut mk = DenseMatrix::identity(n);
    for k in 1..=n {
        let n_mat = a.mul(&mk)?;
        let ck = -n_mat.trace() / k as f64;
        coeffs[n - k] = ck;
        if k < n {
            mk = n_mat;
            for i in 0..n {
                mk[(i, i)] += ck;
            }
        }
    }
    // Undo the scaling: coefficient of z^j picks up s^(n-j).
    let mut pw = 1.0;
    for j in (0..n).rev() {
        pw *= s;
        coeffs[j] *= pw;
    }
    Polynomial::from_coeffs(coeffs)
}

/// True when `||M M* - M* M||_F <= tol * ||M||_F^2`.
pub fn is_normal(m: &DenseMatrix, tol: f64) -> Result<bool> {
    m.require_square()?;
    Ok(normality_defect(m)? <= tol)
}

/// Scale-free normality defect `||M M* - M* M||_F / ||M||_F^2` (zero for the
/// zero matrix).
pub fn normality_defect(m: &DenseMatrix) -> Result<f64> {
    m.require_square()?;
    let adj = m.adjoint();
    let comm = m.mul(&adj)?.sub(&adj.mul(m)?)?;
    let denom = m.frobenius_norm().powi(2);
    if denom == 0.0 {
        return Ok(0.0);
    }
    Ok(comm.frobenius_norm() / denom)
}

/// Schur's trace bound `Tr(M M*) = sum |m_kj|^2`; the sum of squared
/// eigenvalue moduli never exceeds it, with equality exactly for normal
/// matrices.
pub fn schur_bound(m: &DenseMatrix) -> f64 {
    m.data.iter().map(|z| z.norm_sqr()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::match_multisets;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn swap2() -> DenseMatrix {
        DenseMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap()
    }

    #[test]
    fn eig_general_involution() {
        let s = eig_general(&swap2(), 1e-9).unwrap();
        let m = match_multisets(&s.values, &[c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert!(m.max_distance < 1e-12);
    }

    #[test]
    fn eig_general_upper_triangular() {
        let t = DenseMatrix::from_rows(&[
            vec![c(2.0, 1.0), c(5.0, 0.0), c(-3.0, 2.0)],
            vec![c(0.0, 0.0), c(-1.0, 0.5), c(7.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.25, -2.0)],
        ])
        .unwrap();
        let s = eig_general(&t, 1e-9).unwrap();
        let m = match_multisets(&s.values, &[c(2.0, 1.0), c(-1.0, 0.5), c(0.25, -2.0)]).unwrap();
        assert!(m.max_distance < 1e-12);
    }

    #[test]
    fn eig_general_nilpotent() {
        let j = DenseMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let s = eig_general(&j, 1e-9).unwrap();
        assert!(s.values.iter().all(|z| z.norm() < 1e-12));
    }

    #[test]
    fn eig_hermitian_examples() {
        let id = DenseMatrix::identity(3);
        assert_eq!(eig_hermitian(&id, 1e-12).unwrap(), vec![1.0, 1.0, 1.0]);

        let mut d = DenseMatrix::zeros(3, 3);
        d[(0, 0)] = c(3.0, 0.0);
        d[(1, 1)] = c(1.0, 0.0);
        d[(2, 2)] = c(2.0, 0.0);
        assert_eq!(eig_hermitian(&d, 1e-12).unwrap(), vec![3.0, 2.0, 1.0]);

        let p = DenseMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let e = eig_hermitian(&p, 1e-12).unwrap();
        assert!((e[0] - 1.0).abs() < 1e-14 && e[1].abs() < 1e-14);
    }

    #[test]
    fn eig_hermitian_rejects_non_hermitian() {
        let j = DenseMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(matches!(
            eig_hermitian(&j, 1e-12),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn singular_values_examples() {
        let j = DenseMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let sv = singular_values(&j).unwrap();
        assert!((sv[0] - 1.0).abs() < 1e-14 && sv[1].abs() < 1e-14);

        // Unitary: rotation by 30 degrees.
        let (s30, c30) = (0.5, 3.0f64.sqrt() / 2.0);
        let u = DenseMatrix::from_rows(&[
            vec![c(c30, 0.0), c(-s30, 0.0)],
            vec![c(s30, 0.0), c(c30, 0.0)],
        ])
        .unwrap();
        let sv = singular_values(&u).unwrap();
        assert!((sv[0] - 1.0).abs() < 1e-12 && (sv[1] - 1.0).abs() < 1e-12);

        let z = DenseMatrix::zeros(3, 3);
        assert!(singular_values(&z).unwrap().iter().all(|&x| x == 0.0));
    }

    #[test]
    fn char_poly_examples() {
        let id2 = DenseMatrix::identity(2);
        let p = char_poly(&id2).unwrap();
        assert_eq!(p.coeffs(), &[c(1.0, 0.0), c(-2.0, 0.0), c(1.0, 0.0)]);

        let p = char_poly(&swap2()).unwrap();
        assert!((p.coeffs()[0] + c(1.0, 0.0)).norm() < 1e-14);
        assert!(p.coeffs()[1].norm() < 1e-14);

        let m = DenseMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(2.0, 0.0)],
        ])
        .unwrap();
        let p = char_poly(&m).unwrap();
        // z^2 - 4z + 3
        assert!((p.coeffs()[0] - c(3.0, 0.0)).norm() < 1e-13);
        assert!((p.coeffs()[1] + c(4.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn char_poly_dimension_limit() {
        let m = DenseMatrix::identity(CHAR_POLY_MAX_DIM + 1);
        assert!(matches!(
            char_poly(&m),
            Err(Error::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn normality_examples() {
        let j = DenseMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(!is_normal(&j, 1e-10).unwrap());
        let h = DenseMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, -1.0)],
            vec![c(1.0, 1.0), c(-1.0, 0.0)],
        ])
        .unwrap();
        assert!(is_normal(&h, 1e-12).unwrap());
    }

    #[test]
    fn schur_bound_examples() {
        let j = DenseMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(schur_bound(&j), 1.0);

        let m = DenseMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(2.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(schur_bound(&m), 10.0);
        // Eigenvalues 3 and 1: 9 + 1 = 10, equality since symmetric.
        let s = eig_general(&m, 1e-9).unwrap();
        let sum: f64 = s.values.iter().map(|z| z.norm_sqr()).sum();
        assert!((sum - 10.0).abs() < 1e-10);
    }
}
