//! Wire formats. Complex numbers travel as `[re, im]` pairs; the structs
//! here pin the exact JSON shape of every public artifact.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circulant::Circulant;
use crate::error::Result;
use crate::linalg::DenseMatrix;
use crate::poly::{Polynomial, RootSet};

pub fn to_pairs(values: &[Complex64]) -> Vec<[f64; 2]> {
    values.iter().map(|z| [z.re, z.im]).collect()
}

pub fn from_pairs(pairs: &[[f64; 2]]) -> Vec<Complex64> {
    pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect()
}

/// `{"coeffs": [[re, im], ...]}`, ascending degree.
#[derive(Debug, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub coeffs: Vec<[f64; 2]>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        Self {
            coeffs: to_pairs(p.coeffs()),
        }
    }
}

impl PolynomialJson {
    pub fn into_polynomial(self) -> Result<Polynomial> {
        Polynomial::monic_from(&from_pairs(&self.coeffs))
    }
}

/// `{"roots": [[re, im], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct RootSetJson {
    pub roots: Vec<[f64; 2]>,
}

impl From<&RootSet> for RootSetJson {
    fn from(r: &RootSet) -> Self {
        Self {
            roots: to_pairs(r.roots()),
        }
    }
}

impl RootSetJson {
    pub fn into_root_set(self) -> Result<RootSet> {
        RootSet::new(from_pairs(&self.roots))
    }
}

/// `{"first_row": [[re, im], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct CirculantJson {
    pub first_row: Vec<[f64; 2]>,
}

impl From<&Circulant> for CirculantJson {
    fn from(c: &Circulant) -> Self {
        Self {
            first_row: to_pairs(c.first_row()),
        }
    }
}

impl CirculantJson {
    pub fn into_circulant(self) -> Result<Circulant> {
        Circulant::new(from_pairs(&self.first_row))
    }
}

/// `{"rows": R, "cols": C, "entries": [[re, im], ...]}` row-major.
#[derive(Debug, Serialize, Deserialize)]
pub struct DenseMatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[f64; 2]>,
}

impl From<&DenseMatrix> for DenseMatrixJson {
    fn from(m: &DenseMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: to_pairs(m.data()),
        }
    }
}

impl DenseMatrixJson {
    pub fn into_matrix(self) -> Result<DenseMatrix> {
        DenseMatrix::from_data(self.rows, self.cols, from_pairs(&self.entries))
    }
}
