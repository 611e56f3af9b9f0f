//! Critical points of complex polynomials through circulant matrices.
//!
//! For any monic complex polynomial `p` of degree `n` there is exactly one
//! circulant matrix whose spectrum is the root set of `p` in a fixed
//! (canonical) arrangement. The leading `(n-1) x (n-1)` principal submatrix
//! of that circulant has the critical points of `p` as its spectrum, and the
//! identity `p'(z) = n det(zI - C_{n-1})` gives an eigensolver-independent
//! route to the same fact. This crate builds the circulant calculus, both
//! verification routes, the quadratic and quartic inequalities bounding the
//! critical points, weak-majorization comparisons against singular values,
//! and a reproducible ensemble runner that exercises all of it on random
//! polynomial families.
//!
//! Entry points:
//! - [`differentiator::critical_points`] computes critical points from roots.
//! - [`inequalities`] hosts the scalar inequality checks and their reports.
//! - [`majorization`] hosts weak-majorization checks.
//! - [`ensemble`] generates random root families and batch-verifies claims.
//! - [`cli`] implements the `circ` command line front end.
//!
//! The runnable examples under `examples/` walk through each capability.

pub mod circulant;
pub mod cli;
pub mod differentiator;
pub mod ensemble;
pub mod error;
pub mod inequalities;
pub mod json;
pub mod linalg;
pub mod majorization;
pub mod poly;
pub mod tolerance;

pub use circulant::Circulant;
pub use error::{Error, Result};
pub use linalg::{DenseMatrix, Spectrum};
pub use poly::{Polynomial, RootSet};
pub use tolerance::Tolerances;
