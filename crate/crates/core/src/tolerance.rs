//! Shared tolerance profile.
//!
//! All thresholds are relative: before use they are multiplied by the
//! per-instance scale factor raised to the homogeneity degree of the quantity
//! under test (`scale^2` for quadratic inequalities, `scale^4` for quartic
//! ones). This keeps every check invariant under scaling of the root set.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct Tolerances {
    /// Equality-detection threshold for the quadratic (degree-2) inequality;
    /// violations are flagged at a tenth of this.
    pub quadratic: f64,
    /// Equality-detection threshold for the quartic (degree-4) inequalities;
    /// violations are flagged at a tenth of this.
    pub quartic: f64,
    /// Slack tolerance for weak-majorization prefix sums.
    pub majorization: f64,
    /// Collinearity defect threshold: roots count as collinear when
    /// `|sum (l-mu)^2| >= (1 - tol) * sum |l-mu|^2`.
    pub collinearity: f64,
    /// Relative commutator threshold for normality tests.
    pub normality: f64,
    /// Acceptable residual for the coefficient-route derivative identity.
    pub residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            quadratic: 1e-7,
            quartic: 1e-6,
            majorization: 1e-8,
            collinearity: 1e-8,
            normality: 1e-8,
            residual: 1e-8,
        }
    }
}

impl Tolerances {
    /// Derives a full profile from one scalar: the quadratic equality
    /// threshold is `t`, the quartic one `10 t`, everything else `t/10`.
    pub fn from_scalar(t: f64) -> Self {
        Self {
            quadratic: t,
            quartic: 10.0 * t,
            majorization: t / 10.0,
            collinearity: t / 10.0,
            normality: t / 10.0,
            residual: t / 10.0,
        }
    }

    /// Violation threshold for the quadratic inequality at a given scale.
    pub fn violation_q2(&self, scale: f64) -> f64 {
        0.1 * self.quadratic * scale.powi(2)
    }

    /// Violation threshold for the quartic inequalities at a given scale.
    pub fn violation_q4(&self, scale: f64) -> f64 {
        0.1 * self.quartic * scale.powi(4)
    }
}
