//! Critical points through the circulant route.
//!
//! Build the unique circulant whose spectrum is a given root set, cut off its
//! last row and column, and read the critical points of the polynomial from
//! the submatrix spectrum. Run with:
//!
//!     cargo run --example critical_points

use circulant_critical::differentiator::critical_points;
use circulant_critical::poly::{derivative_roots_oracle, match_multisets};
use circulant_critical::RootSet;
use num_complex::Complex64;

fn main() {
    let cases: Vec<(&str, Vec<Complex64>)> = vec![
        (
            "z^2 - 1",
            vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)],
        ),
        (
            "(z - 3)(z - 1)",
            vec![Complex64::new(3.0, 0.0), Complex64::new(1.0, 0.0)],
        ),
        (
            "z^5 - 1",
            (0..5)
                .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 5.0))
                .collect(),
        ),
        (
            "degree-6 with a triple root",
            vec![
                Complex64::new(1.0, 1.0),
                Complex64::new(1.0, 1.0),
                Complex64::new(1.0, 1.0),
                Complex64::new(-2.0, 0.5),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.5, 0.0),
            ],
        ),
    ];

    for (label, roots) in cases {
        let roots = RootSet::new(roots).unwrap();
        let result = critical_points(&roots).unwrap();
        println!("{label}");
        println!(
            "  circulant first row: {:?}",
            chop(result.circulant_used.first_row())
        );
        println!(
            "  critical points:     {:?}",
            chop(&result.critical_points.values)
        );
        println!(
            "  coefficient-route residual: {:.2e}",
            result.verification_residual
        );
        // Independent cross-check: Aberth iteration on p' evaluated through
        // root sums, never through expanded coefficients.
        let oracle = derivative_roots_oracle(&roots, 1e-13, 1000).unwrap();
        let m = match_multisets(&result.critical_points.values, oracle.roots()).unwrap();
        println!(
            "  max distance to direct root finder: {:.2e}\n",
            m.max_distance
        );
    }
}

fn chop(values: &[Complex64]) -> Vec<(f64, f64)> {
    values
        .iter()
        .map(|z| {
            let snap = |x: f64| {
                if x.abs() < 1e-12 {
                    0.0
                } else {
                    (x * 1e6).round() / 1e6
                }
            };
            (snap(z.re), snap(z.im))
        })
        .collect()
}
