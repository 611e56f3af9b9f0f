//! The two root finders: the coefficient-based Aberth-Ehrlich iteration and
//! the root-sum variant that locates critical points without ever expanding
//! coefficients.
//!
//!     cargo run --example root_finding

use circulant_critical::poly::{derivative_roots_oracle, match_multisets, roots_oracle};
use circulant_critical::{Polynomial, RootSet};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    // Coefficient-based: z^2 - 4z + 3 = (z - 3)(z - 1).
    let p = Polynomial::from_coeffs(vec![c(3.0, 0.0), c(-4.0, 0.0), c(1.0, 0.0)]).unwrap();
    let roots = roots_oracle(&p, 1e-13, 500).unwrap();
    println!("roots of z^2 - 4z + 3: {:?}", roots.roots());

    // Exact zero deflation: z^4 has all roots exactly zero, no iteration.
    let mut coeffs = vec![c(0.0, 0.0); 5];
    coeffs[4] = c(1.0, 0.0);
    let p = Polynomial::from_coeffs(coeffs).unwrap();
    println!(
        "roots of z^4: {:?}",
        roots_oracle(&p, 1e-13, 500).unwrap().roots()
    );

    // Round trip through expansion.
    let original =
        RootSet::new(vec![c(1.0, 2.0), c(-0.5, 0.3), c(0.0, -1.0), c(2.0, 0.0)]).unwrap();
    let p = Polynomial::from_roots(&original);
    let recovered = roots_oracle(&p, 1e-13, 500).unwrap();
    let m = match_multisets(recovered.roots(), original.roots()).unwrap();
    println!(
        "round-trip distance through coefficients: {:.2e}\n",
        m.max_distance
    );

    // At high degree the coefficient representation is the bottleneck: the
    // root-sum oracle for critical points sidesteps it entirely.
    let big = RootSet::new(
        (0..28)
            .map(|k| {
                let t = k as f64 * 0.23 - 3.0;
                Complex64::new(0.6, 0.8) * t + Complex64::new(0.3, -0.2)
            })
            .collect(),
    )
    .unwrap();
    let direct = derivative_roots_oracle(&big, 1e-13, 2000).unwrap();
    println!(
        "degree 28 on a line: {} critical points via root sums, first three {:?}",
        direct.len(),
        &direct.roots()[..3]
    );
    let via_coeffs = roots_oracle(
        &Polynomial::from_roots(&big).derivative_monic().unwrap(),
        1e-13,
        2000,
    )
    .unwrap();
    let m = match_multisets(direct.roots(), via_coeffs.roots()).unwrap();
    println!(
        "distance to the coefficient-route answer: {:.2e} (coefficient conditioning dominates)",
        m.max_distance
    );
}
