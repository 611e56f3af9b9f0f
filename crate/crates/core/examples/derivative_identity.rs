//! The coefficient-route identity: `p'(z) = n det(zI - C_{n-1})`.
//!
//! The characteristic polynomial of the leading submatrix is computed by the
//! Faddeev-LeVerrier recursion, so this check shares nothing with the
//! eigensolver. Run with:
//!
//!     cargo run --example derivative_identity

use circulant_critical::differentiator::verify_derivative_identity;
use circulant_critical::ensemble::{sample_family, Family, SplitMix64};
use circulant_critical::{Polynomial, RootSet};
use num_complex::Complex64;

fn main() {
    // Small exact case first: roots (1, -1), submatrix [0], so
    // 2 * det(zI - [0]) = 2z = p'.
    let roots = RootSet::new(vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]).unwrap();
    let p = Polynomial::from_roots(&roots);
    println!("p coefficients:  {:?}", p.coeffs());
    println!("p' coefficients: {:?}", p.derivative());
    println!(
        "residual of n*charpoly(submatrix) vs p': {:.2e}\n",
        verify_derivative_identity(&roots).unwrap()
    );

    // Random sweep across degrees.
    let mut rng = SplitMix64::new(11);
    println!("degree | worst residual over 50 random draws");
    for n in [4usize, 8, 12, 16, 20] {
        let mut worst: f64 = 0.0;
        for _ in 0..50 {
            let roots = sample_family(&Family::GaussianRoots { sigma: 1.0 }, n, &mut rng);
            worst = worst.max(verify_derivative_identity(&roots).unwrap());
        }
        println!("{n:>6} | {worst:.3e}");
    }
}
