//! Every displayed matrix in one place: the circulant `C`, its leading
//! submatrix `C_{n-1}`, the gram circulant `A = C C*`, and the products
//! `B = C_{n-1} C*_{n-1}`, `Btilde = C*_{n-1} C_{n-1}` built from their
//! closed-form entries.
//!
//!     cargo run --example inspect_matrices

use circulant_critical::differentiator::b_matrices;
use circulant_critical::linalg::DenseMatrix;
use circulant_critical::{Circulant, RootSet};
use num_complex::Complex64;
use std::f64::consts::TAU;

fn main() {
    // Cube roots of unity: everything is small integers.
    let roots = RootSet::new(
        (0..3)
            .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / 3.0))
            .collect(),
    )
    .unwrap();
    let circ = Circulant::from_spectrum(&roots);

    println!("roots: cube roots of unity");
    println!("C (cyclic shift):");
    print_matrix(&circ.to_dense());
    println!("C_2 (leading submatrix, nilpotent):");
    print_matrix(&circ.leading_submatrix().unwrap());
    println!("A = C C* (identity):");
    print_matrix(&circ.gram().to_dense());
    let (b, bt) = b_matrices(&circ).unwrap();
    println!("B = C_2 C_2*:");
    print_matrix(&b);
    println!("Btilde = C_2* C_2:");
    print_matrix(&bt);

    // A complex example where nothing is sparse.
    let roots = RootSet::new(vec![
        Complex64::new(1.0, 2.0),
        Complex64::new(-0.5, 0.0),
        Complex64::new(0.0, -1.0),
    ])
    .unwrap();
    let circ = Circulant::from_spectrum(&roots);
    println!("\nroots (1+2i, -0.5, -i)");
    println!("C:");
    print_matrix(&circ.to_dense());
    println!("C_2:");
    print_matrix(&circ.leading_submatrix().unwrap());
    let (b, bt) = b_matrices(&circ).unwrap();
    println!("B:");
    print_matrix(&b);
    println!("Btilde:");
    print_matrix(&bt);
}

fn print_matrix(m: &DenseMatrix) {
    for i in 0..m.rows() {
        print!("  [");
        for j in 0..m.cols() {
            let z = m[(i, j)];
            let snap = |x: f64| {
                if x.abs() < 5e-13 {
                    0.0
                } else {
                    (x * 1e4).round() / 1e4
                }
            };
            print!(" {:+.4}{:+.4}i", snap(z.re), snap(z.im));
        }
        println!(" ]");
    }
}
