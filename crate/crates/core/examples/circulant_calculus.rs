//! The circulant spectral calculus: the bijection between first rows and
//! canonically ordered spectra, adjoints, gram products, the reflection
//! criterion for real spectra, and the positive square root of `C C*`.
//!
//!     cargo run --example circulant_calculus

use circulant_critical::poly::match_multisets;
use circulant_critical::{Circulant, RootSet};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    // Spectrum <-> first row bijection.
    let roots = RootSet::new(vec![c(3.0, 0.0), c(1.0, 0.0)]).unwrap();
    let circ = Circulant::from_spectrum(&roots);
    println!("roots (3, 1) -> first row {:?}", circ.first_row());
    println!("spectrum back: {:?}\n", circ.spectrum().roots());

    // Roots of unity give the cyclic shift exactly.
    let unity = RootSet::new(
        (0..6)
            .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 6.0))
            .collect(),
    )
    .unwrap();
    let shift = Circulant::from_spectrum(&unity);
    println!("6th roots of unity -> first row {:?}\n", shift.first_row());

    // Gram circulant: first row from the convolution formulas; spectrum is
    // the squared moduli.
    let mixed = RootSet::new(vec![c(1.0, 2.0), c(-0.5, 0.0), c(0.0, -1.0)]).unwrap();
    let circ = Circulant::from_spectrum(&mixed);
    let gram = circ.gram();
    println!("gram first row:       {:?}", gram.first_row());
    let two_routes = circ.multiply(&circ.adjoint()).unwrap();
    println!("product-route row:    {:?}", two_routes.first_row());
    let expected: Vec<Complex64> = mixed.roots().iter().map(|z| c(z.norm_sqr(), 0.0)).collect();
    let m = match_multisets(gram.spectrum().roots(), &expected).unwrap();
    println!("gram spectrum vs squared moduli: {:.2e}\n", m.max_distance);

    // Reflection property: self-adjoint exactly for real spectra.
    let real = RootSet::new(vec![c(2.0, 0.0), c(-1.0, 0.0), c(0.5, 0.0)]).unwrap();
    println!(
        "real roots  -> self-adjoint? {}",
        Circulant::from_spectrum(&real).is_selfadjoint(1e-10)
    );
    println!(
        "mixed roots -> self-adjoint? {}\n",
        Circulant::from_spectrum(&mixed).is_selfadjoint(1e-10)
    );

    // Positive square root of C C*: spectrum is the moduli.
    let root = circ.sqrt_gram();
    println!("sqrt(CC*) first row: {:?}", root.first_row());
    let squared = root.multiply(&root).unwrap();
    let max_diff = squared
        .first_row()
        .iter()
        .zip(gram.first_row())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("|sqrt(CC*)^2 - CC*| entrywise: {max_diff:.2e}");
}
