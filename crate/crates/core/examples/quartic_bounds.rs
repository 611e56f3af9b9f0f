//! Fourth-power bounds on critical points: the general five-term bound
//! (valid for any roots, equal to the trace of `B Btilde`), its centered
//! specialization, and the weaker conjectured bound it sharpens.
//!
//!     cargo run --example quartic_bounds

use circulant_critical::ensemble::{sample_family, Family, SplitMix64};
use circulant_critical::inequalities::{
    debruin_sharma_check, quartic_centered_check, quartic_general_check, trace_bb,
};
use circulant_critical::{Circulant, RootSet, Tolerances};
use num_complex::Complex64;

fn main() {
    let tol = Tolerances::default();

    // Hand-checkable witnesses.
    let cases: Vec<(&str, Vec<Complex64>)> = vec![
        (
            "(1, 0, -1)",
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(-1.0, 0.0),
            ],
        ),
        (
            "cube roots of unity",
            (0..3)
                .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 3.0))
                .collect(),
        ),
    ];
    for (label, values) in cases {
        let roots = RootSet::new(values).unwrap();
        let rep = quartic_general_check(&roots, &tol).unwrap();
        println!("{label}:");
        println!(
            "  general bound: lhs {:+.6e} rhs {:+.6e} equality {} collinear {}{}",
            rep.lhs,
            rep.rhs,
            rep.equality,
            rep.collinear,
            if rep.anomaly() {
                "  <- equality without collinearity"
            } else {
                ""
            }
        );
        let centered = quartic_centered_check(&roots, &tol).unwrap();
        let weaker = debruin_sharma_check(&roots, &tol).unwrap();
        println!(
            "  centered rhs {:+.6e}  conjectured rhs {:+.6e} (centered <= conjectured)",
            centered.rhs, weaker.rhs
        );
    }

    // The five-term right-hand side agrees with the matrix trace route.
    println!("\ndual-route agreement on random draws:");
    let mut rng = SplitMix64::new(23);
    let mut worst: f64 = 0.0;
    for _ in 0..500 {
        let n = 2 + (rng.next_u64() % 12) as usize;
        let roots = sample_family(&Family::GaussianRoots { sigma: 1.0 }, n, &mut rng);
        let rep = quartic_general_check(&roots, &tol).unwrap();
        let trace = trace_bb(&Circulant::from_spectrum(&roots)).unwrap();
        worst = worst.max((rep.rhs - trace).abs() / roots.scale().powi(4));
    }
    println!("max |root formula - trace(B*Btilde)| / scale^4 = {worst:.3e} over 500 draws");
}
