//! The quadratic bound on critical points,
//! `sum |w_k|^2 <= |s1|^2/n^2 + (n-2)/n sum |l_j|^2`,
//! with equality exactly when the roots are collinear.
//!
//!     cargo run --example schoenberg_inequality

use circulant_critical::ensemble::{sample_family, Family, SplitMix64};
use circulant_critical::inequalities::schoenberg_check;
use circulant_critical::{RootSet, Tolerances};
use num_complex::Complex64;

fn main() {
    let tol = Tolerances::default();
    let show = |label: &str, roots: &RootSet| {
        let rep = schoenberg_check(roots, &tol).unwrap();
        println!(
            "{label:<28} lhs {:+.6e}  rhs {:+.6e}  slack {:+.2e}  equality {}  collinear {}",
            rep.lhs, rep.rhs, rep.slack, rep.equality, rep.collinear
        );
    };

    show(
        "(1, 0, -1) on a line",
        &RootSet::new(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ])
        .unwrap(),
    );
    show(
        "cube roots of unity",
        &RootSet::new(
            (0..3)
                .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 3.0))
                .collect(),
        )
        .unwrap(),
    );
    show(
        "rotated + shifted line",
        &RootSet::new(
            [-1.5f64, -0.2, 0.9, 2.0]
                .iter()
                .map(|&t| Complex64::new(0.6, 0.8) * t + Complex64::new(0.3, -0.7))
                .collect(),
        )
        .unwrap(),
    );

    println!();
    let mut rng = SplitMix64::new(5);
    let mut min_slack = f64::INFINITY;
    for _ in 0..500 {
        let n = 3 + (rng.next_u64() % 10) as usize;
        let roots = sample_family(&Family::GaussianRoots { sigma: 1.0 }, n, &mut rng);
        let rep = schoenberg_check(&roots, &tol).unwrap();
        min_slack = min_slack.min(rep.slack / roots.scale().powi(2));
    }
    println!("500 random draws: min slack / scale^2 = {min_slack:+.3e} (never negative)");
}
