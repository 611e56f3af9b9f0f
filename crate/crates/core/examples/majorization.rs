//! Weak majorization of critical points: real parts against the Hermitian
//! part's spectrum, moduli against square roots of the squared-moduli
//! critical points (through admissible transforms), plus the pointwise
//! singular-value domination behind it.
//!
//!     cargo run --example majorization

use circulant_critical::majorization::{
    kyfan_check, rank_one_defect, thm12_check, thm13_check, weyl_domination, PhiTransform,
};
use circulant_critical::{RootSet, Tolerances};
use num_complex::Complex64;

fn main() {
    let tol = Tolerances::default();
    let roots = RootSet::new(vec![
        Complex64::new(1.5, 0.3),
        Complex64::new(-0.2, 1.1),
        Complex64::new(0.0, -2.0),
        Complex64::new(0.7, 0.7),
    ])
    .unwrap();

    let rep = kyfan_check(&roots, &tol).unwrap();
    println!("real parts of critical points vs Hermitian-part spectrum:");
    println!("  left  {:?}", rounded(&rep.left));
    println!("  right {:?}", rounded(&rep.right));
    println!(
        "  prefix slacks {:?}  holds {}\n",
        rounded(&rep.prefix_slacks),
        rep.holds
    );

    for phi in [
        PhiTransform::Identity,
        PhiTransform::Power { p: 2.0 },
        PhiTransform::Power { p: 4.0 },
        PhiTransform::ShiftedLog { eps: 0.1 },
    ] {
        let rep = thm12_check(&roots, &phi, &tol).unwrap();
        println!(
            "moduli majorization under {:<16} holds {}  min prefix slack {:+.3e}",
            phi.label(),
            rep.holds,
            rep.prefix_slacks
                .iter()
                .fold(f64::INFINITY, |a, &b| a.min(b))
        );
    }

    println!(
        "\npointwise singular-value domination: {}",
        weyl_domination(&roots, &tol).unwrap()
    );
    let defect = rank_one_defect(&roots).unwrap();
    println!(
        "gram defect is rank-one positive: second singular {:.2e}, min eigenvalue {:+.2e}",
        defect.second_singular, defect.min_eigenvalue
    );

    // Positive-roots variant: the critical points themselves are dominated.
    let positive = RootSet::new(vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(2.0, 0.0),
        Complex64::new(3.0, 0.0),
    ])
    .unwrap();
    let rep = thm13_check(&positive, &PhiTransform::Identity, &tol).unwrap();
    println!("\npositive roots (1, 2, 3):");
    println!("  critical points    {:?}", rounded(&rep.left));
    println!("  sqrt eta           {:?}", rounded(&rep.right));
    println!("  holds {}", rep.holds);
}

fn rounded(values: &[f64]) -> Vec<f64> {
    values.iter().map(|x| (x * 1e4).round() / 1e4).collect()
}
