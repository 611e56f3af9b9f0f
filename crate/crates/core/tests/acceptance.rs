//! Acceptance suite: every headline claim at its stated tolerance, one test
//! per criterion, each printing a pass/fail line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use circulant_critical::differentiator::{
    critical_points, is_submatrix_normal, perturbed_char_poly, verify_derivative_identity,
};
use circulant_critical::ensemble::{
    run_suite, sample_family, CheckKind, EnsembleConfig, Family, SplitMix64,
};
use circulant_critical::inequalities::{
    collinearity, debruin_sharma_with_lhs, quartic_centered_with_lhs, quartic_general_with_lhs,
    schoenberg_with_lhs, trace_bb,
};
use circulant_critical::linalg::eig_hermitian;
use circulant_critical::majorization::{
    eta_values, hermitian_part_eigenvalues, rank_one_defect, thm13_check, weak_majorizes,
    PhiTransform,
};
use circulant_critical::poly::{derivative_roots_oracle, match_multisets};
use circulant_critical::{Circulant, Polynomial, RootSet, Tolerances};
use num_complex::Complex64;
use std::f64::consts::TAU;
use std::time::Instant;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rs(values: &[(f64, f64)]) -> RootSet {
    RootSet::new(values.iter().map(|&(re, im)| c(re, im)).collect()).unwrap()
}

fn unity_roots(n: usize) -> RootSet {
    RootSet::new(
        (0..n)
            .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / n as f64))
            .collect(),
    )
    .unwrap()
}

/// The four standing random families used across the bulk criteria.
fn mixed_families() -> [Family; 4] {
    [
        Family::GaussianRoots { sigma: 1.0 },
        Family::UnitCircle { equispaced: false },
        Family::Collinear {
            alpha: [0.6, 0.8],
            beta: [0.3, -0.2],
        },
        Family::MultipleRoots {
            pattern: vec![2, 1, 3],
        },
    ]
}

fn mixed_instance(i: usize, rng: &mut SplitMix64, max_degree: usize) -> RootSet {
    let families = mixed_families();
    let n = 2 + (rng.next_u64() % (max_degree as u64 - 1)) as usize;
    sample_family(&families[i % families.len()], n, rng)
}

fn sum_moduli_powers(values: &[Complex64]) -> (f64, f64) {
    let mut s2 = 0.0;
    let mut s4 = 0.0;
    for v in values {
        let r2 = v.norm_sqr();
        s2 += r2;
        s4 += r2 * r2;
    }
    (s2, s4)
}

#[test]
fn acceptance_01_submatrix_spectrum_matches_derivative_roots() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0xC1A0_0001);
    let mut worst: f64 = 0.0;
    for i in 0..2000 {
        let roots = mixed_instance(i, &mut rng, 32);
        let result = critical_points(&roots).expect("eigensolver");
        let oracle = derivative_roots_oracle(&roots, 1e-13, 2000).expect("oracle");
        let m = match_multisets(&result.critical_points.values, oracle.roots()).unwrap();
        let rel = m.max_distance / roots.scale();
        assert!(
            rel <= 1e-6,
            "instance {i} (degree {}): matched distance {rel:.3e} exceeds 1e-6",
            roots.len()
        );
        worst = worst.max(rel);
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "runtime {elapsed:?} exceeds the 60 s budget"
    );
    println!(
        "[acceptance 01] eigenvalue route matches derivative-root oracle on 2000 instances \
         (worst {worst:.3e}, {elapsed:?}): PASS"
    );
}

#[test]
fn acceptance_02_coefficient_route_identity() {
    let mut rng = SplitMix64::new(0xC1A0_0002);
    let families = mixed_families();
    let mut worst: f64 = 0.0;
    for n in 2..=20 {
        for rep in 0..50 {
            let roots = sample_family(&families[rep % families.len()], n, &mut rng);
            let residual = verify_derivative_identity(&roots).unwrap();
            assert!(
                residual <= 1e-8,
                "degree {n}: coefficient-route residual {residual:.3e} exceeds 1e-8"
            );
            worst = worst.max(residual);
        }
    }
    println!(
        "[acceptance 02] n*charpoly(submatrix) = p' to 1e-8 for degrees 2-20 \
         (worst {worst:.3e}): PASS"
    );
}

#[test]
fn acceptance_03_exact_small_cases() {
    for n in 2..=16 {
        let result = critical_points(&unity_roots(n)).unwrap();
        for w in &result.critical_points.values {
            assert!(
                w.norm() <= 1e-12,
                "roots of unity n={n}: |w| = {:.3e} not below 1e-12",
                w.norm()
            );
        }
    }
    let result = critical_points(&rs(&[(3.0, 0.0), (1.0, 0.0)])).unwrap();
    assert_eq!(result.critical_points.values.len(), 1);
    assert!((result.critical_points.values[0] - c(2.0, 0.0)).norm() <= 1e-12);
    println!("[acceptance 03] exact nilpotent and 1x1 submatrix cases reproduce: PASS");
}

#[test]
fn acceptance_04_schoenberg_bulk() {
    let tol = Tolerances::default();
    let mut rng = SplitMix64::new(0xC1A0_0004);
    // 10,000 random instances: no violations.
    for i in 0..10_000 {
        let roots = mixed_instance(i, &mut rng, 24);
        let result = critical_points(&roots).unwrap();
        let (s2, _) = sum_moduli_powers(&result.critical_points.values);
        let rep = schoenberg_with_lhs(&roots, s2, &tol);
        let scale2 = roots.scale().powi(2);
        assert!(
            rep.slack >= -1e-8 * scale2,
            "instance {i}: slack {:.3e} below -1e-8*scale^2",
            rep.slack
        );
    }
    // 1,000 collinear instances: equality within 1e-7 * scale^2.
    let line = Family::Collinear {
        alpha: [0.28, -0.96],
        beta: [1.1, 0.4],
    };
    for i in 0..1000 {
        let n = 2 + (rng.next_u64() % 15) as usize;
        let roots = sample_family(&line, n, &mut rng);
        let result = critical_points(&roots).unwrap();
        let (s2, _) = sum_moduli_powers(&result.critical_points.values);
        let rep = schoenberg_with_lhs(&roots, s2, &tol);
        assert!(
            rep.slack.abs() <= 1e-7 * roots.scale().powi(2),
            "collinear instance {i}: |slack| {:.3e} not an equality",
            rep.slack
        );
    }
    // 1,000 generic non-collinear instances: strictly positive slack.
    let gauss = Family::GaussianRoots { sigma: 1.0 };
    let mut checked = 0;
    while checked < 1000 {
        let n = 3 + (rng.next_u64() % 14) as usize;
        let roots = sample_family(&gauss, n, &mut rng);
        if collinearity(&roots, 1e-6) {
            continue;
        }
        checked += 1;
        let result = critical_points(&roots).unwrap();
        let (s2, _) = sum_moduli_powers(&result.critical_points.values);
        let rep = schoenberg_with_lhs(&roots, s2, &tol);
        assert!(
            rep.slack > 1e-7 * roots.scale().powi(2),
            "non-collinear instance {checked}: slack {:.3e} not strict",
            rep.slack
        );
    }
    println!(
        "[acceptance 04] quadratic bound: 10000 no-violation, 1000 collinear equalities, \
         1000 strict: PASS"
    );
}

#[test]
fn acceptance_05_quartic_bulk_with_dual_route() {
    let tol = Tolerances::default();
    let mut rng = SplitMix64::new(0xC1A0_0005);
    for i in 0..10_000 {
        let roots = mixed_instance(i, &mut rng, 24);
        let result = critical_points(&roots).unwrap();
        let (_, s4) = sum_moduli_powers(&result.critical_points.values);
        let rep = quartic_general_with_lhs(&roots, s4, &tol);
        let scale4 = roots.scale().powi(4);
        assert!(
            rep.slack >= -1e-7 * scale4,
            "instance {i}: quartic slack {:.3e} below -1e-7*scale^4",
            rep.slack
        );
        // Dual route: the root-data right-hand side equals Tr(B*Btilde)
        // computed from circulant coefficients and from dense products.
        let circ = Circulant::from_spectrum(&roots);
        let by_coeffs = trace_bb(&circ).unwrap();
        assert!(
            (by_coeffs - rep.rhs).abs() <= 1e-9 * scale4,
            "instance {i}: trace route {:.6e} vs root formula {:.6e}",
            by_coeffs,
            rep.rhs
        );
    }
    println!(
        "[acceptance 05] quartic bound: 10000 no-violation with dual-route agreement \
         at 1e-9*scale^4: PASS"
    );
}

#[test]
fn acceptance_06_centered_chain() {
    let tol = Tolerances::default();
    let mut rng = SplitMix64::new(0xC1A0_0006);
    for i in 0..5000 {
        let roots = mixed_instance(i, &mut rng, 20).centered();
        let result = critical_points(&roots).unwrap();
        let (_, s4) = sum_moduli_powers(&result.critical_points.values);
        let scale4 = roots.scale().powi(4);
        let centered = quartic_centered_with_lhs(&roots, s4, &tol).unwrap();
        let dbs = debruin_sharma_with_lhs(&roots, s4, &tol).unwrap();
        assert!(
            centered.slack >= -1e-7 * scale4,
            "instance {i}: centered quartic violated ({:.3e})",
            centered.slack
        );
        assert!(
            dbs.slack >= -1e-7 * scale4,
            "instance {i}: conjectured bound violated ({:.3e})",
            dbs.slack
        );
        // Chain: lhs <= centered rhs <= conjectured rhs.
        assert!(centered.lhs <= centered.rhs + 1e-7 * scale4);
        assert!(
            centered.rhs <= dbs.rhs + 1e-9 * scale4,
            "instance {i}: centered rhs {:.6e} above conjectured rhs {:.6e}",
            centered.rhs,
            dbs.rhs
        );
    }
    println!("[acceptance 06] centered quartic chain holds on 5000 projected instances: PASS");
}

#[test]
fn acceptance_07_equality_witnesses() {
    let tol = Tolerances::default();

    // (1, 0, -1): both quartic right-hand sides equal 2/9 = sum |w|^4.
    let roots = rs(&[(1.0, 0.0), (0.0, 0.0), (-1.0, 0.0)]);
    let result = critical_points(&roots).unwrap();
    let (_, s4) = sum_moduli_powers(&result.critical_points.values);
    assert!((s4 - 2.0 / 9.0).abs() <= 1e-12);
    let general = quartic_general_with_lhs(&roots, s4, &tol);
    let centered = quartic_centered_with_lhs(&roots, s4, &tol).unwrap();
    assert!((general.rhs - 2.0 / 9.0).abs() <= 1e-12);
    assert!((centered.rhs - 2.0 / 9.0).abs() <= 1e-12);

    // (1, -1): both sides vanish.
    let roots = rs(&[(1.0, 0.0), (-1.0, 0.0)]);
    let result = critical_points(&roots).unwrap();
    let (_, s4) = sum_moduli_powers(&result.critical_points.values);
    let general = quartic_general_with_lhs(&roots, s4, &tol);
    assert!(general.lhs.abs() <= 1e-12 && general.rhs.abs() <= 1e-12);

    // Cube roots of unity: equality without collinearity, surfaced as an
    // anomaly rather than a failure.
    let roots = unity_roots(3);
    let result = critical_points(&roots).unwrap();
    let (_, s4) = sum_moduli_powers(&result.critical_points.values);
    let general = quartic_general_with_lhs(&roots, s4, &tol);
    assert!(general.lhs.abs() <= 1e-12 && general.rhs.abs() <= 1e-12);
    assert!(general.equality && !general.collinear && general.anomaly());

    println!("[acceptance 07] hand-derived equality witnesses reproduce to 1e-12: PASS");
}

#[test]
fn acceptance_08_normality_equivalence() {
    let mut rng = SplitMix64::new(0xC1A0_0008);
    // 1,000 collinear instances: submatrix is normal.
    let line = Family::Collinear {
        alpha: [0.8, 0.6],
        beta: [-0.3, 0.9],
    };
    for i in 0..1000 {
        let n = 3 + (rng.next_u64() % 14) as usize;
        let roots = sample_family(&line, n, &mut rng);
        assert!(
            is_submatrix_normal(&roots, 1e-8).unwrap(),
            "collinear instance {i}: submatrix not normal"
        );
    }
    // 1,000 generic instances: submatrix is not normal.
    let gauss = Family::GaussianRoots { sigma: 1.0 };
    let mut checked = 0;
    while checked < 1000 {
        let n = 3 + (rng.next_u64() % 14) as usize;
        let roots = sample_family(&gauss, n, &mut rng);
        if collinearity(&roots, 1e-4) {
            continue;
        }
        checked += 1;
        assert!(
            !is_submatrix_normal(&roots, 1e-8).unwrap(),
            "generic instance {checked}: submatrix unexpectedly normal"
        );
    }
    // Per-instance noise sweeps: both flags flip exactly once as the noise
    // amplitude crosses the tolerance band, true at the small end and false
    // at the large end.
    let eps_grid = [1e-12, 1e-10, 1e-8, 1e-6, 1e-4, 1e-2];
    for instance in 0..50 {
        let n = 4 + (instance % 8);
        let dir = Complex64::from_polar(1.0, TAU * rng.next_f64());
        let offset = rng.next_complex_gaussian();
        let base: Vec<f64> = (0..n).map(|_| rng.next_gaussian()).collect();
        let noise: Vec<Complex64> = (0..n).map(|_| rng.next_complex_gaussian()).collect();
        let mut normal_flags = Vec::new();
        let mut collinear_flags = Vec::new();
        for &eps in &eps_grid {
            let roots = RootSet::new(
                base.iter()
                    .zip(&noise)
                    .map(|(&t, &u)| dir * t + offset + u * eps)
                    .collect(),
            )
            .unwrap();
            normal_flags.push(is_submatrix_normal(&roots, 1e-8).unwrap());
            collinear_flags.push(collinearity(&roots, 1e-8));
        }
        for flags in [&normal_flags, &collinear_flags] {
            assert!(flags[0], "instance {instance}: flag false at eps=1e-12");
            assert!(
                !flags[flags.len() - 1],
                "instance {instance}: flag true at eps=1e-2"
            );
            let transitions = flags.windows(2).filter(|w| w[0] != w[1]).count();
            assert_eq!(
                transitions, 1,
                "instance {instance}: flags {flags:?} flip more than once"
            );
        }
    }
    println!(
        "[acceptance 08] submatrix normality tracks collinearity (1000+1000) and flips \
         once across the noise sweep: PASS"
    );
}

#[test]
fn acceptance_09_majorization_suite() {
    let tol = Tolerances::default();
    let mut rng = SplitMix64::new(0xC1A0_0009);
    for i in 0..5000 {
        let roots = mixed_instance(i, &mut rng, 20);
        let scale = roots.scale();
        let result = critical_points(&roots).unwrap();
        let w = &result.critical_points.values;

        // Ky Fan: real parts against the Hermitian-part spectrum.
        let left: Vec<f64> = w.iter().map(|v| v.re).collect();
        let right = hermitian_part_eigenvalues(&roots).unwrap();
        let rep = weak_majorizes(&left, &right, tol.majorization).unwrap();
        assert!(rep.holds, "instance {i}: Ky Fan majorization failed");

        // Moduli against sqrt of the gram-submatrix spectrum, three
        // transforms.
        let eta = eta_values(&roots).unwrap();
        for phi in [
            PhiTransform::Identity,
            PhiTransform::Power { p: 2.0 },
            PhiTransform::Power { p: 4.0 },
        ] {
            let left: Vec<f64> = w.iter().map(|v| phi.apply(v.norm())).collect();
            let right: Vec<f64> = eta.iter().map(|&e| phi.apply(e.sqrt())).collect();
            let rep = weak_majorizes(&left, &right, tol.majorization).unwrap();
            assert!(
                rep.holds,
                "instance {i}: transform majorization failed ({})",
                phi.label()
            );
        }

        // Pointwise Weyl domination in squared form.
        let circ = Circulant::from_spectrum(&roots);
        let sub = circ.leading_submatrix().unwrap();
        let sigma_sq = eig_hermitian(&sub.mul(&sub.adjoint()).unwrap(), 1e-10).unwrap();
        for (k, (s2, e)) in sigma_sq.iter().zip(eta.iter()).enumerate() {
            assert!(
                *s2 <= e + 1e-8 * scale.powi(2),
                "instance {i}: sigma_{k}^2 = {s2:.6e} above eta_{k} = {e:.6e}"
            );
        }

        // Rank-one positive structure of the gram defect.
        let defect = rank_one_defect(&roots).unwrap();
        assert!(
            defect.second_singular <= 1e-10 * scale.powi(2),
            "instance {i}: second singular value {:.3e}",
            defect.second_singular
        );
        assert!(defect.min_eigenvalue >= -1e-10 * scale.powi(2));
    }
    // Positive-root variant over its own 5000 instances.
    let fam = Family::RealPositive { lo: 0.2, hi: 5.0 };
    for i in 0..5000 {
        let n = 2 + (rng.next_u64() % 15) as usize;
        let roots = sample_family(&fam, n, &mut rng);
        let rep = thm13_check(&roots, &PhiTransform::Identity, &tol).unwrap();
        assert!(rep.holds, "positive instance {i}: majorization failed");
    }
    println!(
        "[acceptance 09] majorization suite (Ky Fan, transforms, Weyl, rank-one, \
         positive roots) on 5000 instances each: PASS"
    );
}

#[test]
fn acceptance_10_perturbation_identity() {
    let mut rng = SplitMix64::new(0xC1A0_0010);
    let gauss = Family::GaussianRoots { sigma: 1.0 };
    for i in 0..1000 {
        let n = 2 + (rng.next_u64() % 11) as usize;
        let roots = sample_family(&gauss, n, &mut rng);
        let alpha = rng.next_complex_gaussian();
        let lhs = perturbed_char_poly(&roots, alpha).unwrap();
        let p = Polynomial::from_roots(&roots);
        let dp = p.derivative();
        let mut target: Vec<Complex64> = p.coeffs().to_vec();
        for (t, d) in target.iter_mut().zip(&dp) {
            *t += alpha / n as f64 * d;
        }
        // Relative to the coefficient scale of the target.
        let coeff_scale = target.iter().map(|v| v.norm()).fold(1.0, f64::max);
        for (k, (l, t)) in lhs.coeffs().iter().zip(&target).enumerate() {
            let diff = (l - t).norm();
            assert!(
                diff <= 1e-9 * coeff_scale,
                "instance {i}, coeff {k}: |difference| {diff:.3e} vs scale {coeff_scale:.3e}"
            );
        }
    }
    println!(
        "[acceptance 10] rank-one perturbed characteristic polynomial equals \
         p + (alpha/n) p' over 1000 draws: PASS"
    );
}

#[test]
fn acceptance_11_reproducibility() {
    let cfg = EnsembleConfig {
        family: Family::GaussianRoots { sigma: 1.0 },
        degree_min: 2,
        degree_max: 10,
        count: 40,
        seed: 20240817,
        tolerances: Tolerances::default(),
    };
    let checks = [
        CheckKind::Schoenberg,
        CheckKind::QuarticGeneral,
        CheckKind::KyFan,
        CheckKind::Weyl,
        CheckKind::DerivativeIdentity,
    ];
    let mut first: Vec<u8> = Vec::new();
    let mut second: Vec<u8> = Vec::new();
    let a = run_suite(&cfg, &checks, Some(&mut first)).unwrap();
    let b = run_suite(&cfg, &checks, Some(&mut second)).unwrap();
    assert_eq!(a.total_failures(), 0);
    assert_eq!(b.total_failures(), 0);
    assert!(!first.is_empty());
    assert_eq!(
        first, second,
        "identical configs must produce identical JSONL"
    );
    assert_eq!(a.to_csv(), b.to_csv());
    println!("[acceptance 11] identical (config, seed) runs are byte-identical: PASS");
}
