//! Batch verification over a random family, with the persisted JSONL and CSV
//! artifacts the `circ ensemble` subcommand would write.
//!
//!     cargo run --example ensemble_run

use circulant_critical::ensemble::{run_suite_to_dir, CheckKind, EnsembleConfig, Family};
use circulant_critical::Tolerances;

fn main() {
    let dir = std::env::temp_dir().join("circulant-critical-ensemble-demo");
    let config = EnsembleConfig {
        family: Family::GaussianRoots { sigma: 1.0 },
        degree_min: 2,
        degree_max: 16,
        count: 200,
        seed: 42,
        tolerances: Tolerances::default(),
    };
    let checks = [
        CheckKind::Schoenberg,
        CheckKind::QuarticGeneral,
        CheckKind::QuarticCentered,
        CheckKind::DebruinSharma,
        CheckKind::Schur,
        CheckKind::KyFan,
        CheckKind::Thm12Power2,
        CheckKind::Weyl,
        CheckKind::DerivativeIdentity,
        CheckKind::NormalityEquivalence,
    ];
    let (jsonl, csv, summary) = run_suite_to_dir(&config, &checks, &dir).unwrap();
    println!("wrote {}", jsonl.display());
    println!("wrote {}\n", csv.display());
    println!("{}", summary.to_csv());
    println!("total failures: {}", summary.total_failures());
    for (name, stats) in &summary.checks {
        if !stats.anomalies.is_empty() {
            println!(
                "{name}: {} equality-without-collinearity anomalies",
                stats.anomalies.len()
            );
        }
    }
}
