//! Run the law harness across the built-in algebras and print the verdict
//! table: which products are commutative, associative, alternative, and
//! power-associative, plus the radius laws (homogeneity, power rule,
//! nilpotency). Seeded, so reruns reproduce the same reports.
//!
//!     cargo run --example law_checks

use paradius::laws::{
    check_alternativity, check_binary_law, check_power_associativity, check_radius_laws,
    replay_witness, BinaryLaw, Verdict,
};
use paradius::{make_cayley_dickson, make_matrix_algebra, AlgebraHandle, FieldTag, Mode, ProductKind};

fn verdict_mark(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "yes",
        Verdict::FailsWithWitness => "NO",
    }
}

fn main() {
    let mut algebras: Vec<AlgebraHandle> = Vec::new();
    for kind in [
        ProductKind::Standard,
        ProductKind::Hadamard,
        ProductKind::Jordan,
        ProductKind::Star1N,
    ] {
        let field = if kind.is_star() { FieldTag::Complex } else { FieldTag::Real };
        algebras.push(make_matrix_algebra(2, field, kind, Mode::Exact).unwrap());
    }
    for dim in [4usize, 8, 16] {
        algebras.push(make_cayley_dickson(dim, Mode::Exact).unwrap());
    }

    let seed = 7;
    let trials = 30;
    println!(
        "{:<32} {:>6} {:>6} {:>6} {:>9} {:>7}",
        "algebra", "comm", "assoc", "alt", "pow-assoc", "radius"
    );
    for alg in &algebras {
        let comm = check_binary_law(alg, BinaryLaw::Commutativity, trials, seed).unwrap();
        let assoc = check_binary_law(alg, BinaryLaw::Associativity, trials, seed).unwrap();
        let alt = check_alternativity(alg, trials, seed).unwrap();
        let pa = check_power_associativity(alg, trials, 5, seed).unwrap();
        let rl = check_radius_laws(alg, 10, seed).unwrap();
        println!(
            "{:<32} {:>6} {:>6} {:>6} {:>9} {:>7}",
            alg.name(),
            verdict_mark(comm.verdict),
            verdict_mark(assoc.verdict),
            verdict_mark(alt.verdict),
            verdict_mark(pa.verdict),
            verdict_mark(rl.verdict),
        );

        // failing reports carry witnesses that replay to a violation
        for report in [&comm, &assoc, &alt] {
            if report.verdict == Verdict::FailsWithWitness {
                let replayed = replay_witness(report).unwrap();
                assert!(replayed > 0.0, "witness must reproduce its violation");
            }
        }
    }
    println!("\nevery FailsWithWitness above was replayed from its stored witness");
}
