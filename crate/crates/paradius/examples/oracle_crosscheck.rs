//! Batch cross-check of the generic minimal-polynomial/radius engine against
//! every closed-form oracle, on seeded random inputs. This is the library
//! equivalent of `paradius oracle-diff`.
//!
//!     cargo run --example oracle_crosscheck

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use paradius::matrix::{
    hadamard_minpoly_oracle, hadamard_radius_oracle, prime_map, star_power_oracle,
};
use paradius::random::{random_element, random_matrix};
use paradius::{
    euclidean_norm, make_cayley_dickson, make_matrix_algebra, minimal_polynomial, radius,
    spectral_radius, FieldTag, Mode, ProductKind,
};

fn main() {
    let trials = 40;
    let n = 3;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    // standard: radius = spectral radius from the trace recurrence
    let standard = make_matrix_algebra(n, FieldTag::Real, ProductKind::Standard, Mode::Exact)
        .unwrap();
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let m = random_matrix(n, FieldTag::Real, Mode::Exact, &mut rng);
        let r = radius(&standard, &m.to_element(&standard).unwrap()).unwrap().radius;
        let rho = spectral_radius(&m).unwrap();
        worst = worst.max((r - rho).abs());
    }
    println!("standard   radius vs ρ(A):            max |Δ| = {worst:.2e}");

    // hadamard: radius = sup norm, minpoly = distinct-entry linear factors
    let hadamard = make_matrix_algebra(n, FieldTag::Real, ProductKind::Hadamard, Mode::Exact)
        .unwrap();
    let mut worst = 0.0f64;
    let mut exact_polys = 0;
    for _ in 0..trials {
        let m = random_matrix(n, FieldTag::Real, Mode::Exact, &mut rng);
        let report = radius(&hadamard, &m.to_element(&hadamard).unwrap()).unwrap();
        worst = worst.max((report.radius - hadamard_radius_oracle(&m)).abs());
        if report.minpoly == hadamard_minpoly_oracle(&m).unwrap() {
            exact_polys += 1;
        }
    }
    println!("hadamard   radius vs sup norm:        max |Δ| = {worst:.2e}");
    println!("hadamard   minpoly exact matches:     {exact_polys}/{trials}");

    // star: powers, minpoly of A', radius = ρ(A')
    for kind in [ProductKind::Star1N, ProductKind::StarN1] {
        let star = make_matrix_algebra(n, FieldTag::Complex, kind, Mode::Exact).unwrap();
        let std_c = make_matrix_algebra(n, FieldTag::Complex, ProductKind::Standard, Mode::Exact)
            .unwrap();
        let mut worst = 0.0f64;
        let mut exact_powers = true;
        let mut exact_polys = true;
        for _ in 0..trials {
            let m = random_matrix(n, FieldTag::Complex, Mode::Exact, &mut rng);
            let el = m.to_element(&star).unwrap();
            for k in 1..=6 {
                exact_powers &= star.power(&el, k).unwrap()
                    == star_power_oracle(&m, k, kind).unwrap().to_element(&star).unwrap();
            }
            let primed = prime_map(&m, kind).unwrap();
            exact_polys &= minimal_polynomial(&star, &el).unwrap()
                == minimal_polynomial(&std_c, &primed.to_element(&std_c).unwrap()).unwrap();
            let r = radius(&star, &el).unwrap().radius;
            worst = worst.max((r - spectral_radius(&primed).unwrap()).abs());
        }
        println!(
            "{:<10} powers exact: {exact_powers}, minpoly exact: {exact_polys}, radius vs ρ(A'): max |Δ| = {worst:.2e}",
            format!("{kind:?}").to_lowercase()
        );
    }

    // cayley-dickson: radius = euclidean norm
    for dim in [2usize, 4, 8, 16] {
        let alg = make_cayley_dickson(dim, Mode::Exact).unwrap();
        let mut worst = 0.0f64;
        for _ in 0..trials {
            let x = random_element(&alg, &mut rng);
            let r = radius(&alg, &x).unwrap().radius;
            worst = worst.max((r - euclidean_norm(&x).unwrap()).abs());
        }
        println!("cd{dim:<8} radius vs euclidean norm:  max |Δ| = {worst:.2e}");
    }
}
