//! The twisted product A ∗ B = (A′B′)′, where the prime map negates one
//! corner entry, keeps distributivity, associativity, and the identity
//! matrix as unit, yet produces behavior the other products cannot:
//! nilpotent matrices with nonzero eigenvalues, and positive matrices whose
//! squares are negative. The radius becomes ρ(A′).
//!
//!     cargo run --example star_exotica

use paradius::matrix::{
    example_positive_negative_square, example_star_nilpotent, prime_map, star_power_oracle,
    star_product,
};
use paradius::roots::{char_poly, poly_roots, spectral_radius};
use paradius::{make_matrix_algebra, radius, FieldTag, Mode, ProductKind};

fn main() {
    let n = 3;
    let kind = ProductKind::Star1N;
    let alg = make_matrix_algebra(n, FieldTag::Complex, kind, Mode::Exact).unwrap();

    // a ∗-nilpotent matrix whose standard eigenvalues include ±√2
    let a = example_star_nilpotent(n, Mode::Exact).unwrap();
    println!("A = {}", serde_json::to_string(&a.to_json()).unwrap());
    let square = star_product(&a, &a, kind).unwrap();
    println!("A*A = 0 exactly: {}", square.is_zero());

    let cp = char_poly(&a).unwrap();
    println!("det(tI - A) = {cp}");
    let eigs = poly_roots(&cp).unwrap();
    let mods: Vec<String> = eigs.roots.iter().map(|z| format!("{:.6}", z.norm())).collect();
    println!("eigenvalue moduli: [{}]  (√2 = {:.6})", mods.join(", "), 2f64.sqrt());

    let report = radius(&alg, &a.to_element(&alg).unwrap()).unwrap();
    println!(
        "star minimal polynomial: {}   star radius: {}",
        report.minpoly, report.radius
    );

    // a positive matrix whose star square is negative
    let p = example_positive_negative_square(n, FieldTag::Real, Mode::Exact).unwrap();
    let p_sq = star_power_oracle(&p, 2, kind).unwrap();
    println!(
        "P = {} is positive: {}",
        serde_json::to_string(&p.to_json()).unwrap(),
        p.is_positive()
    );
    println!(
        "P^<2> = {} is negative: {}",
        serde_json::to_string(&p_sq.to_json()).unwrap(),
        p_sq.is_negative()
    );

    // the radius in the star algebra is the spectral radius of A'
    let primed = prime_map(&p, kind).unwrap();
    let r = radius(&alg, &p.to_element(&alg).unwrap()).unwrap().radius;
    let rho = spectral_radius(&primed).unwrap();
    println!("r_*(P) = {r}, ρ(P') = {rho}");
    assert!((r - rho).abs() <= 1e-8);
}
