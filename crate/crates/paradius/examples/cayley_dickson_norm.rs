//! In the Cayley-Dickson tower (complexes, quaternions, octonions,
//! sedenions) the radius of every element equals its Euclidean norm, even
//! once associativity and alternativity are gone. Each non-real element has a
//! degree-2 minimal polynomial t² - 2αt + ‖x‖² with conjugate complex roots
//! of modulus ‖x‖.
//!
//!     cargo run --example cayley_dickson_norm

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use paradius::random::random_element;
use paradius::{euclidean_norm, make_cayley_dickson, minimal_polynomial, radius, Mode};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);

    // quaternion basis: ij = k and ji = -k
    let quat = make_cayley_dickson(4, Mode::Exact).unwrap();
    let i = quat.basis_element(1);
    let j = quat.basis_element(2);
    let ij = quat.mul(&i, &j).unwrap();
    let ji = quat.mul(&j, &i).unwrap();
    println!("quaternions: ij = {ij:?}");
    println!("             ji = {ji:?}");

    println!("\n{:>4} {:>14} {:>14} {:>10}", "dim", "radius", "euclidean", "|Δ|");
    for dim in [2usize, 4, 8, 16] {
        let alg = make_cayley_dickson(dim, Mode::Exact).unwrap();
        let x = random_element(&alg, &mut rng);
        let r = radius(&alg, &x).unwrap().radius;
        let norm = euclidean_norm(&x).unwrap();
        println!("{dim:>4} {r:>14.10} {norm:>14.10} {:>10.2e}", (r - norm).abs());
        assert!((r - norm).abs() <= 1e-8);

        let p = minimal_polynomial(&alg, &x).unwrap();
        assert_eq!(p.degree(), 2, "non-real elements have quadratic minpoly");
    }
    println!("\nradius = Euclidean norm across the whole tower");
}
