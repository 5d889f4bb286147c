//! The radius under the Hadamard (entrywise) product is the sup norm, and
//! the minimal polynomial is the product of linear factors over the distinct
//! entries. This example computes both with the generic engine and checks
//! them against the closed forms.
//!
//!     cargo run --example hadamard_radius

use paradius::matrix::{hadamard_minpoly_oracle, hadamard_radius_oracle, MatrixElement};
use paradius::{make_matrix_algebra, radius, FieldTag, Mode, ProductKind, Scalar};

fn main() {
    let n = 2;
    let alg = make_matrix_algebra(n, FieldTag::Real, ProductKind::Hadamard, Mode::Exact)
        .expect("valid size");

    let a = MatrixElement::from_i64_rows(&[&[1, 2], &[3, 4]], FieldTag::Real, Mode::Exact)
        .expect("square");
    println!("A = {}", serde_json::to_string(&a.to_json()).unwrap());

    // entrywise powers: A^[3] = (a_ij^3)
    let el = a.to_element(&alg).unwrap();
    let cube = alg.power(&el, 3).unwrap();
    let cube_strings: Vec<String> = cube.coords().iter().map(Scalar::to_string).collect();
    println!("A^[3] coordinates: [{}]", cube_strings.join(", "));

    let report = radius(&alg, &el).unwrap();
    println!("minimal polynomial: {}", report.minpoly);
    println!("radius:             {}", report.radius);

    let oracle_poly = hadamard_minpoly_oracle(&a).unwrap();
    let oracle_radius = hadamard_radius_oracle(&a);
    println!("linear-factor oracle: {}", oracle_poly);
    println!("sup-norm oracle:      {}", oracle_radius);

    assert_eq!(report.minpoly, oracle_poly, "minimal polynomials agree exactly");
    assert!((report.radius - oracle_radius).abs() <= 1e-9);
    println!("generic engine and closed forms agree");
}
