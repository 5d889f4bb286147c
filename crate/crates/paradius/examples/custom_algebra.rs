//! Build an algebra from raw structure constants. Here: the complex numbers
//! as a 2-dimensional real algebra with basis (1, i). The unit element is
//! found automatically by solving the unit equations, and the minimal
//! polynomial of the basis element i comes out as t² + 1, giving radius 1.
//!
//!     cargo run --example custom_algebra

use paradius::{
    evaluate_at_element, make_structure_algebra, minimal_polynomial, radius, FieldTag, Mode,
    Scalar, StructureConstants,
};

fn main() {
    let r = |v: i64| Scalar::from_i64(v, FieldTag::Real, Mode::Exact);

    // gamma[i][j][k] = k-th coordinate of (basis_i · basis_j), basis (1, i):
    //   1·1 = 1,  1·i = i,  i·1 = i,  i·i = -1
    let gamma = StructureConstants::from_nested(vec![
        vec![vec![r(1), r(0)], vec![r(0), r(1)]],
        vec![vec![r(0), r(1)], vec![r(-1), r(0)]],
    ])
    .unwrap();

    let alg = make_structure_algebra(gamma, FieldTag::Real, None).unwrap();
    let unit = alg.unit().expect("unit solved from the structure constants");
    println!("algebra: {}", alg.name());
    println!("unit coordinates: {unit:?}");

    let i = alg.basis_element(1);
    let p = minimal_polynomial(&alg, &i).unwrap();
    println!("minimal polynomial of i: {p}");
    assert!(evaluate_at_element(&alg, &p, &i).unwrap().is_zero());

    let report = radius(&alg, &i).unwrap();
    println!("roots: {:?}", report.roots.roots);
    println!("radius of i: {}", report.radius);
    assert!((report.radius - 1.0).abs() < 1e-12);

    // 3 + 4i has minimal polynomial t² - 6t + 25 and radius 5
    let z = alg.element(vec![r(3), r(4)]).unwrap();
    let report = radius(&alg, &z).unwrap();
    println!("minimal polynomial of 3+4i: {}", report.minpoly);
    println!("radius of 3+4i: {}", report.radius);
    assert!((report.radius - 5.0).abs() < 1e-12);
}
