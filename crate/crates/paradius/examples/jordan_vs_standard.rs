//! The Jordan product ½(AB + BA) changes the multiplication but not the
//! minimal polynomial: powers coincide with standard powers, so the radius is
//! still the spectral radius. The algebra is commutative but not alternative,
//! witnessed by the pair A = e12, B = e21.
//!
//!     cargo run --example jordan_vs_standard

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use paradius::laws::{check_alternativity, Verdict};
use paradius::matrix::example_jordan_nonalternative;
use paradius::random::random_matrix;
use paradius::{
    make_matrix_algebra, minimal_polynomial, radius, spectral_radius, FieldTag, Mode, ProductKind,
    Scalar,
};

fn main() {
    let n = 3;
    let jordan = make_matrix_algebra(n, FieldTag::Real, ProductKind::Jordan, Mode::Exact).unwrap();
    let standard =
        make_matrix_algebra(n, FieldTag::Real, ProductKind::Standard, Mode::Exact).unwrap();

    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let m = random_matrix(n, FieldTag::Real, Mode::Exact, &mut rng);
    println!("A = {}", serde_json::to_string(&m.to_json()).unwrap());

    let p_jordan = minimal_polynomial(&jordan, &m.to_element(&jordan).unwrap()).unwrap();
    let p_standard = minimal_polynomial(&standard, &m.to_element(&standard).unwrap()).unwrap();
    println!("jordan minpoly:   {p_jordan}");
    println!("standard minpoly: {p_standard}");
    assert_eq!(p_jordan, p_standard, "identical by the power identity");

    let r = radius(&jordan, &m.to_element(&jordan).unwrap()).unwrap().radius;
    let rho = spectral_radius(&m).unwrap();
    println!("jordan radius = {r}, spectral radius = {rho}");
    assert!((r - rho).abs() <= 1e-8);

    // (A·B)·B = ½B but A·(B·B) = 0: the algebra is not alternative
    let (a, b) = example_jordan_nonalternative(n, FieldTag::Real, Mode::Exact).unwrap();
    let ae = a.to_element(&jordan).unwrap();
    let be = b.to_element(&jordan).unwrap();
    let lhs = jordan.mul(&jordan.mul(&ae, &be).unwrap(), &be).unwrap();
    let rhs = jordan.mul(&ae, &jordan.mul(&be, &be).unwrap()).unwrap();
    let half = Scalar::from_ratio(1, 2, FieldTag::Real, Mode::Exact);
    assert_eq!(lhs, be.scale(&half).unwrap());
    assert!(rhs.is_zero());
    println!("(A·B)·B = B/2 while A·(B·B) = 0");

    let report = check_alternativity(&jordan, 10, 0).unwrap();
    assert_eq!(report.verdict, Verdict::FailsWithWitness);
    println!(
        "alternativity checker: {:?} with discrepancy {}",
        report.verdict, report.max_discrepancy
    );
}
