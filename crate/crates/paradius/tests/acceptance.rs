//! Acceptance suite: every closed-form theorem oracle checked against the
//! generic engine at its stated tolerance, one pass/fail line per criterion
//! (run with `cargo test --test acceptance -- --nocapture` to see them).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use paradius::laws::{
    check_alternativity, check_binary_law, check_power_associativity, check_radius_laws,
    BinaryLaw, LawWitness, Verdict,
};
use paradius::matrix::{
    example_jordan_nonalternative, example_positive_negative_square, example_star_nilpotent,
    hadamard_minpoly_oracle, hadamard_radius_oracle, make_matrix_algebra, prime_map,
    star_power_oracle, star_product, ProductKind,
};
use paradius::random::{random_element, random_matrix};
use paradius::roots::{char_poly, radius, spectral_radius};
use paradius::{
    euclidean_norm, make_cayley_dickson, minimal_polynomial, replay_witness, AlgebraHandle,
    FieldTag, Mode, Polynomial, Scalar,
};

fn criterion(name: &str, run: impl FnOnce() -> Result<String, String>) {
    match run() {
        Ok(detail) => println!("acceptance {name}: PASS ({detail})"),
        Err(msg) => {
            println!("acceptance {name}: FAIL ({msg})");
            panic!("{name}: {msg}");
        }
    }
}

const BOTH_FIELDS: [FieldTag; 2] = [FieldTag::Real, FieldTag::Complex];
const STAR_KINDS: [ProductKind; 2] = [ProductKind::Star1N, ProductKind::StarN1];

#[test]
fn criterion_01_hadamard_radius_and_minpoly() {
    criterion("1 hadamard radius + minpoly oracles", || {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        let mut max_diff = 0.0f64;
        let mut count = 0;
        for n in [2usize, 3, 4] {
            let alg = make_matrix_algebra(n, FieldTag::Real, ProductKind::Hadamard, Mode::Exact)
                .map_err(|e| e.to_string())?;
            for _ in 0..67 {
                let m = random_matrix(n, FieldTag::Real, Mode::Exact, &mut rng);
                let el = m.to_element(&alg).map_err(|e| e.to_string())?;
                let report = radius(&alg, &el).map_err(|e| e.to_string())?;
                let oracle_radius = hadamard_radius_oracle(&m);
                let diff = (report.radius - oracle_radius).abs();
                max_diff = max_diff.max(diff);
                if diff > 1e-9 {
                    return Err(format!(
                        "radius {} vs sup norm {} (n={n})",
                        report.radius, oracle_radius
                    ));
                }
                let oracle_poly = hadamard_minpoly_oracle(&m).map_err(|e| e.to_string())?;
                if report.minpoly != oracle_poly {
                    return Err(format!("minpoly mismatch at n={n}"));
                }
                count += 1;
            }
        }
        Ok(format!("{count} matrices, max |Δradius| = {max_diff:.2e} ≤ 1e-9, minpoly exact"))
    });
}

#[test]
fn criterion_02_standard_radius_is_spectral_radius() {
    criterion("2 standard radius = spectral radius", || {
        let mut rng = ChaCha8Rng::seed_from_u64(102);
        let mut max_diff = 0.0f64;
        let mut count = 0;
        for field in BOTH_FIELDS {
            for n in [2usize, 3, 4] {
                let alg = make_matrix_algebra(n, field, ProductKind::Standard, Mode::Exact)
                    .map_err(|e| e.to_string())?;
                for _ in 0..34 {
                    let m = random_matrix(n, field, Mode::Exact, &mut rng);
                    let el = m.to_element(&alg).map_err(|e| e.to_string())?;
                    let r = radius(&alg, &el).map_err(|e| e.to_string())?.radius;
                    let rho = spectral_radius(&m).map_err(|e| e.to_string())?;
                    let diff = (r - rho).abs();
                    max_diff = max_diff.max(diff);
                    if diff > 1e-8 {
                        return Err(format!("radius {r} vs ρ {rho} (n={n}, {field})"));
                    }
                    count += 1;
                }
            }
        }
        Ok(format!("{count} matrices over R and C, max |r - ρ| = {max_diff:.2e} ≤ 1e-8"))
    });
}

#[test]
fn criterion_03_jordan_minpoly_identity() {
    criterion("3 jordan minpoly = standard minpoly", || {
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        let mut count = 0;
        for field in BOTH_FIELDS {
            for n in [2usize, 3, 4] {
                let jordan = make_matrix_algebra(n, field, ProductKind::Jordan, Mode::Exact)
                    .map_err(|e| e.to_string())?;
                let standard = make_matrix_algebra(n, field, ProductKind::Standard, Mode::Exact)
                    .map_err(|e| e.to_string())?;
                for _ in 0..34 {
                    let m = random_matrix(n, field, Mode::Exact, &mut rng);
                    let pj = minimal_polynomial(&jordan, &m.to_element(&jordan).unwrap())
                        .map_err(|e| e.to_string())?;
                    let ps = minimal_polynomial(&standard, &m.to_element(&standard).unwrap())
                        .map_err(|e| e.to_string())?;
                    if pj != ps {
                        return Err(format!("minpoly mismatch at n={n}, {field}"));
                    }
                    count += 1;
                }
            }
        }
        Ok(format!("{count} matrices, exact polynomial equality"))
    });
}

#[test]
fn criterion_04_star_theorems() {
    criterion("4 star power/minpoly/radius theorems", || {
        let mut rng = ChaCha8Rng::seed_from_u64(104);
        let mut max_radius_diff = 0.0f64;
        let mut count = 0;
        for kind in STAR_KINDS {
            for field in BOTH_FIELDS {
                for n in [2usize, 3, 4] {
                    let star = make_matrix_algebra(n, field, kind, Mode::Exact)
                        .map_err(|e| e.to_string())?;
                    let standard =
                        make_matrix_algebra(n, field, ProductKind::Standard, Mode::Exact)
                            .map_err(|e| e.to_string())?;
                    for _ in 0..17 {
                        let m = random_matrix(n, field, Mode::Exact, &mut rng);
                        let el = m.to_element(&star).unwrap();
                        // power identity A^<k> = ((A')^k)' exactly, k <= 6
                        for k in 1..=6u32 {
                            let generic = star.power(&el, k).map_err(|e| e.to_string())?;
                            let oracle = star_power_oracle(&m, k, kind)
                                .unwrap()
                                .to_element(&star)
                                .unwrap();
                            if generic != oracle {
                                return Err(format!("power identity failed at n={n}, k={k}"));
                            }
                        }
                        // minimal polynomial coincides with that of A'
                        let primed = prime_map(&m, kind).unwrap();
                        let p_star =
                            minimal_polynomial(&star, &el).map_err(|e| e.to_string())?;
                        let p_primed = minimal_polynomial(
                            &standard,
                            &primed.to_element(&standard).unwrap(),
                        )
                        .map_err(|e| e.to_string())?;
                        if p_star != p_primed {
                            return Err(format!("minpoly mismatch at n={n}, {field}"));
                        }
                        // radius equals ρ(A')
                        let r = radius(&star, &el).map_err(|e| e.to_string())?.radius;
                        let rho = spectral_radius(&primed).map_err(|e| e.to_string())?;
                        let diff = (r - rho).abs();
                        max_radius_diff = max_radius_diff.max(diff);
                        if diff > 1e-8 {
                            return Err(format!("radius {r} vs ρ(A') {rho} at n={n}"));
                        }
                        count += 1;
                    }
                }
            }
        }
        Ok(format!(
            "{count} matrices per both corners, powers and minpolys exact, max |r - ρ(A')| = {max_radius_diff:.2e}"
        ))
    });
}

#[test]
fn criterion_05_star_nilpotent_example() {
    criterion("5 nilpotent example with nonzero eigenvalues", || {
        for n in [2usize, 3, 4, 5] {
            let a = example_star_nilpotent(n, Mode::Exact).unwrap();
            for kind in STAR_KINDS {
                if !star_product(&a, &a, kind).unwrap().is_zero() {
                    return Err(format!("A*A != 0 for n={n}, {kind:?}"));
                }
                let alg = make_matrix_algebra(n, FieldTag::Complex, kind, Mode::Exact).unwrap();
                let report = radius(&alg, &a.to_element(&alg).unwrap())
                    .map_err(|e| e.to_string())?;
                if report.radius != 0.0 {
                    return Err(format!("star radius {} != 0 for n={n}", report.radius));
                }
            }
            // det(tI - A) = t^(n-2) (t^2 - 2) exactly
            let cp = char_poly(&a).unwrap();
            let mut expect = vec![Scalar::zero(FieldTag::Complex, Mode::Exact); n + 1];
            expect[n] = Scalar::one(FieldTag::Complex, Mode::Exact);
            expect[n - 2] = Scalar::from_i64(-2, FieldTag::Complex, Mode::Exact);
            if cp != Polynomial::from_coeffs(expect).unwrap() {
                return Err(format!("char poly mismatch for n={n}"));
            }
            let rho = spectral_radius(&a).map_err(|e| e.to_string())?;
            if (rho - 2f64.sqrt()).abs() > 1e-10 {
                return Err(format!("spectral radius {rho} != √2 for n={n}"));
            }
        }
        Ok("n in {2,3,4,5}: A*A = 0, char poly = t^(n-2)(t^2-2), r_* = 0, ρ = √2".into())
    });
}

#[test]
fn criterion_06_positive_matrix_with_negative_square() {
    criterion("6 positive matrix, negative star square", || {
        for n in [2usize, 3, 4, 5] {
            for kind in STAR_KINDS {
                let a = example_positive_negative_square(n, FieldTag::Real, Mode::Exact)
                    .unwrap();
                if !a.is_positive() {
                    return Err(format!("A not positive for n={n}"));
                }
                let sq = star_power_oracle(&a, 2, kind).unwrap();
                if !sq.is_negative() {
                    return Err(format!("A^<2> not negative for n={n}, {kind:?}"));
                }
                let minus_one = Scalar::from_i64(-1, FieldTag::Real, Mode::Exact);
                for i in 0..n {
                    for j in 0..n {
                        let e = sq.entry(i, j);
                        let corner = (i == 0 && j == 0) || (i == n - 1 && j == n - 1);
                        if corner && *e != minus_one {
                            return Err(format!("({i},{j}) entry is {e}, expected -1"));
                        }
                        if !corner && !e.is_zero() {
                            return Err(format!("({i},{j}) entry is {e}, expected 0"));
                        }
                    }
                }
            }
        }
        Ok("n in {2,3,4,5}, both corners: A positive, A^<2> = -e11 - enn".into())
    });
}

#[test]
fn criterion_07_jordan_nonalternativity_witness() {
    criterion("7 jordan non-alternativity witness", || {
        for n in [2usize, 3, 4] {
            let alg = make_matrix_algebra(n, FieldTag::Real, ProductKind::Jordan, Mode::Exact)
                .unwrap();
            let (a, b) = example_jordan_nonalternative(n, FieldTag::Real, Mode::Exact).unwrap();
            let ae = a.to_element(&alg).unwrap();
            let be = b.to_element(&alg).unwrap();
            let ab_b = alg.mul(&alg.mul(&ae, &be).unwrap(), &be).unwrap();
            let half = Scalar::from_ratio(1, 2, FieldTag::Real, Mode::Exact);
            if ab_b != be.scale(&half).unwrap() {
                return Err(format!("(A·B)·B != B/2 at n={n}"));
            }
            if !alg.mul(&ae, &alg.mul(&be, &be).unwrap()).unwrap().is_zero() {
                return Err(format!("A·(B·B) != 0 at n={n}"));
            }
            // the checker finds it deterministically and reproducibly
            let r1 = check_alternativity(&alg, 5, 7).unwrap();
            let r2 = check_alternativity(&alg, 5, 7).unwrap();
            if r1.verdict != Verdict::FailsWithWitness {
                return Err(format!("alternativity verdict {:?} at n={n}", r1.verdict));
            }
            if r1.to_json() != r2.to_json() {
                return Err("alternativity report not deterministic".into());
            }
            let Some(LawWitness::Elements(_)) = &r1.witness else {
                return Err("missing element witness".into());
            };
            let replayed = replay_witness(&r1).ok_or("witness replay failed")?;
            if replayed <= 0.0 {
                return Err("witness does not reproduce a violation".into());
            }
        }
        Ok("n in {2,3,4}: identities exact, checker fails deterministically with replayable witness".into())
    });
}

#[test]
fn criterion_08_radius_laws_all_builtin_matrix_algebras() {
    criterion("8 radius laws (homogeneity, power rule, nilpotency)", || {
        let algebras: Vec<AlgebraHandle> = vec![
            make_matrix_algebra(2, FieldTag::Real, ProductKind::Standard, Mode::Exact).unwrap(),
            make_matrix_algebra(2, FieldTag::Real, ProductKind::Hadamard, Mode::Exact).unwrap(),
            make_matrix_algebra(2, FieldTag::Real, ProductKind::Jordan, Mode::Exact).unwrap(),
            make_matrix_algebra(2, FieldTag::Complex, ProductKind::Star1N, Mode::Exact).unwrap(),
            make_matrix_algebra(2, FieldTag::Complex, ProductKind::StarN1, Mode::Exact).unwrap(),
        ];
        let mut worst = 0.0f64;
        for (i, alg) in algebras.iter().enumerate() {
            let report = check_radius_laws(alg, 100, 108 + i as u64).map_err(|e| e.to_string())?;
            worst = worst.max(report.max_discrepancy);
            if report.verdict != Verdict::Holds {
                return Err(format!(
                    "radius laws failed on {} (discrepancy {:.2e})",
                    report.algebra_name, report.max_discrepancy
                ));
            }
        }
        Ok(format!("100 elements × 5 algebras, worst discrepancy {worst:.2e}"))
    });
}

#[test]
fn criterion_09_cayley_dickson_cross_check() {
    criterion("9 cayley-dickson radius = euclidean norm", || {
        let mut rng = ChaCha8Rng::seed_from_u64(109);
        let mut max_diff = 0.0f64;
        for dim in [2usize, 4, 8, 16] {
            let alg = make_cayley_dickson(dim, Mode::Exact).unwrap();
            for _ in 0..100 {
                let x = random_element(&alg, &mut rng);
                let r = radius(&alg, &x).map_err(|e| e.to_string())?.radius;
                let norm = euclidean_norm(&x).unwrap();
                let diff = (r - norm).abs();
                max_diff = max_diff.max(diff);
                if diff > 1e-8 {
                    return Err(format!("dim {dim}: radius {r} vs norm {norm}"));
                }
            }
        }
        Ok(format!("100 elements × dims 2,4,8,16, max |r - ‖x‖| = {max_diff:.2e} ≤ 1e-8"))
    });
}

#[test]
fn criterion_10_law_suite() {
    criterion("10 law suite across the built-in algebras", || {
        // power-associativity everywhere, k <= 5, 50 trials
        let mut algebras: Vec<AlgebraHandle> = Vec::new();
        for n in [2usize, 3] {
            for kind in [
                ProductKind::Standard,
                ProductKind::Hadamard,
                ProductKind::Jordan,
                ProductKind::Star1N,
                ProductKind::StarN1,
            ] {
                let field = if kind.is_star() { FieldTag::Complex } else { FieldTag::Real };
                algebras.push(make_matrix_algebra(n, field, kind, Mode::Exact).unwrap());
            }
        }
        for dim in [2usize, 4, 8, 16] {
            algebras.push(make_cayley_dickson(dim, Mode::Exact).unwrap());
        }
        for alg in &algebras {
            let report = check_power_associativity(alg, 50, 5, 110).unwrap();
            if report.verdict != Verdict::Holds {
                return Err(format!("power-associativity failed on {}", alg.name()));
            }
        }

        // star associativity on 100 exact random triples; commutativity fails
        for kind in STAR_KINDS {
            let star = make_matrix_algebra(2, FieldTag::Complex, kind, Mode::Exact).unwrap();
            let assoc = check_binary_law(&star, BinaryLaw::Associativity, 100, 111).unwrap();
            if assoc.verdict != Verdict::Holds || assoc.max_discrepancy != 0.0 {
                return Err(format!("star associativity failed for {kind:?}"));
            }
            let comm = check_binary_law(&star, BinaryLaw::Commutativity, 50, 112).unwrap();
            if comm.verdict != Verdict::FailsWithWitness {
                return Err(format!("star commutativity unexpectedly held for {kind:?}"));
            }
        }

        // hadamard is commutative and associative
        let hadamard =
            make_matrix_algebra(2, FieldTag::Real, ProductKind::Hadamard, Mode::Exact).unwrap();
        for law in [BinaryLaw::Commutativity, BinaryLaw::Associativity] {
            let report = check_binary_law(&hadamard, law, 100, 113).unwrap();
            if report.verdict != Verdict::Holds {
                return Err(format!("hadamard {law:?} failed"));
            }
        }
        Ok("power-associativity holds on 14 algebras; star assoc exact on 100 triples; \
            hadamard commutative+associative; star commutativity fails with witness"
            .into())
    });
}
