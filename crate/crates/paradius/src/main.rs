//! Command-line front end: minimal polynomials, radius reports, law suites,
//! the built-in example matrices, and oracle cross-checks on random batches.
//!
//! Exit codes: 0 success, 1 violated oracle or unexpected law verdict,
//! 2 input or usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use paradius::laws::{
    check_alternativity, check_binary_law, check_power_associativity, check_radius_laws,
    BinaryLaw, LawKind, LawReport, Verdict,
};
use paradius::matrix::{
    example_jordan_nonalternative, example_positive_negative_square, example_star_nilpotent,
    hadamard_minpoly_oracle, hadamard_radius_oracle, make_matrix_algebra, prime_map,
    star_power_oracle, star_product, MatrixElement, ProductKind,
};
use paradius::random::random_matrix;
use paradius::roots::{char_poly, poly_roots, radius, spectral_radius};
use paradius::{
    euclidean_norm, make_cayley_dickson, minimal_polynomial, minimal_polynomial_detailed,
    parse_scalar, AlgebraHandle, Element, FieldTag, Mode, Scalar,
};

#[derive(Parser)]
#[command(
    name = "paradius",
    version,
    about = "Minimal polynomials and radii of elements in power-associative matrix algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the minimal polynomial of the element in --input
    Minpoly(CommonArgs),
    /// Compute the full radius report of the element in --input
    Radius(CommonArgs),
    /// Run the law suite for an algebra and compare against expected verdicts
    Laws(CommonArgs),
    /// Print the built-in example matrices with their verified properties
    Examples(CommonArgs),
    /// Compare the generic engine against the closed-form oracles on random batches
    OracleDiff(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Algebra: standard | hadamard | jordan | star1n | starn1 | cd2 | cd4 | cd8 | cd16
    #[arg(long, default_value = "standard")]
    algebra: String,

    /// Matrix size n (taken from the input file when one is given)
    #[arg(long)]
    n: Option<usize>,

    /// Base field R or C (defaults to C for star algebras, R otherwise)
    #[arg(long)]
    field: Option<String>,

    /// Arithmetic mode: exact | approx
    #[arg(long, default_value = "exact")]
    mode: String,

    /// Input element: matrix JSON {"n",..} or coordinate JSON {"dim","coords"}
    #[arg(long)]
    input: Option<PathBuf>,

    /// Seed for randomized checks
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Trial count for randomized checks
    #[arg(long, default_value_t = 100)]
    trials: u32,

    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AlgebraChoice {
    Matrix(ProductKind),
    CayleyDickson(usize),
}

#[derive(Debug)]
enum Failure {
    /// Bad flags, files, or values: exit 2.
    Input(String),
    /// The engine disagreed with a closed-form oracle or expectation: exit 1.
    Oracle(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Oracle(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Oracle(m) => m,
        }
    }
}

fn input_err(msg: impl std::fmt::Display) -> Failure {
    Failure::Input(msg.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Cmd::Minpoly(args) => cmd_minpoly(args),
        Cmd::Radius(args) => cmd_radius(args),
        Cmd::Laws(args) => cmd_laws(args),
        Cmd::Examples(args) => cmd_examples(args),
        Cmd::OracleDiff(args) => cmd_oracle_diff(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn parse_choice(args: &CommonArgs) -> Result<(AlgebraChoice, FieldTag, Mode), Failure> {
    let choice = if let Some(dim) = args.algebra.strip_prefix("cd") {
        let dim: usize = dim
            .parse()
            .map_err(|_| input_err(format!("bad cayley-dickson dimension in `{}`", args.algebra)))?;
        AlgebraChoice::CayleyDickson(dim)
    } else {
        AlgebraChoice::Matrix(ProductKind::parse(&args.algebra).ok_or_else(|| {
            input_err(format!(
                "unknown algebra `{}` (expected standard|hadamard|jordan|star1n|starn1|cd<dim>)",
                args.algebra
            ))
        })?)
    };
    let field = match args.field.as_deref() {
        Some("R") => FieldTag::Real,
        Some("C") => FieldTag::Complex,
        Some(other) => return Err(input_err(format!("unknown field `{other}` (expected R or C)"))),
        None => match choice {
            AlgebraChoice::Matrix(kind) if kind.is_star() => FieldTag::Complex,
            _ => FieldTag::Real,
        },
    };
    if matches!(choice, AlgebraChoice::CayleyDickson(_)) && field == FieldTag::Complex {
        return Err(input_err("cayley-dickson algebras are defined over R"));
    }
    let mode = match args.mode.as_str() {
        "exact" => Mode::Exact,
        "approx" => Mode::Approx,
        other => return Err(input_err(format!("unknown mode `{other}` (expected exact or approx)"))),
    };
    Ok((choice, field, mode))
}

fn read_json(path: &PathBuf) -> Result<serde_json::Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_err(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

/// Build the algebra and element for commands that take an input file.
fn load_element(args: &CommonArgs) -> Result<(AlgebraHandle, Element), Failure> {
    let (choice, field, mode) = parse_choice(args)?;
    let path = args
        .input
        .as_ref()
        .ok_or_else(|| input_err("this command needs --input FILE"))?;
    let value = read_json(path)?;
    match choice {
        AlgebraChoice::Matrix(kind) => {
            let m = MatrixElement::from_json(&value, mode).map_err(input_err)?;
            if let Some(n) = args.n {
                if n != m.n() {
                    return Err(input_err(format!(
                        "--n {n} disagrees with the input matrix size {}",
                        m.n()
                    )));
                }
            }
            let field = if m.field() == FieldTag::Complex {
                FieldTag::Complex
            } else {
                field
            };
            let alg = make_matrix_algebra(m.n(), field, kind, mode).map_err(input_err)?;
            let el = m.to_element(&alg).map_err(input_err)?;
            Ok((alg, el))
        }
        AlgebraChoice::CayleyDickson(dim) => {
            let file_dim = value
                .get("dim")
                .and_then(|v| v.as_u64())
                .ok_or_else(|| input_err("coordinate JSON needs an integer `dim`"))?
                as usize;
            if file_dim != dim {
                return Err(input_err(format!(
                    "--algebra cd{dim} disagrees with the input dim {file_dim}"
                )));
            }
            let coords_json = value
                .get("coords")
                .and_then(|v| v.as_array())
                .ok_or_else(|| input_err("coordinate JSON needs a `coords` array"))?;
            let mut coords = Vec::with_capacity(coords_json.len());
            for c in coords_json {
                let s = c
                    .as_str()
                    .ok_or_else(|| input_err("`coords` must be an array of scalar strings"))?;
                coords.push(parse_scalar(s, FieldTag::Real, mode).map_err(input_err)?);
            }
            let alg = make_cayley_dickson(dim, mode).map_err(input_err)?;
            let el = alg.element(coords).map_err(input_err)?;
            Ok((alg, el))
        }
    }
}

fn fmt_c64(z: num_complex::Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{} - {}i", z.re, -z.im)
    } else {
        format!("{} + {}i", z.re, z.im)
    }
}

fn cmd_minpoly(args: &CommonArgs) -> Result<(), Failure> {
    let (alg, el) = load_element(args)?;
    let outcome = minimal_polynomial_detailed(&alg, &el).map_err(input_err)?;
    if outcome.ill_conditioned {
        eprintln!("warning: a rank decision fell inside the tolerance ambiguity band; the result may be ill-conditioned");
    }
    if args.json {
        let json = serde_json::json!({
            "algebra": alg.name(),
            "minpoly": outcome.poly.to_json(),
            "degree": outcome.poly.degree(),
            "ill_conditioned": outcome.ill_conditioned,
        });
        println!("{}", serde_json::to_string_pretty(&json).unwrap());
    } else {
        println!("algebra: {}", alg.name());
        println!("minimal polynomial: {}", outcome.poly);
        println!(
            "coefficients (low to high): [{}]",
            outcome.poly.coeff_strings().join(", ")
        );
    }
    Ok(())
}

fn cmd_radius(args: &CommonArgs) -> Result<(), Failure> {
    let (alg, el) = load_element(args)?;
    let report = radius(&alg, &el).map_err(input_err)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
    } else {
        println!("algebra: {}", report.algebra_name);
        println!("minimal polynomial: {}", report.minpoly);
        println!("roots:");
        for (z, r) in report.roots.roots.iter().zip(&report.roots.residuals) {
            println!("  {}  (residual {:.1e})", fmt_c64(*z), r);
        }
        println!("radius: {}", report.radius);
        println!("argmax root: {}", fmt_c64(report.argmax_root));
    }
    Ok(())
}

/// The verdicts each built-in algebra is expected to produce. A mismatch is
/// an engine bug, so the laws command doubles as a CI hook.
fn expected_verdicts(choice: AlgebraChoice) -> Vec<(LawKind, Verdict)> {
    use LawKind::*;
    use Verdict::*;
    let (alt, assoc, comm) = match choice {
        AlgebraChoice::Matrix(ProductKind::Standard) => (Holds, Holds, FailsWithWitness),
        AlgebraChoice::Matrix(ProductKind::Hadamard) => (Holds, Holds, Holds),
        AlgebraChoice::Matrix(ProductKind::Jordan) => {
            (FailsWithWitness, FailsWithWitness, Holds)
        }
        AlgebraChoice::Matrix(_) => (Holds, Holds, FailsWithWitness),
        AlgebraChoice::CayleyDickson(d) => (
            if d >= 16 { FailsWithWitness } else { Holds },
            if d >= 8 { FailsWithWitness } else { Holds },
            if d >= 4 { FailsWithWitness } else { Holds },
        ),
    };
    vec![
        (PowerAssociativity, Holds),
        (Alternativity, alt),
        (Associativity, assoc),
        (Commutativity, comm),
        (LeftDistributivity, Holds),
        (RightDistributivity, Holds),
        (RadiusLaws, Holds),
    ]
}

fn build_algebra(
    choice: AlgebraChoice,
    n: usize,
    field: FieldTag,
    mode: Mode,
) -> Result<AlgebraHandle, Failure> {
    match choice {
        AlgebraChoice::Matrix(kind) => make_matrix_algebra(n, field, kind, mode).map_err(input_err),
        AlgebraChoice::CayleyDickson(dim) => make_cayley_dickson(dim, mode).map_err(input_err),
    }
}

fn cmd_laws(args: &CommonArgs) -> Result<(), Failure> {
    let (choice, field, mode) = parse_choice(args)?;
    let n = args.n.unwrap_or(2);
    let alg = build_algebra(choice, n, field, mode)?;
    let trials = args.trials.max(1);
    let seed = args.seed;

    let mut reports: Vec<LawReport> = vec![
        check_power_associativity(&alg, trials, 5, seed).map_err(input_err)?,
        check_alternativity(&alg, trials, seed.wrapping_add(1)).map_err(input_err)?,
    ];
    for (i, law) in [
        BinaryLaw::Associativity,
        BinaryLaw::Commutativity,
        BinaryLaw::LeftDistributivity,
        BinaryLaw::RightDistributivity,
    ]
    .into_iter()
    .enumerate()
    {
        reports
            .push(check_binary_law(&alg, law, trials, seed.wrapping_add(2 + i as u64)).map_err(input_err)?);
    }
    reports.push(check_radius_laws(&alg, trials, seed.wrapping_add(6)).map_err(input_err)?);

    let expected = expected_verdicts(choice);
    let mut mismatches = Vec::new();
    for report in &reports {
        if let Some((_, want)) = expected.iter().find(|(law, _)| *law == report.law) {
            if *want != report.verdict {
                mismatches.push(format!(
                    "{}: got {:?}, expected {:?}",
                    report.law.as_str(),
                    report.verdict,
                    want
                ));
            }
        }
    }

    if args.json {
        let json = serde_json::json!({
            "algebra": alg.name(),
            "seed": seed,
            "reports": reports.iter().map(LawReport::to_json).collect::<Vec<_>>(),
            "expected_mismatches": mismatches,
        });
        println!("{}", serde_json::to_string_pretty(&json).unwrap());
    } else {
        println!("algebra: {}  (seed {seed}, trials {trials})", alg.name());
        for report in &reports {
            println!(
                "  {:<22} {:<18} max discrepancy {:.3e}",
                report.law.as_str(),
                match report.verdict {
                    Verdict::Holds => "Holds",
                    Verdict::FailsWithWitness => "FailsWithWitness",
                },
                report.max_discrepancy
            );
        }
        if mismatches.is_empty() {
            println!("all verdicts match expectations");
        } else {
            for m in &mismatches {
                println!("unexpected verdict: {m}");
            }
        }
    }

    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Oracle(format!(
            "{} law verdict(s) differed from expectations",
            mismatches.len()
        )))
    }
}

fn cmd_examples(args: &CommonArgs) -> Result<(), Failure> {
    let (choice, _, mode) = parse_choice(args)?;
    let n = args.n.unwrap_or(2);
    let star_kind = match choice {
        AlgebraChoice::Matrix(kind) if kind.is_star() => kind,
        _ => ProductKind::Star1N,
    };
    let which = match choice {
        AlgebraChoice::Matrix(kind) if kind.is_star() => vec!["star-nilpotent", "positive-negative-square"],
        AlgebraChoice::Matrix(ProductKind::Jordan) => vec!["jordan-nonalternative"],
        _ => vec!["star-nilpotent", "positive-negative-square", "jordan-nonalternative"],
    };

    let mut out = Vec::new();
    for name in which {
        match name {
            "star-nilpotent" => {
                let a = example_star_nilpotent(n, mode).map_err(input_err)?;
                let square = star_product(&a, &a, star_kind).map_err(input_err)?;
                let nilpotent = square.is_zero();
                let cp = char_poly(&a).map_err(input_err)?;
                let eigs = poly_roots(&cp).map_err(input_err)?;
                let rho = eigs.max_modulus();
                let alg = make_matrix_algebra(n, FieldTag::Complex, star_kind, mode)
                    .map_err(input_err)?;
                let star_report =
                    radius(&alg, &a.to_element(&alg).map_err(input_err)?).map_err(input_err)?;
                if !nilpotent || star_report.radius != 0.0 {
                    return Err(Failure::Oracle(
                        "star-nilpotent example failed verification".into(),
                    ));
                }
                out.push(serde_json::json!({
                    "name": name,
                    "algebra": alg.name(),
                    "matrix": a.to_json(),
                    "properties": {
                        "star_square_is_zero": nilpotent,
                        "char_poly": cp.to_json(),
                        "char_poly_display": cp.to_string(),
                        "spectral_radius": rho,
                        "eigenvalues": eigs.roots.iter().map(|z| fmt_c64(*z)).collect::<Vec<_>>(),
                        "star_minpoly": star_report.minpoly.to_json(),
                        "star_radius": star_report.radius,
                    },
                }));
            }
            "positive-negative-square" => {
                let a = example_positive_negative_square(n, FieldTag::Complex, mode)
                    .map_err(input_err)?;
                let square = star_power_oracle(&a, 2, star_kind).map_err(input_err)?;
                if !a.is_positive() || !square.is_negative() {
                    return Err(Failure::Oracle(
                        "positive/negative example failed verification".into(),
                    ));
                }
                out.push(serde_json::json!({
                    "name": name,
                    "matrix": a.to_json(),
                    "properties": {
                        "is_positive": a.is_positive(),
                        "star_square": square.to_json(),
                        "star_square_is_negative": square.is_negative(),
                    },
                }));
            }
            "jordan-nonalternative" => {
                let (a, b) =
                    example_jordan_nonalternative(n, FieldTag::Real, mode).map_err(input_err)?;
                let alg = make_matrix_algebra(n, FieldTag::Real, ProductKind::Jordan, mode)
                    .map_err(input_err)?;
                let ae = a.to_element(&alg).map_err(input_err)?;
                let be = b.to_element(&alg).map_err(input_err)?;
                let ab_b = alg
                    .mul(&alg.mul(&ae, &be).map_err(input_err)?, &be)
                    .map_err(input_err)?;
                let half_b = be
                    .scale(&Scalar::from_ratio(1, 2, FieldTag::Real, mode))
                    .map_err(input_err)?;
                let a_bb = alg
                    .mul(&ae, &alg.mul(&be, &be).map_err(input_err)?)
                    .map_err(input_err)?;
                if ab_b != half_b || !a_bb.is_zero() {
                    return Err(Failure::Oracle(
                        "jordan non-alternativity example failed verification".into(),
                    ));
                }
                out.push(serde_json::json!({
                    "name": name,
                    "algebra": alg.name(),
                    "matrix": a.to_json(),
                    "matrix_b": b.to_json(),
                    "properties": {
                        "ab_b_is_half_b": true,
                        "a_bb_is_zero": true,
                    },
                }));
            }
            _ => unreachable!(),
        }
    }

    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({ "examples": out })).unwrap()
        );
    } else {
        for ex in &out {
            println!("example: {}", ex["name"].as_str().unwrap());
            println!(
                "  matrix: {}",
                serde_json::to_string(&ex["matrix"]).unwrap()
            );
            if let Some(b) = ex.get("matrix_b").filter(|b| !b.is_null()) {
                println!("  second matrix: {}", serde_json::to_string(b).unwrap());
            }
            println!(
                "  properties: {}",
                serde_json::to_string(&ex["properties"]).unwrap()
            );
        }
    }
    Ok(())
}

struct OracleCheck {
    name: &'static str,
    max_discrepancy: f64,
    tolerance: f64,
}

impl OracleCheck {
    fn ok(&self) -> bool {
        self.max_discrepancy <= self.tolerance
    }
}

fn cmd_oracle_diff(args: &CommonArgs) -> Result<(), Failure> {
    let (choice, field, mode) = parse_choice(args)?;
    let n = args.n.unwrap_or(2);
    let trials = args.trials.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut checks: Vec<OracleCheck> = Vec::new();

    match choice {
        AlgebraChoice::Matrix(kind) => {
            let alg = make_matrix_algebra(n, field, kind, mode).map_err(input_err)?;
            let mut radius_diff = 0.0f64;
            let mut poly_mismatches = 0u32;
            let mut power_diff = 0.0f64;
            for _ in 0..trials {
                let m = random_matrix(n, field, mode, &mut rng);
                let el = m.to_element(&alg).map_err(input_err)?;
                let report = radius(&alg, &el).map_err(input_err)?;
                match kind {
                    ProductKind::Standard => {
                        let rho = spectral_radius(&m).map_err(input_err)?;
                        radius_diff = radius_diff.max((report.radius - rho).abs());
                    }
                    ProductKind::Hadamard => {
                        radius_diff = radius_diff
                            .max((report.radius - hadamard_radius_oracle(&m)).abs());
                        if mode == Mode::Exact {
                            let oracle = hadamard_minpoly_oracle(&m).map_err(input_err)?;
                            if report.minpoly != oracle {
                                poly_mismatches += 1;
                            }
                        }
                    }
                    ProductKind::Jordan => {
                        let standard =
                            make_matrix_algebra(n, field, ProductKind::Standard, mode)
                                .map_err(input_err)?;
                        let ps = minimal_polynomial(
                            &standard,
                            &m.to_element(&standard).map_err(input_err)?,
                        )
                        .map_err(input_err)?;
                        if report.minpoly != ps {
                            poly_mismatches += 1;
                        }
                        let rho = spectral_radius(&m).map_err(input_err)?;
                        radius_diff = radius_diff.max((report.radius - rho).abs());
                    }
                    ProductKind::Star1N | ProductKind::StarN1 => {
                        let primed = prime_map(&m, kind).map_err(input_err)?;
                        let rho = spectral_radius(&primed).map_err(input_err)?;
                        radius_diff = radius_diff.max((report.radius - rho).abs());
                        let standard =
                            make_matrix_algebra(n, field, ProductKind::Standard, mode)
                                .map_err(input_err)?;
                        let pp = minimal_polynomial(
                            &standard,
                            &primed.to_element(&standard).map_err(input_err)?,
                        )
                        .map_err(input_err)?;
                        if report.minpoly != pp {
                            poly_mismatches += 1;
                        }
                        for k in 1..=6u32 {
                            let generic = alg.power(&el, k).map_err(input_err)?;
                            let oracle = star_power_oracle(&m, k, kind)
                                .map_err(input_err)?
                                .to_element(&alg)
                                .map_err(input_err)?;
                            power_diff =
                                power_diff.max(generic.sub(&oracle).map_err(input_err)?.sup_norm());
                        }
                    }
                }
            }
            let radius_tol = if kind == ProductKind::Hadamard { 1e-9 } else { 1e-8 };
            checks.push(OracleCheck {
                name: "radius vs closed-form oracle",
                max_discrepancy: radius_diff,
                tolerance: radius_tol,
            });
            if kind != ProductKind::Standard && mode == Mode::Exact {
                checks.push(OracleCheck {
                    name: "minpoly mismatches vs oracle",
                    max_discrepancy: poly_mismatches as f64,
                    tolerance: 0.0,
                });
            }
            if kind.is_star() {
                checks.push(OracleCheck {
                    name: "star power identity (k <= 6)",
                    max_discrepancy: power_diff,
                    tolerance: if mode == Mode::Exact { 0.0 } else { 1e-10 },
                });
            }
        }
        AlgebraChoice::CayleyDickson(dim) => {
            let alg = make_cayley_dickson(dim, mode).map_err(input_err)?;
            let mut diff = 0.0f64;
            for _ in 0..trials {
                let x = paradius::random::random_element(&alg, &mut rng);
                let r = radius(&alg, &x).map_err(input_err)?.radius;
                let norm = euclidean_norm(&x).map_err(input_err)?;
                diff = diff.max((r - norm).abs());
            }
            checks.push(OracleCheck {
                name: "radius vs euclidean norm",
                max_discrepancy: diff,
                tolerance: 1e-8,
            });
        }
    }

    let all_ok = checks.iter().all(OracleCheck::ok);
    if args.json {
        let json = serde_json::json!({
            "algebra": args.algebra,
            "n": n,
            "trials": trials,
            "seed": args.seed,
            "checks": checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "max_discrepancy": c.max_discrepancy,
                "tolerance": c.tolerance,
                "ok": c.ok(),
            })).collect::<Vec<_>>(),
            "ok": all_ok,
        });
        println!("{}", serde_json::to_string_pretty(&json).unwrap());
    } else {
        println!(
            "oracle-diff: algebra {}, n {}, trials {}, seed {}",
            args.algebra, n, trials, args.seed
        );
        for c in &checks {
            println!(
                "  {:<34} max discrepancy {:.3e} (tolerance {:.0e})  {}",
                c.name,
                c.max_discrepancy,
                c.tolerance,
                if c.ok() { "ok" } else { "VIOLATED" }
            );
        }
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Oracle("oracle discrepancy above tolerance".into()))
    }
}
