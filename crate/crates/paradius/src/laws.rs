//! Randomized and deterministic checkers for algebraic laws and for the
//! radius laws (nonnegativity, homogeneity, the power rule, and the
//! nilpotency characterization of radius zero).
//!
//! Checks try the known deterministic witnesses first, then seeded random
//! trials, so counterexamples never depend on random luck. Reports are
//! reproducible: the same seed yields the same report, and a failing report
//! carries a witness that re-evaluates to a violation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{linear_combine, AlgebraError, AlgebraHandle, Element, ProductRule};
use crate::matrix::example_star_nilpotent;
use crate::minpoly::minimal_polynomial;
use crate::random::{random_element, random_nonzero_scalar};
use crate::roots::{radius, RadiusError};
use crate::scalar::{FieldTag, Mode, Scalar};

/// Tolerance for approx-mode law comparisons; exact mode demands equality.
const APPROX_LAW_TOL: f64 = 1e-10;
/// Absolute tolerance for radius homogeneity.
const HOMOGENEITY_TOL: f64 = 1e-9;
/// Relative tolerance for the radius power rule.
const POWER_RULE_TOL: f64 = 1e-8;
/// A radius below this is treated as zero in the nilpotency check.
const RADIUS_ZERO_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawKind {
    PowerAssociativity,
    Alternativity,
    Associativity,
    Commutativity,
    LeftDistributivity,
    RightDistributivity,
    RadiusLaws,
}

impl LawKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LawKind::PowerAssociativity => "power-associativity",
            LawKind::Alternativity => "alternativity",
            LawKind::Associativity => "associativity",
            LawKind::Commutativity => "commutativity",
            LawKind::LeftDistributivity => "left-distributivity",
            LawKind::RightDistributivity => "right-distributivity",
            LawKind::RadiusLaws => "radius-laws",
        }
    }
}

/// The binary laws accepted by [`check_binary_law`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryLaw {
    Associativity,
    Commutativity,
    LeftDistributivity,
    RightDistributivity,
}

impl From<BinaryLaw> for LawKind {
    fn from(law: BinaryLaw) -> LawKind {
        match law {
            BinaryLaw::Associativity => LawKind::Associativity,
            BinaryLaw::Commutativity => LawKind::Commutativity,
            BinaryLaw::LeftDistributivity => LawKind::LeftDistributivity,
            BinaryLaw::RightDistributivity => LawKind::RightDistributivity,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    FailsWithWitness,
}

/// The data needed to replay a violation.
#[derive(Debug, Clone)]
pub enum LawWitness {
    /// Elements feeding the violated identity, in argument order.
    Elements(Vec<Element>),
    Homogeneity { a: Element, alpha: Scalar },
    PowerRule { a: Element, k: u32 },
    /// Radius-zero and minpoly-is-t^m disagreed for this element.
    Nilpotency { a: Element },
}

impl LawWitness {
    /// The elements involved, for serialization.
    pub fn elements(&self) -> Vec<&Element> {
        match self {
            LawWitness::Elements(es) => es.iter().collect(),
            LawWitness::Homogeneity { a, .. }
            | LawWitness::PowerRule { a, .. }
            | LawWitness::Nilpotency { a } => vec![a],
        }
    }
}

#[derive(Debug, Clone)]
pub struct LawReport {
    pub law: LawKind,
    pub algebra_name: String,
    pub trials: u32,
    pub verdict: Verdict,
    pub witness: Option<LawWitness>,
    pub max_discrepancy: f64,
}

impl LawReport {
    pub fn to_json(&self) -> serde_json::Value {
        let witness = self.witness.as_ref().map(|w| {
            let elements: Vec<Vec<String>> = w
                .elements()
                .iter()
                .map(|e| e.coords().iter().map(|c| c.to_string()).collect())
                .collect();
            match w {
                LawWitness::Elements(_) => serde_json::json!({
                    "kind": "elements", "elements": elements,
                }),
                LawWitness::Homogeneity { alpha, .. } => serde_json::json!({
                    "kind": "homogeneity", "elements": elements, "alpha": alpha.to_string(),
                }),
                LawWitness::PowerRule { k, .. } => serde_json::json!({
                    "kind": "power-rule", "elements": elements, "k": k,
                }),
                LawWitness::Nilpotency { .. } => serde_json::json!({
                    "kind": "nilpotency", "elements": elements,
                }),
            }
        });
        serde_json::json!({
            "law": self.law.as_str(),
            "algebra": self.algebra_name,
            "trials": self.trials,
            "verdict": match self.verdict {
                Verdict::Holds => "Holds",
                Verdict::FailsWithWitness => "FailsWithWitness",
            },
            "witness": witness,
            "max_discrepancy": self.max_discrepancy,
        })
    }
}

fn law_tol(mode: Mode) -> f64 {
    match mode {
        Mode::Exact => 0.0,
        Mode::Approx => APPROX_LAW_TOL,
    }
}

fn discrepancy(x: &Element, y: &Element) -> f64 {
    x.sub(y).expect("same algebra").sup_norm()
}

fn matrix_size(alg: &AlgebraHandle) -> Option<usize> {
    match alg.product() {
        ProductRule::Standard { n }
        | ProductRule::Hadamard { n }
        | ProductRule::Jordan { n }
        | ProductRule::Star { n, .. } => Some(*n),
        _ => None,
    }
}

/// Maximum pairwise discrepancy among the values of all parenthesizations of
/// the k-fold product of `a`, for each k up to `kmax` (worst level reported).
///
/// Values are built by the Catalan recursion: every shape of length m splits
/// into a shape of length i times one of length m-i, so once each level has
/// collapsed to a single value the m-1 split products enumerate all shapes.
fn parenthesization_spread(
    alg: &AlgebraHandle,
    a: &Element,
    kmax: u32,
) -> Result<f64, AlgebraError> {
    let tol = law_tol(alg.mode());
    let mut reps: Vec<Element> = vec![a.clone()];
    let mut worst = 0.0f64;
    for m in 2..=kmax as usize {
        let mut candidates = Vec::with_capacity(m - 1);
        for i in 1..m {
            candidates.push(alg.mul(&reps[i - 1], &reps[m - i - 1])?);
        }
        for c in &candidates[1..] {
            worst = worst.max(discrepancy(c, &candidates[0]));
        }
        if worst > tol {
            // the level failed to collapse; the spread is already a witness
            return Ok(worst);
        }
        reps.push(candidates.into_iter().next().expect("m >= 2"));
    }
    Ok(worst)
}

/// Check that a^k is independent of parenthesization for every k ≤ kmax
/// (2 ≤ kmax ≤ 6), over `trials` random elements.
pub fn check_power_associativity(
    alg: &AlgebraHandle,
    trials: u32,
    kmax: u32,
    seed: u64,
) -> Result<LawReport, AlgebraError> {
    assert!((2..=6).contains(&kmax), "kmax must be in 2..=6");
    assert!(trials >= 1);
    let tol = law_tol(alg.mode());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let a = random_element(alg, &mut rng);
        let spread = parenthesization_spread(alg, &a, kmax)?;
        worst = worst.max(spread);
        if spread > tol {
            return Ok(LawReport {
                law: LawKind::PowerAssociativity,
                algebra_name: alg.name().to_string(),
                trials,
                verdict: Verdict::FailsWithWitness,
                witness: Some(LawWitness::Elements(vec![a])),
                max_discrepancy: spread,
            });
        }
    }
    Ok(LawReport {
        law: LawKind::PowerAssociativity,
        algebra_name: alg.name().to_string(),
        trials,
        verdict: Verdict::Holds,
        witness: None,
        max_discrepancy: worst,
    })
}

fn alternativity_spread(
    alg: &AlgebraHandle,
    x: &Element,
    y: &Element,
) -> Result<f64, AlgebraError> {
    // x(xy) = (xx)y and (yx)x = y(xx)
    let xy = alg.mul(x, y)?;
    let xx = alg.mul(x, x)?;
    let left = discrepancy(&alg.mul(x, &xy)?, &alg.mul(&xx, y)?);
    let yx = alg.mul(y, x)?;
    let right = discrepancy(&alg.mul(&yx, x)?, &alg.mul(y, &xx)?);
    Ok(left.max(right))
}

/// Check the alternative laws x(xy) = (xx)y and (yx)x = y(xx). For matrix
/// algebras the pair (e12 ⊕ O, e21 ⊕ O) is tried before any random pair.
pub fn check_alternativity(
    alg: &AlgebraHandle,
    trials: u32,
    seed: u64,
) -> Result<LawReport, AlgebraError> {
    assert!(trials >= 1);
    let tol = law_tol(alg.mode());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(Element, Element)> = Vec::new();
    if let Some(n) = matrix_size(alg) {
        pairs.push((alg.basis_element(1), alg.basis_element(n)));
    }
    for _ in 0..trials {
        pairs.push((random_element(alg, &mut rng), random_element(alg, &mut rng)));
    }
    let mut worst = 0.0f64;
    for (x, y) in pairs {
        let spread = alternativity_spread(alg, &x, &y)?;
        worst = worst.max(spread);
        if spread > tol {
            return Ok(LawReport {
                law: LawKind::Alternativity,
                algebra_name: alg.name().to_string(),
                trials,
                verdict: Verdict::FailsWithWitness,
                witness: Some(LawWitness::Elements(vec![x, y])),
                max_discrepancy: spread,
            });
        }
    }
    Ok(LawReport {
        law: LawKind::Alternativity,
        algebra_name: alg.name().to_string(),
        trials,
        verdict: Verdict::Holds,
        witness: None,
        max_discrepancy: worst,
    })
}

fn binary_law_spread(
    alg: &AlgebraHandle,
    law: BinaryLaw,
    a: &Element,
    b: &Element,
    c: &Element,
) -> Result<f64, AlgebraError> {
    let one = Scalar::one(alg.field(), alg.mode());
    Ok(match law {
        BinaryLaw::Associativity => {
            discrepancy(&alg.mul(&alg.mul(a, b)?, c)?, &alg.mul(a, &alg.mul(b, c)?)?)
        }
        BinaryLaw::Commutativity => discrepancy(&alg.mul(a, b)?, &alg.mul(b, a)?),
        BinaryLaw::LeftDistributivity => {
            let sum = linear_combine(&one, b, &one, c)?;
            let lhs = alg.mul(a, &sum)?;
            let rhs = linear_combine(&one, &alg.mul(a, b)?, &one, &alg.mul(a, c)?)?;
            discrepancy(&lhs, &rhs)
        }
        BinaryLaw::RightDistributivity => {
            let sum = linear_combine(&one, a, &one, b)?;
            let lhs = alg.mul(&sum, c)?;
            let rhs = linear_combine(&one, &alg.mul(a, c)?, &one, &alg.mul(b, c)?)?;
            discrepancy(&lhs, &rhs)
        }
    })
}

/// Randomized check of one binary law, with deterministic non-commutativity
/// witnesses tried first where known (e12/e21 for matrix algebras, the first
/// two imaginary basis units for the quaternions and up).
pub fn check_binary_law(
    alg: &AlgebraHandle,
    law: BinaryLaw,
    trials: u32,
    seed: u64,
) -> Result<LawReport, AlgebraError> {
    assert!(trials >= 1);
    let tol = law_tol(alg.mode());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triples: Vec<(Element, Element, Element)> = Vec::new();
    if let Some(n) = matrix_size(alg) {
        let a = alg.basis_element(1);
        let b = alg.basis_element(n);
        triples.push((a.clone(), b.clone(), b.clone()));
        triples.push((b, a.clone(), a));
    }
    if let ProductRule::CayleyDickson { dim } = alg.product() {
        if *dim >= 4 {
            let candidates = [(1usize, 2usize, 3usize), (1, 2, 4), (1, 3, 6)];
            for (i, j, k) in candidates {
                if k < *dim {
                    triples.push((
                        alg.basis_element(i),
                        alg.basis_element(j),
                        alg.basis_element(k),
                    ));
                }
            }
        }
    }
    for _ in 0..trials {
        triples.push((
            random_element(alg, &mut rng),
            random_element(alg, &mut rng),
            random_element(alg, &mut rng),
        ));
    }
    let mut worst = 0.0f64;
    for (a, b, c) in triples {
        let spread = binary_law_spread(alg, law, &a, &b, &c)?;
        worst = worst.max(spread);
        if spread > tol {
            let witness = match law {
                BinaryLaw::Commutativity => vec![a, b],
                _ => vec![a, b, c],
            };
            return Ok(LawReport {
                law: law.into(),
                algebra_name: alg.name().to_string(),
                trials,
                verdict: Verdict::FailsWithWitness,
                witness: Some(LawWitness::Elements(witness)),
                max_discrepancy: spread,
            });
        }
    }
    Ok(LawReport {
        law: law.into(),
        algebra_name: alg.name().to_string(),
        trials,
        verdict: Verdict::Holds,
        witness: None,
        max_discrepancy: worst,
    })
}

/// Check the radius laws on random elements of a unital algebra:
/// homogeneity r(αa) = |α| r(a), the power rule r(a^k) = r(a)^k for
/// k ∈ {2,3,4}, and (exact mode) radius zero iff the minimal polynomial is
/// t^m. Nonnegativity holds by the radius being a float modulus maximum.
pub fn check_radius_laws(
    alg: &AlgebraHandle,
    trials: u32,
    seed: u64,
) -> Result<LawReport, RadiusError> {
    assert!(trials >= 1);
    if !alg.is_unital() {
        return Err(RadiusError::MinPoly(AlgebraError::NoUnit.into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut elements: Vec<Element> = vec![alg.zero()];
    if let (ProductRule::Star { n, .. }, FieldTag::Complex) = (alg.product(), alg.field()) {
        if alg.mode() == Mode::Exact {
            let nil = example_star_nilpotent(*n, alg.mode()).expect("n >= 2");
            elements.push(nil.to_element(alg).expect("complex star algebra"));
        }
    }
    for _ in 0..trials {
        elements.push(random_element(alg, &mut rng));
    }

    let mut worst = 0.0f64;
    let mut fail: Option<LawWitness> = None;
    let mut fail_disc = 0.0f64;
    for a in &elements {
        let r_a = radius(alg, a)?.radius;

        let alpha = random_nonzero_scalar(alg.field(), alg.mode(), &mut rng);
        let scaled = a.scale(&alpha).map_err(crate::minpoly::MinPolyError::from)?;
        let r_scaled = radius(alg, &scaled)?.radius;
        let hom_disc = (r_scaled - alpha.magnitude() * r_a).abs();
        worst = worst.max(hom_disc);
        if hom_disc > HOMOGENEITY_TOL && fail.is_none() {
            fail = Some(LawWitness::Homogeneity {
                a: a.clone(),
                alpha: alpha.clone(),
            });
            fail_disc = hom_disc;
        }

        for k in 2u32..=4 {
            let ak = alg.power(a, k).map_err(crate::minpoly::MinPolyError::from)?;
            let r_ak = radius(alg, &ak)?.radius;
            let expect = r_a.powi(k as i32);
            let rel = (r_ak - expect).abs() / expect.max(1.0);
            worst = worst.max(rel);
            if rel > POWER_RULE_TOL && fail.is_none() {
                fail = Some(LawWitness::PowerRule { a: a.clone(), k });
                fail_disc = rel;
            }
        }

        if alg.mode() == Mode::Exact {
            let pure = minimal_polynomial(alg, a)?.is_pure_power();
            let radius_zero = r_a <= RADIUS_ZERO_TOL;
            if pure != radius_zero && fail.is_none() {
                fail = Some(LawWitness::Nilpotency { a: a.clone() });
                fail_disc = if pure { r_a } else { 1.0 };
            }
        }
    }

    Ok(match fail {
        Some(witness) => LawReport {
            law: LawKind::RadiusLaws,
            algebra_name: alg.name().to_string(),
            trials,
            verdict: Verdict::FailsWithWitness,
            witness: Some(witness),
            max_discrepancy: fail_disc,
        },
        None => LawReport {
            law: LawKind::RadiusLaws,
            algebra_name: alg.name().to_string(),
            trials,
            verdict: Verdict::Holds,
            witness: None,
            max_discrepancy: worst,
        },
    })
}

/// Re-evaluate a failing report's witness; the discrepancy must reproduce.
/// Returns `None` when the report carries no witness or the recomputation
/// cannot run.
pub fn replay_witness(report: &LawReport) -> Option<f64> {
    let witness = report.witness.as_ref()?;
    match witness {
        LawWitness::Elements(es) => {
            let alg = es.first()?.algebra().clone();
            match report.law {
                LawKind::PowerAssociativity => parenthesization_spread(&alg, &es[0], 6).ok(),
                LawKind::Alternativity => alternativity_spread(&alg, &es[0], &es[1]).ok(),
                LawKind::Associativity => {
                    binary_law_spread(&alg, BinaryLaw::Associativity, &es[0], &es[1], &es[2]).ok()
                }
                LawKind::Commutativity => {
                    binary_law_spread(&alg, BinaryLaw::Commutativity, &es[0], &es[1], &es[1]).ok()
                }
                LawKind::LeftDistributivity => {
                    binary_law_spread(&alg, BinaryLaw::LeftDistributivity, &es[0], &es[1], &es[2])
                        .ok()
                }
                LawKind::RightDistributivity => {
                    binary_law_spread(&alg, BinaryLaw::RightDistributivity, &es[0], &es[1], &es[2])
                        .ok()
                }
                LawKind::RadiusLaws => None,
            }
        }
        LawWitness::Homogeneity { a, alpha } => {
            let alg = a.algebra().clone();
            let r_a = radius(&alg, a).ok()?.radius;
            let scaled = a.scale(alpha).ok()?;
            let r_scaled = radius(&alg, &scaled).ok()?.radius;
            Some((r_scaled - alpha.magnitude() * r_a).abs())
        }
        LawWitness::PowerRule { a, k } => {
            let alg = a.algebra().clone();
            let r_a = radius(&alg, a).ok()?.radius;
            let ak = alg.power(a, *k).ok()?;
            let r_ak = radius(&alg, &ak).ok()?.radius;
            let expect = r_a.powi(*k as i32);
            Some((r_ak - expect).abs() / expect.max(1.0))
        }
        LawWitness::Nilpotency { a } => {
            let alg = a.algebra().clone();
            let pure = minimal_polynomial(&alg, a).ok()?.is_pure_power();
            let r = radius(&alg, a).ok()?.radius;
            let violated = pure != (r <= RADIUS_ZERO_TOL);
            Some(if violated { if pure { r } else { 1.0 } } else { 0.0 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::make_cayley_dickson;
    use crate::matrix::{make_matrix_algebra, ProductKind};

    fn alg(n: usize, field: FieldTag, kind: ProductKind) -> AlgebraHandle {
        make_matrix_algebra(n, field, kind, Mode::Exact).unwrap()
    }

    #[test]
    fn power_associativity_holds_for_jordan_hadamard_and_sedenions() {
        let jordan = alg(3, FieldTag::Real, ProductKind::Jordan);
        let report = check_power_associativity(&jordan, 10, 5, 1).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(report.max_discrepancy, 0.0);

        let hadamard = alg(2, FieldTag::Real, ProductKind::Hadamard);
        let report = check_power_associativity(&hadamard, 10, 5, 2).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);

        let sedenions = make_cayley_dickson(16, Mode::Exact).unwrap();
        let report = check_power_associativity(&sedenions, 5, 5, 3).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
    }

    #[test]
    fn parenthesization_spread_matches_explicit_shape_enumeration() {
        // explicit Catalan shapes, evaluated naively
        fn all_values(alg: &AlgebraHandle, a: &Element, k: usize) -> Vec<Element> {
            if k == 1 {
                return vec![a.clone()];
            }
            let mut out = Vec::new();
            for i in 1..k {
                for left in all_values(alg, a, i) {
                    for right in all_values(alg, a, k - i) {
                        out.push(alg.mul(&left, &right).unwrap());
                    }
                }
            }
            out
        }
        let sed = make_cayley_dickson(16, Mode::Exact).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let a = random_element(&sed, &mut rng);
        // Catalan(k-1) shapes for k = 4 and 5
        assert_eq!(all_values(&sed, &a, 4).len(), 5);
        let values = all_values(&sed, &a, 5);
        assert_eq!(values.len(), 14);
        let explicit_spread = values
            .iter()
            .map(|v| discrepancy(v, &values[0]))
            .fold(0.0f64, f64::max);
        let dp_spread = parenthesization_spread(&sed, &a, 5).unwrap();
        assert_eq!(explicit_spread, 0.0);
        assert_eq!(dp_spread, 0.0);
    }

    #[test]
    fn jordan_alternativity_fails_with_the_known_pair() {
        for n in [2usize, 3] {
            let jordan = alg(n, FieldTag::Real, ProductKind::Jordan);
            let report = check_alternativity(&jordan, 5, 7).unwrap();
            assert_eq!(report.verdict, Verdict::FailsWithWitness);
            // (A·B)·B = ½B against A·(B·B) = 0: discrepancy is ½ sup|B|
            assert!((report.max_discrepancy - 0.5).abs() < 1e-15, "n={n}");
            let Some(LawWitness::Elements(es)) = &report.witness else {
                panic!("expected an element-pair witness")
            };
            assert_eq!(es.len(), 2);
            let replayed = replay_witness(&report).unwrap();
            assert!(replayed > 0.0);
            assert_eq!(replayed, report.max_discrepancy);
        }
    }

    #[test]
    fn standard_and_hadamard_are_alternative() {
        let standard = alg(3, FieldTag::Real, ProductKind::Standard);
        assert_eq!(
            check_alternativity(&standard, 10, 11).unwrap().verdict,
            Verdict::Holds
        );
        let hadamard = alg(2, FieldTag::Real, ProductKind::Hadamard);
        assert_eq!(
            check_alternativity(&hadamard, 10, 11).unwrap().verdict,
            Verdict::Holds
        );
    }

    #[test]
    fn star_is_associative_but_not_commutative() {
        for kind in [ProductKind::Star1N, ProductKind::StarN1] {
            let star = make_matrix_algebra(2, FieldTag::Complex, kind, Mode::Exact).unwrap();
            let assoc = check_binary_law(&star, BinaryLaw::Associativity, 20, 5).unwrap();
            assert_eq!(assoc.verdict, Verdict::Holds);
            assert_eq!(assoc.max_discrepancy, 0.0);
            let comm = check_binary_law(&star, BinaryLaw::Commutativity, 20, 5).unwrap();
            assert_eq!(comm.verdict, Verdict::FailsWithWitness);
            assert!(replay_witness(&comm).unwrap() > 0.0);
        }
    }

    #[test]
    fn star_noncommutativity_witness_exists_for_every_n() {
        for n in [2usize, 3, 4] {
            for kind in [ProductKind::Star1N, ProductKind::StarN1] {
                let star = make_matrix_algebra(n, FieldTag::Complex, kind, Mode::Exact).unwrap();
                let report = check_binary_law(&star, BinaryLaw::Commutativity, 10, 17).unwrap();
                assert_eq!(report.verdict, Verdict::FailsWithWitness, "n={n} {kind:?}");
            }
        }
    }

    /// Radius continuity admits no finite assertion; this is only a smoke
    /// test that tiny entry perturbations produce tiny radius drift on
    /// sampled matrices.
    #[test]
    fn radius_drift_under_tiny_perturbation_stays_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for n in [2usize, 3] {
            let exact = alg(n, FieldTag::Real, ProductKind::Standard);
            for _ in 0..5 {
                let a = random_element(&exact, &mut rng);
                let r1 = radius(&exact, &a).unwrap().radius;
                let eps = Scalar::from_ratio(1, 1_000_000_000, FieldTag::Real, Mode::Exact);
                let bump = exact
                    .element(vec![eps; exact.dim()])
                    .unwrap();
                let perturbed = linear_combine(
                    &Scalar::one(FieldTag::Real, Mode::Exact),
                    &a,
                    &Scalar::one(FieldTag::Real, Mode::Exact),
                    &bump,
                )
                .unwrap();
                let r2 = radius(&exact, &perturbed).unwrap().radius;
                assert!((r1 - r2).abs() < 1e-3, "n={n}: {r1} vs {r2}");
            }
        }
    }

    #[test]
    fn jordan_is_commutative_hadamard_is_everything() {
        let jordan = alg(2, FieldTag::Real, ProductKind::Jordan);
        assert_eq!(
            check_binary_law(&jordan, BinaryLaw::Commutativity, 20, 9)
                .unwrap()
                .verdict,
            Verdict::Holds
        );
        let hadamard = alg(3, FieldTag::Real, ProductKind::Hadamard);
        for law in [
            BinaryLaw::Associativity,
            BinaryLaw::Commutativity,
            BinaryLaw::LeftDistributivity,
            BinaryLaw::RightDistributivity,
        ] {
            let report = check_binary_law(&hadamard, law, 15, 13).unwrap();
            assert_eq!(report.verdict, Verdict::Holds, "{law:?}");
        }
    }

    #[test]
    fn distributivity_holds_everywhere() {
        for kind in [
            ProductKind::Standard,
            ProductKind::Jordan,
            ProductKind::Star1N,
        ] {
            let a = make_matrix_algebra(2, FieldTag::Complex, kind, Mode::Exact).unwrap();
            for law in [BinaryLaw::LeftDistributivity, BinaryLaw::RightDistributivity] {
                assert_eq!(
                    check_binary_law(&a, law, 10, 21).unwrap().verdict,
                    Verdict::Holds
                );
            }
        }
    }

    #[test]
    fn radius_laws_hold_on_standard_and_star() {
        let standard = alg(3, FieldTag::Real, ProductKind::Standard);
        let report = check_radius_laws(&standard, 5, 31).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);

        let star = make_matrix_algebra(2, FieldTag::Complex, ProductKind::Star1N, Mode::Exact)
            .unwrap();
        let report = check_radius_laws(&star, 5, 37).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
    }

    #[test]
    fn hadamard_power_rule_example() {
        // r(A) = 4 so r(A^[3]) must be 64
        let hadamard = alg(2, FieldTag::Real, ProductKind::Hadamard);
        let a = hadamard.element_from_i64(&[1, 2, 3, 4]).unwrap();
        let cube = hadamard.power(&a, 3).unwrap();
        let r = radius(&hadamard, &cube).unwrap().radius;
        assert!((r - 64.0).abs() < 1e-8);
    }

    #[test]
    fn reports_are_deterministic_for_a_fixed_seed() {
        let star = make_matrix_algebra(2, FieldTag::Complex, ProductKind::Star1N, Mode::Exact)
            .unwrap();
        let r1 = check_binary_law(&star, BinaryLaw::Commutativity, 10, 99).unwrap();
        let r2 = check_binary_law(&star, BinaryLaw::Commutativity, 10, 99).unwrap();
        assert_eq!(r1.to_json(), r2.to_json());
    }

    #[test]
    fn radius_laws_require_a_unit() {
        use crate::algebra::{make_structure_algebra, StructureConstants};
        let z = Scalar::zero(FieldTag::Real, Mode::Exact);
        let sc = StructureConstants::new(2, vec![z; 8]).unwrap();
        let a = make_structure_algebra(sc, FieldTag::Real, None).unwrap();
        assert!(check_radius_laws(&a, 1, 0).is_err());
    }
}
