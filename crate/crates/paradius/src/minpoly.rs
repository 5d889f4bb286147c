//! Minimal polynomials of algebra elements.
//!
//! The ladder of powers unit, a, a², … must go linearly dependent within the
//! algebra's dimension; the first dependence yields the unique monic
//! annihilator of least positive degree. Exact mode decides dependence by
//! exact elimination on the raw powers; approx mode orthogonalizes
//! progressively and applies a scale-invariant tolerance.

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraHandle, Element};
use crate::linalg::{SpanStep, SpanTracker};
use crate::scalar::{FieldTag, Mode, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial must be monic (leading coefficient 1)")]
    NotMonic,
    #[error("polynomial must have positive degree")]
    DegreeZero,
    #[error("coefficients mix fields or modes")]
    MixedCoefficients,
}

#[derive(Debug, Clone, Error)]
pub enum MinPolyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("power ladder reached the dimension bound without a dependence (approx-mode rank failure)")]
    NoDependence,
}

/// A monic univariate polynomial, coefficients stored low-to-high.
#[derive(Clone)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    /// Wrap low-to-high coefficients; the last must be exactly 1 and the
    /// degree at least 1.
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Result<Polynomial, PolyError> {
        if coeffs.len() < 2 {
            return Err(PolyError::DegreeZero);
        }
        let mode = coeffs[0].mode();
        if coeffs.iter().any(|c| c.mode() != mode) {
            return Err(PolyError::MixedCoefficients);
        }
        if !coeffs.last().unwrap().is_one() {
            return Err(PolyError::NotMonic);
        }
        // a real coefficient among complex ones is fine; normalize the field
        let field = if coeffs.iter().any(|c| c.field() == FieldTag::Complex) {
            FieldTag::Complex
        } else {
            FieldTag::Real
        };
        let coeffs = match field {
            FieldTag::Complex => coeffs.iter().map(Scalar::to_complex_field).collect(),
            FieldTag::Real => coeffs,
        };
        Ok(Polynomial { coeffs })
    }

    /// The monic product Π (t - r) over the given roots.
    pub fn from_roots(roots: &[Scalar]) -> Result<Polynomial, PolyError> {
        if roots.is_empty() {
            return Err(PolyError::DegreeZero);
        }
        let field = roots[0].field();
        let mode = roots[0].mode();
        let mut coeffs = vec![Scalar::one(field, mode)];
        for r in roots {
            let zero = Scalar::zero(r.field(), r.mode());
            let mut next = vec![zero; coeffs.len() + 1];
            for (j, c) in coeffs.iter().enumerate() {
                next[j + 1] = &next[j + 1] + c;
                next[j] = &next[j] - &(r * c);
            }
            coeffs = next;
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// t^m.
    pub fn pure_power(m: usize, field: FieldTag, mode: Mode) -> Polynomial {
        assert!(m >= 1);
        let mut coeffs = vec![Scalar::zero(field, mode); m + 1];
        coeffs[m] = Scalar::one(field, mode);
        Polynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn field(&self) -> FieldTag {
        self.coeffs[0].field()
    }

    pub fn mode(&self) -> Mode {
        self.coeffs[0].mode()
    }

    /// True when the polynomial is t^m, i.e. every non-leading coefficient is
    /// zero. In exact mode this is the nilpotency certificate for minimal
    /// polynomials.
    pub fn is_pure_power(&self) -> bool {
        self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .all(Scalar::is_zero)
    }

    /// Monic product of two monic polynomials.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let field = if self.field() == FieldTag::Complex || other.field() == FieldTag::Complex {
            FieldTag::Complex
        } else {
            FieldTag::Real
        };
        let zero = Scalar::zero(field, self.mode());
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(out).expect("monic by construction")
    }

    /// Horner evaluation at a scalar of the same mode.
    pub fn eval_scalar(&self, z: &Scalar) -> Scalar {
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = &(&acc * z) + c;
        }
        acc
    }

    /// Low-to-high coefficient strings in the scalar text grammar.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeff_strings()
                .into_iter()
                .map(serde_json::Value::String)
                .collect(),
        )
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && k > 0 {
                continue;
            }
            if c.is_zero() && !first {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                // a leading minus only counts when the string is a plain term
                Some(rest) if !cs.contains('+') && !rest.contains('-') => ("-", rest.to_string()),
                _ => ("+", cs),
            };
            let needs_parens = mag.contains('+') || mag.contains('-');
            let mag = if needs_parens { format!("({mag})") } else { mag };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Result of a minimal polynomial computation, with the approx-mode
/// conditioning flag. `ill_conditioned` is set when any rank decision fell
/// inside the tolerance ambiguity band.
#[derive(Debug, Clone)]
pub struct MinPolyOutcome {
    pub poly: Polynomial,
    pub ill_conditioned: bool,
}

/// The unique monic annihilator of `a` of least positive degree.
///
/// Unital algebras search over all monic polynomials (the ladder starts at
/// the unit). Non-unital algebras search among polynomials with zero constant
/// term (the ladder starts at `a` itself), since a constant term has no
/// meaning without a unit.
pub fn minimal_polynomial(alg: &AlgebraHandle, a: &Element) -> Result<Polynomial, MinPolyError> {
    minimal_polynomial_detailed(alg, a).map(|o| o.poly)
}

pub fn minimal_polynomial_detailed(
    alg: &AlgebraHandle,
    a: &Element,
) -> Result<MinPolyOutcome, MinPolyError> {
    if !alg.contains(a) {
        return Err(AlgebraError::AlgebraMismatch.into());
    }
    let d = alg.dim();
    let field = alg.field();
    let mode = alg.mode();
    let mut tracker = SpanTracker::new(d, field, mode);
    let mut ill_conditioned = false;

    let unital = match alg.unit() {
        Some(u) => {
            match tracker.insert(u.coords()) {
                SpanStep::Independent { ambiguous } => ill_conditioned |= ambiguous,
                SpanStep::Dependent { .. } => unreachable!("unit of a nonzero algebra"),
            }
            true
        }
        None => false,
    };

    let mut power = a.clone();
    for k in 1..=(d + 2) {
        match tracker.insert(power.coords()) {
            SpanStep::Independent { ambiguous } => ill_conditioned |= ambiguous,
            SpanStep::Dependent { combo, ambiguous } => {
                ill_conditioned |= ambiguous;
                let mut coeffs = Vec::with_capacity(k + 1);
                if !unital {
                    coeffs.push(Scalar::zero(field, mode));
                }
                coeffs.extend(combo.into_iter().map(|c| -c));
                coeffs.push(Scalar::one(field, mode));
                let poly = Polynomial::from_coeffs(coeffs).expect("monic by construction");
                return Ok(MinPolyOutcome {
                    poly,
                    ill_conditioned,
                });
            }
        }
        power = alg.mul(a, &power)?;
    }
    // d+2 powers of a always depend in exact arithmetic; only a misjudged
    // approx tolerance can land here
    Err(MinPolyError::NoDependence)
}

/// Evaluate p at an algebra element: Σ c_k a^k, with the constant term
/// scaling the unit. A nonzero constant term requires a unital algebra.
pub fn evaluate_at_element(
    alg: &AlgebraHandle,
    p: &Polynomial,
    a: &Element,
) -> Result<Element, MinPolyError> {
    if !alg.contains(a) {
        return Err(AlgebraError::AlgebraMismatch.into());
    }
    let mut acc = if p.coeffs[0].is_zero() {
        alg.zero()
    } else {
        let unit = alg.unit().ok_or(AlgebraError::NoUnit)?;
        unit.scale(&p.coeffs[0]).map_err(MinPolyError::from)?
    };
    let mut power = a.clone();
    for (k, c) in p.coeffs.iter().enumerate().skip(1) {
        if !c.is_zero() {
            let term = power.scale(c).map_err(MinPolyError::from)?;
            acc = crate::algebra::linear_combine(
                &Scalar::one(alg.field(), alg.mode()),
                &acc,
                &Scalar::one(alg.field(), alg.mode()),
                &term,
            )
            .map_err(MinPolyError::from)?;
        }
        if k < p.degree() {
            power = alg.mul(a, &power)?;
        }
    }
    Ok(acc)
}

/// True iff q = p·h for some polynomial h. Exact zero remainder in exact
/// mode; in approx mode the remainder's sup norm is compared against
/// 1e-9 × max(1, max |coeff of q|).
pub fn poly_divides(p: &Polynomial, q: &Polynomial) -> bool {
    if p.mode() != q.mode() {
        return false;
    }
    if p.degree() > q.degree() {
        return false;
    }
    let mut rem: Vec<Scalar> = q.coeffs.clone();
    let dp = p.degree();
    for i in (dp..rem.len()).rev() {
        let f = rem[i].clone();
        if f.is_zero() {
            continue;
        }
        for (j, pc) in p.coeffs.iter().enumerate() {
            rem[i - dp + j] = &rem[i - dp + j] - &(&f * pc);
        }
    }
    match q.mode() {
        Mode::Exact => rem[..dp].iter().all(Scalar::is_zero),
        Mode::Approx => {
            let scale = q
                .coeffs
                .iter()
                .map(Scalar::magnitude)
                .fold(1.0f64, f64::max);
            rem[..dp]
                .iter()
                .map(Scalar::magnitude)
                .fold(0.0f64, f64::max)
                <= 1e-9 * scale
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{make_matrix_algebra, ProductKind};
    use num_complex::Complex64;

    fn rs(v: i64) -> Scalar {
        Scalar::from_i64(v, FieldTag::Real, Mode::Exact)
    }

    fn rational_poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rs(c)).collect()).unwrap()
    }

    /// Independent brute-force minimal polynomial: for each degree m try to
    /// solve the annihilation system over the raw power ladder with a naive
    /// dense elimination (separate code path from SpanTracker).
    fn brute_force_minpoly(alg: &AlgebraHandle, a: &Element) -> Polynomial {
        let d = alg.dim();
        let unit = alg.unit().expect("unital");
        let mut powers: Vec<Vec<Scalar>> = vec![unit.coords().to_vec()];
        let mut acc = a.clone();
        for _ in 0..=d {
            powers.push(acc.coords().to_vec());
            acc = alg.mul(a, &acc).unwrap();
        }
        for m in 1..=d + 1 {
            // solve sum_{j<m} x_j v_j = v_m
            let rows: Vec<Vec<Scalar>> = (0..d)
                .map(|coord| (0..m).map(|j| powers[j][coord].clone()).collect())
                .collect();
            let rhs: Vec<Scalar> = (0..d).map(|coord| powers[m][coord].clone()).collect();
            if let Some(x) = crate::linalg::solve_linear(&rows, &rhs, alg.field(), alg.mode()) {
                // verify the candidate really solves the system
                let ok = (0..d).all(|coord| {
                    let mut s = Scalar::zero(alg.field(), alg.mode());
                    for j in 0..m {
                        s = &s + &(&x[j] * &powers[j][coord]);
                    }
                    s == powers[m][coord]
                });
                if ok {
                    let mut coeffs: Vec<Scalar> = x.into_iter().map(|c| -c).collect();
                    coeffs.push(Scalar::one(alg.field(), alg.mode()));
                    return Polynomial::from_coeffs(coeffs).unwrap();
                }
            }
        }
        unreachable!("every element of a finite-dimensional algebra is annihilated")
    }

    #[test]
    fn unit_has_minpoly_t_minus_one() {
        for kind in [ProductKind::Standard, ProductKind::Hadamard, ProductKind::Jordan] {
            let alg = make_matrix_algebra(2, FieldTag::Real, kind, Mode::Exact).unwrap();
            let p = minimal_polynomial(&alg, &alg.unit().unwrap()).unwrap();
            assert_eq!(p, rational_poly(&[-1, 1]), "kind {kind:?}");
        }
    }

    #[test]
    fn nilpotent_e12_has_minpoly_t_squared() {
        let alg = make_matrix_algebra(2, FieldTag::Real, ProductKind::Standard, Mode::Exact)
            .unwrap();
        let a = alg.element_from_i64(&[0, 1, 0, 0]).unwrap();
        assert_eq!(minimal_polynomial(&alg, &a).unwrap(), rational_poly(&[0, 0, 1]));
    }

    #[test]
    fn hadamard_minpoly_of_1234_matches_linear_factor_product() {
        let alg = make_matrix_algebra(2, FieldTag::Real, ProductKind::Hadamard, Mode::Exact)
            .unwrap();
        let a = alg.element_from_i64(&[1, 2, 3, 4]).unwrap();
        let p = minimal_polynomial(&alg, &a).unwrap();
        // (t-1)(t-2)(t-3)(t-4) expanded
        assert_eq!(p, rational_poly(&[24, -50, 35, -10, 1]));
        assert_eq!(p, brute_force_minpoly(&alg, &a));
        let roots: Vec<Scalar> = [1, 2, 3, 4].iter().map(|&v| rs(v)).collect();
        assert_eq!(p, Polynomial::from_roots(&roots).unwrap());
    }

    #[test]
    fn zero_element_has_minpoly_t() {
        let alg = make_matrix_algebra(3, FieldTag::Real, ProductKind::Jordan, Mode::Exact)
            .unwrap();
        let p = minimal_polynomial(&alg, &alg.zero()).unwrap();
        assert_eq!(p, rational_poly(&[0, 1]));
    }

    #[test]
    fn non_unital_convention_zero_constant_term() {
        use crate::algebra::{make_structure_algebra, StructureConstants};
        let sc = StructureConstants::new(2, vec![rs(0); 8]).unwrap();
        let alg = make_structure_algebra(sc, FieldTag::Real, None).unwrap();
        let a = alg.element_from_i64(&[5, -2]).unwrap();
        let p = minimal_polynomial(&alg, &a).unwrap();
        assert_eq!(p, rational_poly(&[0, 0, 1]));
        assert!(evaluate_at_element(&alg, &p, &a).unwrap().is_zero());
        // degree one for the zero element even without a unit
        assert_eq!(minimal_polynomial(&alg, &alg.zero()).unwrap(), rational_poly(&[0, 1]));
        // a constant term cannot be evaluated without a unit
        let with_constant = rational_poly(&[-1, 1]);
        assert!(matches!(
            evaluate_at_element(&alg, &with_constant, &a),
            Err(MinPolyError::Algebra(crate::algebra::AlgebraError::NoUnit))
        ));
    }

    #[test]
    fn evaluate_identity_and_annihilation() {
        let alg = make_matrix_algebra(2, FieldTag::Real, ProductKind::Standard, Mode::Exact)
            .unwrap();
        let a = alg.element_from_i64(&[2, 1, -1, 3]).unwrap();
        let t = rational_poly(&[0, 1]);
        assert_eq!(evaluate_at_element(&alg, &t, &a).unwrap(), a);
        let p = minimal_polynomial(&alg, &a).unwrap();
        assert!(evaluate_at_element(&alg, &p, &a).unwrap().is_zero());
    }

    #[test]
    fn star_nilpotent_annihilated_by_t_squared_minus_two_in_standard() {
        let alg = make_matrix_algebra(2, FieldTag::Complex, ProductKind::Standard, Mode::Exact)
            .unwrap();
        let a = crate::matrix::example_star_nilpotent(2, Mode::Exact)
            .unwrap()
            .to_element(&alg)
            .unwrap();
        let p = Polynomial::from_coeffs(vec![
            Scalar::from_i64(-2, FieldTag::Complex, Mode::Exact),
            Scalar::zero(FieldTag::Complex, Mode::Exact),
            Scalar::one(FieldTag::Complex, Mode::Exact),
        ])
        .unwrap();
        assert!(evaluate_at_element(&alg, &p, &a).unwrap().is_zero());
        // for n=2 the minimal polynomial equals the characteristic polynomial
        assert_eq!(minimal_polynomial(&alg, &a).unwrap(), p);
    }

    #[test]
    fn divisibility_examples() {
        assert!(poly_divides(&rational_poly(&[-1, 1]), &rational_poly(&[-1, 0, 1])));
        assert!(!poly_divides(&rational_poly(&[0, 0, 1]), &rational_poly(&[0, 1])));
        // remainder-nonzero case
        assert!(!poly_divides(&rational_poly(&[-2, 1]), &rational_poly(&[-1, 0, 1])));
    }

    #[test]
    fn minpoly_divides_characteristic_polynomial_of_star_nilpotent() {
        for n in [2usize, 3, 4] {
            let alg =
                make_matrix_algebra(n, FieldTag::Complex, ProductKind::Standard, Mode::Exact)
                    .unwrap();
            let m = crate::matrix::example_star_nilpotent(n, Mode::Exact).unwrap();
            let a = m.to_element(&alg).unwrap();
            let p = minimal_polynomial(&alg, &a).unwrap();
            let charpoly = crate::roots::char_poly(&m).unwrap();
            assert!(poly_divides(&p, &charpoly), "n={n}");
        }
    }

    #[test]
    fn uniqueness_under_random_basis_shuffles() {
        use crate::algebra::{make_structure_algebra, structure_constants_of, StructureConstants};
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(59);
        let alg = make_matrix_algebra(2, FieldTag::Real, ProductKind::Standard, Mode::Exact)
            .unwrap();
        let a = alg.element_from_i64(&[3, 1, -2, 5]).unwrap();
        let p = minimal_polynomial(&alg, &a).unwrap();

        let gamma = structure_constants_of(&alg);
        let d = alg.dim();
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..d).collect();
            perm.shuffle(&mut rng);
            let mut shuffled = Vec::with_capacity(d * d * d);
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        shuffled.push(gamma.get(perm[i], perm[j], perm[k]).clone());
                    }
                }
            }
            let shuffled = StructureConstants::new(d, shuffled).unwrap();
            let salg = make_structure_algebra(shuffled, FieldTag::Real, None).unwrap();
            let coords: Vec<Scalar> = perm.iter().map(|&p| a.coords()[p].clone()).collect();
            let sa = salg.element(coords).unwrap();
            assert_eq!(minimal_polynomial(&salg, &sa).unwrap(), p, "perm {perm:?}");
        }
    }

    #[test]
    fn minimality_certificate_no_lower_degree_annihilator() {
        // the ladder's independence certificate, cross-checked by brute force
        let alg = make_matrix_algebra(2, FieldTag::Real, ProductKind::Hadamard, Mode::Exact)
            .unwrap();
        let a = alg.element_from_i64(&[1, 2, 3, 4]).unwrap();
        let p = minimal_polynomial(&alg, &a).unwrap();
        assert_eq!(p.degree(), 4);
        assert_eq!(brute_force_minpoly(&alg, &a).degree(), 4);
    }

    #[test]
    fn divisibility_and_degree_bounds_on_random_matrices() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
        for n in [2usize, 3] {
            let alg = make_matrix_algebra(n, FieldTag::Real, ProductKind::Standard, Mode::Exact)
                .unwrap();
            for _ in 0..50 {
                let m = crate::random::random_matrix(n, FieldTag::Real, Mode::Exact, &mut rng);
                let p = minimal_polynomial(&alg, &m.to_element(&alg).unwrap()).unwrap();
                assert!(p.degree() <= alg.dim());
                assert!(p.degree() <= n, "standard minpoly degree bound");
                let charpoly = crate::roots::char_poly(&m).unwrap();
                assert!(poly_divides(&p, &charpoly));
                // p divides any annihilator built on top of it
                let c = Scalar::from_i64(rng.gen_range(-9i64..=9), FieldTag::Real, Mode::Exact);
                let q = p.mul(&Polynomial::from_coeffs(vec![-c, rs(1)]).unwrap());
                assert!(poly_divides(&p, &q));
            }
        }
    }

    #[test]
    fn approx_ambiguity_band_sets_the_ill_conditioned_flag() {
        // I + ε·e12 with ε a few 1e-9 puts the second ladder vector's
        // residual inside the [tol/10, tol*10] band
        let alg = make_matrix_algebra(2, FieldTag::Real, ProductKind::Standard, Mode::Approx)
            .unwrap();
        let a = alg
            .element(vec![
                Scalar::Float(1.0),
                Scalar::Float(3e-9),
                Scalar::Float(0.0),
                Scalar::Float(1.0),
            ])
            .unwrap();
        let out = minimal_polynomial_detailed(&alg, &a).unwrap();
        assert!(out.ill_conditioned);
    }

    #[test]
    fn approx_mode_ladder_matches_exact() {
        let exact = make_matrix_algebra(2, FieldTag::Real, ProductKind::Standard, Mode::Exact)
            .unwrap();
        let approx = make_matrix_algebra(2, FieldTag::Real, ProductKind::Standard, Mode::Approx)
            .unwrap();
        let a_exact = exact.element_from_i64(&[2, 1, -1, 3]).unwrap();
        let coords: Vec<Scalar> = a_exact.coords().iter().map(Scalar::to_approx).collect();
        let a_approx = approx.element(coords).unwrap();
        let pe = minimal_polynomial(&exact, &a_exact).unwrap();
        let out = minimal_polynomial_detailed(&approx, &a_approx).unwrap();
        assert!(!out.ill_conditioned);
        assert_eq!(pe.degree(), out.poly.degree());
        for (ce, ca) in pe.coeffs().iter().zip(out.poly.coeffs()) {
            assert!((ce.to_c64() - ca.to_c64()).norm() < 1e-9);
        }
    }

    proptest::proptest! {
        #[test]
        fn product_with_any_monic_factor_is_divisible(
            p_roots in proptest::collection::vec(-9i64..=9, 1..=3),
            h_roots in proptest::collection::vec(-9i64..=9, 1..=2),
        ) {
            let to_scalars = |vs: &[i64]| vs.iter().map(|&v| rs(v)).collect::<Vec<_>>();
            let p = Polynomial::from_roots(&to_scalars(&p_roots)).unwrap();
            let h = Polynomial::from_roots(&to_scalars(&h_roots)).unwrap();
            proptest::prop_assert!(poly_divides(&p, &p.mul(&h)));
            proptest::prop_assert!(poly_divides(&h, &p.mul(&h)));
        }
    }

    #[test]
    fn display_formats_polynomials() {
        assert_eq!(rational_poly(&[24, -50, 35, -10, 1]).to_string(), "t^4 - 10t^3 + 35t^2 - 50t + 24");
        assert_eq!(rational_poly(&[0, 0, 1]).to_string(), "t^2");
        assert_eq!(rational_poly(&[-2, 0, 1]).to_string(), "t^2 - 2");
        assert_eq!(rational_poly(&[0, 1]).to_string(), "t");
    }

    #[test]
    fn eval_scalar_horner() {
        let p = rational_poly(&[-2, 0, 1]);
        assert!(p.eval_scalar(&rs(3)) == rs(7));
        let z = Scalar::ComplexFloat(Complex64::new(0.0, 1.0));
        let pa = Polynomial::from_coeffs(vec![
            Scalar::Float(-2.0),
            Scalar::Float(0.0),
            Scalar::Float(1.0),
        ])
        .unwrap();
        assert_eq!(pa.eval_scalar(&z).to_c64(), Complex64::new(-3.0, 0.0));
    }
}
