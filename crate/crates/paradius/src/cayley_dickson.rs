//! Cayley-Dickson doubling algebras over ℝ (dimensions 1, 2, 4, 8, 16),
//! used as an independent cross-check: the radius of every element equals its
//! Euclidean norm.
//!
//! The doubling convention is fixed as (a,b)(c,d) = (ac - d̄b, da + bc̄) with
//! conjugate (a,b)̄ = (ā, -b); the dimension tower runs ℝ, ℂ, ℍ, 𝕆, sedenions.

use crate::algebra::{cd_conj, AlgebraError, AlgebraHandle, Element, ProductRule};
use crate::scalar::{big_ratio_to_f64, FieldTag, Mode, Scalar};

pub const SUPPORTED_DIMS: [usize; 5] = [1, 2, 4, 8, 16];

/// Build the Cayley-Dickson algebra of the given dimension. The unit is
/// (1, 0, …, 0).
pub fn make_cayley_dickson(dim: usize, mode: Mode) -> Result<AlgebraHandle, AlgebraError> {
    if !SUPPORTED_DIMS.contains(&dim) {
        return Err(AlgebraError::Domain(format!(
            "cayley-dickson dimension must be one of {SUPPORTED_DIMS:?}, got {dim}"
        )));
    }
    let field = FieldTag::Real;
    let mut unit = vec![Scalar::zero(field, mode); dim];
    unit[0] = Scalar::one(field, mode);
    let name = format!("cayley-dickson(dim={dim}, {mode})");
    Ok(AlgebraHandle::from_parts(
        dim,
        field,
        mode,
        ProductRule::CayleyDickson { dim },
        Some(unit),
        name,
    ))
}

fn require_cd(x: &Element) -> Result<(), AlgebraError> {
    match x.algebra().product() {
        ProductRule::CayleyDickson { .. } => Ok(()),
        _ => Err(AlgebraError::Domain(
            "element does not belong to a Cayley-Dickson algebra".into(),
        )),
    }
}

/// √(Σ x_i²), with the sum formed exactly in exact mode and rounded once.
pub fn euclidean_norm(x: &Element) -> Result<f64, AlgebraError> {
    require_cd(x)?;
    match x.algebra().mode() {
        Mode::Exact => {
            let mut acc = num_rational::BigRational::from_integer(0.into());
            for c in x.coords() {
                acc += c.abs_squared_exact();
            }
            Ok(big_ratio_to_f64(&acc).sqrt())
        }
        Mode::Approx => Ok(x
            .coords()
            .iter()
            .map(|c| {
                let v = c.to_c64().re;
                v * v
            })
            .sum::<f64>()
            .sqrt()),
    }
}

/// The Cayley-Dickson conjugate x̄: negate every coordinate except the first.
pub fn conjugate(x: &Element) -> Result<Element, AlgebraError> {
    require_cd(x)?;
    x.algebra().element(cd_conj(x.coords()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minpoly::minimal_polynomial;
    use crate::roots::radius;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unsupported_dimension_is_rejected() {
        assert!(make_cayley_dickson(3, Mode::Exact).is_err());
        assert!(make_cayley_dickson(32, Mode::Exact).is_err());
    }

    #[test]
    fn dim2_is_the_complex_plane() {
        let alg = make_cayley_dickson(2, Mode::Exact).unwrap();
        let i = alg.element_from_i64(&[0, 1]).unwrap();
        let sq = alg.power(&i, 2).unwrap();
        assert_eq!(sq, alg.element_from_i64(&[-1, 0]).unwrap());
    }

    #[test]
    fn quaternion_basis_anticommutes() {
        let alg = make_cayley_dickson(4, Mode::Exact).unwrap();
        let i = alg.basis_element(1);
        let j = alg.basis_element(2);
        let k = alg.basis_element(3);
        let ij = alg.mul(&i, &j).unwrap();
        let ji = alg.mul(&j, &i).unwrap();
        assert_eq!(ij, k);
        assert_eq!(ji, k.scale(&Scalar::from_i64(-1, FieldTag::Real, Mode::Exact)).unwrap());
        // i² = j² = k² = -1
        let minus_one = alg.element_from_i64(&[-1, 0, 0, 0]).unwrap();
        for b in [&i, &j, &k] {
            assert_eq!(alg.power(b, 2).unwrap(), minus_one);
        }
    }

    #[test]
    fn conjugation_is_an_involution() {
        let alg = make_cayley_dickson(8, Mode::Exact).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = crate::random::random_element(&alg, &mut rng);
        assert_eq!(conjugate(&conjugate(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn euclidean_norm_examples() {
        let alg = make_cayley_dickson(2, Mode::Exact).unwrap();
        assert_eq!(euclidean_norm(&alg.unit().unwrap()).unwrap(), 1.0);
        let x = alg.element_from_i64(&[3, 4]).unwrap();
        assert_eq!(euclidean_norm(&x).unwrap(), 5.0);
        assert_eq!(euclidean_norm(&alg.zero()).unwrap(), 0.0);
    }

    #[test]
    fn euclidean_norm_rejects_foreign_elements() {
        let alg = crate::matrix::make_matrix_algebra(
            2,
            FieldTag::Real,
            crate::matrix::ProductKind::Standard,
            Mode::Exact,
        )
        .unwrap();
        let x = alg.unit().unwrap();
        assert!(euclidean_norm(&x).is_err());
    }

    #[test]
    fn radius_matches_euclidean_norm_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for dim in [2usize, 4, 8, 16] {
            let alg = make_cayley_dickson(dim, Mode::Exact).unwrap();
            for _ in 0..10 {
                let x = crate::random::random_element(&alg, &mut rng);
                let r = radius(&alg, &x).unwrap().radius;
                let norm = euclidean_norm(&x).unwrap();
                assert!((r - norm).abs() <= 1e-8, "dim={dim}: {r} vs {norm}");
            }
        }
    }

    #[test]
    fn minimal_polynomial_of_non_real_elements_has_degree_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for dim in [2usize, 4, 8, 16] {
            let alg = make_cayley_dickson(dim, Mode::Exact).unwrap();
            for _ in 0..5 {
                let x = crate::random::random_element(&alg, &mut rng);
                if x.coords()[1..].iter().all(Scalar::is_zero) {
                    continue;
                }
                let p = minimal_polynomial(&alg, &x).unwrap();
                assert_eq!(p.degree(), 2, "dim={dim}");
            }
        }
    }
}
