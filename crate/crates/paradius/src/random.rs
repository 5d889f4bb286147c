//! Deterministic random generation of scalars, matrices, and elements.
//!
//! Entries are rationals with numerators and denominators drawn uniformly
//! from [-9, 9] (denominator nonzero), plus an imaginary part over ℂ. Approx
//! mode draws the same rationals and rounds them, so a fixed seed gives the
//! same mathematical values in both modes.

use rand::Rng;

use crate::algebra::{AlgebraHandle, Element};
use crate::matrix::MatrixElement;
use crate::scalar::{FieldTag, Mode, Scalar};

fn random_ratio(rng: &mut impl Rng) -> (i64, i64) {
    let n = rng.gen_range(-9i64..=9);
    let d = loop {
        let d = rng.gen_range(-9i64..=9);
        if d != 0 {
            break d;
        }
    };
    (n, d)
}

pub fn random_scalar(field: FieldTag, mode: Mode, rng: &mut impl Rng) -> Scalar {
    let (n, d) = random_ratio(rng);
    let re = Scalar::from_ratio(n, d, field, mode);
    match field {
        FieldTag::Real => re,
        FieldTag::Complex => {
            let (n, d) = random_ratio(rng);
            let im = Scalar::from_ratio(n, d, FieldTag::Complex, mode);
            &re + &(&im * &Scalar::i_unit(mode))
        }
    }
}

pub fn random_nonzero_scalar(field: FieldTag, mode: Mode, rng: &mut impl Rng) -> Scalar {
    loop {
        let s = random_scalar(field, mode, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_matrix(n: usize, field: FieldTag, mode: Mode, rng: &mut impl Rng) -> MatrixElement {
    let entries = (0..n * n).map(|_| random_scalar(field, mode, rng)).collect();
    MatrixElement::new(n, entries).expect("valid shape")
}

pub fn random_element(alg: &AlgebraHandle, rng: &mut impl Rng) -> Element {
    let coords = (0..alg.dim())
        .map(|_| random_scalar(alg.field(), alg.mode(), rng))
        .collect();
    alg.element(coords).expect("coords match the algebra")
}
