//! Minimal polynomials and the radius of elements in finite-dimensional
//! power-associative algebras.
//!
//! Every element of such an algebra has a unique monic annihilating
//! polynomial of least positive degree; its radius is the largest modulus
//! among that polynomial's complex roots. This crate computes both, for
//! algebras given by structure constants and for built-in families where
//! closed-form answers are known and serve as exact cross-check oracles:
//!
//! - n×n matrices under the standard product (radius = spectral radius),
//! - the Hadamard entrywise product (radius = sup norm, minimal polynomial =
//!   product of linear factors over the distinct entries),
//! - the Jordan product ½(AB + BA) (same minimal polynomial as standard),
//! - two ∗-twisted products (A′B′)′ that negate one corner entry (radius =
//!   spectral radius of A′), and
//! - the Cayley-Dickson doubling algebras (radius = Euclidean norm).
//!
//! Arithmetic is exact (arbitrary-precision rationals and Gaussian
//! rationals) by default, with an opt-in binary64 mode. The `laws` module
//! checks algebraic laws (power-associativity, alternativity, commutativity,
//! associativity, distributivity) and the radius laws on randomized,
//! replayable trials.
//!
//! Start with the runnable examples: `cargo run --example hadamard_radius`,
//! `star_exotica`, `cayley_dickson_norm`, `law_checks`, `custom_algebra`,
//! `jordan_vs_standard`, `oracle_crosscheck`.

pub mod algebra;
pub mod cayley_dickson;
pub mod laws;
mod linalg;
pub mod matrix;
pub mod minpoly;
pub mod random;
pub mod roots;
pub mod scalar;

pub use algebra::{
    linear_combine, make_structure_algebra, structure_constants_of, AlgebraError, AlgebraHandle,
    Element, ProductRule, StarCorner, StructureConstants,
};
pub use cayley_dickson::{euclidean_norm, make_cayley_dickson};
pub use laws::{
    check_alternativity, check_binary_law, check_power_associativity, check_radius_laws,
    replay_witness, BinaryLaw, LawKind, LawReport, LawWitness, Verdict,
};
pub use matrix::{
    example_jordan_nonalternative, example_positive_negative_square, example_star_nilpotent,
    hadamard_minpoly_oracle, hadamard_radius_oracle, make_matrix_algebra, prime_map, star_power_oracle,
    star_product, star_radius_oracle, MatrixElement, ProductKind,
};
pub use minpoly::{
    evaluate_at_element, minimal_polynomial, minimal_polynomial_detailed, poly_divides,
    MinPolyError, MinPolyOutcome, PolyError, Polynomial,
};
pub use roots::{char_poly, poly_roots, radius, spectral_radius, RadiusError, RadiusReport, RootSet, RootsError};
pub use scalar::{parse_scalar, FieldTag, Mode, Scalar, ScalarError};
