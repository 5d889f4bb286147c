//! The built-in n×n matrix algebras: standard, Hadamard, Jordan, and the two
//! ∗-twisted products, together with their closed-form radius and
//! minimal-polynomial oracles and the explicit example matrices.
//!
//! The oracles never call the generic ladder/radius path; their independence
//! is what makes the cross-check suites meaningful.

use serde::Deserialize;
use thiserror::Error;

use crate::algebra::{corner_index, AlgebraError, AlgebraHandle, Element, ProductRule, StarCorner};
use crate::minpoly::Polynomial;
use crate::roots::{spectral_radius, RootsError};
use crate::scalar::{parse_scalar, FieldTag, Mode, Scalar, ScalarError};

/// The five built-in matrix products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Standard,
    Hadamard,
    Jordan,
    /// Twisted product negating the (1, n) entry.
    Star1N,
    /// Twisted product negating the (n, 1) entry.
    StarN1,
}

impl ProductKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ProductKind::Standard => "standard",
            ProductKind::Hadamard => "hadamard",
            ProductKind::Jordan => "jordan",
            ProductKind::Star1N => "star1n",
            ProductKind::StarN1 => "starn1",
        }
    }

    pub fn parse(s: &str) -> Option<ProductKind> {
        match s {
            "standard" => Some(ProductKind::Standard),
            "hadamard" => Some(ProductKind::Hadamard),
            "jordan" => Some(ProductKind::Jordan),
            "star1n" => Some(ProductKind::Star1N),
            "starn1" => Some(ProductKind::StarN1),
            _ => None,
        }
    }

    pub fn is_star(self) -> bool {
        matches!(self, ProductKind::Star1N | ProductKind::StarN1)
    }

    fn star_corner(self) -> Option<StarCorner> {
        match self {
            ProductKind::Star1N => Some(StarCorner::OneN),
            ProductKind::StarN1 => Some(StarCorner::NOne),
            _ => None,
        }
    }
}

/// An n×n matrix of scalars, the natural view of elements of the matrix
/// algebras. Embeds row-major into coordinate vectors of length n².
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixElement {
    n: usize,
    entries: Vec<Scalar>,
}

#[derive(Debug, Error)]
pub enum MatrixIoError {
    #[error("missing or invalid field `{0}` in matrix JSON")]
    Field(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid JSON: {0}")]
    Json(String),
}

impl MatrixElement {
    /// Wrap n² row-major entries; all must share one field and mode, and
    /// n must be at least 2.
    pub fn new(n: usize, entries: Vec<Scalar>) -> Result<MatrixElement, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::Domain(format!(
                "matrix size must be at least 2, got {n}"
            )));
        }
        if entries.len() != n * n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n * n,
                got: entries.len(),
            });
        }
        let field = entries.iter().fold(FieldTag::Real, |acc, s| {
            if s.field() == FieldTag::Complex {
                FieldTag::Complex
            } else {
                acc
            }
        });
        let mode = entries[0].mode();
        if entries.iter().any(|s| s.mode() != mode) {
            return Err(AlgebraError::Domain("entries mix modes".into()));
        }
        let entries = match field {
            FieldTag::Complex => entries.iter().map(Scalar::to_complex_field).collect(),
            FieldTag::Real => entries,
        };
        Ok(MatrixElement { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<MatrixElement, AlgebraError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::Domain("matrix is not square".into()));
        }
        MatrixElement::new(n, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(
        rows: &[&[i64]],
        field: FieldTag,
        mode: Mode,
    ) -> Result<MatrixElement, AlgebraError> {
        MatrixElement::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_i64(v, field, mode)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize, field: FieldTag, mode: Mode) -> MatrixElement {
        let mut entries = vec![Scalar::zero(field, mode); n * n];
        for i in 0..n {
            entries[i * n + i] = Scalar::one(field, mode);
        }
        MatrixElement { n, entries }
    }

    pub fn zeros(n: usize, field: FieldTag, mode: Mode) -> MatrixElement {
        MatrixElement {
            n,
            entries: vec![Scalar::zero(field, mode); n * n],
        }
    }

    /// The all-ones matrix E, the Hadamard unit.
    pub fn all_ones(n: usize, field: FieldTag, mode: Mode) -> MatrixElement {
        MatrixElement {
            n,
            entries: vec![Scalar::one(field, mode); n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldTag {
        self.entries[0].field()
    }

    pub fn mode(&self) -> Mode {
        self.entries[0].mode()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero(self.field(), self.mode());
        for i in 0..self.n {
            acc = &acc + self.entry(i, i);
        }
        acc
    }

    /// Standard matrix product.
    pub fn mul(&self, other: &MatrixElement) -> Result<MatrixElement, AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let n = self.n;
        let field = if self.field() == FieldTag::Complex || other.field() == FieldTag::Complex {
            FieldTag::Complex
        } else {
            FieldTag::Real
        };
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Scalar::zero(field, self.mode());
                for k in 0..n {
                    acc = &acc + &(self.entry(i, k) * other.entry(k, j));
                }
                entries.push(acc);
            }
        }
        MatrixElement::new(n, entries)
    }

    /// A + cI, used by the characteristic-polynomial recurrence.
    pub(crate) fn add_scaled_identity(&self, c: &Scalar) -> MatrixElement {
        let mut out = self.clone();
        for i in 0..self.n {
            out.entries[i * self.n + i] = &out.entries[i * self.n + i] + c;
        }
        out
    }

    /// Positive in the entrywise sense: nonzero, and every entry is a
    /// nonnegative real.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.entries.iter().all(entry_is_nonneg_real)
    }

    /// Negative in the entrywise sense: nonzero, and every entry is a
    /// non-positive real.
    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.entries.iter().all(|s| entry_is_nonneg_real(&-s))
    }

    /// Embed into an algebra of dimension n² (row-major).
    pub fn to_element(&self, alg: &AlgebraHandle) -> Result<Element, AlgebraError> {
        alg.element(self.entries.clone())
    }

    /// Recover the matrix view of an element of a matrix algebra.
    pub fn from_element(el: &Element) -> Result<MatrixElement, AlgebraError> {
        let n = match el.algebra().product() {
            ProductRule::Standard { n }
            | ProductRule::Hadamard { n }
            | ProductRule::Jordan { n }
            | ProductRule::Star { n, .. } => *n,
            _ => {
                let d = el.algebra().dim();
                let n = (d as f64).sqrt().round() as usize;
                if n * n != d {
                    return Err(AlgebraError::Domain(format!(
                        "algebra dimension {d} is not a perfect square"
                    )));
                }
                n
            }
        };
        MatrixElement::new(n, el.coords().to_vec())
    }

    /// Matrix file schema: `{"n": 2, "field": "C", "entries": [["1","-1i"],["1i","-1"]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        serde_json::json!({
            "n": self.n,
            "field": self.field().as_str(),
            "entries": rows,
        })
    }

    pub fn from_json(value: &serde_json::Value, mode: Mode) -> Result<MatrixElement, MatrixIoError> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            field: String,
            entries: Vec<Vec<String>>,
        }
        let raw: Raw = serde_json::from_value(value.clone())
            .map_err(|e| MatrixIoError::Json(e.to_string()))?;
        let field = match raw.field.as_str() {
            "R" => FieldTag::Real,
            "C" => FieldTag::Complex,
            other => return Err(MatrixIoError::Field(format!("field `{other}`"))),
        };
        if raw.entries.len() != raw.n || raw.entries.iter().any(|r| r.len() != raw.n) {
            return Err(MatrixIoError::Field("entries".into()));
        }
        let mut entries = Vec::with_capacity(raw.n * raw.n);
        for row in &raw.entries {
            for s in row {
                entries.push(parse_scalar(s, field, mode)?);
            }
        }
        Ok(MatrixElement::new(raw.n, entries)?)
    }
}

fn entry_is_nonneg_real(s: &Scalar) -> bool {
    use num_traits::{Signed, Zero};
    match s {
        Scalar::Rational(r) => !r.is_negative(),
        Scalar::Gaussian(c) => c.im.is_zero() && !c.re.is_negative(),
        Scalar::Float(x) => *x >= 0.0,
        Scalar::ComplexFloat(z) => z.im == 0.0 && z.re >= 0.0,
    }
}

/// Construct one of the built-in matrix algebras on n×n matrices (n ≥ 2).
/// The unit is the identity matrix for every product except Hadamard, whose
/// unit is the all-ones matrix E.
pub fn make_matrix_algebra(
    n: usize,
    field: FieldTag,
    kind: ProductKind,
    mode: Mode,
) -> Result<AlgebraHandle, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::Domain(format!(
            "matrix algebras need n >= 2, got {n}"
        )));
    }
    let rule = match kind {
        ProductKind::Standard => ProductRule::Standard { n },
        ProductKind::Hadamard => ProductRule::Hadamard { n },
        ProductKind::Jordan => ProductRule::Jordan { n },
        ProductKind::Star1N => ProductRule::Star {
            n,
            corner: StarCorner::OneN,
        },
        ProductKind::StarN1 => ProductRule::Star {
            n,
            corner: StarCorner::NOne,
        },
    };
    let unit = match kind {
        ProductKind::Hadamard => MatrixElement::all_ones(n, field, mode),
        _ => MatrixElement::identity(n, field, mode),
    };
    let name = format!("{}(n={n}, {field}, {mode})", kind.as_str());
    Ok(AlgebraHandle::from_parts(
        n * n,
        field,
        mode,
        rule,
        Some(unit.entries),
        name,
    ))
}

/// The prime map A′: a copy of A with the designated corner entry negated.
/// An involution; only defined for the star kinds.
pub fn prime_map(a: &MatrixElement, kind: ProductKind) -> Result<MatrixElement, AlgebraError> {
    let corner = kind
        .star_corner()
        .ok_or_else(|| AlgebraError::Domain(format!("prime map is undefined for {}", kind.as_str())))?;
    let idx = corner_index(a.n, corner);
    let mut out = a.clone();
    out.entries[idx] = -&out.entries[idx];
    Ok(out)
}

/// A ∗ B = (A′B′)′ with the standard product in the middle.
pub fn star_product(
    a: &MatrixElement,
    b: &MatrixElement,
    kind: ProductKind,
) -> Result<MatrixElement, AlgebraError> {
    let ap = prime_map(a, kind)?;
    let bp = prime_map(b, kind)?;
    prime_map(&ap.mul(&bp)?, kind)
}

/// Closed-form Hadamard radius: the sup norm max |α_ij|.
pub fn hadamard_radius_oracle(a: &MatrixElement) -> f64 {
    a.entries.iter().map(Scalar::magnitude).fold(0.0, f64::max)
}

/// Closed-form Hadamard minimal polynomial: the product of (t - ζ) over the
/// distinct entries ζ of A. Entry distinctness must be decided exactly, so
/// approx mode is rejected.
pub fn hadamard_minpoly_oracle(a: &MatrixElement) -> Result<Polynomial, AlgebraError> {
    if a.mode() != Mode::Exact {
        return Err(AlgebraError::Domain(
            "the Hadamard minimal-polynomial oracle needs exact mode (entry distinctness)".into(),
        ));
    }
    let mut distinct: Vec<Scalar> = Vec::new();
    for s in &a.entries {
        if !distinct.iter().any(|d| d == s) {
            distinct.push(s.clone());
        }
    }
    Ok(Polynomial::from_roots(&distinct).expect("at least one entry"))
}

/// Closed-form star radius: ρ(A′).
pub fn star_radius_oracle(a: &MatrixElement, kind: ProductKind) -> Result<f64, RootsError> {
    let ap = prime_map(a, kind).expect("star kind");
    spectral_radius(&ap)
}

/// Closed-form star powers: A^⟨k⟩ = ((A′)^k)′, the inner power standard.
pub fn star_power_oracle(
    a: &MatrixElement,
    k: u32,
    kind: ProductKind,
) -> Result<MatrixElement, AlgebraError> {
    if k == 0 {
        return Err(AlgebraError::Domain("star power oracle needs k >= 1".into()));
    }
    let ap = prime_map(a, kind)?;
    let mut acc = ap.clone();
    for _ in 1..k {
        acc = ap.mul(&acc)?;
    }
    prime_map(&acc, kind)
}

/// The nilpotent-with-nonzero-eigenvalues example: zero except for the four
/// corner entries (1,1), (1,n), (n,1), (n,n) which are 1, -i, i, -1. Satisfies
/// A ∗ A = 0 while det(tI - A) = t^(n-2) (t² - 2).
pub fn example_star_nilpotent(n: usize, mode: Mode) -> Result<MatrixElement, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::Domain("example needs n >= 2".into()));
    }
    let field = FieldTag::Complex;
    let i = Scalar::i_unit(mode);
    let mut m = MatrixElement::zeros(n, field, mode);
    m.entries[0] = Scalar::one(field, mode);
    m.entries[n - 1] = -&i;
    m.entries[(n - 1) * n] = i;
    m.entries[n * n - 1] = -Scalar::one(field, mode);
    Ok(m)
}

/// The positive matrix with a negative ∗-square: α_1n = α_n1 = 1, rest zero.
pub fn example_positive_negative_square(
    n: usize,
    field: FieldTag,
    mode: Mode,
) -> Result<MatrixElement, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::Domain("example needs n >= 2".into()));
    }
    let mut m = MatrixElement::zeros(n, field, mode);
    m.entries[n - 1] = Scalar::one(field, mode);
    m.entries[(n - 1) * n] = Scalar::one(field, mode);
    Ok(m)
}

/// The Jordan non-alternativity witness pair A = e12 ⊕ O, B = e21 ⊕ O.
pub fn example_jordan_nonalternative(
    n: usize,
    field: FieldTag,
    mode: Mode,
) -> Result<(MatrixElement, MatrixElement), AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::Domain("example needs n >= 2".into()));
    }
    let mut a = MatrixElement::zeros(n, field, mode);
    a.entries[1] = Scalar::one(field, mode);
    let mut b = MatrixElement::zeros(n, field, mode);
    b.entries[n] = Scalar::one(field, mode);
    Ok((a, b))
}
