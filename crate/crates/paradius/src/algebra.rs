//! Finite-dimensional algebras: elements as coordinate vectors in a fixed
//! basis, bilinear products given either by structure constants or by a
//! built-in closed form, powers, and unit elements.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::solve_linear;
use crate::scalar::{FieldTag, Mode, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("structure constants have the wrong shape: {0}")]
    ShapeError(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("scalar field {got} does not match the algebra's field {expected}")]
    FieldMismatch { expected: FieldTag, got: FieldTag },
    #[error("scalar mode {got} does not match the algebra's mode {expected}")]
    ModeMismatch { expected: Mode, got: Mode },
    #[error("operation requires a unit element but the algebra has none")]
    NoUnit,
    #[error("{0}")]
    Domain(String),
}

/// Which corner entry the star products negate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarCorner {
    /// Negate the (1, n) entry.
    OneN,
    /// Negate the (n, 1) entry.
    NOne,
}

/// The d×d×d coefficients of a bilinear product: `gamma(i, j, k)` is the k-th
/// coordinate of the product of basis elements i and j.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    dim: usize,
    gamma: Vec<Scalar>,
}

impl StructureConstants {
    /// Build from a flat row-major table of d³ scalars (index `i*d*d + j*d + k`).
    /// All entries must share one field and mode.
    pub fn new(dim: usize, gamma: Vec<Scalar>) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ShapeError("dimension must be at least 1".into()));
        }
        if gamma.len() != dim * dim * dim {
            return Err(AlgebraError::ShapeError(format!(
                "expected {}^3 = {} entries, got {}",
                dim,
                dim * dim * dim,
                gamma.len()
            )));
        }
        let field = gamma[0].field();
        let mode = gamma[0].mode();
        if gamma.iter().any(|s| s.field() != field || s.mode() != mode) {
            return Err(AlgebraError::ShapeError(
                "entries mix fields or modes".into(),
            ));
        }
        Ok(StructureConstants { dim, gamma })
    }

    /// Build from nested `[i][j][k]` tables, checking the shape is exactly d×d×d.
    pub fn from_nested(table: Vec<Vec<Vec<Scalar>>>) -> Result<Self, AlgebraError> {
        let d = table.len();
        let mut flat = Vec::with_capacity(d * d * d);
        for plane in &table {
            if plane.len() != d {
                return Err(AlgebraError::ShapeError(format!(
                    "expected {d} rows per plane, got {}",
                    plane.len()
                )));
            }
            for row in plane {
                if row.len() != d {
                    return Err(AlgebraError::ShapeError(format!(
                        "expected {d} entries per row, got {}",
                        row.len()
                    )));
                }
                flat.extend(row.iter().cloned());
            }
        }
        StructureConstants::new(d, flat)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldTag {
        self.gamma[0].field()
    }

    pub fn mode(&self) -> Mode {
        self.gamma[0].mode()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.gamma[(i * self.dim + j) * self.dim + k]
    }
}

/// How products are computed.
#[derive(Debug, Clone)]
pub enum ProductRule {
    /// Generic bilinear product from structure constants.
    Structure(StructureConstants),
    /// Ordinary n×n matrix multiplication on row-major coordinates.
    Standard { n: usize },
    /// Entrywise (Hadamard) product.
    Hadamard { n: usize },
    /// Jordan product ½(AB + BA).
    Jordan { n: usize },
    /// Twisted product (A'B')' where the prime map negates one corner entry.
    Star { n: usize, corner: StarCorner },
    /// Cayley-Dickson doubling product over ℝ.
    CayleyDickson { dim: usize },
}

pub struct Algebra {
    id: u64,
    dim: usize,
    field: FieldTag,
    mode: Mode,
    product: ProductRule,
    unit: Option<Vec<Scalar>>,
    name: String,
}

/// Shared, immutable handle to an algebra. Cheap to clone; all operations are
/// pure functions, so handles and elements may be used from many threads.
#[derive(Clone)]
pub struct AlgebraHandle(Arc<Algebra>);

/// An element of an algebra: a coordinate vector in the algebra's basis.
/// Immutable; every operation returns a fresh element.
#[derive(Clone)]
pub struct Element {
    algebra: AlgebraHandle,
    coords: Vec<Scalar>,
}

static NEXT_ALGEBRA_ID: AtomicU64 = AtomicU64::new(1);

impl AlgebraHandle {
    /// Internal constructor shared by the built-in algebra factories.
    pub(crate) fn from_parts(
        dim: usize,
        field: FieldTag,
        mode: Mode,
        product: ProductRule,
        unit: Option<Vec<Scalar>>,
        name: String,
    ) -> AlgebraHandle {
        AlgebraHandle(Arc::new(Algebra {
            id: NEXT_ALGEBRA_ID.fetch_add(1, Ordering::Relaxed),
            dim,
            field,
            mode,
            product,
            unit,
            name,
        }))
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn field(&self) -> FieldTag {
        self.0.field
    }

    pub fn mode(&self) -> Mode {
        self.0.mode
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn product(&self) -> &ProductRule {
        &self.0.product
    }

    pub fn is_unital(&self) -> bool {
        self.0.unit.is_some()
    }

    pub fn unit(&self) -> Option<Element> {
        self.0.unit.clone().map(|coords| Element {
            algebra: self.clone(),
            coords,
        })
    }

    /// Wrap a coordinate vector as an element, checking length, field, and
    /// mode. Real scalars are promoted into a complex algebra's field.
    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element, AlgebraError> {
        if coords.len() != self.0.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.0.dim,
                got: coords.len(),
            });
        }
        let mut out = Vec::with_capacity(coords.len());
        for s in coords {
            out.push(self.adopt_scalar(s)?);
        }
        Ok(Element {
            algebra: self.clone(),
            coords: out,
        })
    }

    /// Convenience: an element from small integers.
    pub fn element_from_i64(&self, coords: &[i64]) -> Result<Element, AlgebraError> {
        self.element(
            coords
                .iter()
                .map(|&v| Scalar::from_i64(v, self.0.field, self.0.mode))
                .collect(),
        )
    }

    pub(crate) fn adopt_scalar(&self, s: Scalar) -> Result<Scalar, AlgebraError> {
        if s.mode() != self.0.mode {
            return Err(AlgebraError::ModeMismatch {
                expected: self.0.mode,
                got: s.mode(),
            });
        }
        match (self.0.field, s.field()) {
            (FieldTag::Complex, FieldTag::Real) => Ok(s.to_complex_field()),
            (expected, got) if expected == got => Ok(s),
            (expected, got) => Err(AlgebraError::FieldMismatch { expected, got }),
        }
    }

    pub fn zero(&self) -> Element {
        Element {
            algebra: self.clone(),
            coords: vec![Scalar::zero(self.0.field, self.0.mode); self.0.dim],
        }
    }

    /// The k-th basis element.
    pub fn basis_element(&self, k: usize) -> Element {
        assert!(k < self.0.dim);
        let mut e = self.zero();
        e.coords[k] = Scalar::one(self.0.field, self.0.mode);
        e
    }

    pub fn contains(&self, a: &Element) -> bool {
        a.algebra.0.id == self.0.id
    }

    fn check_member(&self, a: &Element) -> Result<(), AlgebraError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    /// The algebra product a·b.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(Element {
            algebra: self.clone(),
            coords: self.mul_coords(&a.coords, &b.coords),
        })
    }

    /// a^k for k ≥ 1, as the iterate a·(a^(k-1)); a^0 is the unit when one
    /// exists and an error otherwise.
    pub fn power(&self, a: &Element, k: u32) -> Result<Element, AlgebraError> {
        self.check_member(a)?;
        if k == 0 {
            return self.unit().ok_or(AlgebraError::NoUnit);
        }
        let mut acc = a.clone();
        for _ in 1..k {
            acc = Element {
                algebra: self.clone(),
                coords: self.mul_coords(&a.coords, &acc.coords),
            };
        }
        Ok(acc)
    }

    pub(crate) fn mul_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        match &self.0.product {
            ProductRule::Structure(sc) => {
                let d = sc.dim();
                let mut out = vec![Scalar::zero(self.0.field, self.0.mode); d];
                for (i, ai) in a.iter().enumerate() {
                    if ai.is_zero() {
                        continue;
                    }
                    for (j, bj) in b.iter().enumerate() {
                        if bj.is_zero() {
                            continue;
                        }
                        let ab = ai * bj;
                        for (k, out_k) in out.iter_mut().enumerate() {
                            let g = sc.get(i, j, k);
                            if !g.is_zero() {
                                *out_k = &*out_k + &(&ab * g);
                            }
                        }
                    }
                }
                out
            }
            ProductRule::Standard { n } => matmul(*n, a, b),
            ProductRule::Hadamard { .. } => {
                a.iter().zip(b).map(|(x, y)| x * y).collect()
            }
            ProductRule::Jordan { n } => {
                let ab = matmul(*n, a, b);
                let ba = matmul(*n, b, a);
                let half = Scalar::from_ratio(1, 2, self.0.field, self.0.mode);
                ab.iter()
                    .zip(&ba)
                    .map(|(x, y)| &half * &(x + y))
                    .collect()
            }
            ProductRule::Star { n, corner } => {
                let idx = corner_index(*n, *corner);
                let mut ap = a.to_vec();
                let mut bp = b.to_vec();
                ap[idx] = -&ap[idx];
                bp[idx] = -&bp[idx];
                let mut c = matmul(*n, &ap, &bp);
                c[idx] = -&c[idx];
                c
            }
            ProductRule::CayleyDickson { .. } => cd_mul(a, b),
        }
    }
}

pub(crate) fn corner_index(n: usize, corner: StarCorner) -> usize {
    match corner {
        StarCorner::OneN => n - 1,
        StarCorner::NOne => (n - 1) * n,
    }
}

fn matmul(n: usize, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = &a[i * n] * &b[j];
            for k in 1..n {
                acc = &acc + &(&a[i * n + k] * &b[k * n + j]);
            }
            out.push(acc);
        }
    }
    out
}

/// Cayley-Dickson doubling: (a,b)(c,d) = (ac - d̄b, da + bc̄), with the
/// conjugate (a,b)̄ = (ā, -b). At every level this amounts to negating all
/// coordinates except the first.
fn cd_mul(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let d_conj = cd_conj(d);
    let c_conj = cd_conj(c);
    let ac = cd_mul(a, c);
    let db = cd_mul(&d_conj, b);
    let da = cd_mul(d, a);
    let bc = cd_mul(b, &c_conj);
    let mut out = Vec::with_capacity(x.len());
    out.extend(ac.iter().zip(&db).map(|(p, q)| p - q));
    out.extend(da.iter().zip(&bc).map(|(p, q)| p + q));
    out
}

pub(crate) fn cd_conj(x: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(x.len());
    out.push(x[0].clone());
    out.extend(x[1..].iter().map(|s| -s));
    out
}

/// Build an algebra from structure constants. When `unit` is omitted the
/// linear system `e·b_j = b_j`, `b_j·e = b_j` is solved; if it has a solution
/// that verifies against the product, the handle stores it (an inconsistent
/// system simply leaves the algebra non-unital).
pub fn make_structure_algebra(
    gamma: StructureConstants,
    field: FieldTag,
    unit: Option<Vec<Scalar>>,
) -> Result<AlgebraHandle, AlgebraError> {
    let mode = gamma.mode();
    let gamma = match (field, gamma.field()) {
        (FieldTag::Complex, FieldTag::Real) => {
            let d = gamma.dim();
            let promoted = gamma.gamma.iter().map(Scalar::to_complex_field).collect();
            StructureConstants::new(d, promoted)?
        }
        (expected, got) if expected == got => gamma,
        (expected, got) => return Err(AlgebraError::FieldMismatch { expected, got }),
    };
    let d = gamma.dim();
    let name = format!("structure(d={d}, {field}, {mode})");
    let probe = AlgebraHandle::from_parts(
        d,
        field,
        mode,
        ProductRule::Structure(gamma.clone()),
        None,
        name.clone(),
    );
    let unit_coords = match unit {
        Some(coords) => Some(probe.element(coords)?.into_coords()),
        None => solve_unit(&probe),
    };
    Ok(AlgebraHandle::from_parts(
        d,
        field,
        mode,
        ProductRule::Structure(gamma),
        unit_coords,
        name,
    ))
}

/// Materialize the structure constants of any algebra by multiplying basis
/// elements pairwise. Useful for round-tripping built-in products through the
/// generic representation.
pub fn structure_constants_of(alg: &AlgebraHandle) -> StructureConstants {
    let d = alg.dim();
    let mut gamma = Vec::with_capacity(d * d * d);
    for i in 0..d {
        let bi = alg.basis_element(i);
        for j in 0..d {
            let bj = alg.basis_element(j);
            let prod = alg.mul(&bi, &bj).expect("basis product");
            gamma.extend(prod.coords);
        }
    }
    StructureConstants::new(d, gamma).expect("shape by construction")
}

fn solve_unit(alg: &AlgebraHandle) -> Option<Vec<Scalar>> {
    let d = alg.dim();
    let field = alg.field();
    let mode = alg.mode();
    let ProductRule::Structure(sc) = alg.product() else {
        unreachable!("solve_unit is only called on structure algebras")
    };
    let zero = Scalar::zero(field, mode);
    let one = Scalar::one(field, mode);
    let mut rows = Vec::with_capacity(2 * d * d);
    let mut rhs = Vec::with_capacity(2 * d * d);
    for j in 0..d {
        for k in 0..d {
            // Σ_i e_i γ(i,j,k) = δ_jk   (e · b_j = b_j)
            rows.push((0..d).map(|i| sc.get(i, j, k).clone()).collect());
            rhs.push(if j == k { one.clone() } else { zero.clone() });
            // Σ_i e_i γ(j,i,k) = δ_jk   (b_j · e = b_j)
            rows.push((0..d).map(|i| sc.get(j, i, k).clone()).collect());
            rhs.push(if j == k { one.clone() } else { zero.clone() });
        }
    }
    let e = solve_linear(&rows, &rhs, field, mode)?;
    // verify against the product itself before trusting the solve
    let cand = alg.element(e).ok()?;
    for j in 0..d {
        let bj = alg.basis_element(j);
        if alg.mul(&cand, &bj).ok()? != bj || alg.mul(&bj, &cand).ok()? != bj {
            return None;
        }
    }
    Some(cand.coords)
}

/// Coordinatewise αa + βb. Both elements must belong to the same algebra.
pub fn linear_combine(
    alpha: &Scalar,
    a: &Element,
    beta: &Scalar,
    b: &Element,
) -> Result<Element, AlgebraError> {
    if a.algebra.0.id != b.algebra.0.id {
        return Err(AlgebraError::AlgebraMismatch);
    }
    let alg = &a.algebra;
    let alpha = alg.adopt_scalar(alpha.clone())?;
    let beta = alg.adopt_scalar(beta.clone())?;
    let coords = a
        .coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| &(&alpha * x) + &(&beta * y))
        .collect();
    Ok(Element {
        algebra: alg.clone(),
        coords,
    })
}

impl Element {
    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn algebra(&self) -> &AlgebraHandle {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Max coordinate magnitude; the discrepancy measure used by the law
    /// checkers.
    pub fn sup_norm(&self) -> f64 {
        self.coords
            .iter()
            .map(Scalar::magnitude)
            .fold(0.0, f64::max)
    }

    /// αa as an element.
    pub fn scale(&self, alpha: &Scalar) -> Result<Element, AlgebraError> {
        let alpha = self.algebra.adopt_scalar(alpha.clone())?;
        Ok(Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|x| &alpha * x).collect(),
        })
    }

    pub fn sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        let one = Scalar::one(self.algebra.field(), self.algebra.mode());
        linear_combine(&one, self, &-&one, other)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Element) -> bool {
        self.algebra.0.id == other.algebra.0.id && self.coords == other.coords
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}](", self.algebra.name())?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for AlgebraHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraHandle({})", self.0.name)
    }
}
