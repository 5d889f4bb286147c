//! Internal linear algebra over scalar vectors: the incremental span test
//! behind minimal-polynomial ladders, and a small dense solver used to find
//! unit elements of structure-constant algebras.

use num_complex::Complex64;

use crate::scalar::{FieldTag, Mode, Scalar};

/// Relative dependence tolerance for approx-mode rank decisions.
pub(crate) const DEPENDENCE_TOL: f64 = 1e-9;

/// Outcome of inserting one vector into a [`SpanTracker`].
pub(crate) enum SpanStep {
    Independent {
        /// Approx mode only: the residual fell inside the ambiguity band
        /// `[tol/10, tol*10]` (scaled), so the rank decision is fragile.
        ambiguous: bool,
    },
    Dependent {
        /// Coefficients expressing the inserted vector over all previously
        /// inserted vectors, in insertion order.
        combo: Vec<Scalar>,
        ambiguous: bool,
    },
}

/// Incremental span membership with representation recovery.
///
/// Exact mode reduces raw vectors by Gaussian elimination, tracking each
/// reduced row as a combination of the original inserts. Approx mode
/// orthogonalizes progressively (modified Gram-Schmidt) and recovers the
/// combination by back-substitution on the recorded triangular factor.
///
/// Callers stop at the first dependent insert; inserting after a dependence
/// was reported is a logic error.
pub(crate) struct SpanTracker {
    dim: usize,
    field: FieldTag,
    mode: Mode,
    inserted: usize,
    done: bool,
    // exact state
    rows: Vec<ReducedRow>,
    // approx state
    qbasis: Vec<Vec<Complex64>>,
    rcols: Vec<Vec<Complex64>>,
    max_norm: f64,
}

struct ReducedRow {
    vec: Vec<Scalar>,
    combo: Vec<Scalar>,
    pivot: usize,
}

impl SpanTracker {
    pub(crate) fn new(dim: usize, field: FieldTag, mode: Mode) -> Self {
        SpanTracker {
            dim,
            field,
            mode,
            inserted: 0,
            done: false,
            rows: Vec::new(),
            qbasis: Vec::new(),
            rcols: Vec::new(),
            max_norm: 0.0,
        }
    }

    pub(crate) fn insert(&mut self, v: &[Scalar]) -> SpanStep {
        assert!(!self.done, "insert after dependence was reported");
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let step = match self.mode {
            Mode::Exact => self.insert_exact(v),
            Mode::Approx => self.insert_approx(v),
        };
        self.inserted += 1;
        if matches!(step, SpanStep::Dependent { .. }) {
            self.done = true;
        }
        step
    }

    fn insert_exact(&mut self, v: &[Scalar]) -> SpanStep {
        let k = self.inserted;
        let mut r = v.to_vec();
        let mut combo = vec![Scalar::zero(self.field, Mode::Exact); k];
        for row in &self.rows {
            let factor = r[row.pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (ri, vi) in r.iter_mut().zip(&row.vec) {
                *ri = &*ri - &(&factor * vi);
            }
            for (ci, wi) in combo.iter_mut().zip(&row.combo) {
                *ci = &*ci - &(&factor * wi);
            }
        }
        match r.iter().position(|s| !s.is_zero()) {
            None => SpanStep::Dependent {
                combo: combo.into_iter().map(|c| -c).collect(),
                ambiguous: false,
            },
            Some(pivot) => {
                // normalize the pivot to 1 so later eliminations are a single multiply
                let inv = r[pivot].inv().expect("nonzero pivot");
                for ri in r.iter_mut() {
                    *ri = &*ri * &inv;
                }
                let mut full_combo = combo;
                full_combo.push(Scalar::one(self.field, Mode::Exact));
                for ci in full_combo.iter_mut() {
                    *ci = &*ci * &inv;
                }
                self.rows.push(ReducedRow {
                    vec: r,
                    combo: full_combo,
                    pivot,
                });
                SpanStep::Independent { ambiguous: false }
            }
        }
    }

    fn insert_approx(&mut self, v: &[Scalar]) -> SpanStep {
        let mut r: Vec<Complex64> = v.iter().map(Scalar::to_c64).collect();
        let norm_in = vec_norm(&r);
        self.max_norm = self.max_norm.max(norm_in);
        let mut h = Vec::with_capacity(self.qbasis.len());
        for q in &self.qbasis {
            let c = dot_conj(q, &r);
            for (ri, qi) in r.iter_mut().zip(q) {
                *ri -= c * qi;
            }
            h.push(c);
        }
        // second orthogonalization pass; the correction folds into h
        for (q, hi) in self.qbasis.iter().zip(h.iter_mut()) {
            let c = dot_conj(q, &r);
            for (ri, qi) in r.iter_mut().zip(q) {
                *ri -= c * qi;
            }
            *hi += c;
        }
        let rho = vec_norm(&r);
        let scale = self.max_norm.max(f64::MIN_POSITIVE);
        let dependent = rho < DEPENDENCE_TOL * scale;
        let ambiguous =
            rho >= DEPENDENCE_TOL / 10.0 * scale && rho <= DEPENDENCE_TOL * 10.0 * scale;
        if dependent {
            // back-substitute R c = h over the recorded triangular columns
            let k = self.qbasis.len();
            let mut c = vec![Complex64::new(0.0, 0.0); k];
            for i in (0..k).rev() {
                let mut acc = h[i];
                for (j, cj) in c.iter().enumerate().skip(i + 1) {
                    acc -= self.rcols[j][i] * cj;
                }
                c[i] = acc / self.rcols[i][i];
            }
            let combo = c
                .into_iter()
                .map(|z| match self.field {
                    FieldTag::Real => Scalar::Float(z.re),
                    FieldTag::Complex => Scalar::ComplexFloat(z),
                })
                .collect();
            SpanStep::Dependent { combo, ambiguous }
        } else {
            for ri in r.iter_mut() {
                *ri /= rho;
            }
            self.qbasis.push(r);
            h.push(Complex64::new(rho, 0.0));
            self.rcols.push(h);
            SpanStep::Independent { ambiguous }
        }
    }
}

fn dot_conj(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Solve `rows * x = rhs` for any one solution (free variables set to zero),
/// or `None` if the system is inconsistent. Exact elimination in exact mode;
/// magnitude-pivoted elimination with a relative tolerance in approx mode.
pub(crate) fn solve_linear(
    rows: &[Vec<Scalar>],
    rhs: &[Scalar],
    field: FieldTag,
    mode: Mode,
) -> Option<Vec<Scalar>> {
    assert_eq!(rows.len(), rhs.len());
    let m = rows.len();
    let n = if m == 0 { 0 } else { rows[0].len() };
    let mut a: Vec<Vec<Scalar>> = rows.to_vec();
    let mut b: Vec<Scalar> = rhs.to_vec();

    let tol = match mode {
        Mode::Exact => 0.0,
        Mode::Approx => {
            let mx = a
                .iter()
                .flatten()
                .chain(b.iter())
                .map(Scalar::magnitude)
                .fold(0.0f64, f64::max);
            1e-12 * mx.max(1.0)
        }
    };
    let negligible = |s: &Scalar| match mode {
        Mode::Exact => s.is_zero(),
        Mode::Approx => s.magnitude() <= tol,
    };

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut used_row = vec![false; m];
    for col in 0..n {
        // pick the largest usable pivot in this column
        let mut best: Option<(usize, f64)> = None;
        for (r, row) in a.iter().enumerate() {
            if used_row[r] || negligible(&row[col]) {
                continue;
            }
            let mag = row[col].magnitude();
            if best.is_none_or(|(_, bm)| mag > bm) {
                best = Some((r, mag));
            }
        }
        let Some((prow, _)) = best else { continue };
        used_row[prow] = true;
        pivot_of_col[col] = Some(prow);
        let inv = a[prow][col].inv().expect("nonzero pivot");
        for x in a[prow].iter_mut() {
            *x = &*x * &inv;
        }
        b[prow] = &b[prow] * &inv;
        for r in 0..m {
            if r == prow || negligible(&a[r][col]) {
                continue;
            }
            let factor = a[r][col].clone();
            let prow_vals: Vec<Scalar> = a[prow].clone();
            for (x, pv) in a[r].iter_mut().zip(&prow_vals) {
                let t = &factor * pv;
                *x = &*x - &t;
            }
            let t = &factor * &b[prow];
            b[r] = &b[r] - &t;
        }
    }

    // rows with no pivot must have zero right-hand side
    for r in 0..m {
        if !used_row[r] && !negligible(&b[r]) {
            return None;
        }
    }

    let mut x = vec![Scalar::zero(field, mode); n];
    for col in 0..n {
        if let Some(prow) = pivot_of_col[col] {
            x[col] = b[prow].clone();
        }
    }
    Some(x)
}
