//! Complex roots of monic polynomials, the radius of algebra elements, and an
//! independent spectral-radius oracle for matrices.
//!
//! Roots come from Durand-Kerner simultaneous iteration on perturbed-circle
//! initial guesses, followed by Newton polishing in which the polynomial is
//! evaluated in exact rational arithmetic at the float iterate. The polish
//! removes the cancellation noise floor that plain binary64 Horner hits on
//! high-degree polynomials with large coefficients, so residual certificates
//! stay honest. Exactly representable pieces short-circuit: zero roots are
//! deflated from the exact constant coefficients and linear factors are
//! solved directly.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{AlgebraHandle, Element};
use crate::matrix::MatrixElement;
use crate::minpoly::{minimal_polynomial, MinPolyError, Polynomial};
use crate::scalar::{FieldTag, Scalar};

const UPDATE_TOL: f64 = 1e-13;
const MAX_SWEEPS: u32 = 500;
/// Residual acceptance: |p(λ)| ≤ RESIDUAL_TOL × max(1, max|coeff|).
const RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Error)]
pub enum RootsError {
    #[error("root finding failed to converge after {sweeps} sweeps (worst residual {worst_residual:e})")]
    NonConvergence {
        /// Best iterate reached before giving up.
        roots: Vec<Complex64>,
        residuals: Vec<f64>,
        sweeps: u32,
        worst_residual: f64,
    },
    /// Every iterate sits on some root, but collectively they do not multiply
    /// back to the polynomial (a cluster absorbed more than one iterate and
    /// another root went missing) and repair could not resolve it.
    #[error("root set does not reconstruct the polynomial (cluster misassignment)")]
    Misassigned {
        roots: Vec<Complex64>,
        residuals: Vec<f64>,
    },
}

#[derive(Debug, Clone, Error)]
pub enum RadiusError {
    #[error(transparent)]
    MinPoly(#[from] MinPolyError),
    #[error(transparent)]
    Roots(#[from] RootsError),
}

/// All complex roots of a polynomial, with per-root residual certificates
/// |p(λ)| evaluated in exact arithmetic.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
}

impl RootSet {
    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// The radius of an element together with everything that produced it.
#[derive(Debug, Clone)]
pub struct RadiusReport {
    pub minpoly: Polynomial,
    pub roots: RootSet,
    pub radius: f64,
    pub argmax_root: Complex64,
    pub algebra_name: String,
}

impl RadiusReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "algebra": self.algebra_name,
            "minpoly": self.minpoly.to_json(),
            "roots": self.roots.roots.iter()
                .map(|z| serde_json::json!({"re": z.re, "im": z.im}))
                .collect::<Vec<_>>(),
            "residuals": self.roots.residuals,
            "radius": self.radius,
            "argmax_root": {"re": self.argmax_root.re, "im": self.argmax_root.im},
        })
    }
}

fn exact_coeff(c: &Scalar) -> Scalar {
    match c {
        Scalar::Rational(_) | Scalar::Gaussian(_) => c.clone(),
        Scalar::Float(x) => Scalar::exact_from_f64(*x, FieldTag::Real),
        Scalar::ComplexFloat(z) => {
            let re = BigRational::from_float(z.re).expect("finite");
            let im = BigRational::from_float(z.im).expect("finite");
            Scalar::Gaussian(num_complex::Complex::new(re, im))
        }
    }
}

fn horner_c64(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = *coeffs.last().expect("nonempty");
    for c in coeffs.iter().rev().skip(1) {
        acc = acc * z + c;
    }
    acc
}

/// A polynomial with Gaussian-integer coefficients over one common positive
/// denominator: coefficient k is (re[k] + i·im[k]) / den. Evaluating at the
/// exact dyadic image of a float point needs only integer multiplies and
/// shifts, no rational normalization, which keeps exact Newton polishing and
/// residual certificates cheap.
struct ScaledIntPoly {
    re: Vec<BigInt>,
    im: Vec<BigInt>,
    den: BigInt,
}

/// x = num / 2^exp exactly, for finite x.
fn dyadic(x: f64) -> (BigInt, u64) {
    let r = BigRational::from_float(x).expect("finite float");
    // the reduced denominator of a dyadic rational is a power of two
    let exp = r.denom().bits() - 1;
    (r.numer().clone(), exp)
}

impl ScaledIntPoly {
    fn from_scalars(coeffs: &[Scalar]) -> ScaledIntPoly {
        use num_integer::Integer;
        use num_traits::One;
        let parts: Vec<(BigRational, BigRational)> = coeffs
            .iter()
            .map(|c| match exact_coeff(c) {
                Scalar::Rational(r) => (r, BigRational::zero()),
                Scalar::Gaussian(g) => (g.re, g.im),
                _ => unreachable!("exact_coeff returns exact scalars"),
            })
            .collect();
        let mut den = BigInt::one();
        for (re, im) in &parts {
            den = den.lcm(re.denom());
            den = den.lcm(im.denom());
        }
        let scale = |r: &BigRational| r.numer() * (&den / r.denom());
        ScaledIntPoly {
            re: parts.iter().map(|(re, _)| scale(re)).collect(),
            im: parts.iter().map(|(_, im)| scale(im)).collect(),
            den,
        }
    }

    fn degree(&self) -> usize {
        self.re.len() - 1
    }

    fn derivative(&self) -> ScaledIntPoly {
        let n = self.re.len();
        ScaledIntPoly {
            re: (1..n).map(|k| &self.re[k] * BigInt::from(k)).collect(),
            im: (1..n).map(|k| &self.im[k] * BigInt::from(k)).collect(),
            den: self.den.clone(),
        }
    }

    /// p(z) = (W_re + i·W_im) / (den · 2^(exp·degree)); returns (W_re, W_im, exp).
    fn eval_dyadic(&self, z: Complex64) -> (BigInt, BigInt, u64) {
        let (mut zr, er) = dyadic(z.re);
        let (mut zi, ei) = dyadic(z.im);
        let exp = er.max(ei);
        zr <<= exp - er;
        zi <<= exp - ei;
        let n = self.degree();
        let mut wre = self.re[n].clone();
        let mut wim = self.im[n].clone();
        for k in (0..n).rev() {
            let shift = (exp * (n - k) as u64) as usize;
            let next_re = &wre * &zr - &wim * &zi + (&self.re[k] << shift);
            let next_im = &wre * &zi + &wim * &zr + (&self.im[k] << shift);
            wre = next_re;
            wim = next_im;
        }
        (wre, wim, exp)
    }

    /// |p(z)| with every arithmetic step exact and one rounding at the end.
    fn residual_at(&self, z: Complex64) -> f64 {
        if !z.is_finite() {
            return f64::INFINITY;
        }
        let (wre, wim, exp) = self.eval_dyadic(z);
        let num = &wre * &wre + &wim * &wim;
        let den = (&self.den * &self.den) << ((2 * exp * self.degree() as u64) as usize);
        crate::scalar::big_int_div_to_f64(&num, &den).sqrt()
    }
}

/// p'(z)/p(z) as a complex float (exactly evaluated, rounded once per part),
/// or None when p(z) is exactly zero.
fn log_derivative(p: &ScaledIntPoly, dp: &ScaledIntPoly, z: Complex64) -> Option<Complex64> {
    let (pre, pim, exp) = p.eval_dyadic(z);
    if pre.is_zero() && pim.is_zero() {
        return None;
    }
    let (dre, dim, _) = dp.eval_dyadic(z);
    // p'/p = D·conj(P)·2^exp / |P|²
    let num_re = (&dre * &pre + &dim * &pim) << (exp as usize);
    let num_im = (&dim * &pre - &dre * &pim) << (exp as usize);
    let den = &pre * &pre + &pim * &pim;
    Some(Complex64::new(
        crate::scalar::big_int_div_to_f64(&num_re, &den),
        crate::scalar::big_int_div_to_f64(&num_im, &den),
    ))
}

/// Does Π (t - root) reproduce the monic coefficient vector? Compared
/// per-coefficient against a noise envelope built from the root magnitudes,
/// so a missing or doubly-claimed root shows up even in low-order
/// coefficients that are tiny next to the largest ones.
fn rebuild_matches(coeffs: &[Complex64], roots: &[Complex64]) -> bool {
    if roots.iter().any(|z| !z.is_finite()) {
        return false;
    }
    let mut q = vec![Complex64::new(1.0, 0.0)];
    let mut envelope = vec![1.0f64];
    for &r in roots {
        let mut nq = vec![Complex64::new(0.0, 0.0); q.len() + 1];
        let mut nenv = vec![0.0f64; q.len() + 1];
        for j in 0..q.len() {
            nq[j + 1] += q[j];
            nq[j] -= r * q[j];
            nenv[j + 1] += envelope[j];
            nenv[j] += r.norm() * envelope[j];
        }
        q = nq;
        envelope = nenv;
    }
    coeffs
        .iter()
        .zip(q.iter().zip(&envelope))
        .all(|(p_j, (q_j, m_j))| (p_j - q_j).norm() <= 1e-6 * p_j.norm() + 1e-10 * m_j + 1e-12)
}

/// Sequential root extraction: Newton on p with Maehly repulsion from the
/// roots already accepted, all evaluations exact. The repulsion implicitly
/// deflates accepted roots, so no root can be claimed twice unless the
/// polynomial really repeats it.
fn maehly_roots(
    p: &ScaledIntPoly,
    dp: &ScaledIntPoly,
    starts: &[Complex64],
    bound: f64,
) -> Option<Vec<Complex64>> {
    let mut accepted: Vec<Complex64> = Vec::with_capacity(starts.len());
    for (idx, &start) in starts.iter().enumerate() {
        let mut z = if start.is_finite() {
            start
        } else {
            Complex64::from_polar(bound, 0.7 * (idx + 1) as f64)
        };
        let mut ok = false;
        for iter in 0..240 {
            // sitting numerically on an accepted root stalls the repulsion
            if accepted
                .iter()
                .any(|a| (z - a).norm() <= 1e-13 * z.norm().max(1.0))
            {
                let (dre, dim, _) = dp.eval_dyadic(z);
                let (pre, pim, _) = p.eval_dyadic(z);
                if pre.is_zero() && pim.is_zero() && dre.is_zero() && dim.is_zero() {
                    // exact multiple root; claiming it again is correct
                    ok = true;
                    break;
                }
                z += Complex64::from_polar(1e-6 * bound.max(1.0), 1.1 + iter as f64);
                continue;
            }
            match log_derivative(p, dp, z) {
                None => {
                    // exactly on a root that nobody owns yet
                    ok = true;
                    break;
                }
                Some(ld) => {
                    let repulsion: Complex64 = accepted.iter().map(|a| (z - a).inv()).sum();
                    let denom = ld - repulsion;
                    if !denom.is_finite() || denom.norm() == 0.0 {
                        z += Complex64::from_polar(1e-3 * bound.max(1.0), 0.3 + iter as f64);
                        continue;
                    }
                    let mut w = denom.inv();
                    if !w.is_finite() {
                        return None;
                    }
                    let wn = w.norm();
                    if wn > bound {
                        w *= bound / wn;
                    }
                    z -= w;
                    if !z.is_finite() {
                        return None;
                    }
                    if wn <= 1e-15 * z.norm().max(1.0) {
                        ok = true;
                        break;
                    }
                }
            }
        }
        if !ok {
            return None;
        }
        accepted.push(z);
    }
    Some(accepted)
}

/// One exact Newton correction p(z)/p'(z), or None when z sits exactly on a
/// root of p or p'.
fn newton_step(p: &ScaledIntPoly, dp: &ScaledIntPoly, z: Complex64) -> Option<Complex64> {
    let (pre, pim, exp) = p.eval_dyadic(z);
    if pre.is_zero() && pim.is_zero() {
        return None;
    }
    let (dre, dim, _) = dp.eval_dyadic(z);
    if dre.is_zero() && dim.is_zero() {
        return None;
    }
    // p/p' = P·conj(D) / (|D|² · 2^exp): the common denominator cancels and
    // the degrees differ by one
    let num_re = &pre * &dre + &pim * &dim;
    let num_im = &pim * &dre - &pre * &dim;
    let den = (&dre * &dre + &dim * &dim) << (exp as usize);
    Some(Complex64::new(
        crate::scalar::big_int_div_to_f64(&num_re, &den),
        crate::scalar::big_int_div_to_f64(&num_im, &den),
    ))
}

/// All deg(p) roots of a monic polynomial, with multiplicity.
pub fn poly_roots(p: &Polynomial) -> Result<RootSet, RootsError> {
    poly_roots_with(p, MAX_SWEEPS, true)
}

/// Root finding with a custom sweep cap and optional polish; the public entry
/// point uses the defaults. Exposed for exercising the non-convergence path.
pub(crate) fn poly_roots_with(
    p: &Polynomial,
    max_sweeps: u32,
    polish: bool,
) -> Result<RootSet, RootsError> {
    let exact: Vec<Scalar> = p.coeffs().iter().map(exact_coeff).collect();

    // deflate exactly-zero roots
    let lead_zero = exact.iter().position(|c| !c.is_zero()).expect("monic");
    let mut roots = vec![Complex64::new(0.0, 0.0); lead_zero];
    let reduced_exact = &exact[lead_zero..];
    let reduced: Vec<Complex64> = reduced_exact.iter().map(Scalar::to_c64).collect();
    let m = reduced.len() - 1;

    let mut sweeps = 0;
    if m == 1 {
        // linear factor: the root is exactly representable
        roots.push(-reduced[0]);
    } else if m > 1 {
        let bound = 1.0 + reduced[..m].iter().map(|z| z.norm()).fold(0.0, f64::max);
        let mut z: Vec<Complex64> = (0..m)
            .map(|k| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / m as f64 + 0.4;
                Complex64::from_polar(bound, theta)
            })
            .collect();
        'outer: for sweep in 0..max_sweeps {
            sweeps = sweep + 1;
            let mut max_update = 0.0f64;
            for k in 0..m {
                let pv = horner_c64(&reduced, z[k]);
                let mut den = Complex64::new(1.0, 0.0);
                for j in 0..m {
                    if j != k {
                        den *= z[k] - z[j];
                    }
                }
                if den.norm() == 0.0 {
                    // coincident iterates; nudge apart and retry next sweep
                    z[k] += Complex64::new(1e-6 * (k + 1) as f64, 1e-6);
                    continue;
                }
                let mut w = pv / den;
                if !w.is_finite() {
                    break 'outer;
                }
                // trust region: evaluation noise on clustered roots can blow
                // a correction far past the root bound; clamp, let the exact
                // polish finish the job
                let wn = w.norm();
                if wn > bound {
                    w *= bound / wn;
                }
                z[k] -= w;
                max_update = max_update.max(w.norm());
            }
            if max_update < UPDATE_TOL {
                break;
            }
        }

        if polish {
            // Newton polish with exact evaluation of p and p'. Successive
            // step sizes shrink by (μ-1)/μ at a root of multiplicity μ, so
            // the observed ratio estimates μ and a Schröder step z -= μ·s
            // restores fast convergence on clustered roots.
            let scaled = ScaledIntPoly::from_scalars(reduced_exact);
            let deriv = scaled.derivative();
            for zk in z.iter_mut() {
                let mut prev_step: Option<f64> = None;
                for _ in 0..24 {
                    if !zk.is_finite() {
                        break;
                    }
                    let Some(step) = newton_step(&scaled, &deriv, *zk) else {
                        break;
                    };
                    if !step.is_finite() {
                        break;
                    }
                    let mut mult = 1.0;
                    if let Some(prev) = prev_step {
                        let ratio = step.norm() / prev;
                        if (0.25..0.97).contains(&ratio) {
                            mult = (1.0 / (1.0 - ratio)).round().clamp(1.0, m as f64);
                        }
                    }
                    prev_step = Some(step.norm());
                    *zk -= step * mult;
                    if step.norm() * mult <= 1e-14 * zk.norm().max(1.0) {
                        break;
                    }
                }
            }
            // tight clusters can absorb several iterates onto one root; a
            // root set is only accepted if it multiplies back to p, and a
            // mismatch is repaired by re-extracting the roots one at a time
            // with repulsion from those already found
            if !rebuild_matches(&reduced, &z) {
                if let Some(repaired) = maehly_roots(&scaled, &deriv, &z, bound) {
                    z = repaired;
                }
                if !rebuild_matches(&reduced, &z) {
                    let residuals: Vec<f64> = z
                        .iter()
                        .map(|&zk| {
                            ScaledIntPoly::from_scalars(&exact).residual_at(zk)
                        })
                        .collect();
                    let mut all = roots;
                    all.extend(z);
                    return Err(RootsError::Misassigned {
                        roots: all,
                        residuals,
                    });
                }
            }
        }
        roots.extend(z);
    }

    // residual certificates against the full polynomial, evaluated exactly
    let scale = p
        .coeffs()
        .iter()
        .map(Scalar::magnitude)
        .fold(1.0f64, f64::max);
    let full = ScaledIntPoly::from_scalars(&exact);
    let residuals: Vec<f64> = roots.iter().map(|&z| full.residual_at(z)).collect();
    let worst = residuals.iter().cloned().fold(0.0f64, f64::max);
    if worst > RESIDUAL_TOL * scale {
        return Err(RootsError::NonConvergence {
            roots,
            residuals,
            sweeps,
            worst_residual: worst,
        });
    }
    Ok(RootSet { roots, residuals })
}

/// Max-modulus root with the deterministic tie-break: greatest real part,
/// then greatest imaginary part, among roots within 1e-12 of the top modulus.
fn argmax_root(roots: &[Complex64]) -> Complex64 {
    let top = roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let band = 1e-12 * top.max(1.0);
    let mut best: Option<Complex64> = None;
    for &z in roots {
        if (top - z.norm()).abs() > band {
            continue;
        }
        best = Some(match best {
            None => z,
            Some(b) => {
                if (z.re, z.im) > (b.re, b.im) {
                    z
                } else {
                    b
                }
            }
        });
    }
    best.expect("at least one root")
}

/// The radius r(a): maximum modulus among the roots of the minimal polynomial.
pub fn radius(alg: &AlgebraHandle, a: &Element) -> Result<RadiusReport, RadiusError> {
    let minpoly = minimal_polynomial(alg, a)?;
    let roots = poly_roots(&minpoly)?;
    let radius = roots.max_modulus();
    let argmax = argmax_root(&roots.roots);
    Ok(RadiusReport {
        minpoly,
        roots,
        radius,
        argmax_root: argmax,
        algebra_name: alg.name().to_string(),
    })
}

/// Characteristic polynomial det(tI - A) by the trace-based Faddeev-LeVerrier
/// recurrence, exact in exact mode. Independent of the minimal-polynomial
/// ladder, which is what makes it usable as a cross-check oracle.
pub fn char_poly(a: &MatrixElement) -> Result<Polynomial, crate::algebra::AlgebraError> {
    let n = a.n();
    let field = a.field();
    let mode = a.mode();
    let mut coeffs = vec![Scalar::zero(field, mode); n + 1];
    coeffs[n] = Scalar::one(field, mode);
    let mut m = a.clone();
    coeffs[n - 1] = -&m.trace();
    for k in 2..=n {
        // M_k = A (M_{k-1} + c_{n-k+1} I);  c_{n-k} = -tr(M_k)/k
        let shifted = m.add_scaled_identity(&coeffs[n - k + 1]);
        m = a.mul(&shifted)?;
        let k_scalar = Scalar::from_i64(k as i64, field, mode);
        coeffs[n - k] = &(-&m.trace()) / &k_scalar;
    }
    Ok(Polynomial::from_coeffs(coeffs).expect("monic by construction"))
}

/// Spectral radius ρ(A) = max eigenvalue modulus, via the characteristic
/// polynomial and the root finder. Never touches the minimal-polynomial path.
pub fn spectral_radius(a: &MatrixElement) -> Result<f64, RootsError> {
    let p = char_poly(a).expect("square matrix");
    Ok(poly_roots(&p)?.max_modulus())
}
