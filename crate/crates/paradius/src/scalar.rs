//! Field scalars over ℝ and ℂ in two arithmetic modes.
//!
//! Exact mode stores rationals (and Gaussian rationals) over arbitrary-precision
//! integers, so ladder constructions never lose precision. Approx mode stores
//! binary64 reals and complexes. Every scalar knows its field and mode; the
//! higher layers reject mixed-field and mixed-mode operations before arithmetic
//! ever sees them.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Base field of an algebra, element, or polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Real,
    Complex,
}

impl FieldTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FieldTag::Real => "R",
            FieldTag::Complex => "C",
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Arithmetic mode: exact rational or binary64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Approx,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Approx => "approx",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cannot parse scalar: unexpected token `{0}`")]
    Parse(String),
    #[error("imaginary literal `{0}` is not allowed over the real field")]
    ImaginaryOverReal(String),
    #[error("division by zero scalar")]
    DivisionByZero,
}

/// A field element. The variant fixes both the field and the mode:
/// `Rational` is (ℝ, exact), `Gaussian` is (ℂ, exact), `Float` is (ℝ, approx)
/// and `ComplexFloat` is (ℂ, approx).
///
/// Exact rationals are kept in lowest terms with positive denominator
/// (`BigRational` maintains this on construction). Arithmetic between two
/// exact scalars is always exact; mixing exact and approx operands is a logic
/// error and panics.
#[derive(Debug, Clone)]
pub enum Scalar {
    Rational(BigRational),
    Gaussian(Complex<BigRational>),
    Float(f64),
    ComplexFloat(Complex64),
}

impl Scalar {
    pub fn field(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) | Scalar::Float(_) => FieldTag::Real,
            Scalar::Gaussian(_) | Scalar::ComplexFloat(_) => FieldTag::Complex,
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Rational(_) | Scalar::Gaussian(_) => Mode::Exact,
            Scalar::Float(_) | Scalar::ComplexFloat(_) => Mode::Approx,
        }
    }

    pub fn zero(field: FieldTag, mode: Mode) -> Scalar {
        Scalar::from_i64(0, field, mode)
    }

    pub fn one(field: FieldTag, mode: Mode) -> Scalar {
        Scalar::from_i64(1, field, mode)
    }

    pub fn from_i64(v: i64, field: FieldTag, mode: Mode) -> Scalar {
        Scalar::from_ratio(v, 1, field, mode)
    }

    /// Exact ratio `n/d` carried into the requested field and mode.
    /// Panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64, field: FieldTag, mode: Mode) -> Scalar {
        assert!(d != 0, "zero denominator");
        match (field, mode) {
            (FieldTag::Real, Mode::Exact) => {
                Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
            }
            (FieldTag::Complex, Mode::Exact) => Scalar::Gaussian(Complex::new(
                BigRational::new(BigInt::from(n), BigInt::from(d)),
                BigRational::zero(),
            )),
            (FieldTag::Real, Mode::Approx) => Scalar::Float(n as f64 / d as f64),
            (FieldTag::Complex, Mode::Approx) => {
                Scalar::ComplexFloat(Complex64::new(n as f64 / d as f64, 0.0))
            }
        }
    }

    /// The imaginary unit in the complex field.
    pub fn i_unit(mode: Mode) -> Scalar {
        match mode {
            Mode::Exact => Scalar::Gaussian(Complex::new(BigRational::zero(), BigRational::one())),
            Mode::Approx => Scalar::ComplexFloat(Complex64::new(0.0, 1.0)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Gaussian(c) => c.re.is_zero() && c.im.is_zero(),
            Scalar::Float(x) => *x == 0.0,
            Scalar::ComplexFloat(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Gaussian(c) => c.re.is_one() && c.im.is_zero(),
            Scalar::Float(x) => *x == 1.0,
            Scalar::ComplexFloat(z) => z.re == 1.0 && z.im == 0.0,
        }
    }

    /// Exact squared modulus; only defined for exact scalars.
    pub fn abs_squared_exact(&self) -> BigRational {
        match self {
            Scalar::Rational(r) => r * r,
            Scalar::Gaussian(c) => &c.re * &c.re + &c.im * &c.im,
            _ => panic!("abs_squared_exact on approx scalar"),
        }
    }

    /// The modulus |z| as a nonnegative float.
    ///
    /// Exact scalars round only at the end: the squared modulus is formed
    /// exactly, converted to binary64, and square-rooted.
    pub fn magnitude(&self) -> f64 {
        match self {
            Scalar::Rational(_) | Scalar::Gaussian(_) => {
                big_ratio_to_f64(&self.abs_squared_exact()).sqrt()
            }
            Scalar::Float(x) => x.abs(),
            Scalar::ComplexFloat(z) => z.norm(),
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.clone()),
            Scalar::Gaussian(c) => Scalar::Gaussian(Complex::new(c.re.clone(), -c.im.clone())),
            Scalar::Float(x) => Scalar::Float(*x),
            Scalar::ComplexFloat(z) => Scalar::ComplexFloat(z.conj()),
        }
    }

    /// Multiplicative inverse, or an error on zero.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Gaussian(c) => {
                let n = &c.re * &c.re + &c.im * &c.im;
                Scalar::Gaussian(Complex::new(&c.re / &n, -&c.im / &n))
            }
            Scalar::Float(x) => Scalar::Float(1.0 / x),
            Scalar::ComplexFloat(z) => Scalar::ComplexFloat(z.inv()),
        })
    }

    /// k-th power by repeated multiplication (k is small everywhere we use it).
    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = Scalar::one(self.field(), self.mode());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// View as a complex binary64 value (rounding exact values once per part).
    pub fn to_c64(&self) -> Complex64 {
        match self {
            Scalar::Rational(r) => Complex64::new(big_ratio_to_f64(r), 0.0),
            Scalar::Gaussian(c) => {
                Complex64::new(big_ratio_to_f64(&c.re), big_ratio_to_f64(&c.im))
            }
            Scalar::Float(x) => Complex64::new(*x, 0.0),
            Scalar::ComplexFloat(z) => *z,
        }
    }

    /// Same value in approx mode (identity if already approx).
    pub fn to_approx(&self) -> Scalar {
        match self.field() {
            FieldTag::Real => Scalar::Float(self.to_c64().re),
            FieldTag::Complex => Scalar::ComplexFloat(self.to_c64()),
        }
    }

    /// Same value promoted to the complex field (identity if already complex).
    pub fn to_complex_field(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => {
                Scalar::Gaussian(Complex::new(r.clone(), BigRational::zero()))
            }
            Scalar::Float(x) => Scalar::ComplexFloat(Complex64::new(*x, 0.0)),
            other => other.clone(),
        }
    }

    fn to_gaussian(&self) -> Complex<BigRational> {
        match self {
            Scalar::Rational(r) => Complex::new(r.clone(), BigRational::zero()),
            Scalar::Gaussian(c) => c.clone(),
            _ => panic!("to_gaussian on approx scalar"),
        }
    }

    /// Exact dyadic image of a float (used by the root polisher).
    pub fn exact_from_f64(x: f64, field: FieldTag) -> Scalar {
        let r = BigRational::from_float(x).expect("finite float");
        match field {
            FieldTag::Real => Scalar::Rational(r),
            FieldTag::Complex => Scalar::Gaussian(Complex::new(r, BigRational::zero())),
        }
    }
}

/// Robust BigRational → f64 conversion: one scaled integer division to 56
/// significant bits, then a single float rounding. Works far beyond the
/// numerator/denominator ranges where naive per-part conversion overflows.
pub(crate) fn big_ratio_to_f64(r: &BigRational) -> f64 {
    big_int_div_to_f64(r.numer(), r.denom())
}

/// num/den as f64 without requiring lowest terms; `den` must be nonzero.
pub(crate) fn big_int_div_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let negative = (num.sign() == Sign::Minus) != (den.sign() == Sign::Minus);
    let sign = if negative { -1.0 } else { 1.0 };
    let num = num.magnitude();
    let den = den.magnitude();
    let shift: i64 = 56 + den.bits() as i64 - num.bits() as i64;
    let q = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    sign * q.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(-shift as i32)
}

macro_rules! scalar_binop {
    ($fn_name:ident, $op:tt) => {
        fn $fn_name(a: &Scalar, b: &Scalar) -> Scalar {
            use Scalar::*;
            match (a, b) {
                (Rational(x), Rational(y)) => Rational(x $op y),
                (Gaussian(x), Gaussian(y)) => Gaussian(x $op y),
                (Float(x), Float(y)) => Float(x $op y),
                (ComplexFloat(x), ComplexFloat(y)) => ComplexFloat(x $op y),
                _ => match (a.mode(), b.mode()) {
                    (Mode::Exact, Mode::Exact) => Gaussian(a.to_gaussian() $op b.to_gaussian()),
                    (Mode::Approx, Mode::Approx) => ComplexFloat(a.to_c64() $op b.to_c64()),
                    _ => panic!("mixed exact/approx scalar arithmetic"),
                },
            }
        }
    };
}

scalar_binop!(add_impl, +);
scalar_binop!(sub_impl, -);
scalar_binop!(mul_impl, *);

macro_rules! impl_scalar_op {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $impl_fn(self, rhs)
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $impl_fn(&self, &rhs)
            }
        }
    };
}

impl_scalar_op!(Add, add, add_impl);
impl_scalar_op!(Sub, sub, sub_impl);
impl_scalar_op!(Mul, mul, mul_impl);

impl std::ops::Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        mul_impl(self, &inv)
    }
}

impl std::ops::Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Gaussian(c) => Scalar::Gaussian(-c.clone()),
            Scalar::Float(x) => Scalar::Float(-x),
            Scalar::ComplexFloat(z) => Scalar::ComplexFloat(-z),
        }
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialEq for Scalar {
    /// Value equality within one mode; scalars of different modes are never
    /// equal. Real values compare equal to the same value in the complex
    /// field of the same mode.
    fn eq(&self, other: &Scalar) -> bool {
        match (self.mode(), other.mode()) {
            (Mode::Exact, Mode::Exact) => self.to_gaussian() == other.to_gaussian(),
            (Mode::Approx, Mode::Approx) => self.to_c64() == other.to_c64(),
            _ => false,
        }
    }
}

/// Parse the scalar text grammar: `int | int/int | [a][±b]i` where `a` and
/// `b` are each `int` or `int/int`. Approx mode additionally accepts decimal
/// literals in the `a`/`b` positions.
pub fn parse_scalar(text: &str, field: FieldTag, mode: Mode) -> Result<Scalar, ScalarError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(ScalarError::Parse(String::from("<empty>")));
    }
    if let Some(body) = t.strip_suffix('i') {
        if field == FieldTag::Real {
            return Err(ScalarError::ImaginaryOverReal(t.to_string()));
        }
        let (re_str, im_str) = split_complex_body(body);
        let re = match re_str {
            Some(s) => parse_component(s, mode)?,
            None => RatOrFloat::zero(mode),
        };
        let im = parse_component(im_str, mode)?;
        Ok(match (re, im) {
            (RatOrFloat::Rat(re), RatOrFloat::Rat(im)) => {
                Scalar::Gaussian(Complex::new(re, im))
            }
            (re, im) => Scalar::ComplexFloat(Complex64::new(re.to_f64(), im.to_f64())),
        })
    } else {
        let v = parse_component(t, mode)?;
        Ok(match (field, v) {
            (FieldTag::Real, RatOrFloat::Rat(r)) => Scalar::Rational(r),
            (FieldTag::Complex, RatOrFloat::Rat(r)) => {
                Scalar::Gaussian(Complex::new(r, BigRational::zero()))
            }
            (FieldTag::Real, RatOrFloat::Float(x)) => Scalar::Float(x),
            (FieldTag::Complex, RatOrFloat::Float(x)) => {
                Scalar::ComplexFloat(Complex64::new(x, 0.0))
            }
        })
    }
}

enum RatOrFloat {
    Rat(BigRational),
    Float(f64),
}

impl RatOrFloat {
    fn zero(mode: Mode) -> RatOrFloat {
        match mode {
            Mode::Exact => RatOrFloat::Rat(BigRational::zero()),
            Mode::Approx => RatOrFloat::Float(0.0),
        }
    }

    fn to_f64(&self) -> f64 {
        match self {
            RatOrFloat::Rat(r) => big_ratio_to_f64(r),
            RatOrFloat::Float(x) => *x,
        }
    }
}

/// Split `a±b` into (Some("a"), "±b"); a body with no interior sign is a bare
/// imaginary part. Signs right after '/', 'e' or 'E' never split (the latter
/// two keep approx exponents intact).
fn split_complex_body(body: &str) -> (Option<&str>, &str) {
    let bytes = body.as_bytes();
    for idx in (1..bytes.len()).rev() {
        let c = bytes[idx];
        if c == b'+' || c == b'-' {
            let prev = bytes[idx - 1];
            if prev != b'/' && prev != b'e' && prev != b'E' {
                return (Some(&body[..idx]), &body[idx..]);
            }
        }
    }
    (None, body)
}

fn parse_component(s: &str, mode: Mode) -> Result<RatOrFloat, ScalarError> {
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return Err(ScalarError::Parse(String::from("<empty component>")));
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(ScalarError::Parse(format!("{s} (zero denominator)")));
            }
            let r = BigRational::new(n, d);
            Ok(match mode {
                Mode::Exact => RatOrFloat::Rat(r),
                Mode::Approx => RatOrFloat::Float(big_ratio_to_f64(&r)),
            })
        }
        None => match parse_int(s) {
            Ok(n) => Ok(match mode {
                Mode::Exact => RatOrFloat::Rat(BigRational::from_integer(n)),
                Mode::Approx => RatOrFloat::Float(big_ratio_to_f64(
                    &BigRational::from_integer(n),
                )),
            }),
            Err(e) => {
                // decimal literals are an approx-mode extension
                if mode == Mode::Approx {
                    if let Ok(x) = f64::from_str(s) {
                        if x.is_finite() {
                            return Ok(RatOrFloat::Float(x));
                        }
                    }
                }
                Err(e)
            }
        },
    }
}

fn parse_int(s: &str) -> Result<BigInt, ScalarError> {
    BigInt::from_str(s).map_err(|_| ScalarError::Parse(s.to_string()))
}

fn fmt_big_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_f64(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form; round-trips through [`parse_scalar`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => f.write_str(&fmt_big_ratio(r)),
            Scalar::Float(x) => f.write_str(&fmt_f64(*x)),
            Scalar::Gaussian(c) => {
                fmt_complex_parts(f, c.re.is_zero(), c.im.is_zero(), || fmt_big_ratio(&c.re), || {
                    fmt_big_ratio(&c.im)
                })
            }
            Scalar::ComplexFloat(z) => {
                fmt_complex_parts(f, z.re == 0.0, z.im == 0.0, || fmt_f64(z.re), || fmt_f64(z.im))
            }
        }
    }
}

fn fmt_complex_parts(
    f: &mut fmt::Formatter<'_>,
    re_zero: bool,
    im_zero: bool,
    re: impl Fn() -> String,
    im: impl Fn() -> String,
) -> fmt::Result {
    match (re_zero, im_zero) {
        (_, true) => f.write_str(&re()),
        (true, false) => write!(f, "{}i", im()),
        (false, false) => {
            let im = im();
            if im.starts_with('-') {
                write!(f, "{}{}i", re(), im)
            } else {
                write!(f, "{}+{}i", re(), im)
            }
        }
    }
}
