//! Coefficient fields of the algebra.
//!
//! Two backends implement [`Scalar`]:
//!
//! * [`GaussianRational`]: complex numbers with arbitrary-precision rational
//!   parts. Field operations never round, so identities can be checked by
//!   plain equality.
//! * [`Complex64`]: IEEE double complex numbers.
//!
//! Generic code over `T: Scalar` cannot mix backends. [`CScalar`] is the
//! runtime-tagged form used at serialization and expression boundaries,
//! where mixing is reported as [`AlgebraError::BackendMismatch`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::tolerance::FLOAT_NEGLIGIBLE;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(format!("unknown backend `{other}` (expected exact|float)")),
        }
    }
}

/// A complex coefficient field.
///
/// Multiplication is the ordinary complex product; there is no conjugation
/// hidden anywhere, so dot products built from it are bilinear.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    /// The imaginary unit.
    fn i() -> Self;
    /// `numer / denom` as a real scalar. `denom` must be nonzero.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// Exact zero test.
    fn is_zero(&self) -> bool;
    /// Zero test used by singular-case rules: exact zero for the exact
    /// backend, magnitude below [`FLOAT_NEGLIGIBLE`] for floats.
    fn is_negligible(&self) -> bool;
    fn is_real(&self) -> bool;
    /// Sign of a real value; `None` when the imaginary part is nonzero.
    fn real_sign(&self) -> Option<Ordering>;

    fn try_recip(&self) -> Result<Self>;

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.try_recip()?)
    }

    /// Principal square root: nonnegative real part, and nonnegative
    /// imaginary part when the real part is zero.
    fn try_sqrt(&self) -> Result<Self>;

    /// Modulus as `f64`, used only for residual reporting.
    fn modulus(&self) -> f64;
    fn to_complex64(&self) -> Complex64;
    fn to_cscalar(&self) -> CScalar;
    fn from_cscalar(value: &CScalar) -> Result<Self>;

    /// Text form: `15/17`, `1+1i`, `-3/4i` for exact values; shortest
    /// round-trip decimals for floats.
    fn render(&self) -> String;
}

/// Sum of products `a[k] * b[k]` over a 3-vector (bilinear, no conjugation).
pub fn dot<T: Scalar>(a: &[T; 3], b: &[T; 3]) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

pub fn cross<T: Scalar>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

pub fn vscale<T: Scalar>(k: &T, a: &[T; 3]) -> [T; 3] {
    [k.clone() * a[0].clone(), k.clone() * a[1].clone(), k.clone() * a[2].clone()]
}

pub fn vadd<T: Scalar>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    [a[0].clone() + b[0].clone(), a[1].clone() + b[1].clone(), a[2].clone() + b[2].clone()]
}

pub fn vsub<T: Scalar>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone(), a[2].clone() - b[2].clone()]
}

pub fn vneg<T: Scalar>(a: &[T; 3]) -> [T; 3] {
    [-a[0].clone(), -a[1].clone(), -a[2].clone()]
}

// ---------------------------------------------------------------------------
// Exact backend

/// `re + im·i` with arbitrary-precision rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    /// Parses `p`, `p/q`, or a decimal such as `-0.75` into an exact real.
    pub fn parse_real(text: &str) -> Result<Self> {
        parse_rational(text).map(Self::real)
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

/// Parses `p`, `p/q` or a plain decimal (`1.25`, `-.5`) into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || AlgebraError::MalformedScalar(text.to_string());
    let t = text.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        return Ok(BigRational::new(p, q));
    }
    let (negative, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().map_err(|_| bad())?;
    let denom = num_traits::pow(BigInt::from(10u8), frac_part.len());
    let value = BigRational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

/// Square root of a nonnegative rational whose reduced numerator and
/// denominator are both perfect squares.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let rn = n.sqrt();
    let rd = d.sqrt();
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl Scalar for GaussianRational {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::real(BigRational::one())
    }

    fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::real(BigRational::new(numer.into(), denom.into()))
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_negligible(&self) -> bool {
        Scalar::is_zero(self)
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    fn real_sign(&self) -> Option<Ordering> {
        self.is_real().then(|| self.re.cmp(&BigRational::zero()))
    }

    fn try_recip(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self { re: &self.re / &n, im: -&self.im / &n })
    }

    fn try_sqrt(&self) -> Result<Self> {
        let not_exact = || AlgebraError::SqrtNotExact { value: self.render() };
        // x + iy with x^2 - y^2 = re, 2xy = im, x = sqrt((re + |z|)/2).
        let modulus = rational_sqrt(&self.norm_sq()).ok_or_else(not_exact)?;
        let two = BigRational::from_integer(2.into());
        let x = rational_sqrt(&((&self.re + &modulus) / &two)).ok_or_else(not_exact)?;
        let y = if x.is_zero() {
            // Only reachable for non-positive reals: the root is purely imaginary.
            rational_sqrt(&((&modulus - &self.re) / &two)).ok_or_else(not_exact)?
        } else {
            &self.im / (&two * &x)
        };
        Ok(Self { re: x, im: y })
    }

    fn modulus(&self) -> f64 {
        self.to_complex64().norm()
    }

    fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    fn to_cscalar(&self) -> CScalar {
        CScalar::Exact(self.clone())
    }

    fn from_cscalar(value: &CScalar) -> Result<Self> {
        match value {
            CScalar::Exact(g) => Ok(g.clone()),
            CScalar::Float(_) => Err(AlgebraError::BackendMismatch {
                left: Backend::Exact,
                right: Backend::Float,
            }),
        }
    }

    fn render(&self) -> String {
        render_parts(
            self.re.is_zero(),
            self.im.is_zero(),
            || render_rational(&self.re),
            || render_rational(&self.im.abs()),
            self.im.is_negative(),
        )
    }
}

fn render_parts(
    re_zero: bool,
    im_zero: bool,
    re: impl FnOnce() -> String,
    im_abs: impl FnOnce() -> String,
    im_negative: bool,
) -> String {
    match (re_zero, im_zero) {
        (_, true) if re_zero => "0".to_string(),
        (_, true) => re(),
        (true, false) => format!("{}{}i", if im_negative { "-" } else { "" }, im_abs()),
        (false, false) => format!("{}{}{}i", re(), if im_negative { "-" } else { "+" }, im_abs()),
    }
}

// ---------------------------------------------------------------------------
// Float backend

fn render_f64(x: f64) -> String {
    // `{}` prints the shortest decimal that round-trips (at most 17 significant digits).
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

impl Scalar for Complex64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Complex64::new(numer as f64 / denom as f64, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn is_negligible(&self) -> bool {
        self.norm() < FLOAT_NEGLIGIBLE
    }

    fn is_real(&self) -> bool {
        self.im == 0.0
    }

    fn real_sign(&self) -> Option<Ordering> {
        if self.is_real() {
            self.re.partial_cmp(&0.0)
        } else {
            None
        }
    }

    fn try_recip(&self) -> Result<Self> {
        if Scalar::is_zero(self) {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.im == 0.0 {
            return Ok(Complex64::new(self.re.recip(), 0.0));
        }
        Ok(Complex64::new(1.0, 0.0) / self)
    }

    fn try_sqrt(&self) -> Result<Self> {
        // A signed-zero imaginary part must not flip the branch of sqrt(-x).
        if self.im == 0.0 && self.re < 0.0 {
            return Ok(Complex64::new(0.0, (-self.re).sqrt()));
        }
        if self.im == 0.0 {
            return Ok(Complex64::new(self.re.sqrt(), 0.0));
        }
        Ok(Complex64::sqrt(*self))
    }

    fn modulus(&self) -> f64 {
        self.norm()
    }

    fn to_complex64(&self) -> Complex64 {
        *self
    }

    fn to_cscalar(&self) -> CScalar {
        CScalar::Float(*self)
    }

    fn from_cscalar(value: &CScalar) -> Result<Self> {
        match value {
            CScalar::Float(c) => Ok(*c),
            CScalar::Exact(_) => Err(AlgebraError::BackendMismatch {
                left: Backend::Float,
                right: Backend::Exact,
            }),
        }
    }

    fn render(&self) -> String {
        render_parts(
            self.re == 0.0,
            self.im == 0.0,
            || render_f64(self.re),
            || render_f64(self.im.abs()),
            self.im < 0.0,
        )
    }
}

// ---------------------------------------------------------------------------
// Runtime-tagged scalar

/// A scalar carrying its backend at runtime.
///
/// JSON form: `{"re": "p/q", "im": "0"}` for exact values (rationals as
/// strings so nothing is lost), `{"re": 1.25, "im": 0.0}` for floats.
#[derive(Clone, Debug, PartialEq)]
pub enum CScalar {
    Exact(GaussianRational),
    Float(Complex64),
}

impl CScalar {
    pub fn backend(&self) -> Backend {
        match self {
            CScalar::Exact(_) => Backend::Exact,
            CScalar::Float(_) => Backend::Float,
        }
    }

    pub fn render(&self) -> String {
        match self {
            CScalar::Exact(g) => g.render(),
            CScalar::Float(c) => c.render(),
        }
    }

    fn mismatch(&self, other: &Self) -> AlgebraError {
        AlgebraError::BackendMismatch { left: self.backend(), right: other.backend() }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (CScalar::Exact(a), CScalar::Exact(b)) => Ok(CScalar::Exact(a.clone() + b.clone())),
            (CScalar::Float(a), CScalar::Float(b)) => Ok(CScalar::Float(a + b)),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (CScalar::Exact(a), CScalar::Exact(b)) => Ok(CScalar::Exact(a.clone() - b.clone())),
            (CScalar::Float(a), CScalar::Float(b)) => Ok(CScalar::Float(a - b)),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (CScalar::Exact(a), CScalar::Exact(b)) => Ok(CScalar::Exact(a.clone() * b.clone())),
            (CScalar::Float(a), CScalar::Float(b)) => Ok(CScalar::Float(a * b)),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (CScalar::Exact(a), CScalar::Exact(b)) => a.try_div(b).map(CScalar::Exact),
            (CScalar::Float(a), CScalar::Float(b)) => a.try_div(b).map(CScalar::Float),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn sqrt(&self) -> Result<Self> {
        match self {
            CScalar::Exact(a) => a.try_sqrt().map(CScalar::Exact),
            CScalar::Float(a) => a.try_sqrt().map(CScalar::Float),
        }
    }
}

impl fmt::Display for CScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Part {
    Text(String),
    Number(f64),
}

#[derive(Serialize, Deserialize)]
struct Parts {
    re: Part,
    im: Part,
}

impl Serialize for CScalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let parts = match self {
            CScalar::Exact(g) => Parts {
                re: Part::Text(render_rational(&g.re)),
                im: Part::Text(render_rational(&g.im)),
            },
            CScalar::Float(c) => Parts { re: Part::Number(c.re), im: Part::Number(c.im) },
        };
        parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CScalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let parts = Parts::deserialize(deserializer)?;
        match (parts.re, parts.im) {
            (Part::Text(re), Part::Text(im)) => {
                let re = parse_rational(&re).map_err(D::Error::custom)?;
                let im = parse_rational(&im).map_err(D::Error::custom)?;
                Ok(CScalar::Exact(GaussianRational::new(re, im)))
            }
            (Part::Number(re), Part::Number(im)) => Ok(CScalar::Float(Complex64::new(re, im))),
            _ => Err(D::Error::custom(AlgebraError::BackendMismatch {
                left: Backend::Exact,
                right: Backend::Float,
            })),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> GaussianRational {
        GaussianRational::parse_real(text).unwrap()
    }

    fn gi(re: &str, im: &str) -> GaussianRational {
        GaussianRational::new(parse_rational(re).unwrap(), parse_rational(im).unwrap())
    }

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!(q("15/17").render(), "15/17");
        assert_eq!(q("0.6").render(), "3/5");
        assert_eq!(q("-0.75").render(), "-3/4");
        assert_eq!(q("6/4").render(), "3/2");
        assert_eq!(q(".5").render(), "1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn exact_sqrt_examples() {
        assert_eq!(q("144").try_sqrt().unwrap(), q("12"));
        assert_eq!(q("0").try_sqrt().unwrap(), q("0"));
        assert_eq!(q("9/4").try_sqrt().unwrap(), q("3/2"));
        assert!(matches!(q("2").try_sqrt(), Err(AlgebraError::SqrtNotExact { .. })));
        // sqrt(-4) = 2i on the principal branch.
        assert_eq!(q("-4").try_sqrt().unwrap(), gi("0", "2"));
        // (1 + 2i)^2 = -3 + 4i.
        assert_eq!(gi("-3", "4").try_sqrt().unwrap(), gi("1", "2"));
        // (1 - 2i)^2 = -3 - 4i; principal root keeps a positive real part.
        assert_eq!(gi("-3", "-4").try_sqrt().unwrap(), gi("1", "-2"));
        assert_eq!(gi("0", "2").try_sqrt().unwrap(), gi("1", "1"));
        assert!(gi("1", "1").try_sqrt().is_err());
    }

    #[test]
    fn float_sqrt_is_principal() {
        let r = Complex64::new(-4.0, -0.0).try_sqrt().unwrap();
        assert_eq!(r, Complex64::new(0.0, 2.0));
        let r = Complex64::new(144.0, 0.0).try_sqrt().unwrap();
        assert_eq!(r, Complex64::new(12.0, 0.0));
        let r = Complex64::new(-3.0, -4.0).try_sqrt().unwrap();
        assert!((r - Complex64::new(1.0, -2.0)).norm() < 1e-15);
    }

    #[test]
    fn division() {
        let a = gi("1", "1");
        assert_eq!(a.try_recip().unwrap(), gi("1/2", "-1/2"));
        assert_eq!(GaussianRational::zero().try_recip(), Err(AlgebraError::DivisionByZero));
        assert_eq!(Complex64::new(0.0, 0.0).try_recip(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn rendering() {
        assert_eq!(gi("1", "1").render(), "1+1i");
        assert_eq!(gi("0", "-1").render(), "-1i");
        assert_eq!(gi("-1/2", "-3/4").render(), "-1/2-3/4i");
        assert_eq!(Complex64::new(1.25, 0.0).render(), "1.25");
        assert_eq!(Complex64::new(-0.0, 0.0).render(), "0");
        assert_eq!(Complex64::new(0.5, -2.0).render(), "0.5-2i");
    }

    #[test]
    fn cscalar_rejects_mixed_backends() {
        let a = CScalar::Exact(q("1"));
        let b = CScalar::Float(Complex64::new(1.0, 0.0));
        assert_eq!(
            a.checked_add(&b),
            Err(AlgebraError::BackendMismatch { left: Backend::Exact, right: Backend::Float })
        );
        assert!(a.checked_mul(&a).is_ok());
        let json = r#"{"re": "1/2", "im": 0.5}"#;
        assert!(serde_json::from_str::<CScalar>(json).is_err());
    }

    #[test]
    fn cscalar_json_encoding() {
        let exact = CScalar::Exact(gi("-15/17", "2"));
        let text = serde_json::to_string(&exact).unwrap();
        assert_eq!(text, r#"{"re":"-15/17","im":"2"}"#);
        assert_eq!(serde_json::from_str::<CScalar>(&text).unwrap(), exact);

        let float = CScalar::Float(Complex64::new(1.25, -0.5));
        let text = serde_json::to_string(&float).unwrap();
        assert_eq!(text, r#"{"re":1.25,"im":-0.5}"#);
        assert_eq!(serde_json::from_str::<CScalar>(&text).unwrap(), float);
    }
}
