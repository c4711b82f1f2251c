//! Complex 4-vectors `a0 + A` and the two composition rules on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::scalar::{cross, dot, vadd, vneg, vscale, vsub, CScalar, Scalar};
use crate::tolerance;

/// Which composition rule to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// `A <x> B`: reproduces relativistic velocity addition, no cross term.
    #[serde(rename = "le")]
    LorentzEinstein,
    /// `A (x) B`: quaternion-style product carrying `i A x B`.
    #[serde(rename = "rs")]
    ReciprocalSymmetric,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::LorentzEinstein => "le",
            Rule::ReciprocalSymmetric => "rs",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "le" => Ok(Rule::LorentzEinstein),
            "rs" => Ok(Rule::ReciprocalSymmetric),
            other => Err(format!("unknown rule `{other}` (expected le|rs)")),
        }
    }
}

/// A 4-vector: scalar part `s` (a0) and vector part `v` (A = (a1, a2, a3)).
#[derive(Clone, Debug, PartialEq)]
pub struct Quat4<T> {
    pub s: T,
    pub v: [T; 3],
}

impl<T: Scalar> Quat4<T> {
    pub fn new(s: T, v: [T; 3]) -> Self {
        Self { s, v }
    }

    /// Real 4-vector from integer components.
    pub fn from_ints(s: i64, v: [i64; 3]) -> Self {
        Self { s: T::from_i64(s), v: v.map(T::from_i64) }
    }

    pub fn scalar(s: T) -> Self {
        Self { s, v: [T::zero(), T::zero(), T::zero()] }
    }

    pub fn zero() -> Self {
        Self::scalar(T::zero())
    }

    /// `(1; 0, 0, 0)`.
    pub fn one() -> Self {
        Self::scalar(T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.components().all(Scalar::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.components().all(Scalar::is_real)
    }

    pub fn components(&self) -> impl Iterator<Item = &T> {
        std::iter::once(&self.s).chain(self.v.iter())
    }

    /// Sum of squared moduli of the four components (Hermitian size, used
    /// only to scale float residuals).
    pub fn magnitude_sq(&self) -> f64 {
        self.components().map(|c| c.modulus().powi(2)).sum()
    }

    /// `a0 - A`.
    pub fn conj(&self) -> Self {
        Self { s: self.s.clone(), v: vneg(&self.v) }
    }

    /// `a0^2 + A·A`, the radicand of the Euclidean norm.
    pub fn euclid_norm_sq(&self) -> T {
        self.s.clone() * self.s.clone() + dot(&self.v, &self.v)
    }

    /// `a0^2 - A·A`, the Minkowski-signature quadratic form.
    pub fn qform(&self) -> T {
        self.s.clone() * self.s.clone() - dot(&self.v, &self.v)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self { s: self.s.clone() + rhs.s.clone(), v: vadd(&self.v, &rhs.v) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self { s: self.s.clone() - rhs.s.clone(), v: vsub(&self.v, &rhs.v) }
    }

    pub fn scale(&self, k: &T) -> Self {
        Self { s: k.clone() * self.s.clone(), v: vscale(k, &self.v) }
    }

    /// `b0^2 - B·B` for `self` used as the right operand of the
    /// Lorentz-Einstein rule.
    pub fn le_radicand(&self) -> T {
        self.qform()
    }

    /// True when `self`, as a right operand of the Lorentz-Einstein rule,
    /// lies in the timelike regime: real, positive scalar part, positive
    /// real radicand. Outside it the principal root is still used.
    pub fn in_le_regime(&self) -> bool {
        self.is_real()
            && self.s.real_sign() == Some(std::cmp::Ordering::Greater)
            && self.le_radicand().real_sign() == Some(std::cmp::Ordering::Greater)
    }

    /// Lorentz-Einstein composition `self <x> rhs`:
    ///
    /// ```text
    /// a0 b0 + A·B + A r + { (b0 - r) (A·B) / B·B + a0 } B,   r = sqrt(b0^2 - B·B)
    /// ```
    ///
    /// `r` is the principal root. When `B·B` vanishes the coefficient
    /// `(b0 - r) / B·B` is replaced by its continuous extension
    /// `1 / (b0 + r)`, or by 0 if that also has a vanishing denominator.
    pub fn le_compose(&self, rhs: &Self) -> Result<Self> {
        let (a0, a) = (&self.s, &self.v);
        let (b0, b) = (&rhs.s, &rhs.v);
        let ab = dot(a, b);
        let bb = dot(b, b);
        let root = (b0.clone() * b0.clone() - bb.clone()).try_sqrt()?;

        let projection = if bb.is_negligible() {
            let denom = b0.clone() + root.clone();
            if denom.is_negligible() {
                T::zero()
            } else {
                ab.clone() * denom.try_recip()?
            }
        } else {
            (b0.clone() - root.clone()) * ab.clone() * bb.try_recip()?
        };

        let s = a0.clone() * b0.clone() + ab;
        let v = vadd(&vscale(&root, a), &vscale(&(projection + a0.clone()), b));
        Ok(Self { s, v })
    }

    /// Reciprocal-symmetric composition `self (x) rhs`:
    /// `a0 b0 + A·B + b0 A + a0 B + i A x B`.
    pub fn rs_compose(&self, rhs: &Self) -> Self {
        let (a0, a) = (&self.s, &self.v);
        let (b0, b) = (&rhs.s, &rhs.v);
        let s = a0.clone() * b0.clone() + dot(a, b);
        let linear = vadd(&vscale(b0, a), &vscale(a0, b));
        let v = vadd(&linear, &vscale(&T::i(), &cross(a, b)));
        Self { s, v }
    }

    pub fn compose(&self, rhs: &Self, rule: Rule) -> Result<Self> {
        match rule {
            Rule::LorentzEinstein => self.le_compose(rhs),
            Rule::ReciprocalSymmetric => Ok(self.rs_compose(rhs)),
        }
    }

    /// `self ∘ conj(self)` under `rule`. The vector part must vanish; the
    /// scalar part is returned and equals [`Quat4::qform`].
    pub fn qform_via_conj(&self, rule: Rule) -> Result<T> {
        let product = self.compose(&self.conj(), rule)?;
        let residue_ok = match T::BACKEND {
            crate::Backend::Exact => product.v.iter().all(Scalar::is_zero),
            crate::Backend::Float => {
                let scale = self.magnitude_sq();
                product.v.iter().all(|c| {
                    let abs = c.modulus();
                    tolerance::within(abs, tolerance::relative(abs, 0.0, 0.0, scale), tolerance::SINGLE_REL)
                })
            }
        };
        if !residue_ok {
            return Err(AlgebraError::VectorResidueNonzero {
                residue: Quat4::new(T::zero(), product.v).to_string(),
            });
        }
        Ok(product.s)
    }

    pub fn to_cscalars(&self) -> (CScalar, [CScalar; 3]) {
        (self.s.to_cscalar(), [&self.v[0], &self.v[1], &self.v[2]].map(Scalar::to_cscalar))
    }

    pub fn from_cscalars(s: &CScalar, v: &[CScalar; 3]) -> Result<Self> {
        Ok(Self {
            s: T::from_cscalar(s)?,
            v: [T::from_cscalar(&v[0])?, T::from_cscalar(&v[1])?, T::from_cscalar(&v[2])?],
        })
    }
}

impl<T: Scalar> fmt::Display for Quat4<T> {
    /// `(s; v1, v2, v3)`; re-parses to the same value under the expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {}, {}, {})",
            self.s.render(),
            self.v[0].render(),
            self.v[1].render(),
            self.v[2].render()
        )
    }
}

#[derive(Serialize, Deserialize)]
struct QuatRepr {
    s: CScalar,
    v: [CScalar; 3],
}

impl<T: Scalar> Serialize for Quat4<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (s, v) = self.to_cscalars();
        QuatRepr { s, v }.serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Quat4<T> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = QuatRepr::deserialize(deserializer)?;
        Quat4::from_cscalars(&repr.s, &repr.v).map_err(serde::de::Error::custom)
    }
}
