//! Backend-tagged values for runtime boundaries (JSON input, the expression
//! evaluator). Binary operations on values from different backends fail with
//! [`AlgebraError::BackendMismatch`].

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::pauli::{self, Mat2};
use crate::quat::{Quat4, Rule};
use crate::scalar::{Backend, CScalar, GaussianRational, Scalar};

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq)]
pub enum AnyQuat {
    Exact(Quat4<GaussianRational>),
    Float(Quat4<Complex64>),
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMat {
    Exact(Mat2<GaussianRational>),
    Float(Mat2<Complex64>),
}

macro_rules! binary {
    ($lhs:expr, $rhs:expr, $ty:ident, |$a:ident, $b:ident| $body:expr) => {
        match ($lhs, $rhs) {
            ($ty::Exact($a), $ty::Exact($b)) => Ok($body.map($ty::Exact)?),
            ($ty::Float($a), $ty::Float($b)) => Ok($body.map($ty::Float)?),
            (l, r) => Err(AlgebraError::BackendMismatch { left: l.backend(), right: r.backend() }),
        }
    };
}

impl AnyQuat {
    pub fn backend(&self) -> Backend {
        match self {
            AnyQuat::Exact(_) => Backend::Exact,
            AnyQuat::Float(_) => Backend::Float,
        }
    }

    /// Builds a 4-vector from tagged scalars; all four must share a backend.
    pub fn from_cscalars(s: &CScalar, v: &[CScalar; 3]) -> Result<Self> {
        match s.backend() {
            Backend::Exact => Quat4::from_cscalars(s, v).map(AnyQuat::Exact),
            Backend::Float => Quat4::from_cscalars(s, v).map(AnyQuat::Float),
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            AnyQuat::Exact(q) => AnyQuat::Exact(q.conj()),
            AnyQuat::Float(q) => AnyQuat::Float(q.conj()),
        }
    }

    pub fn qform(&self) -> CScalar {
        match self {
            AnyQuat::Exact(q) => q.qform().to_cscalar(),
            AnyQuat::Float(q) => q.qform().to_cscalar(),
        }
    }

    pub fn euclid_norm_sq(&self) -> CScalar {
        match self {
            AnyQuat::Exact(q) => q.euclid_norm_sq().to_cscalar(),
            AnyQuat::Float(q) => q.euclid_norm_sq().to_cscalar(),
        }
    }

    pub fn embed(&self) -> AnyMat {
        match self {
            AnyQuat::Exact(q) => AnyMat::Exact(pauli::embed(q)),
            AnyQuat::Float(q) => AnyMat::Float(pauli::embed(q)),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        binary!(self, rhs, AnyQuat, |a, b| Ok::<_, AlgebraError>(a.add(b)))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        binary!(self, rhs, AnyQuat, |a, b| Ok::<_, AlgebraError>(a.sub(b)))
    }

    pub fn compose(&self, rhs: &Self, rule: Rule) -> Result<Self> {
        binary!(self, rhs, AnyQuat, |a, b| a.compose(b, rule))
    }

    /// `(B·C; i B×C)` from the vector parts, computed through the matrix product.
    pub fn cross_term(&self, rhs: &Self) -> Result<Self> {
        fn go<T: Scalar>(a: &Quat4<T>, b: &Quat4<T>) -> Result<Quat4<T>> {
            let (s, v) = pauli::cross_term(&a.v, &b.v);
            Ok(Quat4::new(s, v))
        }
        binary!(self, rhs, AnyQuat, |a, b| go(a, b))
    }
}

impl AnyMat {
    pub fn backend(&self) -> Backend {
        match self {
            AnyMat::Exact(_) => Backend::Exact,
            AnyMat::Float(_) => Backend::Float,
        }
    }

    pub fn det(&self) -> CScalar {
        match self {
            AnyMat::Exact(m) => m.det().to_cscalar(),
            AnyMat::Float(m) => m.det().to_cscalar(),
        }
    }

    pub fn trace(&self) -> CScalar {
        match self {
            AnyMat::Exact(m) => m.trace().to_cscalar(),
            AnyMat::Float(m) => m.trace().to_cscalar(),
        }
    }

    pub fn mat_mul(&self, rhs: &Self) -> Result<Self> {
        binary!(self, rhs, AnyMat, |a, b| Ok::<_, AlgebraError>(a.mat_mul(b)))
    }
}

impl fmt::Display for AnyQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyQuat::Exact(q) => q.fmt(f),
            AnyQuat::Float(q) => q.fmt(f),
        }
    }
}

impl fmt::Display for AnyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyMat::Exact(m) => m.fmt(f),
            AnyMat::Float(m) => m.fmt(f),
        }
    }
}

impl Serialize for AnyQuat {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            AnyQuat::Exact(q) => q.serialize(serializer),
            AnyQuat::Float(q) => q.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for AnyQuat {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            s: CScalar,
            v: [CScalar; 3],
        }
        let repr = Repr::deserialize(deserializer)?;
        AnyQuat::from_cscalars(&repr.s, &repr.v).map_err(serde::de::Error::custom)
    }
}

impl Serialize for AnyMat {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            AnyMat::Exact(m) => m.serialize(serializer),
            AnyMat::Float(m) => m.serialize(serializer),
        }
    }
}
