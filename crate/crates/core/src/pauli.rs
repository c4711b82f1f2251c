//! 2×2 complex matrices and the Pauli embedding `A ↦ σ0 a0 + σ·A`.
//!
//! Matrix multiplication here is a separate code path from
//! [`Quat4::rs_compose`], which makes it usable as an oracle for it.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::quat::Quat4;
use crate::scalar::{cross, dot, vneg, vscale, CScalar, Scalar};

/// Row-major 2×2 matrix `[[m00, m01], [m10, m11]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<T> {
    pub m: [[T; 2]; 2],
}

/// Two-component spinor.
#[derive(Clone, Debug, PartialEq)]
pub struct Spinor2<T> {
    pub c: [T; 2],
}

impl<T: Scalar> Mat2<T> {
    pub fn new(m00: T, m01: T, m10: T, m11: T) -> Self {
        Self { m: [[m00, m01], [m10, m11]] }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.m.iter().flatten()
    }

    pub fn is_zero(&self) -> bool {
        self.entries().all(Scalar::is_zero)
    }

    fn map2(&self, rhs: &Self, f: impl Fn(T, T) -> T) -> Self {
        let e = |r: usize, c: usize| f(self.m[r][c].clone(), rhs.m[r][c].clone());
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.map2(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.map2(rhs, |a, b| a - b)
    }

    pub fn scale(&self, k: &T) -> Self {
        let e = |r: usize, c: usize| k.clone() * self.m[r][c].clone();
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn mat_mul(&self, rhs: &Self) -> Self {
        let e = |r: usize, c: usize| {
            self.m[r][0].clone() * rhs.m[0][c].clone() + self.m[r][1].clone() * rhs.m[1][c].clone()
        };
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn det(&self) -> T {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[0][1].clone() * self.m[1][0].clone()
    }

    pub fn trace(&self) -> T {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    pub fn apply(&self, psi: &Spinor2<T>) -> Spinor2<T> {
        let row = |r: usize| {
            self.m[r][0].clone() * psi.c[0].clone() + self.m[r][1].clone() * psi.c[1].clone()
        };
        Spinor2 { c: [row(0), row(1)] }
    }

    pub fn to_cscalars(&self) -> [[CScalar; 2]; 2] {
        self.m.clone().map(|row| row.map(|e| e.to_cscalar()))
    }
}

impl<T: Scalar> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m[0][0].render(),
            self.m[0][1].render(),
            self.m[1][0].render(),
            self.m[1][1].render()
        )
    }
}

#[derive(Serialize, Deserialize)]
struct MatRepr {
    m: [[CScalar; 2]; 2],
}

impl<T: Scalar> Serialize for Mat2<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatRepr { m: self.to_cscalars() }.serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Mat2<T> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatRepr::deserialize(deserializer)?;
        let conv = |c: &CScalar| T::from_cscalar(c).map_err(serde::de::Error::custom);
        Ok(Mat2::new(
            conv(&repr.m[0][0])?,
            conv(&repr.m[0][1])?,
            conv(&repr.m[1][0])?,
            conv(&repr.m[1][1])?,
        ))
    }
}

impl<T: Scalar> Spinor2<T> {
    pub fn new(c0: T, c1: T) -> Self {
        Self { c: [c0, c1] }
    }

    /// Largest component modulus.
    pub fn max_modulus(&self) -> f64 {
        self.c.iter().map(Scalar::modulus).fold(0.0, f64::max)
    }
}

/// Standard Pauli basis: σ0 = I, σ1 = [[0,1],[1,0]], σ2 = [[0,-i],[i,0]],
/// σ3 = [[1,0],[0,-1]].
pub fn sigma<T: Scalar>(k: usize) -> Result<Mat2<T>> {
    let (o, z, i) = (T::one(), T::zero(), T::i());
    Ok(match k {
        0 => Mat2::identity(),
        1 => Mat2::new(z.clone(), o.clone(), o, z),
        2 => Mat2::new(z.clone(), -i.clone(), i, z),
        3 => Mat2::new(o.clone(), z.clone(), z, -o),
        _ => return Err(AlgebraError::IndexOutOfRange(k)),
    })
}

fn basis<T: Scalar>() -> [Mat2<T>; 4] {
    [0, 1, 2, 3].map(|k| sigma(k).expect("basis index in range"))
}

/// `σ0 a0 + σx a1 + σy a2 + σz a3`.
pub fn embed<T: Scalar>(a: &Quat4<T>) -> Mat2<T> {
    let [s0, s1, s2, s3] = basis::<T>();
    s0.scale(&a.s)
        .add(&s1.scale(&a.v[0]))
        .add(&s2.scale(&a.v[1]))
        .add(&s3.scale(&a.v[2]))
}

/// Inverse of [`embed`] by trace projection.
pub fn extract<T: Scalar>(m: &Mat2<T>) -> Quat4<T> {
    let half = T::from_ratio(1, 2);
    let [[m00, m01], [m10, m11]] = m.m.clone();
    // 1 / (2i) = -i / 2
    let inv_two_i = -(T::i() * half.clone());
    Quat4::new(
        half.clone() * (m00.clone() + m11.clone()),
        [
            half.clone() * (m01.clone() + m10.clone()),
            inv_two_i * (m10 - m01),
            half * (m00 - m11),
        ],
    )
}

/// `(σ·B)(σ·C)` computed as a matrix product and decomposed back into
/// `(scalar, vector)`. Equals `(B·C, i B×C)`.
pub fn cross_term<T: Scalar>(b: &[T; 3], c: &[T; 3]) -> (T, [T; 3]) {
    let mb = embed(&Quat4::new(T::zero(), b.clone()));
    let mc = embed(&Quat4::new(T::zero(), c.clone()));
    let q = extract(&mb.mat_mul(&mc));
    (q.s, q.v)
}

/// `(B·C, i B×C)` straight from the vector formulas.
pub fn cross_term_formula<T: Scalar>(b: &[T; 3], c: &[T; 3]) -> (T, [T; 3]) {
    (dot(b, c), vscale(&T::i(), &cross(b, c)))
}

/// Massless Dirac operator `σ0 E - σ·p`.
pub fn massless_dirac<T: Scalar>(energy: &T, p: &[T; 3]) -> Mat2<T> {
    embed(&Quat4::new(energy.clone(), vneg(p)))
}

/// Positive-helicity solution of `(σ0 |p| - σ·p) ψ = 0`: unit Euclidean
/// length, first nonzero component real and positive.
pub fn null_spinor(p: [f64; 3]) -> Result<Spinor2<Complex64>> {
    let len = p.iter().map(|x| x * x).sum::<f64>().sqrt();
    if len == 0.0 || !len.is_finite() {
        return Err(AlgebraError::ZeroMomentum);
    }
    let [nx, ny, nz] = p.map(|x| x / len);
    // Two algebraically equivalent forms of the σ·n̂ = +1 eigenvector; pick
    // the one whose normalizer stays away from zero.
    let raw = if nz >= 0.0 {
        [Complex64::new(1.0 + nz, 0.0), Complex64::new(nx, ny)]
    } else {
        [Complex64::new(nx, -ny), Complex64::new(1.0 - nz, 0.0)]
    };
    let norm = (raw[0].norm_sqr() + raw[1].norm_sqr()).sqrt();
    let lead = if raw[0].norm() > 0.0 { raw[0] } else { raw[1] };
    let phase = lead.conj() / lead.norm();
    Ok(Spinor2::new(raw[0] * phase / norm, raw[1] * phase / norm))
}
