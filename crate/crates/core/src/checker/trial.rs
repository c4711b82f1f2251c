use serde_json::{json, Value};

use crate::pauli::Mat2;
use crate::quat::Quat4;
use crate::scalar::Scalar;
use crate::tolerance;

/// One side of a sampled equation.
#[derive(Clone, Debug, PartialEq)]
pub enum Side<T> {
    Scalar(T),
    Quat(Quat4<T>),
    Mat(Mat2<T>),
    Vector([T; 3]),
    Coeffs(Vec<T>),
}

impl<T: Scalar> Side<T> {
    pub fn components(&self) -> Vec<&T> {
        match self {
            Side::Scalar(x) => vec![x],
            Side::Quat(q) => q.components().collect(),
            Side::Mat(m) => m.entries().collect(),
            Side::Vector(v) => v.iter().collect(),
            Side::Coeffs(c) => c.iter().collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        let scalars = |xs: &[&T]| Value::Array(xs.iter().map(|x| json!(x.to_cscalar())).collect());
        match self {
            Side::Scalar(x) => json!(x.to_cscalar()),
            Side::Quat(q) => json!(q),
            Side::Mat(m) => json!(m),
            Side::Vector(v) => scalars(&v.iter().collect::<Vec<_>>()),
            Side::Coeffs(c) => scalars(&c.iter().collect::<Vec<_>>()),
        }
    }

    fn max_modulus(&self) -> f64 {
        self.components().into_iter().map(Scalar::modulus).fold(0.0, f64::max)
    }
}

/// A single evaluated sample: the operands and both sides of the claim.
#[derive(Clone, Debug)]
pub struct Trial<T> {
    pub inputs: Vec<Quat4<T>>,
    pub lhs: Side<T>,
    pub rhs: Side<T>,
    /// Natural magnitude of the compared quantity, used as a floor for the
    /// relative residual.
    pub scale: f64,
    /// A Lorentz-Einstein right operand fell outside the real timelike regime.
    pub outside_regime: bool,
}

impl<T: Scalar> Trial<T> {
    pub fn new(inputs: Vec<Quat4<T>>, lhs: Side<T>, rhs: Side<T>) -> Self {
        Self { inputs, lhs, rhs, scale: 0.0, outside_regime: false }
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn outside_regime(mut self, flag: bool) -> Self {
        self.outside_regime = flag;
        self
    }
}

/// How float samples are compared. Exact samples always require equality.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FloatTolerance {
    Relative(f64),
    Absolute(f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Verdict {
    pub abs: f64,
    pub rel: f64,
    pub holds: bool,
}

pub fn judge<T: Scalar>(trial: &Trial<T>, tolerance: FloatTolerance) -> Verdict {
    let lhs = trial.lhs.components();
    let rhs = trial.rhs.components();
    if lhs.len() != rhs.len() {
        return Verdict { abs: f64::MAX, rel: f64::MAX, holds: false };
    }
    let diffs: Vec<T> = lhs.iter().zip(&rhs).map(|(l, r)| (*l).clone() - (*r).clone()).collect();
    let abs = diffs.iter().map(Scalar::modulus).fold(0.0, f64::max);
    let rel = tolerance::relative(abs, trial.lhs.max_modulus(), trial.rhs.max_modulus(), trial.scale);
    let holds = match T::BACKEND {
        crate::Backend::Exact => diffs.iter().all(Scalar::is_zero),
        crate::Backend::Float => match tolerance {
            FloatTolerance::Relative(tol) => tolerance::within(abs, rel, tol),
            FloatTolerance::Absolute(tol) => abs <= tol,
        },
    };
    Verdict { abs, rel, holds }
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;
    use crate::scalar::GaussianRational;

    #[test]
    fn exact_judgement_demands_equality() {
        let one = GaussianRational::one();
        let tiny = GaussianRational::from_ratio(1, 1_000_000_000_000_000_000);
        let t = Trial::new(vec![], Side::Scalar(one.clone()), Side::Scalar(one.clone() + tiny));
        let v = judge(&t, FloatTolerance::Relative(1e-3));
        assert!(!v.holds);
        assert!(v.abs > 0.0);
        let t = Trial::new(vec![], Side::Scalar(one.clone()), Side::Scalar(one));
        assert_eq!(judge(&t, FloatTolerance::Relative(0.0)), Verdict { abs: 0.0, rel: 0.0, holds: true });
    }

    #[test]
    fn float_judgement_uses_scale() {
        let c = |x: f64| Complex64::new(x, 0.0);
        // A cancelled-to-zero result compared against 1e-14 is fine at scale 100.
        let t = Trial::new(vec![], Side::Scalar(c(1e-14)), Side::Scalar(c(0.0))).with_scale(100.0);
        assert!(judge(&t, FloatTolerance::Relative(1e-12)).holds);
        let t = Trial::new(vec![], Side::Scalar(c(1e-14)), Side::Scalar(c(0.0)));
        assert!(!judge(&t, FloatTolerance::Relative(1e-12)).holds);
        let t = Trial::new(vec![], Side::Scalar(c(1.0)), Side::Scalar(c(1.0 + 1e-11)));
        assert!(judge(&t, FloatTolerance::Absolute(1e-10)).holds);
    }
}
