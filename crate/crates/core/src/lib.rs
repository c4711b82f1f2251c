//! Two composition algebras on complex 4-vectors `a0 + A`:
//!
//! * the Lorentz-Einstein rule, which reproduces relativistic velocity
//!   addition when the right operand is a unit boost, and
//! * the reciprocal-symmetric rule, whose product carries the `i A × B`
//!   cross term and is isomorphic to 2×2 complex matrix multiplication
//!   through the Pauli embedding.
//!
//! Every algebra type is generic over a [`Scalar`] backend: exact Gaussian
//! rationals ([`GaussianRational`]) for identity proofs, or `Complex64`.
//! The [`checker`] module samples both backends and verifies the algebraic
//! identities; [`expr`] and [`cli`] expose the algebra through a small
//! expression language.

pub mod boost;
pub mod checker;
pub mod cli;
pub mod dynamic;
pub mod error;
pub mod expr;
pub mod pauli;
pub mod quat;
pub mod scalar;
pub mod tolerance;

pub use boost::{boost_from_velocity, einstein_add, velocity_from_boost, Velocity3};
pub use dynamic::{AnyMat, AnyQuat};
pub use error::AlgebraError;
pub use pauli::{cross_term, embed, extract, massless_dirac, null_spinor, sigma, Mat2, Spinor2};
pub use quat::{Quat4, Rule};
pub use scalar::{Backend, CScalar, GaussianRational, Scalar};
