//! Boosts built from velocities (units of c, so c = 1) and the standard
//! relativistic velocity-addition formula, kept independent of the
//! composition rules so the two can be cross-checked.

use std::cmp::Ordering;

use num_complex::Complex64;

use crate::error::{AlgebraError, Result};
use crate::quat::Quat4;
use crate::scalar::{dot, vadd, vscale, Scalar};
use crate::tolerance;

/// A real velocity in units of the speed of light.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Velocity3(pub [f64; 3]);

impl Velocity3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self([x, y, z])
    }

    pub fn speed_sq(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum()
    }

    pub fn to_complex(self) -> [Complex64; 3] {
        self.0.map(|c| Complex64::new(c, 0.0))
    }

    /// Real parts of a float 3-vector. Callers guarantee the input is real.
    fn from_complex(v: [Complex64; 3]) -> Self {
        Self(v.map(|c| c.re))
    }
}

/// `(gamma; gamma V)` with `gamma = 1 / sqrt(1 - V·V)`.
pub fn boost_from_velocity(velocity: Velocity3) -> Result<Quat4<Complex64>> {
    boost_from_components(&velocity.to_complex())
}

/// `(B / b0)` for a real unit boost with positive scalar part.
pub fn velocity_from_boost(boost: &Quat4<Complex64>) -> Result<Velocity3> {
    velocity_components(boost).map(Velocity3::from_complex)
}

/// Relativistic velocity addition `u ⊕ v`: the velocity of a body moving at
/// `v` in a frame that itself moves at `u`.
pub fn einstein_add(u: Velocity3, v: Velocity3) -> Result<Velocity3> {
    einstein_add_components(&u.to_complex(), &v.to_complex()).map(Velocity3::from_complex)
}

fn require_real(v: &[impl Scalar; 3]) -> Result<()> {
    if v.iter().all(Scalar::is_real) {
        Ok(())
    } else {
        Err(AlgebraError::SuperluminalVelocity { speed_sq: "non-real velocity".into() })
    }
}

/// `1 - v·v`, checked to be strictly positive.
fn subluminal_margin<T: Scalar>(v: &[T; 3]) -> Result<T> {
    require_real(v)?;
    let speed_sq = dot(v, v);
    let margin = T::one() - speed_sq.clone();
    match margin.real_sign() {
        Some(Ordering::Greater) => Ok(margin),
        _ => Err(AlgebraError::SuperluminalVelocity { speed_sq: speed_sq.render() }),
    }
}

/// Lorentz factor; exact when `1 - v·v` is a rational square.
pub fn lorentz_factor<T: Scalar>(v: &[T; 3]) -> Result<T> {
    subluminal_margin(v)?.try_sqrt()?.try_recip()
}

/// Backend-generic boost construction. For the exact backend it succeeds
/// only when `1 - v·v` is the square of a rational.
pub fn boost_from_components<T: Scalar>(v: &[T; 3]) -> Result<Quat4<T>> {
    let gamma = lorentz_factor(v)?;
    Ok(Quat4::new(gamma.clone(), vscale(&gamma, v)))
}

/// Backend-generic inverse of [`boost_from_components`].
pub fn velocity_components<T: Scalar>(boost: &Quat4<T>) -> Result<[T; 3]> {
    let fail = |reason: String| AlgebraError::NotAUnitBoost { reason };
    if !boost.is_real() {
        return Err(fail(format!("{boost} has non-real components")));
    }
    if boost.s.real_sign() != Some(Ordering::Greater) {
        return Err(fail(format!("scalar part of {boost} is not positive")));
    }
    let q = boost.qform();
    let unit = match T::BACKEND {
        crate::Backend::Exact => q == T::one(),
        crate::Backend::Float => {
            let abs = (q.clone() - T::one()).modulus();
            tolerance::within(abs, abs, tolerance::CHAINED_REL)
        }
    };
    if !unit {
        return Err(fail(format!("qform of {boost} is {}, not 1", q.render())));
    }
    let inv = boost.s.try_recip()?;
    Ok(vscale(&inv, &boost.v))
}

/// Backend-generic `u ⊕ v`:
///
/// ```text
/// [ u + v / gamma_u + gamma_u / (1 + gamma_u) (u·v) u ] / (1 + u·v)
/// ```
pub fn einstein_add_components<T: Scalar>(u: &[T; 3], v: &[T; 3]) -> Result<[T; 3]> {
    let gamma_u = lorentz_factor(u)?;
    subluminal_margin(v)?;
    let uv = dot(u, v);
    let parallel = gamma_u.clone() * (T::one() + gamma_u.clone()).try_recip()? * uv.clone();
    let numerator = vadd(&vadd(u, &vscale(&gamma_u.try_recip()?, v)), &vscale(&parallel, u));
    let result = vscale(&(T::one() + uv).try_recip()?, &numerator);
    subluminal_margin(&result)?;
    Ok(result)
}
