//! Boost 4-vectors, Lorentz-invariant composition and relativistic
//! velocity addition (c = 1).
//!
//! Run with `cargo run --example boosts_and_velocity_addition`.

use recsym::boost::{boost_from_components, velocity_components};
use num_complex::Complex64;
use recsym::{boost_from_velocity, einstein_add, velocity_from_boost, GaussianRational, Quat4, Scalar, Velocity3};

fn main() -> Result<(), recsym::AlgebraError> {
    let u = Velocity3::new(0.6, 0.0, 0.0);
    let b = boost_from_velocity(u)?;
    println!("boost(0.6, 0, 0) = {b}, qform = {}", b.qform().render());

    let w = velocity_from_boost(&b.le_compose(&b)?)?;
    println!("0.6 (+) 0.6 = {:?}  (15/17 = {})", w.0, 15.0 / 17.0);

    // Exact version: 3/5 composed with itself is exactly 15/17.
    let three_fifths = [GaussianRational::from_ratio(3, 5), GaussianRational::zero(), GaussianRational::zero()];
    let exact = boost_from_components(&three_fifths)?;
    let twice = exact.le_compose(&exact)?;
    println!("exact: {exact} composed with itself = {twice}, velocity {}", velocity_components(&twice)?[0]);

    // For non-collinear velocities le(boost u, boost v) carries v (+) u.
    let u = Velocity3::new(0.5, 0.0, 0.0);
    let v = Velocity3::new(0.0, 0.6, 0.0);
    let composed = velocity_from_boost(&boost_from_velocity(u)?.le_compose(&boost_from_velocity(v)?)?)?;
    println!("le(boost u, boost v) -> {:?}", composed.0);
    println!("einstein_add(v, u)   =  {:?}", einstein_add(v, u)?.0);
    println!("einstein_add(u, v)   =  {:?}", einstein_add(u, v)?.0);

    // Composition with a boost preserves the quadratic form of any 4-vector.
    let a = Quat4::new(Complex64::new(2.0, 0.5), [1.0, -3.0, 0.25].map(|x| Complex64::new(x, 0.0)));
    let boosted = a.le_compose(&boost_from_velocity(v)?)?;
    println!("qform(A) = {}, qform(le(A, boost v)) = {}", a.qform().render(), boosted.qform().render());
    Ok(())
}
