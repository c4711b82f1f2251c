//! Counterexample searches. Each search samples a property that is claimed
//! equal on both sides; a witness is a sample where the sides differ.

use num_complex::Complex64;

use crate::error::Result;
use crate::quat::Quat4;
use crate::scalar::{cross, dot, GaussianRational};

use super::frame::decompose_vector_part;
use super::identities::Evaluator;
use super::sample::{lane, sample_independent_real_pair, sample_le_right_lane, sample_noncollinear_boosts, sample_quat, sample_quat_lane, Sampled};
use super::trial::{Side, Trial};
use super::SampleConfig;

pub struct Search {
    pub id: &'static str,
    pub property: &'static str,
    /// Whether the theory says a witness exists.
    pub expect_witness: bool,
    pub exact: Evaluator<GaussianRational>,
    pub float: Evaluator<Complex64>,
}

macro_rules! search {
    ($id:literal, $property:literal, $expect:expr, $eval:ident) => {
        Search {
            id: $id,
            property: $property,
            expect_witness: $expect,
            exact: $eval::<GaussianRational>,
            float: $eval::<Complex64>,
        }
    };
}

pub static SEARCHES: &[Search] = &[
    search!("le_associativity", "(A <x> B) <x> C = A <x> (B <x> C) on non-collinear boosts", true, le_associativity),
    search!("le_commutativity", "A <x> B = B <x> A", true, le_commutativity),
    search!("rs_associativity", "(A (x) B) (x) C = A (x) (B (x) C)", false, rs_associativity),
    search!("rs_commutativity", "A (x) B = B (x) A", true, rs_commutativity),
    search!("le_cross_term_presence", "vec(A <x> B) has no A x B component (real A, B)", false, le_cross_term),
];

pub fn find(id: &str) -> Option<&'static Search> {
    SEARCHES.iter().find(|s| s.id == id)
}

fn le_associativity<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let [a, b, c] = sample_noncollinear_boosts::<T>(cfg, pos);
    let left = a.le_compose(&b)?.le_compose(&c)?;
    let right = a.le_compose(&b.le_compose(&c)?)?;
    Ok(Trial::new(vec![a, b, c], Side::Quat(left), Side::Quat(right)))
}

fn le_commutativity<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let a: Quat4<T> = sample_le_right_lane(cfg, pos, lane::A);
    let b: Quat4<T> = sample_le_right_lane(cfg, pos, lane::B);
    let ab = a.le_compose(&b)?;
    let ba = b.le_compose(&a)?;
    Ok(Trial::new(vec![a, b], Side::Quat(ab), Side::Quat(ba)))
}

fn rs_associativity<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let a: Quat4<T> = sample_quat(cfg, pos);
    let b: Quat4<T> = sample_quat_lane(cfg, pos, lane::B);
    let c: Quat4<T> = sample_quat_lane(cfg, pos, lane::C);
    let left = a.rs_compose(&b).rs_compose(&c);
    let right = a.rs_compose(&b.rs_compose(&c));
    let scale = (a.magnitude_sq() * b.magnitude_sq() * c.magnitude_sq()).sqrt();
    Ok(Trial::new(vec![a, b, c], Side::Quat(left), Side::Quat(right)).with_scale(scale))
}

fn rs_commutativity<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let a: Quat4<T> = sample_quat(cfg, pos);
    let b: Quat4<T> = sample_quat_lane(cfg, pos, lane::B);
    let ab = a.rs_compose(&b);
    let ba = b.rs_compose(&a);
    Ok(Trial::new(vec![a, b], Side::Quat(ab), Side::Quat(ba)))
}

fn le_cross_term<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let (a, b) = sample_independent_real_pair::<T>(cfg, pos);
    let r = a.le_compose(&b)?;
    let (_, _, gamma) = decompose_vector_part(&a, &b, &r)?;
    let normal = cross(&a.v, &b.v);
    let scale = (r.magnitude_sq() / dot(&normal, &normal).modulus()).sqrt();
    Ok(Trial::new(vec![a, b], Side::Coeffs(vec![gamma]), Side::Coeffs(vec![T::zero()])).with_scale(scale))
}
