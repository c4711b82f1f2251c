//! The registered identities. Each evaluator is generic over the backend and
//! maps a stream position to one [`Trial`].

use num_complex::Complex64;

use crate::boost::{boost_from_components, einstein_add_components, velocity_components};
use crate::error::Result;
use crate::pauli::{self, cross_term, cross_term_formula, embed, extract, sigma, Mat2};
use crate::quat::{Quat4, Rule};
use crate::scalar::{GaussianRational, Scalar};
use crate::tolerance::{SINGLE_REL, VELOCITY_ABS};

use super::frame::decompose_vector_part;
use super::sample::{
    lane, sample_independent_real_pair, sample_le_right, sample_le_right_lane, sample_parallel, sample_quat,
    sample_quat_lane, sample_unit_boost, sample_velocity, Sampled,
};
use super::trial::{FloatTolerance, Side, Trial};
use super::SampleConfig;

pub type Evaluator<T> = fn(&SampleConfig, u64) -> Result<Trial<T>>;

/// A registered identity: stable id, the claim it checks, and one evaluator
/// per backend.
pub struct Identity {
    pub id: &'static str,
    pub claim: &'static str,
    pub tolerance: FloatTolerance,
    /// Identities over a fixed finite set run exactly this many instances.
    pub fixed_instances: Option<usize>,
    pub exact: Evaluator<GaussianRational>,
    pub float: Evaluator<Complex64>,
}

macro_rules! identity {
    ($id:literal, $claim:literal, $tol:expr, $fixed:expr, $eval:ident) => {
        Identity {
            id: $id,
            claim: $claim,
            tolerance: $tol,
            fixed_instances: $fixed,
            exact: $eval::<GaussianRational>,
            float: $eval::<Complex64>,
        }
    };
}

const REL: FloatTolerance = FloatTolerance::Relative(SINGLE_REL);

pub static IDENTITIES: &[Identity] = &[
    identity!("eq05_qform_conj_le", "A <x> conj(A) = qform(A)", REL, None, qform_conj_le),
    identity!("eq06_multiplicativity_le", "qform(A <x> B) = qform(A) qform(B)", REL, None, multiplicativity_le),
    identity!("eq08_qform_conj_rs", "A (x) conj(A) = qform(A)", REL, None, qform_conj_rs),
    identity!("eq09_multiplicativity_rs", "qform(A (x) B) = qform(A) qform(B)", REL, None, multiplicativity_rs),
    identity!("eq11_boost_unit", "qform(boost(V)) = 1", REL, None, boost_unit),
    identity!("eq12_invariance_le", "qform(B) = 1 => qform(A <x> B) = qform(A)", REL, None, invariance_le),
    identity!("eq12_invariance_rs", "qform(B) = 1 => qform(A (x) B) = qform(A)", REL, None, invariance_rs),
    identity!("eq14_17_pauli_relations", "sigma_j sigma_k follows the Pauli relations", REL, Some(16), pauli_relations),
    identity!("eq18_homomorphism", "embed(A) embed(B) = embed(A (x) B)", REL, None, homomorphism),
    identity!("eq22_cross_term", "(sigma.B)(sigma.C) = B.C + i sigma.(B x C)", REL, None, spin_cross_term),
    identity!("le_coplanarity", "vec(A <x> B) has no A x B component", REL, None, le_coplanarity),
    identity!("rs_cross_term_exact", "vec(A (x) B) = b0 A + a0 B + i A x B", REL, None, rs_cross_term),
    identity!("collinear_agreement", "A || B, qform(B) = 1 => A <x> B = A (x) B", REL, None, collinear_agreement),
    identity!("det_equals_qform", "det(embed(A)) = qform(A)", REL, None, det_equals_qform),
    identity!("extract_embed_roundtrip", "extract(embed(A)) = A", REL, None, extract_embed),
    identity!(
        "velocity_addition_oracle",
        "velocity(boost(u) <x> boost(v)) = v (+) u",
        FloatTolerance::Absolute(VELOCITY_ABS),
        None,
        velocity_addition
    ),
];

pub fn find(id: &str) -> Option<&'static Identity> {
    IDENTITIES.iter().find(|i| i.id == id)
}

fn qform_conj_le<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let a: Quat4<T> = sample_le_right_lane(cfg, pos, lane::A);
    let conj = a.conj();
    let lhs = a.le_compose(&conj)?;
    Ok(Trial::new(vec![a.clone()], Side::Quat(lhs), Side::Quat(Quat4::scalar(a.qform())))
        .with_scale(a.magnitude_sq())
        .outside_regime(!conj.in_le_regime()))
}

fn qform_conj_rs<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let a: Quat4<T> = sample_quat(cfg, pos);
    let lhs = a.rs_compose(&a.conj());
    Ok(Trial::new(vec![a.clone()], Side::Quat(lhs), Side::Quat(Quat4::scalar(a.qform())))
        .with_scale(a.magnitude_sq()))
}

fn multiplicativity<T: Sampled>(a: Quat4<T>, b: Quat4<T>, rule: Rule) -> Result<Trial<T>> {
    let product = a.compose(&b, rule)?;
    let outside = rule == Rule::LorentzEinstein && !b.in_le_regime();
    let scale = a.magnitude_sq() * b.magnitude_sq();
    Ok(Trial::new(vec![a.clone(), b.clone()], Side::Scalar(product.qform()), Side::Scalar(a.qform() * b.qform()))
        .with_scale(scale)
        .outside_regime(outside))
}

fn multiplicativity_le<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    multiplicativity(sample_quat(cfg, pos), sample_le_right(cfg, pos), Rule::LorentzEinstein)
}

fn multiplicativity_rs<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    multiplicativity(sample_quat(cfg, pos), sample_quat_lane(cfg, pos, lane::B), Rule::ReciprocalSymmetric)
}

fn boost_unit<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let v: [T; 3] = sample_velocity(cfg, pos, lane::A);
    let b = boost_from_components(&v)?;
    Ok(Trial::new(vec![Quat4::new(T::zero(), v), b.clone()], Side::Scalar(b.qform()), Side::Scalar(T::one()))
        .with_scale(b.magnitude_sq()))
}

fn invariance<T: Sampled>(cfg: &SampleConfig, pos: u64, rule: Rule) -> Result<Trial<T>> {
    let a: Quat4<T> = sample_quat(cfg, pos);
    let b: Quat4<T> = sample_unit_boost(cfg, pos, lane::B);
    let product = a.compose(&b, rule)?;
    Ok(Trial::new(vec![a.clone(), b.clone()], Side::Scalar(product.qform()), Side::Scalar(a.qform()))
        .with_scale(a.magnitude_sq()))
}

fn invariance_le<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    invariance(cfg, pos, Rule::LorentzEinstein)
}

fn invariance_rs<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    invariance(cfg, pos, Rule::ReciprocalSymmetric)
}

/// Expected `sigma_j sigma_k` as `coefficient · sigma_l`, read off the
/// relations alone: σ0 is the identity and commutes with everything, each
/// σ squares to 1, and distinct σ's anticommute with σxσy = iσz cyclically.
pub fn pauli_product_rule<T: Scalar>(j: usize, k: usize) -> (T, usize) {
    match (j, k) {
        (0, k) => (T::one(), k),
        (j, 0) => (T::one(), j),
        (j, k) if j == k => (T::one(), 0),
        (j, k) => {
            let l = 6 - j - k;
            let cyclic = matches!((j, k), (1, 2) | (2, 3) | (3, 1));
            (if cyclic { T::i() } else { -T::i() }, l)
        }
    }
}

fn basis_quat<T: Scalar>(k: usize) -> Quat4<T> {
    let mut q = Quat4::zero();
    match k {
        0 => q.s = T::one(),
        k => q.v[k - 1] = T::one(),
    }
    q
}

fn pauli_relations<T: Sampled>(_cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let (j, k) = ((pos as usize / 4) % 4, pos as usize % 4);
    let product = sigma::<T>(j)?.mat_mul(&sigma(k)?);
    let (coefficient, l) = pauli_product_rule::<T>(j, k);
    let expected: Mat2<T> = sigma::<T>(l)?.scale(&coefficient);
    Ok(Trial::new(vec![basis_quat(j), basis_quat(k)], Side::Mat(product), Side::Mat(expected)))
}

fn homomorphism<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let a: Quat4<T> = sample_quat(cfg, pos);
    let b: Quat4<T> = sample_quat_lane(cfg, pos, lane::B);
    let lhs = embed(&a).mat_mul(&embed(&b));
    let rhs = embed(&a.rs_compose(&b));
    let scale = a.magnitude_sq().sqrt() * b.magnitude_sq().sqrt();
    Ok(Trial::new(vec![a, b], Side::Mat(lhs), Side::Mat(rhs)).with_scale(scale))
}

fn spin_cross_term<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let b: Quat4<T> = sample_quat(cfg, pos);
    let c: Quat4<T> = sample_quat_lane(cfg, pos, lane::B);
    let (ms, mv) = cross_term(&b.v, &c.v);
    let (fs, fv) = cross_term_formula(&b.v, &c.v);
    let scale = b.magnitude_sq().sqrt() * c.magnitude_sq().sqrt();
    let inputs = vec![Quat4::new(T::zero(), b.v), Quat4::new(T::zero(), c.v)];
    Ok(Trial::new(inputs, Side::Quat(Quat4::new(ms, mv)), Side::Quat(Quat4::new(fs, fv))).with_scale(scale))
}

fn le_coplanarity<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let (a, b) = sample_independent_real_pair::<T>(cfg, pos);
    let r = a.le_compose(&b)?;
    let (_, _, gamma) = decompose_vector_part(&a, &b, &r)?;
    let normal = crate::scalar::cross(&a.v, &b.v);
    let scale = (r.magnitude_sq() / crate::scalar::dot(&normal, &normal).modulus()).sqrt();
    Ok(Trial::new(vec![a, b.clone()], Side::Coeffs(vec![gamma]), Side::Coeffs(vec![T::zero()]))
        .with_scale(scale)
        .outside_regime(!b.in_le_regime()))
}

fn rs_cross_term<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let (a, b) = sample_independent_real_pair::<T>(cfg, pos);
    let r = a.rs_compose(&b);
    let (alpha, beta, gamma) = decompose_vector_part(&a, &b, &r)?;
    let expected = vec![b.s.clone(), a.s.clone(), T::i()];
    Ok(Trial::new(vec![a, b], Side::Coeffs(vec![alpha, beta, gamma]), Side::Coeffs(expected)))
}

fn collinear_agreement<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let b: Quat4<T> = sample_unit_boost(cfg, pos, lane::B);
    let a = sample_parallel(cfg, pos, &b.v);
    let le = a.le_compose(&b)?;
    let rs = a.rs_compose(&b);
    let scale = a.magnitude_sq().sqrt() * b.magnitude_sq().sqrt();
    Ok(Trial::new(vec![a, b], Side::Quat(le), Side::Quat(rs)).with_scale(scale))
}

fn det_equals_qform<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let a: Quat4<T> = sample_quat(cfg, pos);
    let det = pauli::embed(&a).det();
    Ok(Trial::new(vec![a.clone()], Side::Scalar(det), Side::Scalar(a.qform())).with_scale(a.magnitude_sq()))
}

fn extract_embed<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let a: Quat4<T> = sample_quat(cfg, pos);
    let back = extract(&embed(&a));
    Ok(Trial::new(vec![a.clone()], Side::Quat(back), Side::Quat(a)))
}

/// `boost(u) <x> boost(v)` is the boost of velocity `v ⊕ u`: the right
/// operand acts as the frame change applied to the left one.
fn velocity_addition<T: Sampled>(cfg: &SampleConfig, pos: u64) -> Result<Trial<T>> {
    let u: [T; 3] = sample_velocity(cfg, pos, lane::A);
    let v: [T; 3] = sample_velocity(cfg, pos, lane::B);
    let (bu, bv) = (boost_from_components(&u)?, boost_from_components(&v)?);
    let composed = velocity_components(&bu.le_compose(&bv)?)?;
    let oracle = einstein_add_components(&v, &u)?;
    Ok(Trial::new(vec![bu, bv], Side::Vector(composed), Side::Vector(oracle)))
}
