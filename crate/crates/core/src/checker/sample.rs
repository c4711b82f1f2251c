//! Deterministic, position-addressable samplers.
//!
//! Every draw comes from [`stream`]`(seed, position, lane)`: a ChaCha8
//! generator keyed by the 32-byte block `seed ‖ position ‖ lane ‖ 0`
//! (little-endian `u64`s). A sample therefore depends only on its
//! coordinates, never on what was drawn before it, which is what lets
//! identity checks evaluate positions in any order.

use std::cmp::Ordering;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boost::boost_from_components;
use crate::quat::Quat4;
use crate::scalar::{cross, dot, vscale, GaussianRational, Scalar};
use crate::tolerance::MAX_SAMPLED_SPEED;

use super::SampleConfig;

/// Largest denominator used by exact component draws.
pub const MAX_DENOMINATOR: i64 = 16;

/// Integer range of the vector part fed to the Pythagorean generator.
const PYTHAGOREAN_COMPONENT_MAX: i64 = 12;

/// Lanes separate independent operands drawn at the same stream position.
pub mod lane {
    pub const A: u64 = 0;
    pub const B: u64 = 1;
    pub const C: u64 = 2;
}

pub fn stream(seed: u64, position: u64, lane: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&position.to_le_bytes());
    key[16..24].copy_from_slice(&lane.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Per-backend sampling primitives.
pub trait Sampled: Scalar {
    /// A real component bounded by `cfg.magnitude_bound`.
    fn draw_real(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> Self;
    /// A right operand the Lorentz-Einstein rule can evaluate in this backend.
    fn draw_le_right(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> Quat4<Self>;
    /// A real, nonzero subluminal velocity.
    fn draw_velocity(rng: &mut ChaCha8Rng) -> [Self; 3];
}

impl Sampled for GaussianRational {
    fn draw_real(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> Self {
        let q = rng.random_range(1..=MAX_DENOMINATOR);
        let bound = cfg.magnitude_bound;
        // floor(bound * q) without overflow for any sane bound.
        let p_max = (bound * Rational64::from_integer(q)).floor().to_integer().max(0);
        let p = rng.random_range(-p_max..=p_max);
        GaussianRational::from_ratio(p, q)
    }

    fn draw_le_right(rng: &mut ChaCha8Rng, _cfg: &SampleConfig) -> Quat4<Self> {
        let (b0, b, _) = pythagorean_quadruple(rng);
        Quat4::from_ints(b0, b)
    }

    fn draw_velocity(rng: &mut ChaCha8Rng) -> [Self; 3] {
        loop {
            let (b0, b, root) = pythagorean_quadruple(rng);
            if root > 0 && b != [0, 0, 0] {
                return b.map(|c| GaussianRational::from_ratio(c, b0));
            }
        }
    }
}

impl Sampled for Complex64 {
    fn draw_real(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> Self {
        let bound = cfg.magnitude_bound.to_f64().unwrap_or(1.0);
        Complex64::new(rng.random_range(-bound..=bound), 0.0)
    }

    fn draw_le_right(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> Quat4<Self> {
        draw_quat(rng, cfg, cfg.complex_components)
    }

    fn draw_velocity(rng: &mut ChaCha8Rng) -> [Self; 3] {
        loop {
            let v: [f64; 3] = std::array::from_fn(|_| rng.random_range(-MAX_SAMPLED_SPEED..=MAX_SAMPLED_SPEED));
            let speed_sq = v.iter().map(|c| c * c).sum::<f64>();
            if speed_sq > 0.0 && speed_sq <= MAX_SAMPLED_SPEED * MAX_SAMPLED_SPEED {
                return v.map(|c| Complex64::new(c, 0.0));
            }
        }
    }
}

/// Integers `(b0, B, r)` with `b0^2 - B·B = r^2`, `b0 > 0`, `r >= 0`.
///
/// Draws `B`, then splits `N = B·B` as `d·e` with `d <= e` of equal parity,
/// giving `b0 = (d + e)/2`, `r = (e - d)/2`. `N ≡ 2 (mod 4)` has no such
/// split and is redrawn. The family contains (13; 0, 0, 5), (13; 3, 4, 12)
/// and (25; 0, 7, 24).
pub fn pythagorean_quadruple(rng: &mut ChaCha8Rng) -> (i64, [i64; 3], i64) {
    let m = PYTHAGOREAN_COMPONENT_MAX;
    loop {
        let b: [i64; 3] = std::array::from_fn(|_| rng.random_range(-m..=m));
        let n: i64 = b.iter().map(|c| c * c).sum();
        if n == 0 {
            let b0 = rng.random_range(1..=m);
            return (b0, b, b0);
        }
        let splits: Vec<(i64, i64)> = (1..)
            .take_while(|d| d * d <= n)
            .filter(|d| n % d == 0 && (d + n / d) % 2 == 0)
            .map(|d| (d, n / d))
            .collect();
        if splits.is_empty() {
            continue;
        }
        let (d, e) = splits[rng.random_range(0..splits.len())];
        return ((d + e) / 2, b, (e - d) / 2);
    }
}

/// A scalar with real part and, when `complex` is set, imaginary part drawn
/// independently.
pub fn draw_scalar<T: Sampled>(rng: &mut ChaCha8Rng, cfg: &SampleConfig, complex: bool) -> T {
    let re = T::draw_real(rng, cfg);
    if complex {
        re + T::i() * T::draw_real(rng, cfg)
    } else {
        re
    }
}

pub fn draw_quat<T: Sampled>(rng: &mut ChaCha8Rng, cfg: &SampleConfig, complex: bool) -> Quat4<T> {
    let s = draw_scalar(rng, cfg, complex);
    let v = std::array::from_fn(|_| draw_scalar(rng, cfg, complex));
    Quat4::new(s, v)
}

/// A unit boost `(gamma; gamma V)`: exact backend boosts come from
/// Pythagorean velocities, so `gamma` is rational.
pub fn draw_unit_boost<T: Sampled>(rng: &mut ChaCha8Rng) -> Quat4<T> {
    let v = T::draw_velocity(rng);
    boost_from_components(&v).expect("sampled velocities are subluminal with rational gamma")
}

/// Pseudorandom 4-vector at `position` (lane A). Exact draws have
/// denominators at most [`MAX_DENOMINATOR`]; imaginary parts are zero unless
/// `cfg.complex_components`.
pub fn sample_quat<T: Sampled>(cfg: &SampleConfig, position: u64) -> Quat4<T> {
    sample_quat_lane(cfg, position, lane::A)
}

pub fn sample_quat_lane<T: Sampled>(cfg: &SampleConfig, position: u64, lane: u64) -> Quat4<T> {
    draw_quat(&mut stream(cfg.seed, position, lane), cfg, cfg.complex_components)
}

/// Right operand for the Lorentz-Einstein rule at `position` (lane B). In the
/// exact backend this is an integer Pythagorean quadruple, so
/// `sqrt(b0^2 - B·B)` is always exact; in the float backend it is an
/// ordinary [`sample_quat`]-style draw.
pub fn sample_le_right<T: Sampled>(cfg: &SampleConfig, position: u64) -> Quat4<T> {
    sample_le_right_lane(cfg, position, lane::B)
}

pub fn sample_le_right_lane<T: Sampled>(cfg: &SampleConfig, position: u64, lane: u64) -> Quat4<T> {
    T::draw_le_right(&mut stream(cfg.seed, position, lane), cfg)
}

pub fn sample_velocity<T: Sampled>(cfg: &SampleConfig, position: u64, lane: u64) -> [T; 3] {
    T::draw_velocity(&mut stream(cfg.seed, position, lane))
}

pub fn sample_unit_boost<T: Sampled>(cfg: &SampleConfig, position: u64, lane: u64) -> Quat4<T> {
    draw_unit_boost(&mut stream(cfg.seed, position, lane))
}

/// `|cos(angle)|^2` between two real vectors, compared against 3/4 (30°).
fn separated_by_30_degrees<T: Scalar>(u: &[T; 3], v: &[T; 3]) -> bool {
    let uv = dot(u, v);
    let lhs = uv.clone() * uv * T::from_i64(4);
    let rhs = dot(u, u) * dot(v, v) * T::from_i64(3);
    matches!((rhs - lhs).real_sign(), Some(Ordering::Greater | Ordering::Equal))
}

/// Three unit boosts whose velocity directions are pairwise at least 30°
/// apart, all drawn from lane A at `position`.
pub fn sample_noncollinear_boosts<T: Sampled>(cfg: &SampleConfig, position: u64) -> [Quat4<T>; 3] {
    let mut rng = stream(cfg.seed, position, lane::A);
    loop {
        let vs: [[T; 3]; 3] = std::array::from_fn(|_| T::draw_velocity(&mut rng));
        let spread = separated_by_30_degrees(&vs[0], &vs[1])
            && separated_by_30_degrees(&vs[1], &vs[2])
            && separated_by_30_degrees(&vs[0], &vs[2]);
        if spread {
            return vs.map(|v| boost_from_components(&v).expect("sampled velocity is subluminal"));
        }
    }
}

/// Real `A` (lane A) and real Lorentz-Einstein right operand `B` (lane B)
/// whose vector parts span a plane.
pub fn sample_independent_real_pair<T: Sampled>(cfg: &SampleConfig, position: u64) -> (Quat4<T>, Quat4<T>) {
    let mut rng_a = stream(cfg.seed, position, lane::A);
    let mut rng_b = stream(cfg.seed, position, lane::B);
    let real_cfg = SampleConfig { complex_components: false, ..cfg.clone() };
    loop {
        let a: Quat4<T> = draw_quat(&mut rng_a, &real_cfg, false);
        let b: Quat4<T> = T::draw_le_right(&mut rng_b, &real_cfg);
        let n = cross(&a.v, &b.v);
        if !dot(&n, &n).is_negligible() {
            return (a, b);
        }
    }
}

/// A 4-vector whose vector part is parallel to `direction`:
/// `(a0; lambda · direction)` with `a0`, `lambda` drawn from lane A.
pub fn sample_parallel<T: Sampled>(cfg: &SampleConfig, position: u64, direction: &[T; 3]) -> Quat4<T> {
    let mut rng = stream(cfg.seed, position, lane::A);
    let a0 = draw_scalar(&mut rng, cfg, cfg.complex_components);
    let lambda = draw_scalar(&mut rng, cfg, cfg.complex_components);
    Quat4::new(a0, vscale(&lambda, direction))
}
