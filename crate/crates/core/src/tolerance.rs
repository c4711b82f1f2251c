//! Float tolerances, pinned in one place.
//!
//! The exact backend never consults these: exact identities must hold with
//! zero residual.

/// Relative error allowed for a single composition.
pub const SINGLE_REL: f64 = 1e-12;

/// Relative error allowed for chained compositions (depth up to 8).
pub const CHAINED_REL: f64 = 1e-9;

/// Absolute floor under which two float values always compare equal.
pub const ABS_FLOOR: f64 = 1e-15;

/// Magnitude below which the `B·B = 0` rule of the Lorentz-Einstein
/// composition applies, and below which frame determinants count as zero.
pub const FLOAT_NEGLIGIBLE: f64 = 1e-30;

/// Absolute error allowed between composed-boost velocities and the
/// velocity-addition formula.
pub const VELOCITY_ABS: f64 = 1e-10;

/// Relative discrepancy a float sample must exceed to count as a
/// counterexample witness.
pub const WITNESS_REL: f64 = 1e-6;

/// Largest speed drawn by the float velocity sampler. Keeps the Lorentz
/// factor below ~3.2 so `gamma^2 * eps` stays far inside [`SINGLE_REL`].
pub const MAX_SAMPLED_SPEED: f64 = 0.95;

/// Relative residual `|lhs - rhs| / max(|lhs|, |rhs|, scale, ABS_FLOOR)`.
///
/// `scale` is the natural magnitude of the quantity being compared (for
/// example the product of operand magnitudes in a multiplicativity check),
/// so that exact cancellation to zero does not inflate the ratio.
pub fn relative(abs: f64, lhs_mag: f64, rhs_mag: f64, scale: f64) -> f64 {
    abs / lhs_mag.max(rhs_mag).max(scale).max(ABS_FLOOR)
}

/// Float comparison policy: pass when the absolute residual is under the
/// floor or the relative residual is under `rel_tol`.
pub fn within(abs: f64, rel: f64, rel_tol: f64) -> bool {
    abs <= ABS_FLOOR || rel <= rel_tol
}
