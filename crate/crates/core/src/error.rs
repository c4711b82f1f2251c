use thiserror::Error;

use crate::scalar::Backend;

/// Failures raised by the algebra itself (composition rules, boosts, Pauli
/// representation).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("backend mismatch: {left} operand combined with {right} operand")]
    BackendMismatch { left: Backend, right: Backend },

    #[error("no exact square root of {value}; use the float backend or a perfect-square radicand")]
    SqrtNotExact { value: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("velocity is not subluminal: |v|^2 = {speed_sq}")]
    SuperluminalVelocity { speed_sq: String },

    #[error("not a unit boost: {reason}")]
    NotAUnitBoost { reason: String },

    #[error("composition with the conjugate left a nonzero vector part {residue}")]
    VectorResidueNonzero { residue: String },

    #[error("Pauli index {0} is outside 0..=3")]
    IndexOutOfRange(usize),

    #[error("null spinor requested for zero momentum")]
    ZeroMomentum,

    #[error("frame {{A, B, A x B}} is degenerate: vector parts are collinear or zero")]
    DegenerateFrame,

    #[error("malformed scalar: {0}")]
    MalformedScalar(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
