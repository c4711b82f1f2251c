use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::boost::boost_from_components;
use crate::dynamic::{AnyMat, AnyQuat};
use crate::error::AlgebraError;
use crate::quat::{Quat4, Rule};
use crate::scalar::{parse_rational, Backend, CScalar, GaussianRational};

use super::{ComplexLit, Expr, ExprError, ExprErrorKind, ExprKind, Func, RealLit};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Type {
    Scalar,
    Quat,
    Matrix,
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Type::Scalar => "a scalar",
            Type::Quat => "a 4-vector",
            Type::Matrix => "a matrix",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Scalar(CScalar),
    Quat(AnyQuat),
    Matrix(AnyMat),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Quat(q) => write!(f, "{q}"),
            Value::Matrix(m) => write!(f, "{m}"),
        }
    }
}

/// A named 4-vector available to an expression.
#[derive(Clone, Debug, PartialEq)]
pub struct Binding {
    pub name: String,
    pub value: AnyQuat,
}

impl Binding {
    pub fn new(name: impl Into<String>, value: AnyQuat) -> Self {
        Self { name: name.into(), value }
    }
}

/// Result type of `expr`; variables are 4-vectors.
pub fn typecheck(expr: &Expr) -> Result<Type, ExprError> {
    let arg_types = match &expr.kind {
        ExprKind::Quat(_) | ExprKind::Var(_) | ExprKind::Boost(_) => return Ok(Type::Quat),
        ExprKind::Call { args, .. } => args.iter().map(typecheck).collect::<Result<Vec<_>, _>>()?,
    };
    let ExprKind::Call { func, args } = &expr.kind else { unreachable!() };
    let (wanted, out) = match func {
        Func::Le | Func::Rs | Func::Cross | Func::Conj => (Type::Quat, Type::Quat),
        Func::Qform => (Type::Quat, Type::Scalar),
        Func::Embed => (Type::Quat, Type::Matrix),
        Func::Det => (Type::Matrix, Type::Scalar),
        Func::Boost => unreachable!("boost parses to ExprKind::Boost"),
    };
    for (arg, ty) in args.iter().zip(arg_types) {
        if ty != wanted {
            return Err(ExprError::new(
                ExprErrorKind::Type(format!("{} expects {wanted}, got {ty}", func.name())),
                arg.span,
            ));
        }
    }
    Ok(out)
}

pub(super) fn typecheck_closed(expr: &Expr) -> Result<(), ExprError> {
    typecheck(expr).map(|_| ())
}

/// Evaluates `expr` bottom-up in `backend`. Bindings must use the same
/// backend and distinct names.
pub fn evaluate(expr: &Expr, bindings: &[Binding], backend: Backend) -> Result<Value, ExprError> {
    let mut env = HashMap::new();
    for b in bindings {
        if env.insert(b.name.as_str(), &b.value).is_some() {
            return Err(ExprError::new(ExprErrorKind::DuplicateBinding(b.name.clone()), expr.span));
        }
    }
    typecheck(expr)?;
    Evaluator { env, backend }.eval(expr)
}

struct Evaluator<'a> {
    env: HashMap<&'a str, &'a AnyQuat>,
    backend: Backend,
}

impl Evaluator<'_> {
    fn eval(&self, expr: &Expr) -> Result<Value, ExprError> {
        let at = |e: AlgebraError| ExprError::new(e.into(), expr.span);
        match &expr.kind {
            ExprKind::Quat(lits) => self.quat_literal(lits).map(Value::Quat).map_err(at),
            ExprKind::Var(name) => {
                let value = *self
                    .env
                    .get(name.as_str())
                    .ok_or_else(|| ExprError::new(ExprErrorKind::UnboundVariable(name.clone()), expr.span))?;
                if value.backend() != self.backend {
                    return Err(at(AlgebraError::BackendMismatch { left: self.backend, right: value.backend() }));
                }
                Ok(Value::Quat(value.clone()))
            }
            ExprKind::Boost(v) => self.boost(v).map(Value::Quat).map_err(at),
            ExprKind::Call { func, args } => {
                let values = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>, _>>()?;
                apply(*func, values).map_err(at)
            }
        }
    }

    fn quat_literal(&self, lits: &[ComplexLit; 4]) -> Result<AnyQuat, AlgebraError> {
        let [s, v1, v2, v3] = lits;
        match self.backend {
            Backend::Exact => Ok(AnyQuat::Exact(Quat4::new(
                exact_complex(s)?,
                [exact_complex(v1)?, exact_complex(v2)?, exact_complex(v3)?],
            ))),
            Backend::Float => Ok(AnyQuat::Float(Quat4::new(
                float_complex(s)?,
                [float_complex(v1)?, float_complex(v2)?, float_complex(v3)?],
            ))),
        }
    }

    fn boost(&self, v: &[RealLit; 3]) -> Result<AnyQuat, AlgebraError> {
        let [x, y, z] = v;
        match self.backend {
            Backend::Exact => {
                let v = [x, y, z].map(|r| exact_real(r).map(GaussianRational::real));
                let [x, y, z] = v;
                boost_from_components(&[x?, y?, z?]).map(AnyQuat::Exact)
            }
            Backend::Float => {
                let [x, y, z] = [x, y, z].map(|r| float_real(r).map(|f| Complex64::new(f, 0.0)));
                boost_from_components(&[x?, y?, z?]).map(AnyQuat::Float)
            }
        }
    }
}

fn apply(func: Func, values: Vec<Value>) -> Result<Value, AlgebraError> {
    let mut it = values.into_iter();
    let mut next = || it.next().expect("arity checked by the parser");
    let quat = |v: Value| match v {
        Value::Quat(q) => q,
        _ => unreachable!("type checked"),
    };
    Ok(match func {
        Func::Le => Value::Quat(quat(next()).compose(&quat(next()), Rule::LorentzEinstein)?),
        Func::Rs => Value::Quat(quat(next()).compose(&quat(next()), Rule::ReciprocalSymmetric)?),
        Func::Cross => Value::Quat(quat(next()).cross_term(&quat(next()))?),
        Func::Conj => Value::Quat(quat(next()).conj()),
        Func::Qform => Value::Scalar(quat(next()).qform()),
        Func::Embed => Value::Matrix(quat(next()).embed()),
        Func::Det => match next() {
            Value::Matrix(m) => Value::Scalar(m.det()),
            _ => unreachable!("type checked"),
        },
        Func::Boost => unreachable!("boost parses to ExprKind::Boost"),
    })
}

fn exact_real(lit: &RealLit) -> Result<num_rational::BigRational, AlgebraError> {
    let value = parse_rational(&lit.text)?;
    Ok(if lit.negative { -value } else { value })
}

fn exact_complex(lit: &ComplexLit) -> Result<GaussianRational, AlgebraError> {
    let part = |p: &Option<RealLit>| p.as_ref().map_or(Ok(num_traits::Zero::zero()), exact_real);
    Ok(GaussianRational::new(part(&lit.re)?, part(&lit.im)?))
}

/// Decimals go straight through `f64` parsing; `p/q` is divided in floating
/// point unless either side overflows, in which case the exact ratio is rounded.
fn float_real(lit: &RealLit) -> Result<f64, AlgebraError> {
    let bad = || AlgebraError::MalformedScalar(lit.text.clone());
    let value = match lit.text.split_once('/') {
        None => lit.text.parse::<f64>().map_err(|_| bad())?,
        Some((p, q)) => {
            let (p, q) = (p.parse::<f64>().map_err(|_| bad())?, q.parse::<f64>().map_err(|_| bad())?);
            if q == 0.0 {
                return Err(AlgebraError::DivisionByZero);
            }
            let ratio = p / q;
            if ratio.is_finite() && p.is_finite() && q.is_finite() {
                ratio
            } else {
                parse_rational(&lit.text)?.to_f64().ok_or_else(bad)?
            }
        }
    };
    Ok(if lit.negative { -value } else { value })
}

fn float_complex(lit: &ComplexLit) -> Result<Complex64, AlgebraError> {
    let part = |p: &Option<RealLit>| p.as_ref().map_or(Ok(0.0), float_real);
    Ok(Complex64::new(part(&lit.re)?, part(&lit.im)?))
}
