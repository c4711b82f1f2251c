//! A small expression language over 4-vectors.
//!
//! ```text
//! expr    := term | func
//! func    := ("le" | "rs" | "cross") "(" expr "," expr ")"
//!          | ("conj" | "qform" | "embed" | "det") "(" expr ")"
//!          | "boost" "(" num "," num "," num ")"
//! term    := ident | quat
//! quat    := "(" cnum ";" cnum "," cnum "," cnum ")"
//! cnum    := num | num ("+"|"-") num "i" | num "i"
//! num     := rational ("p/q") | decimal
//! ```
//!
//! Numbers may carry a leading sign and a bare `i` means `1i`, so every
//! printed value re-parses to itself.

mod eval;
mod lexer;
mod parser;

use std::fmt;

use thiserror::Error;

use crate::error::AlgebraError;

pub use eval::{evaluate, typecheck, Binding, Type, Value};
pub use parser::parse;

/// Byte range of a subexpression plus the 1-based line/column of its start.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub column: usize,
}

impl Span {
    pub fn to(self, other: Span) -> Span {
        Span { end: other.end, ..self }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Le,
    Rs,
    Cross,
    Conj,
    Qform,
    Embed,
    Det,
    Boost,
}

impl Func {
    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "le" => Func::Le,
            "rs" => Func::Rs,
            "cross" => Func::Cross,
            "conj" => Func::Conj,
            "qform" => Func::Qform,
            "embed" => Func::Embed,
            "det" => Func::Det,
            "boost" => Func::Boost,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Le => "le",
            Func::Rs => "rs",
            Func::Cross => "cross",
            Func::Conj => "conj",
            Func::Qform => "qform",
            Func::Embed => "embed",
            Func::Det => "det",
            Func::Boost => "boost",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Le | Func::Rs | Func::Cross => 2,
            Func::Conj | Func::Qform | Func::Embed | Func::Det => 1,
            Func::Boost => 3,
        }
    }
}

/// A signed real literal, kept as source text so each backend converts it
/// without an intermediate rounding step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealLit {
    pub negative: bool,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexLit {
    pub re: Option<RealLit>,
    pub im: Option<RealLit>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Quat(Box<[ComplexLit; 4]>),
    Var(String),
    Call { func: Func, args: Vec<Expr> },
    Boost([RealLit; 3]),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ExprErrorKind {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("arity error: {func} takes {expected} argument(s), got {found}")]
    Arity { func: &'static str, expected: usize, found: usize },
    #[error("type error: {0}")]
    Type(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("variable `{0}` bound more than once")]
    DuplicateBinding(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Error)]
#[error("{span}: {kind}")]
pub struct ExprError {
    pub kind: ExprErrorKind,
    pub span: Span,
}

impl ExprError {
    pub fn new(kind: ExprErrorKind, span: Span) -> Self {
        Self { kind, span }
    }
}
