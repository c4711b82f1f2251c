use std::fmt;

use super::eval::typecheck_closed;
use super::lexer::{tokenize, Locator, Tok, Token};
use super::{ComplexLit, Expr, ExprError, ExprErrorKind, ExprKind, Func, RealLit, Span};

/// Parses and type-checks an expression. Variables are 4-vectors, so every
/// type error is caught here rather than during evaluation.
pub fn parse(source: &str) -> Result<Expr, ExprError> {
    let locator = Locator::new(source);
    let tokens = tokenize(source, &locator)?;
    let mut parser = Parser { tokens, pos: 0, eof: locator.span(source.len(), source.len()) };
    let expr = parser.expr()?;
    if let Some(extra) = parser.tokens.get(parser.pos) {
        return Err(parse_error(format!("unexpected {} after expression", extra.tok.describe()), extra.span));
    }
    typecheck_closed(&expr)?;
    Ok(expr)
}

impl RealLit {
    /// Parses a lone signed real such as `-3/5` or `0.25`.
    pub fn parse(source: &str) -> Result<RealLit, ExprError> {
        let locator = Locator::new(source);
        let tokens = tokenize(source, &locator)?;
        let mut parser = Parser { tokens, pos: 0, eof: locator.span(source.len(), source.len()) };
        let lit = parser.real()?;
        if let Some(extra) = parser.peek() {
            return Err(parse_error(format!("unexpected {} after number", extra.tok.describe()), extra.span));
        }
        Ok(lit)
    }
}

fn parse_error(msg: String, span: Span) -> ExprError {
    ExprError::new(ExprErrorKind::Parse(msg), span)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    eof: Span,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_tok(&self) -> Option<&Tok> {
        self.peek().map(|t| &t.tok)
    }

    fn bump(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        token
    }

    fn here(&self) -> Span {
        self.peek().map_or(self.eof, |t| t.span)
    }

    fn unexpected(&self, wanted: &str) -> ExprError {
        let found = self.peek().map_or("end of input".to_string(), |t| t.tok.describe());
        parse_error(format!("expected {wanted}, found {found}"), self.here())
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<Span, ExprError> {
        if self.peek_tok() == Some(&tok) {
            Ok(self.bump().expect("peeked").span)
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        match self.peek_tok() {
            Some(Tok::LParen) => self.quat(),
            Some(Tok::Ident(name)) => {
                let name = name.clone();
                let span = self.bump().expect("peeked").span;
                let is_call = self.peek_tok() == Some(&Tok::LParen);
                match (Func::from_name(&name), is_call) {
                    (Some(func), true) => self.call(func, span),
                    (Some(_), false) => Err(parse_error(format!("expected `(` after `{name}`"), self.here())),
                    (None, true) => Err(parse_error(format!("unknown function `{name}`"), span)),
                    (None, false) => Ok(Expr { kind: ExprKind::Var(name), span }),
                }
            }
            _ => Err(self.unexpected("an expression")),
        }
    }

    fn call(&mut self, func: Func, start: Span) -> Result<Expr, ExprError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut args = Vec::new();
        let mut reals = Vec::new();
        if self.peek_tok() != Some(&Tok::RParen) {
            loop {
                if func == Func::Boost {
                    reals.push(self.real()?);
                } else {
                    args.push(self.expr()?);
                }
                if self.peek_tok() == Some(&Tok::Comma) {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        let end = self.expect(Tok::RParen, "`,` or `)`")?;
        let span = start.to(end);
        let found = if func == Func::Boost { reals.len() } else { args.len() };
        if found != func.arity() {
            return Err(ExprError::new(
                ExprErrorKind::Arity { func: func.name(), expected: func.arity(), found },
                span,
            ));
        }
        let kind = match <[RealLit; 3]>::try_from(reals) {
            Ok(v) if func == Func::Boost => ExprKind::Boost(v),
            _ => ExprKind::Call { func, args },
        };
        Ok(Expr { kind, span })
    }

    fn quat(&mut self) -> Result<Expr, ExprError> {
        let start = self.expect(Tok::LParen, "`(`")?;
        let s = self.cnum()?;
        self.expect(Tok::Semi, "`;`")?;
        let v1 = self.cnum()?;
        self.expect(Tok::Comma, "`,`")?;
        let v2 = self.cnum()?;
        self.expect(Tok::Comma, "`,`")?;
        let v3 = self.cnum()?;
        let end = self.expect(Tok::RParen, "`)`")?;
        Ok(Expr { kind: ExprKind::Quat(Box::new([s, v1, v2, v3])), span: start.to(end) })
    }

    fn sign(&mut self) -> bool {
        match self.peek_tok() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        }
    }

    /// An unsigned number token, returned with its imaginary flag.
    /// A bare `i` reads as `1i`.
    fn magnitude(&mut self) -> Result<(String, bool), ExprError> {
        match self.peek_tok() {
            Some(Tok::Num { text, imag }) => {
                let out = (text.clone(), *imag);
                self.bump();
                Ok(out)
            }
            Some(Tok::Ident(name)) if name == "i" => {
                self.bump();
                Ok(("1".to_string(), true))
            }
            _ => Err(self.unexpected("a number")),
        }
    }

    fn cnum(&mut self) -> Result<ComplexLit, ExprError> {
        let negative = self.sign();
        let (text, imag) = self.magnitude()?;
        let first = RealLit { negative, text };
        if imag {
            return Ok(ComplexLit { re: None, im: Some(first) });
        }
        let negative = match self.peek_tok() {
            Some(Tok::Plus | Tok::Minus) => self.sign(),
            _ => return Ok(ComplexLit { re: Some(first), im: None }),
        };
        let span = self.here();
        let (text, imag) = self.magnitude()?;
        if !imag {
            return Err(parse_error("expected an imaginary part such as `2i`".into(), span));
        }
        Ok(ComplexLit { re: Some(first), im: Some(RealLit { negative, text }) })
    }

    fn real(&mut self) -> Result<RealLit, ExprError> {
        let negative = self.sign();
        let span = self.here();
        let (text, imag) = self.magnitude()?;
        if imag {
            return Err(parse_error("boost components must be real".into(), span));
        }
        Ok(RealLit { negative, text })
    }
}

impl fmt::Display for RealLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str(&self.text)
    }
}

impl fmt::Display for ComplexLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.re, &self.im) {
            (Some(re), Some(im)) => write!(f, "{re}{}{}i", if im.negative { "-" } else { "+" }, im.text),
            (Some(re), None) => write!(f, "{re}"),
            (None, Some(im)) => write!(f, "{im}i"),
            (None, None) => f.write_str("0"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Quat(c) => write!(f, "({}; {}, {}, {})", c[0], c[1], c[2], c[3]),
            ExprKind::Var(name) => f.write_str(name),
            ExprKind::Boost([x, y, z]) => write!(f, "boost({x}, {y}, {z})"),
            ExprKind::Call { func, args } => {
                write!(f, "{}(", func.name())?;
                for (k, arg) in args.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{arg}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl Expr {
    /// The same tree with every span reset, for structural comparison.
    pub fn without_spans(&self) -> Expr {
        let kind = match &self.kind {
            ExprKind::Call { func, args } => {
                ExprKind::Call { func: *func, args: args.iter().map(Expr::without_spans).collect() }
            }
            other => other.clone(),
        };
        Expr { kind, span: Span::default() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(source: &str) -> ExprErrorKind {
        parse(source).unwrap_err().kind
    }

    #[test]
    fn accepts_documented_forms() {
        for source in [
            "rs((1;1,0,0),(1;0,1,0))",
            "qform((13;0,0,5))",
            "det(embed(le(X, boost(3/5, 0, 0))))",
            "cross((0;1,0,0), (0; 0, 1+2i, -i))",
            "conj((1/2; 0.25, -3i, 1-1/3i))",
        ] {
            parse(source).unwrap_or_else(|e| panic!("{source}: {e}"));
        }
    }

    #[test]
    fn arity_errors() {
        assert_eq!(kind("le((1;1,0,0))"), ExprErrorKind::Arity { func: "le", expected: 2, found: 1 });
        assert_eq!(kind("qform()"), ExprErrorKind::Arity { func: "qform", expected: 1, found: 0 });
        assert_eq!(kind("boost(1, 2)"), ExprErrorKind::Arity { func: "boost", expected: 3, found: 2 });
    }

    #[test]
    fn type_errors() {
        assert!(matches!(kind("det((1;0,0,0))"), ExprErrorKind::Type(_)));
        assert!(matches!(kind("le(qform(X), X)"), ExprErrorKind::Type(_)));
        assert!(matches!(kind("embed(embed(X))"), ExprErrorKind::Type(_)));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse("rs((1;1,0,0),\n   (1;0,1 0))").unwrap_err();
        assert!(matches!(err.kind, ExprErrorKind::Parse(_)));
        assert_eq!((err.span.line, err.span.column), (2, 11));
        assert_eq!(parse("le(X, Y) Z").unwrap_err().span.column, 10);
        assert!(matches!(kind("foo(X)"), ExprErrorKind::Parse(_)));
        assert!(matches!(kind("le"), ExprErrorKind::Parse(_)));
        assert!(matches!(kind("(1+2;0,0,0)"), ExprErrorKind::Parse(_)));
        assert!(matches!(kind("boost(1i,0,0)"), ExprErrorKind::Parse(_)));
    }

    #[test]
    fn printing_reparses_to_the_same_tree() {
        let source = "le(conj((-1/2+3i; i, -i, 0.5)), rs(X, boost(-3/5, 0, 4/5)))";
        let expr = parse(source).unwrap();
        let again = parse(&expr.to_string()).unwrap();
        assert_eq!(expr.without_spans(), again.without_spans());
    }
}
