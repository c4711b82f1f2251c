use super::{ExprError, ExprErrorKind, Span};

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    /// Unsigned `p`, `p/q` or decimal, optionally suffixed with `i`.
    Num { text: String, imag: bool },
    Ident(String),
    LParen,
    RParen,
    Semi,
    Comma,
    Plus,
    Minus,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Num { text, imag } => format!("number `{text}{}`", if *imag { "i" } else { "" }),
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

/// Maps byte offsets to 1-based line/column.
pub struct Locator {
    line_starts: Vec<usize>,
}

impl Locator {
    pub fn new(source: &str) -> Self {
        let line_starts = std::iter::once(0).chain(source.match_indices('\n').map(|(i, _)| i + 1)).collect();
        Self { line_starts }
    }

    pub fn span(&self, start: usize, end: usize) -> Span {
        let line = self.line_starts.partition_point(|&s| s <= start);
        let column = start - self.line_starts[line - 1] + 1;
        Span { start, end, line, column }
    }
}

pub fn tokenize(source: &str, locator: &Locator) -> Result<Vec<Token>, ExprError> {
    let bytes = source.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        let start = pos;
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ';' => Some(Tok::Semi),
            ',' => Some(Tok::Comma),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            _ => None,
        };
        if let Some(tok) = single {
            pos += 1;
            tokens.push(Token { tok, span: locator.span(start, pos) });
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let digits = |pos: &mut usize| {
                let from = *pos;
                while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                    *pos += 1;
                }
                *pos - from
            };
            let mut count = digits(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'.' {
                pos += 1;
                count += digits(&mut pos);
            }
            if count == 0 {
                return Err(ExprError::new(
                    ExprErrorKind::Parse("expected digits".into()),
                    locator.span(start, pos),
                ));
            }
            if pos < bytes.len() && bytes[pos] == b'/' {
                pos += 1;
                if digits(&mut pos) == 0 {
                    return Err(ExprError::new(
                        ExprErrorKind::Parse("expected a denominator after `/`".into()),
                        locator.span(start, pos),
                    ));
                }
            }
            let text = source[start..pos].to_string();
            let imag = pos < bytes.len()
                && bytes[pos] == b'i'
                && !bytes.get(pos + 1).is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_');
            if imag {
                pos += 1;
            }
            tokens.push(Token { tok: Tok::Num { text, imag }, span: locator.span(start, pos) });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
            tokens.push(Token { tok: Tok::Ident(source[start..pos].to_string()), span: locator.span(start, pos) });
            continue;
        }
        let ch = source[start..].chars().next().unwrap_or('?');
        return Err(ExprError::new(
            ExprErrorKind::Parse(format!("unexpected character `{ch}`")),
            locator.span(start, start + ch.len_utf8()),
        ));
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        tokenize(s, &Locator::new(s)).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn numbers_and_imaginary_suffix() {
        assert_eq!(
            toks("1+3/4i"),
            vec![
                Tok::Num { text: "1".into(), imag: false },
                Tok::Plus,
                Tok::Num { text: "3/4".into(), imag: true }
            ]
        );
        assert_eq!(toks("2index"), vec![Tok::Num { text: "2".into(), imag: false }, Tok::Ident("index".into())]);
    }

    #[test]
    fn positions_are_one_based() {
        let s = "le(\n  X, #)";
        let err = tokenize(s, &Locator::new(s)).unwrap_err();
        assert_eq!((err.span.line, err.span.column), (2, 6));
    }

    #[test]
    fn dangling_slash_is_rejected() {
        let s = "(1/;0,0,0)";
        assert!(tokenize(s, &Locator::new(s)).is_err());
    }
}
