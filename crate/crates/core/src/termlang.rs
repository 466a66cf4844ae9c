//! Input language: scalar literals, group-element literals, group words and
//! formula calls.
//!
//! ```text
//! scalar  := ['-'|'+'] term (('+'|'-') term)*
//! term    := rational | rational? 'r2'
//! rational:= INT ('/' INT)?
//! expr    := unary ('*' unary)*
//! unary   := atom ('^' ['-'] INT)*
//! atom    := '[' scalar ',' scalar ',' scalar (',' scalar)? ']'
//!          | IDENT '(' (expr (',' expr)*)? ')'
//!          | '(' scalar ',' scalar ')'
//!          | '(' expr ')'
//!          | scalar
//! ```
//!
//! Whitespace is insignificant. Element literals are canonicalised while
//! parsing, so `[0,0,3/2]` and `[0,0,1/2]` parse to the same tree.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::gprime::GPrimeElem;
use crate::group::{EPoint, GElem};
use crate::interp::{definable_reals_demo, DemoError, Value};
use crate::qfield::{QuadRat, Rational};

const MAX_DEPTH: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Int,
    Slash,
    R2,
    Plus,
    Minus,
    Star,
    Caret,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Ident,
}

impl TokenKind {
    fn describe(self) -> &'static str {
        match self {
            TokenKind::Int => "integer",
            TokenKind::Slash => "'/'",
            TokenKind::R2 => "'r2'",
            TokenKind::Plus => "'+'",
            TokenKind::Minus => "'-'",
            TokenKind::Star => "'*'",
            TokenKind::Caret => "'^'",
            TokenKind::LBracket => "'['",
            TokenKind::RBracket => "']'",
            TokenKind::LParen => "'('",
            TokenKind::RParen => "')'",
            TokenKind::Comma => "','",
            TokenKind::Ident => "identifier",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub pos: usize,
}

/// A lexical, syntax or literal error, located by byte offset.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at offset {pos}: {message}{}", fmt_expected(.expected))]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
}

fn fmt_expected(expected: &[&'static str]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected {})", expected.join(", "))
    }
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
            expected: Vec::new(),
        }
    }
}

pub fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match ch {
            '/' => Some(TokenKind::Slash),
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '^' => Some(TokenKind::Caret),
            '[' => Some(TokenKind::LBracket),
            ']' => Some(TokenKind::RBracket),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            ',' => Some(TokenKind::Comma),
            _ => None,
        };
        if let Some(kind) = single {
            chars.next();
            tokens.push(Token {
                kind,
                lexeme: ch.to_string(),
                pos,
            });
            continue;
        }
        let word = |pred: fn(char) -> bool, chars: &mut std::iter::Peekable<std::str::CharIndices>| {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if !pred(c) {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            input[pos..end].to_string()
        };
        if ch.is_ascii_digit() {
            let lexeme = word(|c| c.is_ascii_digit(), &mut chars);
            tokens.push(Token {
                kind: TokenKind::Int,
                lexeme,
                pos,
            });
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let lexeme = word(|c| c.is_ascii_alphanumeric() || c == '_', &mut chars);
            let kind = if lexeme == "r2" {
                TokenKind::R2
            } else {
                TokenKind::Ident
            };
            tokens.push(Token { kind, lexeme, pos });
        } else {
            return Err(ParseError::new(pos, format!("unexpected character {ch:?}")));
        }
    }
    Ok(tokens)
}

/// Parsed term of the input language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(QuadRat),
    G(GElem),
    GPrime(GPrimeElem),
    Point(EPoint),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(String, Vec<Expr>),
}

impl fmt::Display for Expr {
    /// Canonical literal syntax; the output parses back to an equal tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(s) => write!(f, "{s}"),
            Expr::G(g) => write!(f, "{g}"),
            Expr::GPrime(g) => write!(f, "{g}"),
            Expr::Point(p) => write!(f, "{p}"),
            Expr::Mul(l, r) => {
                write!(f, "{l}*")?;
                if matches!(**r, Expr::Mul(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            Expr::Pow(b, n) => {
                if matches!(**b, Expr::Mul(..)) {
                    write!(f, "({b})^{n}")
                } else {
                    write!(f, "{b}^{n}")
                }
            }
            Expr::Call(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    idx: usize,
    end: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn new(tokens: &'a [Token], input_len: usize) -> Self {
        Parser {
            tokens,
            idx: 0,
            end: input_len,
            depth: 0,
        }
    }

    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.idx)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn bump(&mut self) -> &'a Token {
        let t = &self.tokens[self.idx];
        self.idx += 1;
        t
    }

    fn error(&self, expected: &[TokenKind]) -> ParseError {
        let message = match self.peek() {
            Some(t) => format!("unexpected {:?}", t.lexeme),
            None => "unexpected end of input".to_string(),
        };
        ParseError {
            pos: self.pos(),
            message,
            expected: expected.iter().map(|k| k.describe()).collect(),
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<&'a Token, ParseError> {
        if self.peek_kind() == Some(kind) {
            Ok(self.bump())
        } else {
            Err(self.error(&[kind]))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(ParseError::new(t.pos, format!("trailing input {:?}", t.lexeme))),
        }
    }

    fn int(&mut self) -> Result<(BigInt, usize), ParseError> {
        let t = self.expect(TokenKind::Int)?;
        let n = t.lexeme.parse::<BigInt>().expect("lexer yields digits");
        Ok((n, t.pos))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let (num, _) = self.int()?;
        if self.peek_kind() == Some(TokenKind::Slash) {
            self.bump();
            let (den, pos) = self.int()?;
            if den.is_zero() {
                return Err(ParseError::new(pos, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn term(&mut self) -> Result<QuadRat, ParseError> {
        match self.peek_kind() {
            Some(TokenKind::R2) => {
                self.bump();
                Ok(QuadRat::sqrt2())
            }
            Some(TokenKind::Int) => {
                let r = self.rational()?;
                if self.peek_kind() == Some(TokenKind::R2) {
                    self.bump();
                    Ok(QuadRat::new(Rational::zero(), r))
                } else {
                    Ok(QuadRat::from_rational(r))
                }
            }
            _ => Err(self.error(&[TokenKind::Int, TokenKind::R2])),
        }
    }

    fn scalar(&mut self) -> Result<QuadRat, ParseError> {
        let negate = match self.peek_kind() {
            Some(TokenKind::Minus) => {
                self.bump();
                true
            }
            Some(TokenKind::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek_kind() {
                Some(TokenKind::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(TokenKind::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_scalar(&self) -> bool {
        matches!(
            self.peek_kind(),
            Some(TokenKind::Int | TokenKind::R2 | TokenKind::Minus | TokenKind::Plus)
        )
    }

    fn element(&mut self) -> Result<Expr, ParseError> {
        self.expect(TokenKind::LBracket)?;
        let mut entries = vec![self.scalar()?];
        let mut x_pos = 0;
        while self.peek_kind() == Some(TokenKind::Comma) && entries.len() < 4 {
            self.bump();
            x_pos = self.pos();
            entries.push(self.scalar()?);
        }
        if entries.len() < 3 {
            return Err(self.error(&[TokenKind::Comma]));
        }
        let close = if entries.len() == 3 {
            &[TokenKind::Comma, TokenKind::RBracket][..]
        } else {
            &[TokenKind::RBracket][..]
        };
        if self.peek_kind() != Some(TokenKind::RBracket) {
            return Err(self.error(close));
        }
        self.bump();
        let mut it = entries.into_iter();
        let (a, b, c) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
        match it.next() {
            None => Ok(Expr::G(GElem::new(a, b, c))),
            Some(x) => GPrimeElem::new(a, b, c, x)
                .map(Expr::GPrime)
                .map_err(|e| ParseError::new(x_pos, e.to_string())),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek_kind() {
            Some(TokenKind::LBracket) => self.element(),
            Some(TokenKind::Ident) => {
                let name = self.bump().lexeme.clone();
                self.expect(TokenKind::LParen)?;
                let mut args = Vec::new();
                if self.peek_kind() != Some(TokenKind::RParen) {
                    args.push(self.expr()?);
                    while self.peek_kind() == Some(TokenKind::Comma) {
                        self.bump();
                        args.push(self.expr()?);
                    }
                }
                if self.peek_kind() != Some(TokenKind::RParen) {
                    return Err(self.error(&[TokenKind::Comma, TokenKind::RParen]));
                }
                self.bump();
                Ok(Expr::Call(name, args))
            }
            Some(TokenKind::LParen) => {
                self.bump();
                let inner = self.expr()?;
                match (self.peek_kind(), &inner) {
                    (Some(TokenKind::Comma), Expr::Scalar(a)) => {
                        let a = a.clone();
                        self.bump();
                        let b = self.scalar()?;
                        self.expect(TokenKind::RParen)?;
                        Ok(Expr::Point(EPoint::new(a, b)))
                    }
                    (Some(TokenKind::RParen), _) => {
                        self.bump();
                        Ok(inner)
                    }
                    (_, Expr::Scalar(_)) => Err(self.error(&[TokenKind::Comma, TokenKind::RParen])),
                    _ => Err(self.error(&[TokenKind::RParen])),
                }
            }
            _ if self.starts_scalar() => self.scalar().map(Expr::Scalar),
            _ => Err(self.error(&[
                TokenKind::LBracket,
                TokenKind::LParen,
                TokenKind::Ident,
                TokenKind::Int,
                TokenKind::R2,
            ])),
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while self.peek_kind() == Some(TokenKind::Caret) {
            self.bump();
            let neg = if self.peek_kind() == Some(TokenKind::Minus) {
                self.bump();
                true
            } else {
                false
            };
            let t = self.expect(TokenKind::Int)?;
            let n: i64 = t
                .lexeme
                .parse()
                .map_err(|_| ParseError::new(t.pos, "exponent out of range"))?;
            base = Expr::Pow(Box::new(base), if neg { -n } else { n });
        }
        Ok(base)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::new(self.pos(), "nesting too deep"));
        }
        let mut lhs = self.unary()?;
        while self.peek_kind() == Some(TokenKind::Star) {
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        self.depth -= 1;
        Ok(lhs)
    }
}

/// Parses a complete scalar literal such as `3/2+2r2`.
pub fn parse_scalar(input: &str) -> Result<QuadRat, ParseError> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(&tokens, input.len());
    let s = p.scalar()?;
    p.finish()?;
    Ok(s)
}

/// Parses a complete expression.
pub fn parse_expr(input: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(&tokens, input.len());
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

fn parse_kind<T>(input: &str, what: &str, pick: fn(Expr) -> Option<T>) -> Result<T, ParseError> {
    pick(parse_expr(input)?).ok_or_else(|| ParseError::new(0, format!("expected {what}")))
}

/// Parses a `[a,b,c]` literal.
pub fn parse_g(input: &str) -> Result<GElem, ParseError> {
    parse_kind(input, "a G element [a,b,c]", |e| match e {
        Expr::G(g) => Some(g),
        _ => None,
    })
}

/// Parses a `[a,b,c,x]` literal.
pub fn parse_gprime(input: &str) -> Result<GPrimeElem, ParseError> {
    parse_kind(input, "a G' element [a,b,c,x]", |e| match e {
        Expr::GPrime(g) => Some(g),
        _ => None,
    })
}

/// Parses a `(a,b)` literal.
pub fn parse_point(input: &str) -> Result<EPoint, ParseError> {
    parse_kind(input, "a point (a,b)", |e| match e {
        Expr::Point(p) => Some(p),
        _ => None,
    })
}

impl std::str::FromStr for QuadRat {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

impl std::str::FromStr for GElem {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_g(s)
    }
}

impl std::str::FromStr for GPrimeElem {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gprime(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("type error: {0}")]
    Type(String),
    #[error(transparent)]
    Demo(#[from] DemoError),
}

/// Evaluates a parsed expression: words in `G` or `G'`, literals, and calls
/// into the formula catalog.
pub fn eval(e: &Expr) -> Result<Value, EvalError> {
    match e {
        Expr::Scalar(s) => Ok(Value::Scalar(s.clone())),
        Expr::G(g) => Ok(Value::G(g.clone())),
        Expr::GPrime(g) => Ok(Value::GPrime(g.clone())),
        Expr::Point(p) => Ok(Value::Point(p.clone())),
        Expr::Mul(l, r) => match (eval(l)?, eval(r)?) {
            (Value::G(x), Value::G(y)) => Ok(Value::G(x.mul(&y))),
            (Value::GPrime(x), Value::GPrime(y)) => Ok(Value::GPrime(x.mul(&y))),
            (x, y) => Err(EvalError::Type(format!(
                "cannot multiply {} by {}",
                x.kind(),
                y.kind()
            ))),
        },
        Expr::Pow(b, n) => match eval(b)? {
            Value::G(x) => Ok(Value::G(x.pow(*n))),
            Value::GPrime(x) => Ok(Value::GPrime(x.pow(*n))),
            v => Err(EvalError::Type(format!("cannot raise {} to a power", v.kind()))),
        },
        Expr::Call(name, args) => {
            let vals = args.iter().map(eval).collect::<Result<Vec<_>, _>>()?;
            Ok(definable_reals_demo(name, &vals)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(s: &str) -> Vec<TokenKind> {
        tokenize(s).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn lexing() {
        use TokenKind::*;
        assert_eq!(kinds("3/2+2r2"), vec![Int, Slash, Int, Plus, Int, R2]);
        assert_eq!(
            kinds("[0,1,0,1]*[1,0,0,1]"),
            vec![
                LBracket, Int, Comma, Int, Comma, Int, Comma, Int, RBracket, Star, LBracket, Int,
                Comma, Int, Comma, Int, Comma, Int, RBracket
            ]
        );
        assert_eq!(&kinds("coll((0,0),(1,1),(2,2))")[..3], &[Ident, LParen, LParen]);
        let err = tokenize("1 + #").unwrap_err();
        assert_eq!(err.pos, 4);
    }

    #[test]
    fn token_positions_increase() {
        let toks = tokenize(" [ 1 , r2 ,3/4 ] ").unwrap();
        assert!(toks.windows(2).all(|w| w[0].pos < w[1].pos));
        let joined: String = toks.iter().map(|t| t.lexeme.as_str()).collect();
        assert_eq!(joined, "[1,r2,3/4]");
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("3/2+2r2").unwrap(), QuadRat::from_parts(3, 2, 2, 1));
        assert_eq!(parse_scalar("-r2").unwrap(), -QuadRat::sqrt2());
        assert_eq!(parse_scalar(" 5 ").unwrap(), QuadRat::from_int(5));
        assert_eq!(parse_scalar("1/2r2 - 1").unwrap(), QuadRat::from_parts(-1, 1, 1, 2));
        let err = parse_scalar("1/0").unwrap_err();
        assert_eq!((err.pos, err.message.as_str()), (2, "zero denominator"));
        assert!(parse_scalar("1+").is_err());
    }

    #[test]
    fn words() {
        let e = parse_expr("[1,2,1/2]*[3,4,3/4]").unwrap();
        assert!(matches!(e, Expr::Mul(..)));
        assert_eq!(eval(&e).unwrap().to_string(), "[4,6,1/4]");

        let e = parse_expr("[0,1,0,1]^-1").unwrap();
        assert!(matches!(e, Expr::Pow(_, -1)));
        assert_eq!(eval(&e).unwrap().to_string(), "[0,-1,0,1]");

        let e = parse_expr("[0,0,1/2]*[0,0,1/2]").unwrap();
        assert_eq!(eval(&e).unwrap().to_string(), "[0,0,0]");

        assert_eq!(eval(&parse_expr("[1,2,0]").unwrap()).unwrap().to_string(), "[1,2,0]");
    }

    #[test]
    fn precedence() {
        let e = parse_expr("[1,0,0]*[0,1,0]^-1").unwrap();
        match e {
            Expr::Mul(_, r) => assert!(matches!(*r, Expr::Pow(_, -1))),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn calls() {
        let e = parse_expr("centralizer([1,0,0],[0,1,0])").unwrap();
        assert_eq!(eval(&e).unwrap(), Value::Bool(true));
        let e = parse_expr("coll((0,0),(1,1),(2,2+r2))").unwrap();
        assert_eq!(eval(&e).unwrap(), Value::Bool(false));
        let e = parse_expr("in_L((0,1),[0,5,1/2])").unwrap();
        assert_eq!(eval(&e).unwrap(), Value::Bool(true));
    }

    #[test]
    fn semantic_errors() {
        let err = parse_expr("[0,0,0,-1]").unwrap_err();
        assert_eq!((err.pos, err.message.as_str()), (7, "x must be positive"));
        let err = eval(&parse_expr("[1,0,0]*[1,0,0,1]").unwrap()).unwrap_err();
        assert!(matches!(err, EvalError::Type(_)));
        let err = eval(&parse_expr("coll((0,0))").unwrap()).unwrap_err();
        assert!(matches!(err, EvalError::Demo(DemoError::Usage { .. })));
    }

    #[test]
    fn syntax_errors_are_positioned() {
        let err = parse_expr("[1,2]").unwrap_err();
        assert_eq!(err.pos, 4);
        assert!(err.expected.contains(&"','"));
        let err = parse_expr("[1,2,3]*").unwrap_err();
        assert_eq!(err.pos, 8);
        let err = parse_expr(&"(".repeat(500)).unwrap_err();
        assert!(err.pos <= 500);
    }

    #[test]
    fn printing_reparses() {
        for s in [
            "[1,0,0]*([0,1,0]*[0,0,1/2])",
            "([1,0,0]*[0,1,0])^-3",
            "coll((0,-r2),(1,1),(2,3/2-r2))",
            "[0,1,0,1]^2^-1",
        ] {
            let e = parse_expr(s).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{s}");
        }
    }
}
