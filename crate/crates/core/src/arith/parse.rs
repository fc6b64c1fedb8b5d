//! Polynomial text grammar.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary | unary)*      juxtaposition multiplies
//! unary := ("-" | "+") unary | power
//! power := atom ("^" integer)?
//! atom  := integer | identifier | "(" expr ")"
//! ```
//!
//! Expressions are parsed once into an [`Expr`] tree and then evaluated in
//! a target algebra through [`Evaluator`], which is how the same grammar
//! serves `k[T][Y]`, field elements and twisted polynomials.

use num_bigint::BigInt;
use thiserror::Error;

use super::field::{FieldElem, FieldSpec};
use super::param::ParamPoly;
use super::poly::UniPoly;
use super::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub fn error(self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
        } else if c.is_whitespace() {
            col += 1;
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push((Tok::Int(s.parse().expect("digits")), pos));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), pos));
            col += 1;
            i += 1;
        } else {
            return Err(pos.error(format!("unexpected character '{c}'")));
        }
    }
    out.push((Tok::End, Pos { line, column: col }));
    Ok(out)
}

/// Parsed expression tree; positions point at the operator or atom.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Var(String, Pos),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Sym('/') => {
                    let (_, pos) = self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
                }
                Tok::Ident(_) | Tok::Sym('(') => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Tok::Sym('-') => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Tok::Sym('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if let Tok::Sym('^') = self.peek() {
            self.bump();
            let (tok, pos) = self.bump();
            let Tok::Int(n) = tok else {
                return Err(pos.error("exponent must be a non-negative integer literal"));
            };
            let e: u32 = n.try_into().map_err(|_| pos.error("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Ident(name) => Ok(Expr::Var(name, pos)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                match self.bump() {
                    (Tok::Sym(')'), _) => Ok(e),
                    (_, p) => Err(p.error("expected ')'")),
                }
            }
            Tok::End => Err(pos.error("unexpected end of input")),
            Tok::Sym(c) => Err(pos.error(format!("unexpected '{c}'"))),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: tokenize(src)?, at: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        _ => Err(p.pos().error("unexpected trailing input")),
    }
}

/// A target algebra for expression evaluation.
pub trait Evaluator {
    type Value: Clone;
    fn int(&self, n: &BigInt) -> Self::Value;
    fn var(&self, name: &str) -> Option<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    /// `a / b`; only division by invertible constants is meaningful.
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, String>;
    fn one(&self) -> Self::Value {
        self.int(&BigInt::from(1))
    }
}

pub fn evaluate<E: Evaluator>(expr: &Expr, ev: &E) -> Result<E::Value, ParseError> {
    Ok(match expr {
        Expr::Int(n) => ev.int(n),
        Expr::Var(name, pos) => ev.var(name).ok_or_else(|| pos.error(format!("unknown symbol '{name}'")))?,
        Expr::Add(a, b) => ev.add(&evaluate(a, ev)?, &evaluate(b, ev)?),
        Expr::Sub(a, b) => ev.sub(&evaluate(a, ev)?, &evaluate(b, ev)?),
        Expr::Mul(a, b) => ev.mul(&evaluate(a, ev)?, &evaluate(b, ev)?),
        Expr::Neg(a) => ev.neg(&evaluate(a, ev)?),
        Expr::Div(a, b, pos) => ev.div(&evaluate(a, ev)?, &evaluate(b, ev)?).map_err(|m| pos.error(m))?,
        Expr::Pow(a, e) => {
            let base = evaluate(a, ev)?;
            let mut acc = ev.one();
            for _ in 0..*e {
                acc = ev.mul(&acc, &base);
            }
            acc
        }
    })
}

/// Elements of `k[T][Y]` as lists of `T`-polynomials indexed by `Y`-degree.
struct Bivariate<'a> {
    field: &'a FieldSpec,
}

type Bi = Vec<UniPoly>;

fn bi_trim(mut v: Bi) -> Bi {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

impl Evaluator for Bivariate<'_> {
    type Value = Bi;

    fn int(&self, n: &BigInt) -> Bi {
        bi_trim(vec![UniPoly::constant(self.field, self.field.from_bigint(n))])
    }

    fn var(&self, name: &str) -> Option<Bi> {
        let k = self.field;
        match name {
            "Y" | "y" => Some(vec![UniPoly::zero(k), UniPoly::one(k)]),
            "T" | "t" => Some(vec![UniPoly::x(k)]),
            "g" => k.generator().map(|g| vec![UniPoly::constant(k, g)]),
            _ => None,
        }
    }

    fn add(&self, a: &Bi, b: &Bi) -> Bi {
        let n = a.len().max(b.len());
        let z = UniPoly::zero(self.field);
        bi_trim((0..n).map(|i| a.get(i).unwrap_or(&z).add_poly(b.get(i).unwrap_or(&z))).collect())
    }

    fn sub(&self, a: &Bi, b: &Bi) -> Bi {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Bi) -> Bi {
        a.iter().map(|c| c.neg_poly()).collect()
    }

    fn mul(&self, a: &Bi, b: &Bi) -> Bi {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![UniPoly::zero(self.field); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].add_poly(&x.mul_poly(y));
            }
        }
        bi_trim(out)
    }

    fn div(&self, a: &Bi, b: &Bi) -> Result<Bi, String> {
        let c = match b.as_slice() {
            [c] if c.is_constant() => c.coeff(0),
            [] => return Err("division by zero".into()),
            _ => return Err("only division by constants is supported".into()),
        };
        let inv = self.field.inv(&c).ok_or("division by zero")?;
        Ok(a.iter().map(|p| p.scale(&inv)).collect())
    }
}

fn parse_bivariate(field: &FieldSpec, src: &str) -> Result<Bi, ParseError> {
    evaluate(&parse_expr(src)?, &Bivariate { field })
}

fn find_var(src: &str, names: &[&str]) -> Pos {
    if let Ok(toks) = tokenize(src) {
        for (t, p) in toks {
            if let Tok::Ident(n) = t {
                if names.contains(&n.as_str()) {
                    return p;
                }
            }
        }
    }
    Pos { line: 1, column: 1 }
}

/// Parse a polynomial in `Y` (no `T` allowed).
pub fn parse_poly(field: &FieldSpec, src: &str) -> Result<UniPoly, ParseError> {
    let bi = parse_bivariate(field, src)?;
    if bi.iter().any(|c| !c.is_constant()) {
        return Err(find_var(src, &["T", "t"]).error("unexpected variable T in a polynomial in Y"));
    }
    Ok(UniPoly::new(field, bi.iter().map(|c| c.coeff(0)).collect()))
}

/// Parse a polynomial in `T` (no `Y` allowed).
pub fn parse_poly_in_t(field: &FieldSpec, src: &str) -> Result<UniPoly, ParseError> {
    let bi = parse_bivariate(field, src)?;
    match bi.len() {
        0 => Ok(UniPoly::zero(field)),
        1 => Ok(bi[0].clone()),
        _ => Err(find_var(src, &["Y", "y"]).error("unexpected variable Y in a polynomial in T")),
    }
}

/// Parse a family `A(T, Y)`, which must be monic in `Y`.
pub fn parse_param(field: &FieldSpec, src: &str) -> Result<ParamPoly, ArithError> {
    let bi = parse_bivariate(field, src)?;
    ParamPoly::new(field, bi)
}

/// Parse a constant of the field (rational literals, `g` in extensions).
pub fn parse_elem(field: &FieldSpec, src: &str) -> Result<FieldElem, ParseError> {
    let bi = parse_bivariate(field, src)?;
    match bi.as_slice() {
        [] => Ok(field.zero()),
        [c] if c.is_constant() => Ok(c.coeff(0)),
        _ => Err(Pos { line: 1, column: 1 }.error("expected a constant")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::rat;

    #[test]
    fn parses_family() {
        let q = FieldSpec::Rationals;
        let p = parse_param(&q, "Y^3 + (T - 1)*Y + (T - 1)").unwrap();
        assert_eq!(p.to_string(), "Y^3 + (T - 1)*Y + (T - 1)");
        assert_eq!(p.deg_y(), 3);
    }

    #[test]
    fn rationals_and_implicit_products() {
        let q = FieldSpec::Rationals;
        let f = parse_poly(&q, "2Y^2 - 5/2*Y + 1/3").unwrap();
        assert_eq!(f.coeffs(), &[rat(1, 3), rat(-5, 2), rat(2, 1)]);
        let g = parse_poly(&q, "(Y-1)*(Y-2)").unwrap();
        assert_eq!(g, UniPoly::from_i64s(&q, &[2, -3, 1]));
    }

    #[test]
    fn extension_generator() {
        let f4 = FieldSpec::galois(4).unwrap();
        let w2 = parse_elem(&f4, "g^2").unwrap();
        assert_eq!(f4.format_elem(&w2), "g + 1");
        assert!(parse_elem(&FieldSpec::Rationals, "g").is_err());
    }

    #[test]
    fn error_positions() {
        let q = FieldSpec::Rationals;
        let e = parse_poly(&q, "Y^2 +\n  (Y - ").unwrap_err();
        assert_eq!((e.line, e.column), (2, 8));
        let e = parse_poly(&q, "Y + $").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        let e = parse_poly(&q, "Y + T").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        let e = parse_poly(&q, "Y / (Y + 1)").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        let e = parse_poly(&q, "1/0").unwrap_err();
        assert!(e.message.contains("zero"));
        assert!(matches!(parse_param(&q, "2*Y + 1"), Err(ArithError::NotMonic)));
    }
}
