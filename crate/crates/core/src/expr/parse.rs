use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::Expr;
use crate::coeff::{GaussianRational, ParamPoly, Rational};
use crate::ops::OperatorName;
use crate::weyl::{Dim, Generator};

/// A positioned diagnostic, rendered `line:col: message`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Int(s.parse().expect("digits")), line: l0, col: c0 });
        } else if c.is_ascii_alphabetic() {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: l0, col: c0 });
        } else if "+-*/^()[]{},".contains(c) {
            i += 1;
            out.push(Token { tok: Tok::Sym(c), line: l0, col: c0 });
        } else {
            return Err(ParseError { line: l0, col: c0, message: format!("unexpected character '{c}'") });
        }
        col += i - start;
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    d: Dim,
}

/// Parses `text` for dimension `d`, checking identifiers and index ranges.
pub fn parse(text: &str, d: Dim) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, d };
    let e = p.sum()?;
    if p.peek() != &Tok::End {
        return Err(p.expected("an operator or end of input"));
    }
    Ok(e)
}

fn starts_atom(t: &Tok) -> bool {
    matches!(t, Tok::Int(_) | Tok::Ident(_) | Tok::Sym('(') | Tok::Sym('[') | Tok::Sym('{'))
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> &Token {
        let t = &self.toks[self.pos];
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, pos: usize, message: String) -> ParseError {
        let t = &self.toks[pos];
        ParseError { line: t.line, col: t.col, message }
    }

    fn expected(&self, what: &str) -> ParseError {
        self.error_at(self.pos, format!("expected {what}, found {}", self.peek()))
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == &Tok::Sym(c) {
            self.next();
            Ok(())
        } else {
            Err(self.expected(&format!("'{c}'")))
        }
    }

    fn int(&mut self) -> Result<(BigInt, usize), ParseError> {
        let pos = self.pos;
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok((n, pos))
            }
            _ => Err(self.expected("integer literal")),
        }
    }

    fn small_int(&mut self) -> Result<(usize, usize), ParseError> {
        let (n, pos) = self.int()?;
        let v = usize::try_from(&n).map_err(|_| self.error_at(pos, format!("integer {n} too large")))?;
        Ok((v, pos))
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Tok::Sym('-') => {
                self.next();
                true
            }
            Tok::Sym('+') => {
                self.next();
                false
            }
            _ => false,
        };
        loop {
            let t = self.product()?;
            terms.push(if negate { -t } else { t });
            match self.peek() {
                Tok::Sym('+') => negate = false,
                Tok::Sym('-') => negate = true,
                _ => break,
            }
            self.next();
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut factors = alloc::vec![self.power()?];
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.next();
                    factors.push(self.power()?);
                }
                Tok::Sym('/') => {
                    self.next();
                    let (n, pos) = match self.peek() {
                        Tok::Int(_) => self.int()?,
                        _ => return Err(self.expected("integer literal after '/'")),
                    };
                    if n == BigInt::from(0) {
                        return Err(self.error_at(pos, "division by zero".to_string()));
                    }
                    let r = BigRational::new(BigInt::from(1), n);
                    let q = Rational::parse(&r.to_string()).expect("valid rational");
                    let q = ParamPoly::from(q);
                    match factors.last_mut() {
                        Some(Expr::Scalar(c)) => *c = c.mul(&q),
                        _ => factors.push(Expr::Scalar(q)),
                    }
                }
                t if starts_atom(t) => factors.push(self.power()?),
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(factors) })
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == &Tok::Sym('^') {
            self.next();
            let (n, pos) = self.small_int()?;
            let n = u32::try_from(n).map_err(|_| self.error_at(pos, "exponent too large".to_string()))?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                let q = Rational::parse(&n.to_string()).expect("integer");
                Ok(Expr::Scalar(ParamPoly::from(q)))
            }
            Tok::Sym('(') => {
                self.next();
                let e = self.sum()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Sym(open @ ('[' | '{')) => {
                self.next();
                let a = self.sum()?;
                self.expect_sym(',')?;
                let b = self.sum()?;
                let close = if open == '[' { ']' } else { '}' };
                self.expect_sym(close)?;
                Ok(if open == '[' { Expr::comm(a, b) } else { Expr::anti(a, b) })
            }
            Tok::Ident(name) => {
                let pos = self.pos;
                self.next();
                self.identifier(&name, pos)
            }
            _ => Err(self.expected("an operand")),
        }
    }

    fn index(&self, i: usize, pos: usize) -> Result<usize, ParseError> {
        self.d.index(i).map_err(|_| self.error_at(pos, format!("index {i} out of range 1..{}", self.d)))
    }

    fn args(&mut self, n: usize) -> Result<Vec<u8>, ParseError> {
        self.expect_sym('(')?;
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            if k > 0 {
                self.expect_sym(',')?;
            }
            let (v, pos) = self.small_int()?;
            out.push(self.index(v, pos)? as u8);
        }
        self.expect_sym(')')?;
        Ok(out)
    }

    fn identifier(&mut self, name: &str, pos: usize) -> Result<Expr, ParseError> {
        use OperatorName as N;
        let simple = match name {
            "i" => return Ok(Expr::Scalar(ParamPoly::constant(GaussianRational::I))),
            "alpha" => return Ok(Expr::Scalar(ParamPoly::alpha())),
            "E" => return Ok(Expr::Scalar(ParamPoly::energy())),
            "rinv2" => return Ok(Expr::Gen(Generator::RInv2)),
            "H" => Some(N::H),
            "K" => Some(N::K),
            "T" => Some(N::T),
            "G0" => Some(N::Gamma0),
            "Gd1" => Some(N::GammaD1),
            "Q2" => Some(N::Q2),
            "J2" => Some(N::J2),
            "L2" => Some(N::L2),
            "S2" => Some(N::S2),
            "LS" => Some(N::LS),
            "XP" => Some(N::XP),
            "GX" => Some(N::GX),
            "GP" => Some(N::GP),
            "XS" => Some(N::XS),
            "PS" => Some(N::PS),
            "P2" => Some(N::P2),
            "R2" => Some(N::R2),
            _ => None,
        };
        if let Some(n) = simple {
            return Ok(Expr::Named(n));
        }
        let unary: Option<fn(u8) -> N> = match name {
            "A" => Some(N::A),
            "M" => Some(N::M),
            "G" => Some(N::Gamma),
            "B" => Some(N::B),
            "B1" => Some(N::B1),
            "B2" => Some(N::B2),
            "LRL" => Some(N::Lrl),
            "Jvec" => Some(N::Jvec),
            "Lvec" => Some(N::Lvec),
            "Svec" => Some(N::Svec),
            _ => None,
        };
        if let Some(f) = unary {
            let a = self.args(1)?;
            return Ok(Expr::Named(f(a[0])));
        }
        let binary: Option<fn(u8, u8) -> N> = match name {
            "L" => Some(N::L),
            "S" => Some(N::S),
            "J" => Some(N::J),
            _ => None,
        };
        if let Some(f) = binary {
            let a = self.args(2)?;
            return Ok(Expr::Named(f(a[0], a[1])));
        }
        // x<k>, p<k>, g<k>
        let mut chars = name.chars();
        let head = chars.next();
        let digits = chars.as_str();
        if let (Some(h @ ('x' | 'p' | 'g')), false) = (head, digits.is_empty()) {
            if digits.bytes().all(|b| b.is_ascii_digit()) {
                let k: usize = digits
                    .parse()
                    .map_err(|_| self.error_at(pos, format!("index {digits} too large")))?;
                let k = self.index(k, pos)?;
                return Ok(Expr::Gen(match h {
                    'x' => Generator::X(k),
                    'p' => Generator::P(k),
                    _ => Generator::Gamma(k),
                }));
            }
        }
        Err(self.error_at(pos, format!("unknown identifier '{name}'")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{frac, imag, p, x};

    fn d3() -> Dim {
        Dim::new(3).unwrap()
    }

    #[test]
    fn diagnostics() {
        let e = parse("x1 + ", d3()).unwrap_err();
        assert_eq!(e.to_string(), "1:6: expected an operand, found end of input");
        let e = parse("[x1 p1]", d3()).unwrap_err();
        assert_eq!(e.to_string(), "1:7: expected ',', found ']'");
        let e = parse("foo", d3()).unwrap_err();
        assert_eq!(e.to_string(), "1:1: unknown identifier 'foo'");
        let e = parse("x1\n  + x9", d3()).unwrap_err();
        assert_eq!((e.line, e.col), (2, 5));
        let e = parse("x1 / p1", d3()).unwrap_err();
        assert!(e.message.starts_with("expected integer literal after '/'"));
        assert!(parse("x1 / 0", d3()).is_err());
        assert!(parse("x1 # p1", d3()).is_err());
    }

    #[test]
    fn scalar_literals() {
        assert_eq!(parse("3/4i", d3()).unwrap(), Expr::Product(alloc::vec![frac(3, 4), imag(1, 1)]));
        assert_eq!(parse("x1 - p1", d3()).unwrap(), Expr::Sum(alloc::vec![x(1), -p(1)]));
    }
}
