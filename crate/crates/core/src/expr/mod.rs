//! A small operator-expression language.
//!
//! [`Expr`] is a formal (unevaluated) expression over generators, scalars and
//! the named operators of [`crate::ops`]. The same tree is evaluated by the
//! engine ([`evaluate`]) and applied to test functions by the oracle, which is
//! what keeps those two routes independent.
//!
//! Grammar, lowest precedence first:
//!
//! ```text
//! sum     := ['+'|'-'] product (('+'|'-') product)*
//! product := power (('*' power) | ('/' INT) | power)*      juxtaposition multiplies
//! power   := atom ('^' INT)?
//! atom    := INT | IDENT ['(' INT (',' INT)* ')'] | '(' sum ')'
//!          | '[' sum ',' sum ']'                             commutator
//!          | '{' sum ',' sum '}'                             anticommutator
//! ```

mod parse;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub use parse::{parse, ParseError};

use crate::coeff::{GaussianRational, ParamPoly};
use crate::ops::{Evaluator, OperatorName};
use crate::weyl::{Dim, Generator, OperatorExpr};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(ParamPoly),
    Gen(Generator),
    Named(OperatorName),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
    Commutator(Box<Expr>, Box<Expr>),
    Anticommutator(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn zero() -> Expr {
        Expr::Scalar(ParamPoly::zero())
    }

    pub fn one() -> Expr {
        Expr::Scalar(ParamPoly::one())
    }

    pub fn is_zero_literal(&self) -> bool {
        matches!(self, Expr::Scalar(c) if c.is_zero())
    }

    pub fn pow(self, n: u32) -> Expr {
        Expr::Pow(Box::new(self), n)
    }

    pub fn comm(a: Expr, b: Expr) -> Expr {
        Expr::Commutator(Box::new(a), Box::new(b))
    }

    pub fn anti(a: Expr, b: Expr) -> Expr {
        Expr::Anticommutator(Box::new(a), Box::new(b))
    }

    /// Sum of an iterator of expressions (`0` when empty).
    pub fn sum<I: IntoIterator<Item = Expr>>(it: I) -> Expr {
        let v: Vec<Expr> = it.into_iter().filter(|e| !e.is_zero_literal()).collect();
        match v.len() {
            0 => Expr::zero(),
            1 => v.into_iter().next().unwrap(),
            _ => Expr::Sum(v),
        }
    }
}

/// Scalar literal.
pub fn scalar(c: ParamPoly) -> Expr {
    Expr::Scalar(c)
}

/// Integer literal.
pub fn int(n: i64) -> Expr {
    Expr::Scalar(ParamPoly::from_int(n))
}

/// Rational literal `n/m`.
pub fn frac(n: i64, m: i64) -> Expr {
    Expr::Scalar(ParamPoly::ratio(n, m))
}

/// `i * q` for a rational `q = n/m`.
pub fn imag(n: i64, m: i64) -> Expr {
    Expr::Scalar(ParamPoly::constant(GaussianRational::imag(crate::Rational::new(n, m))))
}

pub fn alpha() -> Expr {
    Expr::Scalar(ParamPoly::alpha())
}

pub fn energy() -> Expr {
    Expr::Scalar(ParamPoly::energy())
}

pub fn x(i: usize) -> Expr {
    Expr::Gen(Generator::X(i))
}

pub fn p(i: usize) -> Expr {
    Expr::Gen(Generator::P(i))
}

pub fn g(i: usize) -> Expr {
    Expr::Gen(Generator::Gamma(i))
}

pub fn rinv2() -> Expr {
    Expr::Gen(Generator::RInv2)
}

pub fn named(n: OperatorName) -> Expr {
    Expr::Named(n)
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        let mut v = match self {
            Expr::Sum(v) => v,
            e => vec![e],
        };
        match rhs {
            Expr::Sum(w) => v.extend(w),
            e => v.push(e),
        }
        Expr::Sum(v)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        match self {
            Expr::Scalar(c) => Expr::Scalar(c.neg()),
            e => int(-1) * e,
        }
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        self + (-rhs)
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        let mut v = match self {
            Expr::Product(v) => v,
            e => vec![e],
        };
        match rhs {
            Expr::Product(w) => v.extend(w),
            e => v.push(e),
        }
        Expr::Product(v)
    }
}

fn scalar_text(c: &ParamPoly) -> (String, bool) {
    let s = alloc::format!("{c}");
    let plain = !s.contains(['+', '-', '/', '*']);
    (s, plain)
}

impl Expr {
    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sum(_) => write!(f, "({self})"),
            Expr::Scalar(c) => {
                let (s, plain) = scalar_text(c);
                if plain {
                    f.write_str(&s)
                } else {
                    write!(f, "({s})")
                }
            }
            e => write!(f, "{e}"),
        }
    }
}

/// Source text in the grammar above; parsing it back gives an equal value.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(c) => {
                let (s, plain) = scalar_text(c);
                if plain || !s[1..].contains(['+', '-']) {
                    f.write_str(&s)
                } else {
                    write!(f, "({s})")
                }
            }
            Expr::Gen(Generator::X(i)) => write!(f, "x{i}"),
            Expr::Gen(Generator::P(i)) => write!(f, "p{i}"),
            Expr::Gen(Generator::Gamma(i)) => write!(f, "g{i}"),
            Expr::Gen(Generator::RInv2) => f.write_str("rinv2"),
            Expr::Named(n) => write!(f, "{n}"),
            Expr::Sum(v) if v.is_empty() => f.write_str("0"),
            Expr::Sum(v) => {
                for (k, t) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    match t {
                        Expr::Sum(_) => write!(f, "({t})")?,
                        t => t.fmt_factor(f)?,
                    }
                }
                Ok(())
            }
            Expr::Product(v) if v.is_empty() => f.write_str("1"),
            Expr::Product(v) => {
                for (k, t) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" * ")?;
                    }
                    match t {
                        Expr::Product(_) => write!(f, "({t})")?,
                        t => t.fmt_factor(f)?,
                    }
                }
                Ok(())
            }
            Expr::Pow(b, n) => {
                match &**b {
                    Expr::Gen(_) | Expr::Named(_) | Expr::Commutator(..) | Expr::Anticommutator(..) => {
                        write!(f, "{b}")?
                    }
                    Expr::Scalar(c) if scalar_text(c).1 => write!(f, "{b}")?,
                    b => write!(f, "({b})")?,
                }
                write!(f, "^{n}")
            }
            Expr::Commutator(a, b) => write!(f, "[{a}, {b}]"),
            Expr::Anticommutator(a, b) => write!(f, "{{{a}, {b}}}"),
        }
    }
}

/// Engine evaluation of a formal expression.
pub fn evaluate(ast: &Expr, d: Dim) -> Result<OperatorExpr, Error> {
    Evaluator::new(d).eval(ast)
}

/// Parses and evaluates in one step.
pub fn reduce(text: &str, d: Dim) -> Result<OperatorExpr, Error> {
    evaluate(&parse(text, d)?, d)
}

/// Canonical rendering; `reduce(&format(a), d) == a`.
pub fn format(a: &OperatorExpr) -> String {
    alloc::format!("{a}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::OperatorName as N;

    fn dim(d: usize) -> Dim {
        Dim::new(d).unwrap()
    }

    #[test]
    fn commutator_literal() {
        let e = parse("[x1, p1]", dim(2)).unwrap();
        assert_eq!(e, Expr::comm(x(1), p(1)));
        assert_eq!(evaluate(&e, dim(2)).unwrap(), OperatorExpr::scalar(dim(2), ParamPoly::i()));
    }

    #[test]
    fn sturm_operator_from_gamma_combination() {
        let d = dim(3);
        let got = reduce("(1-2E)/2 * G0 + (1+2E)/2 * Gd1", d).unwrap();
        assert_eq!(got, crate::ops::build(d, N::K).unwrap());
    }

    #[test]
    fn index_bounds() {
        assert!(parse("J(1,2)^2 + Q2", dim(3)).is_ok());
        let err = parse("J(1,4)", dim(3)).unwrap_err();
        assert_eq!((err.line, err.col), (1, 5));
    }

    #[test]
    fn evaluation_examples() {
        assert!(reduce("[T, G0] - i*Gd1", dim(2)).unwrap().is_zero());
        for n in 2..=4 {
            assert_eq!(reduce("x1*p1 - p1*x1", dim(n)).unwrap(), OperatorExpr::scalar(dim(n), ParamPoly::i()));
        }
        let lrl = reduce("LRL(1)", dim(3)).unwrap();
        let closed = reduce("x1 P2 - T p1 + S(1,2) p2 + S(1,3) p3 + alpha x1 GX rinv2", dim(3)).unwrap();
        assert_eq!(lrl, closed);
        assert!(reduce("Jvec(1)", dim(2)).is_err());
    }

    #[test]
    fn format_examples() {
        let d = dim(3);
        assert_eq!(format(&OperatorExpr::zero(d)), "0");
        assert_eq!(format(&OperatorExpr::scalar(d, ParamPoly::i())), "i");
        assert_eq!(format(&reduce("Q2", d).unwrap()), "-5/4");
        assert_eq!(format(&reduce("(g1 x1 + g2 x2 + g3 x3)^2", d).unwrap()), "x1^2+x2^2+x3^2");
    }

    #[test]
    fn precedence() {
        let d = dim(3);
        assert_eq!(parse("x1 + p1 g1", d).unwrap(), x(1) + p(1) * g(1));
        assert_eq!(parse("[x1,p1]^2", d).unwrap(), Expr::comm(x(1), p(1)).pow(2));
        assert_eq!(parse("-x1^2", d).unwrap(), int(-1) * x(1).pow(2));
    }
}
