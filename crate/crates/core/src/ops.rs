//! Named operators.
//!
//! Every operator is given by a formal [`Expr`] definition in terms of
//! generators and other named operators ([`definition`]). The engine evaluates
//! that tree once per dimension through [`Evaluator`]; the oracle walks the
//! same tree against test functions.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::coeff::{GaussianRational, ParamPoly, Rational};
use crate::expr::{alpha, energy, frac, g, imag, int, named, p, rinv2, scalar, x, Expr};
use crate::weyl::{Dim, OperatorExpr};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperatorName {
    H,
    K,
    L(u8, u8),
    S(u8, u8),
    J(u8, u8),
    A(u8),
    M(u8),
    T,
    Gamma0,
    GammaD1,
    Gamma(u8),
    B(u8),
    B1(u8),
    B2(u8),
    Lrl(u8),
    Q2,
    J2,
    L2,
    S2,
    LS,
    XP,
    GX,
    GP,
    XS,
    PS,
    P2,
    R2,
    Jvec(u8),
    Lvec(u8),
    Svec(u8),
}

impl fmt::Display for OperatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use OperatorName::*;
        match self {
            H => f.write_str("H"),
            K => f.write_str("K"),
            T => f.write_str("T"),
            Gamma0 => f.write_str("G0"),
            GammaD1 => f.write_str("Gd1"),
            Q2 => f.write_str("Q2"),
            J2 => f.write_str("J2"),
            L2 => f.write_str("L2"),
            S2 => f.write_str("S2"),
            LS => f.write_str("LS"),
            XP => f.write_str("XP"),
            GX => f.write_str("GX"),
            GP => f.write_str("GP"),
            XS => f.write_str("XS"),
            PS => f.write_str("PS"),
            P2 => f.write_str("P2"),
            R2 => f.write_str("R2"),
            L(i, j) => write!(f, "L({i},{j})"),
            S(i, j) => write!(f, "S({i},{j})"),
            J(i, j) => write!(f, "J({i},{j})"),
            A(i) => write!(f, "A({i})"),
            M(i) => write!(f, "M({i})"),
            Gamma(i) => write!(f, "G({i})"),
            B(i) => write!(f, "B({i})"),
            B1(i) => write!(f, "B1({i})"),
            B2(i) => write!(f, "B2({i})"),
            Lrl(i) => write!(f, "LRL({i})"),
            Jvec(i) => write!(f, "Jvec({i})"),
            Lvec(i) => write!(f, "Lvec({i})"),
            Svec(i) => write!(f, "Svec({i})"),
        }
    }
}

impl OperatorName {
    fn indices(&self) -> Vec<u8> {
        use OperatorName::*;
        match *self {
            L(i, j) | S(i, j) | J(i, j) => alloc::vec![i, j],
            A(i) | M(i) | Gamma(i) | B(i) | B1(i) | B2(i) | Lrl(i) | Jvec(i) | Lvec(i) | Svec(i) => {
                alloc::vec![i]
            }
            _ => Vec::new(),
        }
    }

    fn needs_d3(&self) -> bool {
        use OperatorName::*;
        matches!(self, XS | PS | Jvec(_) | Lvec(_) | Svec(_))
    }

    /// Checks indices and dimension gating.
    pub fn validate(&self, d: Dim) -> Result<(), Error> {
        for i in self.indices() {
            d.index(i as usize)?;
        }
        if self.needs_d3() && d.get() != 3 {
            return Err(Error::WrongDimension { name: self.to_string(), required: 3, d: d.get() });
        }
        Ok(())
    }

    /// For antisymmetric names with reversed indices: the ordered name and `true`.
    fn ordered(self) -> (OperatorName, bool) {
        use OperatorName::*;
        match self {
            L(i, j) if i > j => (L(j, i), true),
            S(i, j) if i > j => (S(j, i), true),
            J(i, j) if i > j => (J(j, i), true),
            n => (n, false),
        }
    }
}

fn sum_over<F: FnMut(usize) -> Expr>(d: usize, f: F) -> Expr {
    Expr::sum((1..=d).map(f))
}

/// `x.p - i(d-1)/2`, written out.
fn dilation(d: usize) -> Expr {
    named(OperatorName::XP) - imag(d as i64 - 1, 2)
}

fn l(i: usize, j: usize) -> Expr {
    named(OperatorName::L(i as u8, j as u8))
}

fn s(i: usize, j: usize) -> Expr {
    named(OperatorName::S(i as u8, j as u8))
}

fn j(i: usize, k: usize) -> Expr {
    named(OperatorName::J(i as u8, k as u8))
}

/// Cyclic completion `(i, j, k)` of a d=3 index.
fn cyclic(i: usize) -> (usize, usize) {
    (i % 3 + 1, (i + 1) % 3 + 1)
}

/// `½ x_i p^2 - (x.p - i(d-1)/2) p_i`, common to `A`, `M` and `B`.
fn kinetic_part(d: usize, i: usize) -> Expr {
    frac(1, 2) * x(i) * named(OperatorName::P2) - dilation(d) * p(i)
}

fn spin_momentum(d: usize, i: usize) -> Expr {
    sum_over(d, |k| s(i, k) * p(k))
}

/// Formal definition of a named operator at dimension `d`.
pub fn definition(name: OperatorName, d: Dim) -> Result<Expr, Error> {
    use OperatorName::*;
    name.validate(d)?;
    let n = d.get();
    let h = || frac(1, 2);
    Ok(match name {
        XP => sum_over(n, |k| x(k) * p(k)),
        GX => sum_over(n, |k| g(k) * x(k)),
        GP => sum_over(n, |k| g(k) * p(k)),
        P2 => sum_over(n, |k| p(k).pow(2)),
        R2 => sum_over(n, |k| x(k).pow(2)),
        L(a, b) => {
            let (a, b) = (a as usize, b as usize);
            x(a) * p(b) - x(b) * p(a)
        }
        S(a, b) => {
            let (a, b) = (a as usize, b as usize);
            imag(-1, 4) * (g(a) * g(b) - g(b) * g(a))
        }
        J(a, b) => l(a as usize, b as usize) + s(a as usize, b as usize),
        T => named(XP) - imag(n as i64 - 1, 2),
        A(i) => {
            let i = i as usize;
            kinetic_part(n, i) - h() * x(i) + spin_momentum(n, i)
        }
        M(i) => {
            let i = i as usize;
            kinetic_part(n, i) + h() * x(i) + spin_momentum(n, i)
        }
        H => h() * named(P2) + alpha() * rinv2() * named(GX),
        K => named(GX) * (h() * named(P2) - energy()),
        Gamma0 => h() * named(GX) * (named(P2) + int(1)),
        GammaD1 => h() * named(GX) * (named(P2) - int(1)),
        Gamma(i) => named(GX) * p(i as usize),
        B(i) => {
            let i = i as usize;
            kinetic_part(n, i) + spin_momentum(n, i) + energy() * x(i)
        }
        B1(i) => {
            let i = i as usize;
            kinetic_part(n, i) + energy() * x(i)
        }
        B2(i) => spin_momentum(n, i as usize),
        Lrl(i) => {
            let i = i as usize;
            named(B(i as u8)) + x(i) * (named(H) - energy())
        }
        J2 => h() * Expr::sum(pairs(n).map(|(a, b)| j(a, b) * j(a, b))),
        L2 => h() * Expr::sum(pairs(n).map(|(a, b)| l(a, b) * l(a, b))),
        S2 => h() * Expr::sum(pairs(n).map(|(a, b)| s(a, b) * s(a, b))),
        LS => Expr::sum(pairs(n).map(|(a, b)| l(a, b) * s(a, b))),
        Q2 => {
            named(J2) + sum_over(n, |k| named(A(k as u8)).pow(2))
                - sum_over(n, |k| named(M(k as u8)).pow(2))
                - named(T).pow(2)
        }
        Jvec(i) => {
            let (a, b) = cyclic(i as usize);
            j(a, b)
        }
        Lvec(i) => {
            let (a, b) = cyclic(i as usize);
            l(a, b)
        }
        Svec(i) => {
            let (a, b) = cyclic(i as usize);
            s(a, b)
        }
        XS => sum_over(3, |k| x(k) * named(Svec(k as u8))),
        PS => sum_over(3, |k| p(k) * named(Svec(k as u8))),
    })
}

/// All ordered index pairs `(a, b)` with `a, b` in `1..=d`, including `a == b`.
fn pairs(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=d).flat_map(move |a| (1..=d).map(move |b| (a, b)))
}

/// Evaluates expressions at a fixed dimension, memoizing named operators.
#[derive(Clone, Debug)]
pub struct Evaluator {
    d: Dim,
    cache: BTreeMap<OperatorName, OperatorExpr>,
}

impl Evaluator {
    pub fn new(d: Dim) -> Self {
        Evaluator { d, cache: BTreeMap::new() }
    }

    pub fn dim(&self) -> Dim {
        self.d
    }

    pub fn named(&mut self, name: OperatorName) -> Result<OperatorExpr, Error> {
        name.validate(self.d)?;
        let (key, negate) = name.ordered();
        let v = match self.cache.get(&key) {
            Some(v) => v.clone(),
            None => {
                let def = definition(key, self.d)?;
                let v = self.eval(&def)?;
                self.cache.insert(key, v.clone());
                v
            }
        };
        Ok(if negate { v.neg() } else { v })
    }

    pub fn eval(&mut self, e: &Expr) -> Result<OperatorExpr, Error> {
        let d = self.d;
        Ok(match e {
            Expr::Scalar(c) => OperatorExpr::scalar(d, c.clone()),
            Expr::Gen(gen) => OperatorExpr::generator(d, *gen)?,
            Expr::Named(n) => self.named(*n)?,
            Expr::Sum(v) => {
                let mut acc = OperatorExpr::zero(d);
                for t in v {
                    acc = acc.add(&self.eval(t)?)?;
                }
                acc
            }
            Expr::Product(v) => {
                let mut coeff = ParamPoly::one();
                let mut acc: Option<OperatorExpr> = None;
                for f in v {
                    if let Expr::Scalar(c) = f {
                        coeff = coeff.mul(c);
                        continue;
                    }
                    let val = self.eval(f)?;
                    acc = Some(match acc {
                        None => val,
                        Some(a) => a.multiply(&val)?,
                    });
                }
                match acc {
                    None => OperatorExpr::scalar(d, coeff),
                    Some(a) => a.scale(&coeff),
                }
            }
            Expr::Pow(b, n) => self.eval(b)?.pow(*n),
            Expr::Commutator(a, b) => self.eval(a)?.commutator(&self.eval(b)?)?,
            Expr::Anticommutator(a, b) => self.eval(a)?.anticommutator(&self.eval(b)?)?,
        })
    }
}

/// Builds a named operator at dimension `d`.
pub fn build(d: Dim, name: OperatorName) -> Result<OperatorExpr, Error> {
    Evaluator::new(d).named(name)
}

fn build_checked(d: Dim, name: OperatorName, allowed: fn(&OperatorName) -> bool) -> Result<OperatorExpr, Error> {
    debug_assert!(allowed(&name), "{name} is not in this builder family");
    build(d, name)
}

/// `H` or `K`.
pub fn build_schrodinger(d: Dim, which: OperatorName) -> Result<OperatorExpr, Error> {
    build_checked(d, which, |n| matches!(n, OperatorName::H | OperatorName::K))
}

/// `L`, `S`, `J`, `A`, `M` or `T`.
pub fn build_so_generator(d: Dim, which: OperatorName) -> Result<OperatorExpr, Error> {
    use OperatorName::*;
    build_checked(d, which, |n| matches!(n, L(..) | S(..) | J(..) | A(_) | M(_) | T))
}

/// `G0`, `Gd1` or `G(i)`.
pub fn build_gamma_ops(d: Dim, which: OperatorName) -> Result<OperatorExpr, Error> {
    use OperatorName::*;
    build_checked(d, which, |n| matches!(n, Gamma0 | GammaD1 | Gamma(_)))
}

/// `B(i)`, `B1(i)` or `B2(i)`.
pub fn build_sturm_invariant(d: Dim, which: OperatorName) -> Result<OperatorExpr, Error> {
    use OperatorName::*;
    build_checked(d, which, |n| matches!(n, B(_) | B1(_) | B2(_)))
}

/// Component `i` of the spin-extended LRL vector.
pub fn build_lrl(d: Dim, i: usize) -> Result<OperatorExpr, Error> {
    let i = u8::try_from(i).map_err(|_| Error::IndexOutOfRange { index: i, d: d.get() })?;
    build(d, OperatorName::Lrl(i))
}

/// Contractions and scalar-like composites.
pub fn build_contraction(d: Dim, which: OperatorName) -> Result<OperatorExpr, Error> {
    use OperatorName::*;
    build_checked(d, which, |n| {
        matches!(n, J2 | L2 | S2 | LS | XP | GX | GP | XS | PS | Q2 | P2 | R2)
    })
}

/// The three-dimensional vectors `Jvec`, `Lvec`, `Svec`.
pub fn build_d3_vector(d: Dim, which: OperatorName) -> Result<OperatorExpr, Error> {
    use OperatorName::*;
    build_checked(d, which, |n| matches!(n, Jvec(_) | Lvec(_) | Svec(_)))
}

/// `-(d-1)(d+2)/8`.
pub fn casimir_value(d: usize) -> ParamPoly {
    let d = d as i64;
    ParamPoly::from(Rational::new(-(d - 1) * (d + 2), 8))
}

/// Scalar helper used by registries: `i * q`.
pub fn i_times(q: Rational) -> Expr {
    scalar(ParamPoly::constant(GaussianRational::imag(q)))
}
