//! Exact scalars: rationals, Gaussian rationals and sparse polynomials in the
//! coupling `alpha` and the energy `E`.
//!
//! [`Rational`] keeps an `i64` fast path and falls back to arbitrary precision
//! when a result no longer fits. Every value is kept reduced, so structural
//! equality is numeric equality.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced `num/den` with `den > 0`.
    Small(i64, i64),
    /// Only used when the value does not fit `Small`.
    Big(Box<BigRational>),
}

/// An exact reduced fraction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small(0, 1));
    pub const ONE: Rational = Rational(Repr::Small(1, 1));

    pub fn from_int(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    /// `num/den`, reduced. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::ZERO;
        }
        let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Self::from_big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational::new already reduces and fixes the sign.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn numerator(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denominator(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(b) => Self::from_big(b.recip()),
        })
    }

    /// Parses `n` or `n/m` with an optional leading minus.
    pub fn parse(s: &str) -> Option<Self> {
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = match den {
            Some(b) => b.trim().parse().ok()?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return None;
        }
        Some(Self::from_big(BigRational::new(num, den)))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Rational::from_i128(a + c, b);
            }
            return Rational::from_i128(a * d + c * b, b * d);
        }
        Rational::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        self + &(-rhs)
    }
}

impl<'a> Mul for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            return Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Rational::from_big(self.to_big() * rhs.to_big())
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, *d)),
                None => Rational::from_i128(-(*n as i128), *d as i128),
            },
            Repr::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        &self + &rhs
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        &self - &rhs
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        &self * &rhs
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &other.0) {
            return (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128));
        }
        self.to_big().cmp(&other.to_big())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `re + im*i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub const ZERO: GaussianRational = GaussianRational { re: Rational::ZERO, im: Rational::ZERO };
    pub const ONE: GaussianRational = GaussianRational { re: Rational::ONE, im: Rational::ZERO };
    pub const I: GaussianRational = GaussianRational { re: Rational::ZERO, im: Rational::ONE };

    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::ZERO }
    }

    pub fn imag(im: Rational) -> Self {
        GaussianRational { re: Rational::ZERO, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from_int(n))
    }

    /// `num/den` as a real value.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(Rational::new(num, den))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    /// `(-i)^k`, used for derivative factors of the momentum operator.
    pub fn neg_i_pow(k: u32) -> Self {
        match k % 4 {
            0 => Self::ONE,
            1 => Self::imag(Rational::from_int(-1)),
            2 => Self::from_int(-1),
            _ => Self::I,
        }
    }

    pub fn recip(&self) -> Option<Self> {
        let norm = &(&self.re * &self.re) + &(&self.im * &self.im);
        let inv = norm.recip()?;
        Some(GaussianRational { re: &self.re * &inv, im: -&(&self.im * &inv) })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        GaussianRational { re: &self.re * k, im: &self.im * k }
    }
}

impl<'a> Add for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'a GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        -&self
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl fmt::Display for GaussianRational {
    /// `a`, `bi`, or `a+bi`; unit imaginary parts print as `i` / `-i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, im: &Rational| -> fmt::Result {
            if im.is_one() {
                write!(f, "i")
            } else if (-im).is_one() {
                write!(f, "-i")
            } else {
                write!(f, "{im}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => imag(f, &self.im),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if !self.im.is_negative() {
                    write!(f, "+")?;
                }
                imag(f, &self.im)
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exponents of `(alpha, E)` in a parameter monomial.
pub type ParamExp = (u16, u16);

/// Sparse polynomial in `alpha` and `E` over Gaussian rationals.
///
/// Terms are stored sorted by exponent pair with no zero coefficients, which
/// makes the derived equality canonical.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: Vec<(ParamExp, GaussianRational)>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::ONE)
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::I)
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(GaussianRational::ratio(num, den))
    }

    /// `c * alpha^a * E^e`.
    pub fn monomial(c: GaussianRational, a: u16, e: u16) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ParamPoly { terms: alloc::vec![((a, e), c)] }
        }
    }

    pub fn alpha() -> Self {
        Self::monomial(GaussianRational::ONE, 1, 0)
    }

    pub fn energy() -> Self {
        Self::monomial(GaussianRational::ONE, 0, 1)
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (ParamExp, GaussianRational)>>(it: I) -> Self {
        let mut v: Vec<(ParamExp, GaussianRational)> = it.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(ParamExp, GaussianRational)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc = &*lc + &c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        ParamPoly { terms: out }
    }

    pub fn terms(&self) -> &[(ParamExp, GaussianRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// The value if the polynomial has no `alpha` or `E` dependence.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.as_slice() {
            [] => Some(GaussianRational::ZERO),
            [((0, 0), c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn degree_alpha(&self) -> u16 {
        self.terms.iter().map(|((a, _), _)| *a).max().unwrap_or(0)
    }

    pub fn degree_energy(&self) -> u16 {
        self.terms.iter().map(|((_, e), _)| *e).max().unwrap_or(0)
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ka, ca) = &self.terms[i];
            let (kb, cb) = &other.terms[j];
            match ka.cmp(kb) {
                Ordering::Less => {
                    out.push((*ka, ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((*kb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        out.push((*ka, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        ParamPoly { terms: out }
    }

    pub fn add_assign(&mut self, other: &ParamPoly) {
        if other.is_zero() {
            return;
        }
        if self.terms.len() == 1 && other.terms.len() == 1 && self.terms[0].0 == other.terms[0].0 {
            let s = &self.terms[0].1 + &other.terms[0].1;
            if s.is_zero() {
                self.terms.clear();
            } else {
                self.terms[0].1 = s;
            }
            return;
        }
        *self = ParamPoly::add(self, other);
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn sub(&self, other: &ParamPoly) -> ParamPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ParamPoly) -> ParamPoly {
        if self.is_zero() || other.is_zero() {
            return ParamPoly::zero();
        }
        if self.terms.len() == 1 && other.terms.len() == 1 {
            let ((a1, e1), c1) = &self.terms[0];
            let ((a2, e2), c2) = &other.terms[0];
            return ParamPoly::monomial(c1 * c2, a1 + a2, e1 + e2);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for ((a1, e1), c1) in &self.terms {
            for ((a2, e2), c2) in &other.terms {
                prods.push(((a1 + a2, e1 + e2), c1 * c2));
            }
        }
        ParamPoly::from_terms(prods)
    }

    pub fn scale(&self, c: &GaussianRational) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        ParamPoly { terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect() }
    }

    /// Negates every imaginary part; `alpha` and `E` are real.
    pub fn conjugate(&self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect() }
    }

    pub fn pow(&self, n: u32) -> ParamPoly {
        let mut acc = ParamPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replaces `alpha` and/or `E` by values.
    pub fn substitute(
        &self,
        alpha: Option<&GaussianRational>,
        energy: Option<&GaussianRational>,
    ) -> ParamPoly {
        let power = |v: &GaussianRational, n: u16| {
            let mut acc = GaussianRational::ONE;
            for _ in 0..n {
                acc = &acc * v;
            }
            acc
        };
        ParamPoly::from_terms(self.terms.iter().map(|((a, e), c)| {
            let mut c = c.clone();
            let mut a2 = *a;
            let mut e2 = *e;
            if let Some(v) = alpha {
                c = &c * &power(v, *a);
                a2 = 0;
            }
            if let Some(v) = energy {
                c = &c * &power(v, *e);
                e2 = 0;
            }
            ((a2, e2), c)
        }))
    }

    /// True when every coefficient is real.
    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.im.is_zero())
    }
}

impl From<GaussianRational> for ParamPoly {
    fn from(c: GaussianRational) -> Self {
        ParamPoly::constant(c)
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c.into())
    }
}

impl fmt::Display for ParamPoly {
    /// Terms by `(alpha, E)` exponents descending, e.g. `alpha^2-1/2i*E+3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, e), c) in self.terms.iter().rev() {
            let mut s = String::new();
            let mut factors: Vec<String> = Vec::new();
            if *a == 1 {
                factors.push("alpha".into());
            } else if *a > 1 {
                factors.push(alloc::format!("alpha^{a}"));
            }
            if *e == 1 {
                factors.push("E".into());
            } else if *e > 1 {
                factors.push(alloc::format!("E^{e}"));
            }
            let mixed = !c.re.is_zero() && !c.im.is_zero();
            if factors.is_empty() {
                s = alloc::format!("{c}");
            } else if c.is_one() {
                s.push_str(&factors.join("*"));
            } else if (-c).is_one() {
                s.push('-');
                s.push_str(&factors.join("*"));
            } else if mixed {
                s = alloc::format!("({c})*{}", factors.join("*"));
            } else {
                s = alloc::format!("{c}*{}", factors.join("*"));
            }
            if !first && !s.starts_with('-') {
                write!(f, "+")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}
