//! Normal forms in the Weyl algebra `[x_i, p_j] = i delta_ij` tensored with
//! `Cl_d`, localized at `r^2 = sum x_i^2`.
//!
//! An element is stored as a left fraction `r^(-2m) * N` where `N` is a sum of
//! normal-ordered monomials `x^a p^b w` (positions, then momenta, then a
//! reduced Clifford word) with [`ParamPoly`] coefficients. Positive powers of
//! `r^2` are always expanded. `m` is minimal: when `m > 0`, `N` is not
//! left-divisible by `r^2`. Together these make the representation unique, so
//! equality of canonical fields is equality of operators.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::clifford::CliffordWord;
use crate::coeff::{GaussianRational, ParamPoly, Rational};
use crate::{Error, MAX_DIM};

/// Spatial dimension, `2..=MAX_DIM`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dim(u8);

impl Dim {
    pub fn new(d: usize) -> Result<Self, Error> {
        if (2..=MAX_DIM).contains(&d) {
            Ok(Dim(d as u8))
        } else {
            Err(Error::DimensionOutOfRange { d, max: MAX_DIM })
        }
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// Checks a 1-based index.
    pub fn index(self, i: usize) -> Result<usize, Error> {
        if i >= 1 && i <= self.get() {
            Ok(i)
        } else {
            Err(Error::IndexOutOfRange { index: i, d: self.get() })
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exponent vector; entries past `d` stay zero.
pub type Exps = [u8; MAX_DIM];

fn exps_degree(e: &Exps) -> u32 {
    e.iter().map(|&k| k as u32).sum()
}

/// `x^x p^p word`, in that order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub x: Exps,
    pub p: Exps,
    pub word: CliffordWord,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: [0; MAX_DIM], p: [0; MAX_DIM], word: CliffordWord::IDENTITY };

    pub fn x_degree(&self) -> u32 {
        exps_degree(&self.x)
    }

    pub fn p_degree(&self) -> u32 {
        exps_degree(&self.p)
    }

    /// Ordering used for rendering: total x-degree, total p-degree, word
    /// length, then higher powers of lower-indexed generators first.
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        self.x_degree()
            .cmp(&other.x_degree())
            .then(self.p_degree().cmp(&other.p_degree()))
            .then(self.word.len().cmp(&other.word.len()))
            .then(other.x.cmp(&self.x))
            .then(other.p.cmp(&self.p))
            .then(self.word.cmp(&other.word))
    }

    fn render(&self, d: usize) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (sym, exps) in [("x", &self.x), ("p", &self.p)] {
            for (i, &k) in exps.iter().enumerate().take(d) {
                match k {
                    0 => {}
                    1 => parts.push(alloc::format!("{sym}{}", i + 1)),
                    _ => parts.push(alloc::format!("{sym}{}^{k}", i + 1)),
                }
            }
        }
        for i in self.word.indices() {
            parts.push(alloc::format!("g{i}"));
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(MAX_DIM);
        write!(f, "{}", if s.is_empty() { "1" } else { &s })
    }
}

/// Generators of the algebra, used to feed raw products to [`normalize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    X(usize),
    P(usize),
    Gamma(usize),
    /// `r^(-2)`.
    RInv2,
}

/// A formal sum of formal products of generators.
pub type RawSum = Vec<(ParamPoly, Vec<Generator>)>;

pub(crate) type Terms = BTreeMap<Monomial, ParamPoly>;

fn accumulate(terms: &mut Terms, m: Monomial, c: ParamPoly) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        alloc::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut o) => {
            o.get_mut().add_assign(&c);
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// An element `r^(-2 denom) * sum(coeff * monomial)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OperatorExpr {
    d: Dim,
    denom: u32,
    terms: Terms,
}

/// Sparse polynomial in `x` with rational coefficients.
type XPoly = BTreeMap<Exps, Rational>;

fn xpoly_mul(a: &XPoly, b: &XPoly) -> XPoly {
    let mut out = XPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let mut e = *ea;
            for k in 0..MAX_DIM {
                e[k] += eb[k];
            }
            let v = out.entry(e).or_insert(Rational::ZERO);
            *v = &*v + &(ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn r2_poly(d: usize) -> XPoly {
    let mut p = XPoly::new();
    for i in 0..d {
        let mut e = [0; MAX_DIM];
        e[i] = 2;
        p.insert(e, Rational::ONE);
    }
    p
}

fn xpoly_one() -> XPoly {
    let mut p = XPoly::new();
    p.insert([0; MAX_DIM], Rational::ONE);
    p
}

/// Powers of `r^2`, expanded and cached.
struct R2Powers {
    d: usize,
    powers: Vec<XPoly>,
}

impl R2Powers {
    fn new(d: usize) -> Self {
        R2Powers { d, powers: alloc::vec![xpoly_one()] }
    }

    fn get(&mut self, k: usize) -> &XPoly {
        while self.powers.len() <= k {
            let next = xpoly_mul(self.powers.last().unwrap(), &r2_poly(self.d));
            self.powers.push(next);
        }
        &self.powers[k]
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for t in 0..k {
        acc = acc * (n - t) as i64 / (t + 1) as i64;
    }
    acc
}

fn falling(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, t| acc * (n - t) as i64)
}

/// Calls `f` for every multi-index `k <= bound` over the first `d` slots.
fn for_each_below(bound: &Exps, d: usize, mut f: impl FnMut(&Exps)) {
    let mut k = [0u8; MAX_DIM];
    loop {
        f(&k);
        let mut i = 0;
        loop {
            if i == d {
                return;
            }
            if k[i] < bound[i] {
                k[i] += 1;
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}

impl OperatorExpr {
    pub fn zero(d: Dim) -> Self {
        OperatorExpr { d, denom: 0, terms: Terms::new() }
    }

    pub fn scalar(d: Dim, c: ParamPoly) -> Self {
        let mut terms = Terms::new();
        accumulate(&mut terms, Monomial::ONE, c);
        OperatorExpr { d, denom: 0, terms }
    }

    pub fn one(d: Dim) -> Self {
        Self::scalar(d, ParamPoly::one())
    }

    pub fn generator(d: Dim, g: Generator) -> Result<Self, Error> {
        let mut m = Monomial::ONE;
        match g {
            Generator::X(i) => m.x[d.index(i)? - 1] = 1,
            Generator::P(i) => m.p[d.index(i)? - 1] = 1,
            Generator::Gamma(i) => m.word = CliffordWord::generator(d.index(i)?),
            Generator::RInv2 => return Ok(OperatorExpr { d, denom: 1, terms: Self::one(d).terms }),
        }
        Ok(Self::from_monomial(d, m, ParamPoly::one()))
    }

    pub fn x(d: Dim, i: usize) -> Result<Self, Error> {
        Self::generator(d, Generator::X(i))
    }

    pub fn p(d: Dim, i: usize) -> Result<Self, Error> {
        Self::generator(d, Generator::P(i))
    }

    pub fn gamma(d: Dim, i: usize) -> Result<Self, Error> {
        Self::generator(d, Generator::Gamma(i))
    }

    pub fn rinv2(d: Dim) -> Self {
        Self::generator(d, Generator::RInv2).expect("rinv2 has no index")
    }

    /// A single normal-ordered monomial (no denominator).
    pub fn from_monomial(d: Dim, m: Monomial, c: ParamPoly) -> Self {
        let mut terms = Terms::new();
        accumulate(&mut terms, m, c);
        OperatorExpr { d, denom: 0, terms }
    }

    /// `r^(-2 denom) * sum(terms)`, brought to canonical form.
    pub fn from_terms<I>(d: Dim, denom: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, ParamPoly)>,
    {
        let mut t = Terms::new();
        for (m, c) in terms {
            accumulate(&mut t, m, c);
        }
        reduce_denominator(OperatorExpr { d, denom, terms: t })
    }

    pub fn dim(&self) -> Dim {
        self.d
    }

    /// `m` in `r^(-2m) * N`.
    pub fn denom_pow(&self) -> u32 {
        self.denom
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if this is a constant multiple of the identity.
    pub fn as_scalar(&self) -> Option<ParamPoly> {
        if self.is_zero() {
            return Some(ParamPoly::zero());
        }
        if self.denom == 0 && self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::ONE) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Highest total degree in `x` and `p` of the numerator.
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.x_degree() + m.p_degree()).max().unwrap_or(0)
    }

    fn check_dim(&self, other: &OperatorExpr) -> Result<(), Error> {
        if self.d != other.d {
            Err(Error::DimensionMismatch(self.d.get(), other.d.get()))
        } else {
            Ok(())
        }
    }

    /// Numerator multiplied on the left by `r^(2k)`.
    fn raise(&self, k: u32, r2: &mut R2Powers) -> Terms {
        if k == 0 {
            return self.terms.clone();
        }
        let pow = r2.get(k as usize).clone();
        let mut out = Terms::new();
        for (m, c) in &self.terms {
            for (e, rc) in &pow {
                let mut m2 = *m;
                for i in 0..MAX_DIM {
                    m2.x[i] += e[i];
                }
                accumulate(&mut out, m2, c.scale(&GaussianRational::real(rc.clone())));
            }
        }
        out
    }

    pub fn add(&self, other: &OperatorExpr) -> Result<OperatorExpr, Error> {
        self.check_dim(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let denom = self.denom.max(other.denom);
        let mut r2 = R2Powers::new(self.d.get());
        let mut terms = self.raise(denom - self.denom, &mut r2);
        for (m, c) in other.raise(denom - other.denom, &mut r2) {
            accumulate(&mut terms, m, c);
        }
        Ok(reduce_denominator(OperatorExpr { d: self.d, denom, terms }))
    }

    pub fn neg(&self) -> OperatorExpr {
        OperatorExpr { d: self.d, denom: self.denom, terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn sub(&self, other: &OperatorExpr) -> Result<OperatorExpr, Error> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &ParamPoly) -> OperatorExpr {
        if c.is_zero() {
            return Self::zero(self.d);
        }
        let terms: Terms = self
            .terms
            .iter()
            .filter_map(|(m, x)| {
                let v = x.mul(c);
                (!v.is_zero()).then_some((*m, v))
            })
            .collect();
        // A scalar cannot create divisibility, but it can annihilate terms.
        reduce_denominator(OperatorExpr { d: self.d, denom: self.denom, terms })
    }

    /// The noncommutative product `self * other`.
    pub fn multiply(&self, other: &OperatorExpr) -> Result<OperatorExpr, Error> {
        self.check_dim(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.d));
        }
        if let Some(c) = self.as_scalar() {
            return Ok(other.scale(&c));
        }
        if let Some(c) = other.as_scalar() {
            return Ok(self.scale(&c));
        }
        let d = self.d.get();
        let (left, shift) = if other.denom > 0 {
            move_denominator_left(&self.terms, other.denom, d)
        } else {
            (self.terms.clone(), 0)
        };
        let terms = mul_numerators(&left, &other.terms, d);
        Ok(reduce_denominator(OperatorExpr { d: self.d, denom: self.denom + shift, terms }))
    }

    pub fn pow(&self, n: u32) -> OperatorExpr {
        let mut acc = Self::one(self.d);
        for _ in 0..n {
            acc = acc.multiply(self).expect("same dimension");
        }
        acc
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &OperatorExpr) -> Result<OperatorExpr, Error> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    /// `ab + ba`.
    pub fn anticommutator(&self, other: &OperatorExpr) -> Result<OperatorExpr, Error> {
        self.multiply(other)?.add(&other.multiply(self)?)
    }

    /// Formal adjoint: conjugated coefficients, reversed order, with `x_i`,
    /// `p_i`, `gamma_i` and `r^(-2)` self-adjoint.
    pub fn adjoint(&self) -> OperatorExpr {
        let d = self.d;
        let tail = Self::rinv2(d).pow(self.denom);
        let mut acc = Self::zero(d);
        for (m, c) in &self.terms {
            let (word, sign) = crate::clifford::word_adjoint(m.word);
            let mut pm = Monomial::ONE;
            pm.p = m.p;
            pm.word = word;
            let mut xm = Monomial::ONE;
            xm.x = m.x;
            let mut coeff = c.conjugate();
            if sign < 0 {
                coeff = coeff.neg();
            }
            let term = Self::from_monomial(d, pm, coeff)
                .multiply(&Self::from_monomial(d, xm, ParamPoly::one()))
                .and_then(|t| t.multiply(&tail))
                .expect("same dimension");
            acc = acc.add(&term).expect("same dimension");
        }
        acc
    }

    /// Substitutes numeric values for `alpha` and/or `E`.
    pub fn substitute(&self, alpha: Option<&GaussianRational>, energy: Option<&GaussianRational>) -> OperatorExpr {
        let terms: Terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let v = c.substitute(alpha, energy);
                (!v.is_zero()).then_some((*m, v))
            })
            .collect();
        reduce_denominator(OperatorExpr { d: self.d, denom: self.denom, terms })
    }

    /// Projects onto a representation in which the pseudoscalar
    /// `gamma_1 ... gamma_d` (odd `d`) acts as the scalar `value`.
    ///
    /// Each word longer than `d/2` is replaced by its complement times a
    /// scalar, so the result is canonical in the quotient algebra.
    pub fn reduce_pseudoscalar(&self, value: &GaussianRational) -> Result<OperatorExpr, Error> {
        let d = self.d.get();
        if d % 2 == 0 {
            return Err(Error::NoPseudoscalar(d));
        }
        let inv = value.recip().ok_or(Error::NoPseudoscalar(d))?;
        let omega = CliffordWord::from_bits(((1u32 << d) - 1) as u16);
        let mut terms = Terms::new();
        for (m, c) in &self.terms {
            if (m.word.len() as usize) * 2 < d {
                accumulate(&mut terms, *m, c.clone());
                continue;
            }
            // w = omega^{-1} (omega w) = (sign / value) * complement
            let (complement, neg) = omega.mul_unchecked(m.word);
            let mut k = inv.clone();
            if neg {
                k = -k;
            }
            let mut m2 = *m;
            m2.word = complement;
            accumulate(&mut terms, m2, c.scale(&k));
        }
        Ok(reduce_denominator(OperatorExpr { d: self.d, denom: self.denom, terms }))
    }

    /// True when the numerator violates no canonical-form invariant.
    pub fn is_canonical(&self) -> bool {
        let d = self.d.get();
        let in_range = self.terms.keys().all(|m| {
            (d..MAX_DIM).all(|i| m.x[i] == 0 && m.p[i] == 0) && m.word.max_index() <= d
        });
        let nonzero = self.terms.values().all(|c| !c.is_zero());
        let minimal = self.denom == 0 || divide_by_r2(&self.terms, d).is_none();
        in_range && nonzero && minimal && (self.denom == 0 || !self.terms.is_empty())
    }

    /// Terms in rendering order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &ParamPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }
}

fn render_coeff_term(c: &ParamPoly, m: &Monomial, d: usize) -> String {
    let mono = m.render(d);
    let cs = alloc::format!("{c}");
    let compound = c.terms().len() > 1 || cs[1..].contains(['+', '-']);
    if mono.is_empty() {
        return if compound { alloc::format!("({cs})") } else { cs };
    }
    if c.is_one() {
        mono
    } else if c.neg().is_one() {
        alloc::format!("-{mono}")
    } else if compound {
        alloc::format!("({cs})*{mono}")
    } else {
        alloc::format!("{cs}*{mono}")
    }
}

impl fmt::Display for OperatorExpr {
    /// Canonical text; parses back to the same element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.d.get();
        let sorted = self.sorted_terms();
        let mut body = String::new();
        if sorted.len() == 1 && sorted[0].0 == &Monomial::ONE {
            body = alloc::format!("{}", sorted[0].1);
        } else {
            for (i, (m, c)) in sorted.iter().enumerate() {
                let t = render_coeff_term(c, m, d);
                if i > 0 && !t.starts_with('-') {
                    body.push('+');
                }
                body.push_str(&t);
            }
        }
        if self.denom > 0 {
            write!(f, "rinv2^{}*({body})", self.denom)
        } else {
            write!(f, "{body}")
        }
    }
}

impl fmt::Debug for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperatorExpr[d={}]({self})", self.d)
    }
}

/// Product of two numerators (no denominators involved).
fn mul_numerators(a: &Terms, b: &Terms, d: usize) -> Terms {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let (word, neg) = ma.word.mul_unchecked(mb.word);
            let mut c = ca.mul(cb);
            if neg {
                c = c.neg();
            }
            // p^b x^e = sum_k k! C(b,k) C(e,k) (-i)^|k| x^(e-k) p^(b-k)
            let mut bound = [0u8; MAX_DIM];
            let mut trivial = true;
            for i in 0..d {
                bound[i] = ma.p[i].min(mb.x[i]);
                trivial &= bound[i] == 0;
            }
            if trivial {
                let mut m = Monomial { x: ma.x, p: ma.p, word };
                for i in 0..d {
                    m.x[i] += mb.x[i];
                    m.p[i] += mb.p[i];
                }
                accumulate(&mut out, m, c);
                continue;
            }
            for_each_below(&bound, d, |k| {
                let mut factor: i64 = 1;
                let mut order = 0u32;
                let mut m = Monomial { x: ma.x, p: ma.p, word };
                for i in 0..d {
                    let ki = k[i] as u32;
                    factor *= falling(ma.p[i] as u32, ki) * binomial(mb.x[i] as u32, ki);
                    order += ki;
                    m.x[i] += mb.x[i] - k[i];
                    m.p[i] = ma.p[i] - k[i] + mb.p[i];
                }
                let s = GaussianRational::neg_i_pow(order).scale(&Rational::from_int(factor));
                accumulate(&mut out, m, c.scale(&s));
            });
        }
    }
    out
}

/// Rewrites `N * r^(-2n)` as `r^(-2M) * N'` and returns `(N', M)`.
///
/// Uses `p^b f = sum_c C(b,c) (-i)^|c| (d^c f) p^(b-c)` with
/// `d^c r^(-2n) = P_c(x) r^(-2(n+|c|))`.
fn move_denominator_left(a: &Terms, n: u32, d: usize) -> (Terms, u32) {
    let max_p = a.keys().map(Monomial::p_degree).max().unwrap_or(0);
    let big_m = n + max_p;
    let mut r2 = R2Powers::new(d);
    // derivative polynomials already multiplied up to the common denominator
    let mut cache: BTreeMap<Exps, XPoly> = BTreeMap::new();
    let mut deriv: BTreeMap<Exps, XPoly> = BTreeMap::new();
    deriv.insert([0; MAX_DIM], xpoly_one());
    let mut out = Terms::new();
    for (m, c) in a {
        for_each_below(&m.p, d, |k| {
            let order = exps_degree(k);
            let lifted = cache
                .entry(*k)
                .or_insert_with(|| {
                    let p = derivative_poly(&mut deriv, k, n, d, &mut r2);
                    xpoly_mul(&p, r2.get((big_m - n - order) as usize))
                })
                .clone();
            let mut scalar: i64 = 1;
            for i in 0..d {
                scalar *= binomial(m.p[i] as u32, k[i] as u32);
            }
            let s = GaussianRational::neg_i_pow(order).scale(&Rational::from_int(scalar));
            let cs = c.scale(&s);
            for (e, rc) in &lifted {
                let mut m2 = *m;
                for i in 0..d {
                    m2.x[i] += e[i];
                    m2.p[i] -= k[i];
                }
                accumulate(&mut out, m2, cs.scale(&GaussianRational::real(rc.clone())));
            }
        });
    }
    (out, big_m)
}

/// `P_c` with `d^c r^(-2n) = P_c r^(-2(n+|c|))`, memoized in `memo`.
fn derivative_poly(memo: &mut BTreeMap<Exps, XPoly>, c: &Exps, n: u32, d: usize, r2: &mut R2Powers) -> XPoly {
    if let Some(p) = memo.get(c) {
        return p.clone();
    }
    // peel one derivative off the first nonzero slot
    let i = (0..d).find(|&i| c[i] > 0).expect("nonzero multi-index");
    let mut prev = *c;
    prev[i] -= 1;
    let lower = derivative_poly(memo, &prev, n, d, r2);
    let m = n + exps_degree(&prev);
    // d_i [P r^(-2m)] = [(d_i P) r^2 - 2m x_i P] r^(-2m-2)
    let mut dp = XPoly::new();
    for (e, coef) in &lower {
        if e[i] > 0 {
            let mut e2 = *e;
            e2[i] -= 1;
            let v = dp.entry(e2).or_insert(Rational::ZERO);
            *v = &*v + &(coef * &Rational::from_int(e[i] as i64));
        }
    }
    let mut out = xpoly_mul(&dp, r2.get(1));
    let k = Rational::from_int(-2 * m as i64);
    for (e, coef) in &lower {
        let mut e2 = *e;
        e2[i] += 1;
        let v = out.entry(e2).or_insert(Rational::ZERO);
        *v = &*v + &(coef * &k);
    }
    out.retain(|_, v| !v.is_zero());
    memo.insert(*c, out.clone());
    out
}

/// Exact left division of a numerator by `r^2`, `None` unless the remainder
/// vanishes. Division is by the single divisor `x_1^2 + ... + x_d^2` with
/// leading term `x_1^2` (graded lex, `x_1 > ... > x_d`).
pub(crate) fn divide_by_r2(terms: &Terms, d: usize) -> Option<Terms> {
    if terms.is_empty() || terms.keys().any(|m| m.x_degree() < 2) {
        return None;
    }
    let max1 = terms.keys().map(|m| m.x[0]).max().unwrap_or(0) as usize;
    if max1 < 2 {
        return None;
    }
    let mut buckets: Vec<Terms> = (0..=max1).map(|_| Terms::new()).collect();
    for (m, c) in terms {
        buckets[m.x[0] as usize].insert(*m, c.clone());
    }
    let mut quotient = Terms::new();
    for e1 in (2..=max1).rev() {
        let bucket = core::mem::take(&mut buckets[e1]);
        for (m, c) in bucket {
            let mut q = m;
            q.x[0] -= 2;
            for j in 1..d {
                let mut t = q;
                t.x[j] += 2;
                accumulate(&mut buckets[e1 - 2], t, c.neg());
            }
            accumulate(&mut quotient, q, c);
        }
    }
    (buckets[0].is_empty() && buckets[1].is_empty()).then_some(quotient)
}

/// Divides the numerator by `r^2` while possible, lowering the denominator.
pub fn reduce_denominator(mut a: OperatorExpr) -> OperatorExpr {
    if a.terms.is_empty() {
        a.denom = 0;
        return a;
    }
    let d = a.d.get();
    while a.denom > 0 {
        match divide_by_r2(&a.terms, d) {
            Some(q) => {
                a.terms = q;
                a.denom -= 1;
            }
            None => break,
        }
    }
    a
}

/// `r^(-2m) * numerator` for an arbitrary numerator, reduced to minimal form.
pub fn reduce_numerator(d: Dim, numerator: &[(Monomial, ParamPoly)], m: u32) -> OperatorExpr {
    OperatorExpr::from_terms(d, m, numerator.iter().cloned())
}

/// Canonical form of a formal sum of products of generators.
pub fn normalize(d: Dim, raw: &RawSum) -> Result<OperatorExpr, Error> {
    let mut acc = OperatorExpr::zero(d);
    for (c, word) in raw {
        let mut prod = OperatorExpr::scalar(d, c.clone());
        for g in word {
            prod = prod.multiply(&OperatorExpr::generator(d, *g)?)?;
        }
        acc = acc.add(&prod)?;
    }
    Ok(acc)
}

/// `sum c_k a_k`.
pub fn linear_combine(d: Dim, terms: &[(ParamPoly, OperatorExpr)]) -> Result<OperatorExpr, Error> {
    let mut acc = OperatorExpr::zero(d);
    for (c, a) in terms {
        acc = acc.add(&a.scale(c))?;
    }
    Ok(acc)
}
