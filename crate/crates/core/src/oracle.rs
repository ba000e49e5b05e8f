//! Brute-force validation by action on test functions.
//!
//! A [`SpinorFunction`] is a spinor of functions `sum r^(2k) x^a` with `k <= 0`.
//! That space is closed under `x_i`, `p_i = -i d/dx_i`, `r^(-2)` and the gamma
//! matrices, so any operator acts on it exactly. Formal expressions are applied
//! by walking the [`Expr`] tree and expanding named operators through their
//! definitions, with gamma generators realized by the concrete matrices of
//! [`gamma_matrices`]. Nothing here calls the engine's normal-form product.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{gamma_matrices, GammaRep};
use crate::coeff::{GaussianRational, ParamPoly, Rational};
use crate::expr::Expr;
use crate::ops::{definition, OperatorName};
use crate::weyl::{Dim, Exps, Generator, OperatorExpr};
use crate::{Error, MAX_DIM};

/// Unnormalized scalar function `sum c r^(2k) x^a`, keyed by `(k, a)`.
type Component = BTreeMap<(i32, Exps), ParamPoly>;
type XPoly = BTreeMap<Exps, ParamPoly>;

fn put(map: &mut Component, key: (i32, Exps), c: ParamPoly) {
    if c.is_zero() {
        return;
    }
    let v = map.entry(key).or_insert_with(ParamPoly::zero);
    v.add_assign(&c);
    if v.is_zero() {
        map.remove(&key);
    }
}

fn put_poly(map: &mut XPoly, e: Exps, c: &ParamPoly) {
    let v = map.entry(e).or_insert_with(ParamPoly::zero);
    v.add_assign(c);
    if v.is_zero() {
        map.remove(&e);
    }
}

fn times_r2(p: &XPoly, d: usize) -> XPoly {
    let mut out = XPoly::new();
    for (e, c) in p {
        for j in 0..d {
            let mut e2 = *e;
            e2[j] += 2;
            put_poly(&mut out, e2, c);
        }
    }
    out
}

/// Exact division by `r^2`, pivoting on `x_d^2`; `None` if not divisible.
fn div_r2(p: &XPoly, d: usize) -> Option<XPoly> {
    let piv = d - 1;
    let mut rem = p.clone();
    let mut q = XPoly::new();
    loop {
        let Some((e, c)) = rem.iter().filter(|(e, _)| e[piv] >= 2).max_by_key(|(e, _)| e[piv]).map(|(e, c)| (*e, c.clone()))
        else {
            break;
        };
        let mut base = e;
        base[piv] -= 2;
        put_poly(&mut q, base, &c);
        let neg = c.neg();
        for j in 0..d {
            let mut t = base;
            t[j] += 2;
            put_poly(&mut rem, t, &neg);
        }
    }
    rem.is_empty().then_some(q)
}

/// Canonical form of one component: a single `r^(2k)` and a polynomial not
/// divisible by `r^2` when `k < 0`.
fn canonical(c: &Component, d: usize) -> Option<(i32, XPoly)> {
    let kmin = c.keys().map(|(k, _)| *k).min()?;
    let mut poly = XPoly::new();
    let mut by_k: BTreeMap<i32, XPoly> = BTreeMap::new();
    for ((k, e), v) in c {
        put_poly(by_k.entry(*k).or_default(), *e, v);
    }
    for (k, mut p) in by_k {
        for _ in kmin..k {
            p = times_r2(&p, d);
        }
        for (e, v) in &p {
            put_poly(&mut poly, *e, v);
        }
    }
    if poly.is_empty() {
        return None;
    }
    let mut k = kmin;
    while k < 0 {
        match div_r2(&poly, d) {
            Some(q) => {
                poly = q;
                k += 1;
            }
            None => break,
        }
    }
    Some((k, poly))
}

/// A spinor-valued test function.
#[derive(Clone, Debug)]
pub struct SpinorFunction {
    d: Dim,
    comps: Vec<Component>,
}

impl SpinorFunction {
    pub fn zero(d: Dim, spinor_dim: usize) -> Self {
        SpinorFunction { d, comps: alloc::vec![Component::new(); spinor_dim] }
    }

    /// `c r^(2k) x^a e_s` (spinor index `s` is 0-based).
    pub fn basis(d: Dim, spinor_dim: usize, k: i32, a: Exps, s: usize, c: ParamPoly) -> Self {
        let mut f = Self::zero(d, spinor_dim);
        put(&mut f.comps[s], (k.min(0), a), c);
        f.normalized()
    }

    pub fn dim(&self) -> Dim {
        self.d
    }

    pub fn spinor_dim(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.normalized().comps.iter().all(|c| c.is_empty())
    }

    /// Canonical terms `(k, x-exponents, spinor index, coefficient)`.
    pub fn terms(&self) -> Vec<(i32, Exps, usize, ParamPoly)> {
        let d = self.d.get();
        let mut out = Vec::new();
        for (s, c) in self.comps.iter().enumerate() {
            if let Some((k, p)) = canonical(c, d) {
                for (e, v) in p {
                    out.push((k, e, s, v));
                }
            }
        }
        out
    }

    /// Each component rewritten over a single minimal power of `r^2`.
    pub fn normalized(&self) -> SpinorFunction {
        let d = self.d.get();
        let comps = self
            .comps
            .iter()
            .map(|c| {
                let mut out = Component::new();
                if let Some((k, p)) = canonical(c, d) {
                    for (e, v) in p {
                        out.insert((k, e), v);
                    }
                }
                out
            })
            .collect();
        SpinorFunction { d: self.d, comps }
    }

    pub fn add(&self, other: &SpinorFunction) -> SpinorFunction {
        let mut out = self.clone();
        for (s, c) in other.comps.iter().enumerate() {
            for (key, v) in c {
                put(&mut out.comps[s], *key, v.clone());
            }
        }
        out
    }

    pub fn sub(&self, other: &SpinorFunction) -> SpinorFunction {
        self.add(&other.scale(&ParamPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &ParamPoly) -> SpinorFunction {
        let comps = self
            .comps
            .iter()
            .map(|m| m.iter().map(|(k, v)| (*k, v.mul(c))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SpinorFunction { d: self.d, comps }
    }

    fn mul_x(&self, i: usize) -> SpinorFunction {
        let comps = self
            .comps
            .iter()
            .map(|m| {
                m.iter()
                    .map(|((k, e), v)| {
                        let mut e2 = *e;
                        e2[i - 1] += 1;
                        ((*k, e2), v.clone())
                    })
                    .collect()
            })
            .collect();
        SpinorFunction { d: self.d, comps }
    }

    /// `-i d/dx_i`, using `d_i r^(2k) = 2k x_i r^(2k-2)`.
    fn momentum(&self, i: usize) -> SpinorFunction {
        let minus_i = ParamPoly::constant(-GaussianRational::I);
        let comps = self
            .comps
            .iter()
            .map(|m| {
                let mut out = Component::new();
                for ((k, e), v) in m {
                    let v = v.mul(&minus_i);
                    if e[i - 1] > 0 {
                        let mut e2 = *e;
                        e2[i - 1] -= 1;
                        put(&mut out, (*k, e2), v.scale(&GaussianRational::from_int(e[i - 1] as i64)));
                    }
                    if *k != 0 {
                        let mut e2 = *e;
                        e2[i - 1] += 1;
                        put(&mut out, (*k - 1, e2), v.scale(&GaussianRational::from_int(2 * *k as i64)));
                    }
                }
                out
            })
            .collect();
        SpinorFunction { d: self.d, comps }
    }

    fn rinv2(&self) -> SpinorFunction {
        let comps =
            self.comps.iter().map(|m| m.iter().map(|((k, e), v)| ((*k - 1, *e), v.clone())).collect()).collect();
        SpinorFunction { d: self.d, comps }
    }

    fn matrix(&self, m: &crate::clifford::Matrix) -> SpinorFunction {
        let n = self.comps.len();
        let mut out = Self::zero(self.d, n);
        for r in 0..n {
            for c in 0..n {
                let entry = m.get(r, c);
                if entry.is_zero() {
                    continue;
                }
                let e = ParamPoly::constant(entry.clone());
                for (key, v) in &self.comps[c] {
                    put(&mut out.comps[r], *key, v.mul(&e));
                }
            }
        }
        out
    }
}

impl PartialEq for SpinorFunction {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.terms() == other.terms()
    }
}

impl Eq for SpinorFunction {}

/// `e<s>: r^(2k)*(poly)` per nonzero component, separated by `; `.
impl fmt::Display for SpinorFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.d.get();
        let mut first = true;
        for (s, c) in self.comps.iter().enumerate() {
            let Some((k, p)) = canonical(c, d) else { continue };
            if !first {
                f.write_str("; ")?;
            }
            first = false;
            write!(f, "e{}: ", s + 1)?;
            if k != 0 {
                write!(f, "rinv2^{}*", -k)?;
            }
            f.write_str("(")?;
            for (n, (e, v)) in p.iter().rev().enumerate() {
                if n > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "({v})")?;
                for (i, &a) in e.iter().enumerate().take(d) {
                    match a {
                        0 => {}
                        1 => write!(f, "*x{}", i + 1)?,
                        _ => write!(f, "*x{}^{}", i + 1, a)?,
                    }
                }
            }
            f.write_str(")")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Applies a normal-form operator: word matrix, then momenta, then `x`
/// monomial, then the denominator.
pub fn apply(op: &OperatorExpr, f: &SpinorFunction, rep: &GammaRep) -> Result<SpinorFunction, Error> {
    if op.dim() != f.d {
        return Err(Error::DimensionMismatch(op.dim().get(), f.d.get()));
    }
    let d = f.d.get();
    let mut out = SpinorFunction::zero(f.d, f.spinor_dim());
    for (m, c) in op.terms() {
        let mut g = f.matrix(&rep.word_matrix(m.word));
        for i in 1..=d {
            for _ in 0..m.p[i - 1] {
                g = g.momentum(i);
            }
        }
        for i in 1..=d {
            for _ in 0..m.x[i - 1] {
                g = g.mul_x(i);
            }
        }
        out = out.add(&g.scale(c));
    }
    for _ in 0..op.denom_pow() {
        out = out.rinv2();
    }
    Ok(out.normalized())
}

/// Applies formal expressions, expanding named operators by definition.
pub struct Oracle {
    d: Dim,
    rep: GammaRep,
    defs: BTreeMap<OperatorName, Expr>,
}

impl Oracle {
    pub fn new(d: Dim) -> Result<Self, Error> {
        Ok(Oracle { d, rep: gamma_matrices(d.get())?, defs: BTreeMap::new() })
    }

    pub fn rep(&self) -> &GammaRep {
        &self.rep
    }

    pub fn apply_expr(&mut self, e: &Expr, f: &SpinorFunction) -> Result<SpinorFunction, Error> {
        Ok(match e {
            Expr::Scalar(c) => f.scale(c),
            Expr::Gen(Generator::X(i)) => f.mul_x(self.d.index(*i)?),
            Expr::Gen(Generator::P(i)) => f.momentum(self.d.index(*i)?),
            Expr::Gen(Generator::Gamma(i)) => f.matrix(self.rep.gamma(self.d.index(*i)?)),
            Expr::Gen(Generator::RInv2) => f.rinv2(),
            Expr::Named(n) => {
                if !self.defs.contains_key(n) {
                    self.defs.insert(*n, definition(*n, self.d)?);
                }
                let def = self.defs[n].clone();
                self.apply_expr(&def, f)?
            }
            Expr::Sum(v) => {
                let mut acc = SpinorFunction::zero(f.d, f.spinor_dim());
                for t in v {
                    acc = acc.add(&self.apply_expr(t, f)?);
                }
                acc
            }
            Expr::Product(v) => {
                let mut g = f.clone();
                for t in v.iter().rev() {
                    g = self.apply_expr(t, &g)?;
                }
                g
            }
            Expr::Pow(b, n) => {
                let mut g = f.clone();
                for _ in 0..*n {
                    g = self.apply_expr(b, &g)?;
                }
                g
            }
            Expr::Commutator(a, b) | Expr::Anticommutator(a, b) => {
                let bf = self.apply_expr(b, f)?;
                let ab = self.apply_expr(a, &bf)?;
                let af = self.apply_expr(a, f)?;
                let ba = self.apply_expr(b, &af)?;
                if matches!(e, Expr::Commutator(..)) {
                    ab.sub(&ba)
                } else {
                    ab.add(&ba)
                }
            }
        })
    }

    /// Applies and brings the result to canonical form.
    pub fn apply(&mut self, e: &Expr, f: &SpinorFunction) -> Result<SpinorFunction, Error> {
        Ok(self.apply_expr(e, f)?.normalized())
    }
}

/// Trial parameters for [`crosscheck`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub trials: u32,
    pub seed: u64,
    pub max_degree: u32,
    pub min_k: i32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { trials: 20, seed: 0, max_degree: 4, min_k: -2 }
    }
}

/// A test function on which two operators act differently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub trial: u32,
    pub function: SpinorFunction,
    pub lhs_image: SpinorFunction,
    pub rhs_image: SpinorFunction,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trial {}", self.trial)?;
        writeln!(f, "f   = {}", self.function)?;
        writeln!(f, "lhs = {}", self.lhs_image)?;
        write!(f, "rhs = {}", self.rhs_image)
    }
}

const TERMS_PER_FUNCTION: usize = 8;

/// Deterministic pseudo-random test function for `(seed, trial)`.
pub fn random_function(d: Dim, seed: u64, trial: u32, max_degree: u32, min_k: i32) -> SpinorFunction {
    let spinor_dim = 1usize << (d.get() / 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let mut f = SpinorFunction::zero(d, spinor_dim);
    for _ in 0..TERMS_PER_FUNCTION {
        let k = rng.gen_range(min_k.min(0)..=0);
        let mut e: Exps = [0; MAX_DIM];
        let deg = rng.gen_range(0..=max_degree);
        for _ in 0..deg {
            e[rng.gen_range(0..d.get())] += 1;
        }
        let s = rng.gen_range(0..spinor_dim);
        let re = rng.gen_range(-3..=3i64);
        let im = rng.gen_range(-1..=1i64);
        let c = GaussianRational::new(Rational::from_int(re), Rational::from_int(im));
        put(&mut f.comps[s], (k, e), ParamPoly::constant(c));
    }
    if f.is_zero() {
        put(&mut f.comps[0], (0, [0; MAX_DIM]), ParamPoly::one());
    }
    f.normalized()
}

/// Compares two normal-form operators on seeded random functions.
pub fn crosscheck(a: &OperatorExpr, b: &OperatorExpr, cfg: &OracleConfig) -> Result<Result<(), Witness>, Error> {
    let rep = gamma_matrices(a.dim().get())?;
    for trial in 0..cfg.trials {
        let f = random_function(a.dim(), cfg.seed, trial, cfg.max_degree, cfg.min_k);
        let lhs = apply(a, &f, &rep)?;
        let rhs = apply(b, &f, &rep)?;
        if lhs != rhs {
            return Ok(Err(Witness { trial, function: f, lhs_image: lhs, rhs_image: rhs }));
        }
    }
    Ok(Ok(()))
}

/// Compares two formal expressions on seeded random functions, never
/// consulting the engine.
pub fn crosscheck_expr(
    oracle: &mut Oracle,
    lhs: &Expr,
    rhs: &Expr,
    cfg: &OracleConfig,
) -> Result<Result<(), Witness>, Error> {
    for trial in 0..cfg.trials {
        let f = random_function(oracle.d, cfg.seed, trial, cfg.max_degree, cfg.min_k);
        let a = oracle.apply(lhs, &f)?;
        let b = oracle.apply(rhs, &f)?;
        if a != b {
            return Ok(Err(Witness { trial, function: f, lhs_image: a, rhs_image: b }));
        }
    }
    Ok(Ok(()))
}

/// Short description of a witness for reports.
pub fn witness_text(w: &Witness) -> String {
    alloc::format!("{w}")
}
