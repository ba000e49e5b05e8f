//! Registry of identities and residual evaluation.
//!
//! A [`Check`] expands, at a given dimension, into a list of [`Instance`]s,
//! one per index tuple. Each instance is a pair of formal expressions; its
//! residual is the normal form of `lhs - rhs`. A check passes only when every
//! residual is zero.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::coeff::{GaussianRational, ParamPoly, Rational};
use crate::expr::{alpha, energy, frac, g, imag, int, named, p, rinv2, x, Expr};
use crate::ops::{Evaluator, OperatorName as N};
use crate::weyl::{Dim, OperatorExpr};
use crate::Error;

/// Dimensions checked by default.
pub const DEFAULT_DIMS: core::ops::RangeInclusive<usize> = 2..=6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Core,
    Sturm,
    Schrodinger,
    Appendix,
    D3,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Core, Suite::Sturm, Suite::Schrodinger, Suite::Appendix, Suite::D3, Suite::All];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Sturm => "sturm",
            Suite::Schrodinger => "schrodinger",
            Suite::Appendix => "appendix",
            Suite::D3 => "d3",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    pub fn contains(self, check: &Check) -> bool {
        self == Suite::All || self == check.suite
    }
}

/// Severity of a failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tier {
    /// A failure means the engine or the identity is wrong.
    Core,
    /// Intermediate formulas where a failure most likely points at a
    /// mis-transcribed formula; reported but not fatal by default.
    Transcription,
}

impl Tier {
    pub fn name(self) -> &'static str {
        match self {
            Tier::Core => "core",
            Tier::Transcription => "transcription",
        }
    }
}

/// One quantified instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub label: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

#[derive(Clone, Copy, Debug)]
pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    /// The identity as written in the source, in plain notation.
    pub paper_ref: &'static str,
    pub suite: Suite,
    pub tier: Tier,
    /// `Some(3)` for three-dimensional identities.
    pub only_dim: Option<usize>,
    /// Residuals are taken modulo `g1 g2 g3 = i` (the Pauli representation).
    pub pauli: bool,
    build: fn(usize) -> Vec<Instance>,
}

impl Check {
    pub fn applies(&self, d: usize) -> bool {
        self.only_dim.is_none_or(|k| k == d)
    }

    /// All instances at dimension `d`.
    pub fn instances(&self, d: usize) -> Result<Vec<Instance>, Error> {
        if !self.applies(d) {
            return Err(Error::InapplicableDimension { id: self.id.into(), d });
        }
        Dim::new(d)?;
        Ok((self.build)(d))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub d: usize,
    pub pass: bool,
    pub tier: Tier,
    pub instances: usize,
    pub failed_instances: usize,
    /// Residual of the first failing instance (zero when passing).
    pub residual: OperatorExpr,
    pub failing_label: Option<String>,
}

impl CheckResult {
    pub fn term_count(&self) -> usize {
        self.residual.term_count()
    }
}

/// Normal form of `lhs - rhs` for one instance.
pub fn residual(ev: &mut Evaluator, check: &Check, inst: &Instance) -> Result<OperatorExpr, Error> {
    let r = ev.eval(&inst.lhs)?.sub(&ev.eval(&inst.rhs)?)?;
    if check.pauli {
        r.reduce_pseudoscalar(&GaussianRational::I)
    } else {
        Ok(r)
    }
}

/// Runs one check at dimension `d` with a caller-provided evaluator.
pub fn run_check_with(ev: &mut Evaluator, check: &Check) -> Result<CheckResult, Error> {
    let d = ev.dim().get();
    let insts = check.instances(d)?;
    let mut res = CheckResult {
        id: check.id,
        d,
        pass: true,
        tier: check.tier,
        instances: insts.len(),
        failed_instances: 0,
        residual: OperatorExpr::zero(ev.dim()),
        failing_label: None,
    };
    for inst in &insts {
        let r = residual(ev, check, inst)?;
        if !r.is_zero() {
            if res.pass {
                res.residual = r;
                res.failing_label = Some(inst.label.clone());
            }
            res.pass = false;
            res.failed_instances += 1;
        }
    }
    Ok(res)
}

/// Runs the check with the given id at dimension `d`.
pub fn run_check(id: &str, d: usize) -> Result<CheckResult, Error> {
    let check = find(id).ok_or_else(|| Error::UnknownCheck(id.into()))?;
    let mut ev = Evaluator::new(Dim::new(d)?);
    run_check_with(&mut ev, check)
}

pub fn find(id: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.id == id)
}

/// The catalog, in its documented order.
pub fn list_checks() -> &'static [Check] {
    CHECKS
}

/// Checks in `suite` applicable at `d`.
pub fn select(suite: Suite, d: usize) -> Vec<&'static Check> {
    CHECKS.iter().filter(|c| suite.contains(c) && c.applies(d)).collect()
}

// ---------------------------------------------------------------------------
// expression shorthands

fn jj(i: usize, j: usize) -> Expr {
    named(N::J(i as u8, j as u8))
}
fn ll(i: usize, j: usize) -> Expr {
    named(N::L(i as u8, j as u8))
}
fn ss(i: usize, j: usize) -> Expr {
    named(N::S(i as u8, j as u8))
}
fn aa(i: usize) -> Expr {
    named(N::A(i as u8))
}
fn mm(i: usize) -> Expr {
    named(N::M(i as u8))
}
fn bb(i: usize) -> Expr {
    named(N::B(i as u8))
}
fn b1(i: usize) -> Expr {
    named(N::B1(i as u8))
}
fn b2(i: usize) -> Expr {
    named(N::B2(i as u8))
}
fn lrl(i: usize) -> Expr {
    named(N::Lrl(i as u8))
}
fn gam(i: usize) -> Expr {
    named(N::Gamma(i as u8))
}
fn jv(i: usize) -> Expr {
    named(N::Jvec(i as u8))
}
fn lv(i: usize) -> Expr {
    named(N::Lvec(i as u8))
}
fn sv(i: usize) -> Expr {
    named(N::Svec(i as u8))
}
fn t() -> Expr {
    named(N::T)
}
fn h() -> Expr {
    named(N::H)
}
fn k() -> Expr {
    named(N::K)
}
fn g0() -> Expr {
    named(N::Gamma0)
}
fn gd1() -> Expr {
    named(N::GammaD1)
}
fn xp() -> Expr {
    named(N::XP)
}
fn gx() -> Expr {
    named(N::GX)
}
fn gp() -> Expr {
    named(N::GP)
}
fn p2() -> Expr {
    named(N::P2)
}
fn r2() -> Expr {
    named(N::R2)
}
fn ls() -> Expr {
    named(N::LS)
}
fn j2() -> Expr {
    named(N::J2)
}
fn xs() -> Expr {
    named(N::XS)
}
fn ps() -> Expr {
    named(N::PS)
}
fn e() -> Expr {
    energy()
}
/// `H - E`.
fn hme() -> Expr {
    h() - e()
}
/// `gamma.x / r^2`.
fn gxr() -> Expr {
    gx() * rinv2()
}
/// `x.p - i c/2`.
fn xp_shift(c: i64) -> Expr {
    xp() - imag(c, 2)
}
fn q(n: i64, m: i64) -> Expr {
    frac(n, m)
}
/// `i n/m`.
fn iq(n: i64, m: i64) -> Expr {
    imag(n, m)
}
fn comm(a: Expr, b: Expr) -> Expr {
    Expr::comm(a, b)
}
fn anti(a: Expr, b: Expr) -> Expr {
    Expr::anti(a, b)
}
fn sum<I: IntoIterator<Item = Expr>>(it: I) -> Expr {
    Expr::sum(it)
}
fn over(d: usize, f: impl FnMut(usize) -> Expr) -> Expr {
    sum((1..=d).map(f))
}
/// `e` if `i == j`, else `0`.
fn delta(i: usize, j: usize, e: Expr) -> Expr {
    if i == j {
        e
    } else {
        Expr::zero()
    }
}
fn eps(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}
fn di(d: usize) -> i64 {
    d as i64
}

fn inst(label: String, lhs: Expr, rhs: Expr) -> Instance {
    Instance { label, lhs, rhs }
}
fn one(lhs: Expr, rhs: Expr) -> Vec<Instance> {
    alloc::vec![inst(String::new(), lhs, rhs)]
}
fn named_inst(label: &str, lhs: Expr, rhs: Expr) -> Instance {
    inst(label.into(), lhs, rhs)
}
fn each1(d: usize, f: impl Fn(usize) -> (Expr, Expr)) -> Vec<Instance> {
    (1..=d)
        .map(|i| {
            let (l, r) = f(i);
            inst(format!("i={i}"), l, r)
        })
        .collect()
}
fn each2(d: usize, f: impl Fn(usize, usize) -> (Expr, Expr)) -> Vec<Instance> {
    let mut out = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            let (l, r) = f(i, j);
            out.push(inst(format!("i={i},j={j}"), l, r));
        }
    }
    out
}
fn each3(d: usize, f: impl Fn(usize, usize, usize) -> (Expr, Expr)) -> Vec<Instance> {
    let mut out = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            for k in 1..=d {
                let (l, r) = f(i, j, k);
                out.push(inst(format!("i={i},j={j},k={k}"), l, r));
            }
        }
    }
    out
}
fn each4(d: usize, f: impl Fn(usize, usize, usize, usize) -> (Expr, Expr)) -> Vec<Instance> {
    let mut out = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            for k in 1..=d {
                for l in 1..=d {
                    let (a, b) = f(i, j, k, l);
                    out.push(inst(format!("i={i},j={j},k={k},l={l}"), a, b));
                }
            }
        }
    }
    out
}

/// `i(d_ik X_jl + d_il X_kj + d_jk X_li + d_jl X_ik)` for an so(n) family.
fn so_rhs(i: usize, j: usize, k: usize, l: usize, x: fn(usize, usize) -> Expr) -> Expr {
    iq(1, 1) * sum([delta(i, k, x(j, l)), delta(i, l, x(k, j)), delta(j, k, x(l, i)), delta(j, l, x(i, k))])
}

/// Generator `L_ab` of so(d+1,1), with `d+1` and `d+2` the extra indices.
fn big_l(d: usize, a: usize, b: usize) -> Expr {
    if a == b {
        return Expr::zero();
    }
    if a > b {
        return -big_l(d, b, a);
    }
    match (a <= d, b) {
        (true, b) if b <= d => jj(a, b),
        (true, b) if b == d + 1 => aa(a),
        (true, _) => mm(a),
        (false, _) => t(),
    }
}

fn metric(d: usize, a: usize, b: usize) -> i64 {
    match (a == b, a == d + 2) {
        (false, _) => 0,
        (true, false) => 1,
        (true, true) => -1,
    }
}

/// `x_i p^2 ...`: the spin-extended LRL closed form.
fn lrl_closed(d: usize, i: usize) -> Expr {
    x(i) * p2() - xp_shift(di(d) - 1) * p(i) + over(d, |j| ss(i, j) * p(j)) + alpha() * x(i) * gxr()
}

/// `r^2 p^2 - 2(x.p)^2 + 2i(d-1) x.p + L.S + d(d-1)/2 + 2E r^2`.
fn c7_bracket(d: usize) -> Expr {
    r2() * p2() - int(2) * xp().pow(2) + iq(2 * (di(d) - 1), 1) * xp() + ls() + q(di(d) * (di(d) - 1), 2)
        + int(2) * e() * r2()
}

/// Sum of `B_i B_i`, as written out.
fn b_square_closed(d: usize, spin: bool) -> Expr {
    let n = di(d);
    let kinetic = if spin { iq(-2, 1) * xp() * p2() } else { iq(-2, 1) * xp_shift(n - 1) * p2() };
    let braced = r2() * p2().pow(2)
        + kinetic
        + int(4) * e() * (r2() * p2() - int(2) * xp().pow(2) + iq(2 * n - 3, 1) * xp() + q(n * (n - 1), 2))
        + int(4) * e().pow(2) * r2();
    let base = q(1, 4) * braced;
    if spin {
        base + q(1, 2) * ls() * (p2() + int(2) * e())
    } else {
        base
    }
}

fn k_square_closed(_d: usize) -> Expr {
    q(1, 4) * r2() * p2().pow(2) - iq(1, 2) * xp() * p2() + q(1, 2) * ls() * p2()
        - e() * (r2() * p2() - iq(1, 1) * xp() + ls())
        + e().pow(2) * r2()
}

/// `J^2` in terms of `x`, `p` and `L.S`.
fn j2_closed(d: usize) -> Expr {
    let n = di(d);
    r2() * p2() - xp().pow(2) + iq(n - 2, 1) * xp() + ls() + q(n * (n - 1), 8)
}

/// Shared bracket `1/2 x_i p^2 - (x.p - i(d-1)/2) p_i + S_ij p_j`.
fn am_brace(d: usize, i: usize) -> Expr {
    q(1, 2) * x(i) * p2() - xp_shift(di(d) - 1) * p(i) + over(d, |j| ss(i, j) * p(j))
}

/// `[p_i, gamma.x/r^2]`, written out.
fn p_gxr(i: usize) -> Expr {
    iq(-1, 1) * rinv2() * g(i) + iq(2, 1) * x(i) * rinv2().pow(2) * gx()
}

fn dot(d: usize, a: fn(usize) -> Expr, b: fn(usize) -> Expr) -> Expr {
    over(d, |i| a(i) * b(i))
}

// ---------------------------------------------------------------------------
// builders

fn gamma_cliff(d: usize) -> Vec<Instance> {
    each2(d, |i, j| (anti(g(i), g(j)), delta(i, j, int(2))))
}
fn s_so(d: usize) -> Vec<Instance> {
    each4(d, |i, j, k, l| (comm(ss(i, j), ss(k, l)), so_rhs(i, j, k, l, ss)))
}
fn gx_square(_d: usize) -> Vec<Instance> {
    one(gx().pow(2), r2())
}
fn k_h_rel(_d: usize) -> Vec<Instance> {
    alloc::vec![
        named_inst("K", k(), gx() * hme() - alpha()),
        named_inst("H", h(), gxr() * (k() + alpha()) + e()),
    ]
}
fn so_jj(d: usize) -> Vec<Instance> {
    each4(d, |i, j, k, l| (comm(jj(i, j), jj(k, l)), so_rhs(i, j, k, l, jj)))
}
fn so_ja(d: usize) -> Vec<Instance> {
    each3(d, |i, j, k| (comm(jj(i, j), aa(k)), iq(1, 1) * (delta(i, k, aa(j)) - delta(j, k, aa(i)))))
}
fn so_jm(d: usize) -> Vec<Instance> {
    each3(d, |i, j, k| (comm(jj(i, j), mm(k)), iq(1, 1) * (delta(i, k, mm(j)) - delta(j, k, mm(i)))))
}
fn so_jt(d: usize) -> Vec<Instance> {
    each2(d, |i, j| (comm(jj(i, j), t()), Expr::zero()))
}
fn so_aa(d: usize) -> Vec<Instance> {
    each2(d, |i, j| (comm(aa(i), aa(j)), iq(1, 1) * jj(i, j)))
}
fn so_mm(d: usize) -> Vec<Instance> {
    each2(d, |i, j| (comm(mm(i), mm(j)), iq(-1, 1) * jj(i, j)))
}
fn so_am(d: usize) -> Vec<Instance> {
    each2(d, |i, j| (comm(aa(i), mm(j)), delta(i, j, iq(1, 1) * t())))
}
fn so_at(d: usize) -> Vec<Instance> {
    each1(d, |i| (comm(aa(i), t()), iq(-1, 1) * mm(i)))
}
fn so_mt(d: usize) -> Vec<Instance> {
    each1(d, |i| (comm(mm(i), t()), iq(-1, 1) * aa(i)))
}
fn so21_metric(d: usize) -> Vec<Instance> {
    let n = d + 2;
    let l = |a, b| big_l(d, a, b);
    let gm = |a, b| int(metric(d, a, b));
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                for e in 1..=n {
                    let terms = [(a, c, b, e), (a, e, c, b), (b, c, e, a), (b, e, a, c)]
                        .into_iter()
                        .filter(|&(u, v, _, _)| metric(d, u, v) != 0)
                        .map(|(u, v, s, w)| gm(u, v) * l(s, w));
                    let rhs = iq(1, 1) * sum(terms);
                    out.push(inst(format!("a={a},b={b},c={c},d={e}"), comm(l(a, b), l(c, e)), rhs));
                }
            }
        }
    }
    out
}
fn casimir_q2(d: usize) -> Vec<Instance> {
    let n = di(d);
    one(named(N::Q2), q(-(n - 1) * (n + 2), 8))
}
fn sg_jg(d: usize) -> Vec<Instance> {
    each3(d, |i, j, k| (comm(jj(i, j), gam(k)), iq(1, 1) * (delta(i, k, gam(j)) - delta(j, k, gam(i)))))
}
fn sg_ag(d: usize) -> Vec<Instance> {
    each1(d, |i| (comm(aa(i), gd1()), iq(-1, 1) * gam(i)))
}
fn sg_mg(d: usize) -> Vec<Instance> {
    each1(d, |i| (-comm(mm(i), g0()), iq(-1, 1) * gam(i)))
}
fn sg_tg0(_d: usize) -> Vec<Instance> {
    one(comm(t(), g0()), iq(1, 1) * gd1())
}
fn sg_tgd1(_d: usize) -> Vec<Instance> {
    one(comm(t(), gd1()), iq(1, 1) * g0())
}
fn sg_jzero(d: usize) -> Vec<Instance> {
    let mut out = each2(d, |i, j| (comm(jj(i, j), g0()), Expr::zero()));
    out.extend(each2(d, |i, j| (comm(jj(i, j), gd1()), Expr::zero())));
    out
}
fn sg_amtzero(d: usize) -> Vec<Instance> {
    let mut out = each1(d, |i| (comm(aa(i), g0()), Expr::zero()));
    out.extend(each1(d, |i| (comm(mm(i), gd1()), Expr::zero())));
    out.extend(each1(d, |i| (comm(t(), gam(i)), Expr::zero())));
    out
}
fn nc_g0gd1(d: usize) -> Vec<Instance> {
    one(comm(g0(), gd1()), iq(1, 1) * (t() + iq(di(d) - 1, 2) + iq(1, 1) * ls()))
}
/// Right-hand side shared by the two mixed non-closure commutators.
fn nc_mixed_rhs(d: usize, i: usize, lead: Expr, sign: i64) -> Expr {
    lead - over(d, |j| ss(i, j) * x(j)) * (p2() + int(sign)) - (q(di(d) - 1, 2) + ls()) * p(i)
        + iq(1, 1) * over(d, |j| ss(i, j) * p(j))
}
fn nc_gig0(d: usize) -> Vec<Instance> {
    each1(d, |i| (comm(gam(i), g0()), nc_mixed_rhs(d, i, iq(-1, 1) * mm(i), 1)))
}
fn nc_gigd1(d: usize) -> Vec<Instance> {
    each1(d, |i| (comm(gam(i), gd1()), nc_mixed_rhs(d, i, iq(-1, 1) * aa(i), 1)))
}
fn nc_gigd1_fixed(d: usize) -> Vec<Instance> {
    each1(d, |i| (comm(gam(i), gd1()), nc_mixed_rhs(d, i, iq(-1, 1) * aa(i), -1)))
}
fn nc_gigj(d: usize) -> Vec<Instance> {
    each2(d, |i, j| {
        let tail = over(d, |k| x(k) * (ss(i, k) * p(j) - ss(j, k) * p(i)));
        (comm(gam(i), gam(j)), iq(-1, 1) * jj(i, j) + iq(1, 1) * ss(i, j) - int(2) * tail)
    })
}
fn rel_gxgi(d: usize) -> Vec<Instance> {
    each1(d, |i| (gx() * g(i), x(i) - iq(2, 1) * over(d, |j| ss(i, j) * x(j))))
}
fn rel_gxgp(_d: usize) -> Vec<Instance> {
    one(gx() * gp(), xp() + iq(1, 1) * ls())
}
fn cas_gamma(d: usize) -> Vec<Instance> {
    let n = di(d);
    one(g0().pow(2) - gd1().pow(2) - t().pow(2), j2() + q((n - 1) * (n - 2), 8))
}

fn k_decomp(_d: usize) -> Vec<Instance> {
    one(k(), q(1, 2) * (int(1) - int(2) * e()) * g0() + q(1, 2) * (int(1) + int(2) * e()) * gd1())
}
fn sturm_inv(d: usize) -> Vec<Instance> {
    let mut out = each2(d, |i, j| (comm(jj(i, j), k()), Expr::zero()));
    out.extend(each1(d, |i| (comm(bb(i), k()), Expr::zero())));
    out
}
fn b_explicit(d: usize) -> Vec<Instance> {
    each1(d, |i| (q(1, 2) * ((int(1) - int(2) * e()) * aa(i) + (int(1) + int(2) * e()) * mm(i)), bb(i)))
}
fn jb_alg(d: usize) -> Vec<Instance> {
    let mut out = each3(d, |i, j, k| (comm(jj(i, j), bb(k)), iq(1, 1) * (delta(i, k, bb(j)) - delta(j, k, bb(i)))));
    out.extend(each2(d, |i, j| (comm(bb(i), bb(j)), iq(-2, 1) * e() * jj(i, j))));
    out
}
fn b_split(d: usize) -> Vec<Instance> {
    let mut out = each1(d, |i| (bb(i), b1(i) + b2(i)));
    out.push(named_inst(
        "B^2",
        dot(d, bb, bb),
        dot(d, b1, b1) + dot(d, b1, b2) + dot(d, b2, b1) + dot(d, b2, b2),
    ));
    out
}
fn b1_square(d: usize) -> Vec<Instance> {
    one(dot(d, b1, b1), b_square_closed(d, false))
}
fn b_cross(d: usize) -> Vec<Instance> {
    one(dot(d, b1, b2) + dot(d, b2, b1), q(1, 2) * ls() * (p2() + int(2) * e()))
}
fn b2_square(d: usize) -> Vec<Instance> {
    let triple = |f: &dyn Fn(usize, usize, usize) -> Expr| {
        sum((1..=d).flat_map(|i| (1..=d).flat_map(move |j| (1..=d).map(move |k| (i, j, k)))).map(|(i, j, k)| f(i, j, k)))
    };
    let ssp = triple(&|i, j, k| ss(i, j) * ss(i, k) * p(j) * p(k));
    let anti_form = triple(&|i, j, k| q(1, 2) * anti(ss(i, j), ss(i, k)) * p(j) * p(k));
    alloc::vec![
        named_inst("B2.B2 = S S p p", dot(d, b2, b2), ssp.clone()),
        named_inst("S S p p = {S,S} p p / 2", ssp, anti_form.clone()),
        named_inst("{S,S} p p / 2 = (d-1) p^2 / 4", anti_form, q(di(d) - 1, 4) * p2()),
    ]
}
fn s_anticomm(d: usize) -> Vec<Instance> {
    each2(d, |j, k| (over(d, |i| anti(ss(i, j), ss(i, k))), delta(j, k, q(di(d) - 1, 2))))
}
fn b_square(d: usize) -> Vec<Instance> {
    one(dot(d, bb, bb), b_square_closed(d, true))
}
fn psq_gx(_d: usize) -> Vec<Instance> {
    one(comm(p2(), gx()), iq(-2, 1) * gp())
}
fn k_square(d: usize) -> Vec<Instance> {
    one(k().pow(2), k_square_closed(d))
}
fn b2_k2_j2(d: usize) -> Vec<Instance> {
    let n = di(d);
    one(dot(d, bb, bb), k().pow(2) + int(2) * e() * (j2() + q(n * (n - 1), 8)))
}

fn d3_so3(_d: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    let fams: [(&str, fn(usize) -> Expr); 3] = [("J", jv), ("L", lv), ("S", sv)];
    for (name, v) in fams {
        for i in 1..=3 {
            for j in 1..=3 {
                let rhs = iq(1, 1) * sum((1..=3).map(|k| int(eps(i, j, k)) * v(k)).filter(|_| true));
                let rhs = if (1..=3).all(|k| eps(i, j, k) == 0) { Expr::zero() } else { rhs };
                out.push(inst(format!("{name}: i={i},j={j}"), comm(v(i), v(j)), rhs));
            }
        }
    }
    out
}
fn d3_dots(_d: usize) -> Vec<Instance> {
    alloc::vec![
        named_inst("L.B1", dot(3, lv, b1), Expr::zero()),
        named_inst("L.B2", dot(3, lv, b2), xp() * ps() - xs() * p2()),
        named_inst("S.B1", dot(3, sv, b1), q(1, 2) * xs() * p2() - (xp() - iq(1, 1)) * ps() + e() * xs()),
        named_inst("S.B2", dot(3, sv, b2), iq(-1, 1) * ps()),
    ]
}
fn jb_dot(_d: usize) -> Vec<Instance> {
    one(dot(3, jv, bb), -(xs() * (q(1, 2) * p2() - e())))
}
fn jb_dot_sigma(_d: usize) -> Vec<Instance> {
    one(dot(3, jv, bb), q(-1, 2) * k())
}
fn jx_dot_sigma(_d: usize) -> Vec<Instance> {
    one(dot(3, jv, x), q(1, 2) * gx())
}
fn ja_dot(_d: usize) -> Vec<Instance> {
    one(dot(3, jv, lrl), q(1, 2) * alpha())
}

fn jh_com(d: usize) -> Vec<Instance> {
    each2(d, |i, j| (comm(jj(i, j), h()), Expr::zero()))
}
fn lrl_conserved(d: usize) -> Vec<Instance> {
    each1(d, |i| (comm(lrl(i), h()), Expr::zero()))
}
fn xh_com(d: usize) -> Vec<Instance> {
    let mut out = each1(d, |i| (comm(x(i), h()), comm(x(i), q(1, 2) * p2())));
    out.extend(each1(d, |i| (comm(x(i), q(1, 2) * p2()), iq(1, 1) * p(i))));
    out
}
fn bh_chain(d: usize) -> Vec<Instance> {
    let mut out = each1(d, |i| (comm(bb(i), h()) + comm(x(i), h()) * hme(), Expr::zero()));
    out.extend(each1(d, |i| (comm(bb(i), h()), comm(bb(i), gxr()) * (k() + alpha()))));
    out.extend(each1(d, |i| (comm(bb(i), gxr()) * (k() + alpha()), comm(bb(i), gxr()) * gx() * hme())));
    out.extend(each1(d, |i| (comm(bb(i), gxr()) * gx(), iq(-1, 1) * p(i))));
    out.extend(each1(d, |i| (comm(bb(i), gxr()), iq(-1, 1) * p(i) * gxr())));
    out
}
fn lrl_explicit(d: usize) -> Vec<Instance> {
    each1(d, |i| (lrl(i), lrl_closed(d, i)))
}
fn lrl_alg(d: usize) -> Vec<Instance> {
    let mut out = each4(d, |i, j, k, l| (comm(jj(i, j), jj(k, l)), so_rhs(i, j, k, l, jj)));
    out.extend(each3(d, |i, j, k| {
        (comm(jj(i, j), lrl(k)), iq(1, 1) * (delta(i, k, lrl(j)) - delta(j, k, lrl(i))))
    }));
    out.extend(each2(d, |i, j| (comm(lrl(i), lrl(j)), iq(-2, 1) * h() * jj(i, j))));
    out.extend(each2(d, |i, j| (comm(lrl(i), lrl(j)), comm(bb(i) + x(i) * hme(), bb(j) + x(j) * hme()))));
    out
}
fn lrl_aux1(d: usize) -> Vec<Instance> {
    let mut out = each2(d, |i, j| {
        (
            comm(bb(i), x(j) * hme()) - comm(bb(j), x(i) * hme()),
            (iq(-2, 1) * jj(i, j) + iq(1, 1) * ll(i, j)) * hme(),
        )
    });
    out.extend(each2(d, |i, j| (comm(bb(i), x(j) * hme()), comm(bb(i), x(j) * gxr()) * (k() + alpha()))));
    out.extend(each2(d, |i, j| {
        (comm(bb(i), x(j) * gxr()) * (k() + alpha()), comm(bb(i), x(j) * gxr()) * gx() * hme())
    }));
    out
}
fn lrl_aux2(d: usize) -> Vec<Instance> {
    each2(d, |i, j| (comm(x(i) * hme(), x(j) * hme()), iq(-1, 1) * ll(i, j) * hme()))
}
fn lrl_aux3(d: usize) -> Vec<Instance> {
    let mut out = each2(d, |i, j| {
        let mix = q(1, 2) * (int(1) - int(2) * e()) * aa(i) + q(1, 2) * (int(1) + int(2) * e()) * mm(i);
        (comm(bb(i), x(j)), comm(mix, mm(j) - aa(j)))
    });
    out.extend(each2(d, |i, j| (comm(bb(i), x(j)), delta(i, j, iq(1, 1) * t()) - iq(1, 1) * jj(i, j))));
    out
}
fn lrl_square(d: usize) -> Vec<Instance> {
    let n = di(d);
    one(dot(d, lrl, lrl), int(2) * h() * (j2() + q(n * (n - 1), 8)) + alpha().pow(2))
}

fn app_a_j2(d: usize) -> Vec<Instance> {
    let sq = |f: fn(usize, usize) -> Expr| sum((1..=d).flat_map(|i| (1..=d).map(move |j| f(i, j) * f(i, j))));
    alloc::vec![
        named_inst("J^2 = (LL + 2LS + SS)/2", j2(), q(1, 2) * (sq(ll) + int(2) * ls() + sq(ss))),
        named_inst("J^2 closed form", j2(), j2_closed(d)),
    ]
}
fn app_a_ll(d: usize) -> Vec<Instance> {
    let n = di(d);
    one(named(N::L2), r2() * p2() - xp().pow(2) + iq(n - 2, 1) * xp())
}
fn app_a_ss(d: usize) -> Vec<Instance> {
    let n = di(d);
    one(named(N::S2), q(n * (n - 1), 8))
}
fn app_a_am2(d: usize) -> Vec<Instance> {
    let n = di(d);
    let lhs = dot(d, aa, aa) - dot(d, mm, mm);
    alloc::vec![
        named_inst(
            "A^2 - M^2 = -{..}x - x{..}",
            lhs.clone(),
            -over(d, |i| am_brace(d, i) * x(i)) - over(d, |i| x(i) * am_brace(d, i)),
        ),
        named_inst(
            "A^2 - M^2 closed form",
            lhs,
            -(r2() * p2()) + int(2) * xp().pow(2) - iq(2 * n - 3, 1) * xp() - ls() - q(n * (n - 1), 2),
        ),
    ]
}
fn app_a_t2(d: usize) -> Vec<Instance> {
    let n = di(d);
    one(t().pow(2), xp().pow(2) - iq(n - 1, 1) * xp() - q((n - 1) * (n - 1), 4))
}
fn app_a_g2(d: usize) -> Vec<Instance> {
    let n = di(d);
    let lhs = g0().pow(2) - gd1().pow(2);
    let quarter = q(1, 4) * gx() * (p2() + int(1)) * gx() * (p2() + int(1))
        - q(1, 4) * gx() * (p2() - int(1)) * gx() * (p2() - int(1));
    let mid = gx().pow(2) * p2() - iq(1, 1) * gx() * gp();
    let fin = r2() * p2() - iq(1, 1) * xp() + ls();
    alloc::vec![
        named_inst("G0^2 - Gd1^2 expanded", lhs.clone(), quarter),
        named_inst("G0^2 - Gd1^2 via gamma.x", lhs.clone(), mid),
        named_inst("G0^2 - Gd1^2 closed form", lhs.clone(), fin),
        named_inst(
            "G0^2 - Gd1^2 - T^2",
            lhs - t().pow(2),
            r2() * p2() - xp().pow(2) + iq(n - 2, 1) * xp() + ls() + q((n - 1) * (n - 1), 4),
        ),
    ]
}

fn app_b_1(d: usize) -> Vec<Instance> {
    each1(d, |i| (comm(p(i), gxr()), p_gxr(i)))
}
fn app_b_2(d: usize) -> Vec<Instance> {
    one(comm(p2(), gxr()), iq(-2, 1) * rinv2() * gp() + iq(4, 1) * rinv2().pow(2) * gx() * xp_shift(di(d) - 2))
}
fn app_b_3(_d: usize) -> Vec<Instance> {
    one(comm(xp(), gxr()), iq(1, 1) * rinv2() * gx())
}
fn app_b_4(d: usize) -> Vec<Instance> {
    each1(d, |i| {
        (
            comm(xp_shift(di(d) - 1) * p(i), gxr()),
            p_gxr(i) * xp_shift(di(d) - 5) + iq(1, 1) * rinv2() * gx() * p(i),
        )
    })
}
fn app_b_5(d: usize) -> Vec<Instance> {
    let mut out = each1(d, |i| {
        (
            comm(over(d, |j| ss(i, j) * p(j)), gxr()),
            over(d, |j| ss(i, j) * p_gxr(j)) + iq(1, 1) * rinv2() * (x(i) * gp() - g(i) * xp()),
        )
    });
    out.extend(each1(d, |i| {
        (
            comm(over(d, |j| ss(i, j) * p(j)), gxr()),
            iq(-1, 1) * rinv2() * g(i) * xp_shift(di(d) - 3) - x(i) * rinv2().pow(2) * gx()
                + iq(1, 1) * x(i) * rinv2() * gp(),
        )
    }));
    out
}
fn app_b_6(d: usize) -> Vec<Instance> {
    let mut out = each1(d, |i| (over(d, |j| ss(i, j) * g(j)), iq(-(di(d) - 1), 2) * g(i)));
    out.extend(each1(d, |i| (over(d, |j| ss(i, j) * x(j)), iq(-1, 2) * (g(i) * gx() - x(i)))));
    out
}
fn b7_rhs(i: usize) -> Expr {
    int(2) * x(i) * rinv2().pow(2) * gx() - rinv2() * g(i) - iq(1, 1) * rinv2() * gx() * p(i)
}
fn app_b_7(d: usize) -> Vec<Instance> {
    each1(d, |i| (comm(bb(i), gxr()), b7_rhs(i)))
}
fn app_b_final(d: usize) -> Vec<Instance> {
    each1(d, |i| (b7_rhs(i), iq(-1, 1) * p(i) * gxr()))
}

fn x_hme_dot(d: usize) -> Expr {
    over(d, |i| x(i) * hme() * x(i) * hme())
}
fn cross_terms(d: usize) -> Expr {
    over(d, |i| x(i) * hme() * bb(i)) + over(d, |i| bb(i) * x(i) * hme())
}
fn app_c_1(d: usize) -> Vec<Instance> {
    one(dot(d, lrl, lrl), dot(d, bb, bb) + cross_terms(d) + x_hme_dot(d))
}
fn app_c_2(d: usize) -> Vec<Instance> {
    one(x_hme_dot(d), r2() * hme().pow(2) - iq(1, 1) * xp() * hme())
}
fn app_c_3(d: usize) -> Vec<Instance> {
    let n = di(d);
    let brace = p2() + iq(1, 1) * rinv2() * (xp() - iq(n - 2, 1)) + rinv2() * ls();
    one(
        hme().pow(2),
        q(1, 4) * p2().pow(2) + alpha() * gxr() * brace + alpha().pow(2) * rinv2()
            - e() * (p2() + int(2) * alpha() * gxr())
            + e().pow(2),
    )
}
fn app_c_4(_d: usize) -> Vec<Instance> {
    one(
        iq(-1, 1) * xp() * hme(),
        iq(-1, 2) * xp() * p2() - alpha() * iq(1, 1) * gxr() * (xp() + iq(1, 1)) + e() * iq(1, 1) * xp(),
    )
}
fn app_c_5(d: usize) -> Vec<Instance> {
    let n = di(d);
    one(
        x_hme_dot(d),
        q(1, 4) * r2() * p2().pow(2) - iq(1, 2) * xp() * p2()
            + alpha() * gx() * (p2() + int(n - 1) * rinv2() + rinv2() * ls())
            + alpha().pow(2)
            + e() * (-(r2() * p2()) + iq(1, 1) * xp() - int(2) * alpha() * gx())
            + e().pow(2) * r2(),
    )
}
fn app_c_6(_d: usize) -> Vec<Instance> {
    one(iq(-1, 1) * gp(), gxr() * (iq(-1, 1) * xp() + ls()))
}
fn app_c_7(d: usize) -> Vec<Instance> {
    let n = di(d);
    let xb = over(d, |i| x(i) * bb(i));
    let bx = over(d, |i| bb(i) * x(i));
    alloc::vec![
        named_inst("regrouped", cross_terms(d), (xb.clone() + bx) * hme() + iq(1, 1) * xp() * hme()),
        named_inst(
            "via x.B",
            cross_terms(d),
            (int(2) * xb + iq(n, 1) * xp_shift(n - 1) + iq(1, 1) * xp()) * hme(),
        ),
        named_inst("closed bracket", cross_terms(d), c7_bracket(d) * hme()),
    ]
}
fn app_c_8(d: usize) -> Vec<Instance> {
    let n = di(d);
    one(
        c7_bracket(d) * q(1, 2) * p2(),
        q(1, 2)
            * (r2() * p2().pow(2) - int(2) * xp().pow(2) * p2() + iq(2 * (n - 1), 1) * xp() * p2() + ls() * p2()
                + q(n * (n - 1), 2) * p2())
            + e() * r2() * p2(),
    )
}
fn app_c_9(d: usize) -> Vec<Instance> {
    let n = di(d);
    let lhs = alpha() * c7_bracket(d) * gxr();
    let mid = alpha() * gxr() * c7_bracket(d) + alpha() * r2() * comm(p2(), gxr())
        - int(2) * alpha() * comm(xp().pow(2), gxr())
        + iq(2 * (n - 1), 1) * alpha() * comm(xp(), gxr())
        + alpha() * comm(ls(), gxr());
    let fin = alpha()
        * gxr()
        * (r2() * p2() - int(2) * xp().pow(2) + iq(2 * (n - 2), 1) * xp() + ls() + q((n - 1) * (n - 2), 2))
        + int(2) * alpha() * e() * gx();
    alloc::vec![named_inst("commuted", lhs.clone(), mid), named_inst("closed form", lhs, fin)]
}
fn app_c_10(_d: usize) -> Vec<Instance> {
    one(comm(xp().pow(2), gxr()), gxr() * (iq(2, 1) * xp() - int(1)))
}
fn app_c_11(d: usize) -> Vec<Instance> {
    one(
        comm(ls(), gxr()),
        rinv2() * (iq(-2, 1) * gx() * xp_shift(di(d) - 1) + iq(2, 1) * r2() * gp()),
    )
}
fn app_c_12(d: usize) -> Vec<Instance> {
    let n = di(d);
    one(
        -(e() * c7_bracket(d)),
        -(e() * (r2() * p2() - int(2) * xp().pow(2) + iq(2 * (n - 1), 1) * xp() + ls() + q(n * (n - 1), 2)))
            - int(2) * e().pow(2) * r2(),
    )
}
fn app_c_13(d: usize) -> Vec<Instance> {
    let n = di(d);
    let first = q(1, 2)
        * (r2() * p2().pow(2) - int(2) * xp().pow(2) * p2() + iq(2 * (n - 1), 1) * xp() * p2() + ls() * p2()
            + q(n * (n - 1), 2) * p2());
    let second = alpha()
        * gxr()
        * (r2() * p2() - int(2) * xp().pow(2) + iq(2 * (n - 2), 1) * xp() + ls() + q((n - 1) * (n - 2), 2));
    let third = e()
        * (int(2) * alpha() * gx() + int(2) * xp().pow(2) - iq(2 * (n - 1), 1) * xp() - ls() - q(n * (n - 1), 2))
        - int(2) * e().pow(2) * r2();
    one(cross_terms(d), first + second + third)
}
fn app_c_14(d: usize) -> Vec<Instance> {
    let n = di(d);
    one(
        dot(d, lrl, lrl),
        r2() * p2().pow(2) - xp().pow(2) * p2() + iq(n - 2, 1) * xp() * p2() + ls() * p2() + q(n * (n - 1), 4) * p2()
            + int(2)
                * alpha()
                * gxr()
                * (r2() * p2() - xp().pow(2) + iq(n - 2, 1) * xp() + ls() + q(n * (n - 1), 4))
            + alpha().pow(2),
    )
}

macro_rules! check {
    ($id:literal, $suite:ident, $tier:ident, $only:expr, $pauli:expr, $build:ident, $desc:literal, $refr:literal) => {
        Check {
            id: $id,
            description: $desc,
            paper_ref: $refr,
            suite: Suite::$suite,
            tier: Tier::$tier,
            only_dim: $only,
            pauli: $pauli,
            build: $build,
        }
    };
}

static CHECKS: &[Check] = &[
    check!("GAMMA-CLIFF", Core, Core, None, false, gamma_cliff, "Clifford relations of the gamma generators", "g_i g_j + g_j g_i = 2 delta_ij"),
    check!("S-SO(D)", Core, Core, None, false, s_so, "spin matrices close so(d)", "[S_ij, S_kl] = i(d_ik S_jl + d_il S_kj + d_jk S_li + d_jl S_ik)"),
    check!("GX-SQUARE", Core, Core, None, false, gx_square, "square of gamma.x", "(gamma.x)^2 = r^2"),
    check!("K-H-REL", Core, Core, None, false, k_h_rel, "Sturm and Schroedinger operators in terms of each other", "K = (gamma.x)(H-E) - alpha; H = (gamma.x)/r^2 (K+alpha) + E"),
    check!("SO-COM-JJ", Core, Core, None, false, so_jj, "rotation generators", "[J_ij, J_kl] = i(d_ik J_jl + d_il J_kj + d_jk J_li + d_jl J_ik)"),
    check!("SO-COM-JA", Core, Core, None, false, so_ja, "A transforms as a vector", "[J_ij, A_k] = i(d_ik A_j - d_jk A_i)"),
    check!("SO-COM-JM", Core, Core, None, false, so_jm, "M transforms as a vector", "[J_ij, M_k] = i(d_ik M_j - d_jk M_i)"),
    check!("SO-COM-JT", Core, Core, None, false, so_jt, "T is rotation invariant", "[J_ij, T] = 0"),
    check!("SO-COM-AA", Core, Core, None, false, so_aa, "A components close on J", "[A_i, A_j] = i J_ij"),
    check!("SO-COM-MM", Core, Core, None, false, so_mm, "M components close on -J", "[M_i, M_j] = -i J_ij"),
    check!("SO-COM-AM", Core, Core, None, false, so_am, "A and M close on T", "[A_i, M_j] = i delta_ij T"),
    check!("SO-COM-AT", Core, Core, None, false, so_at, "A with the dilation", "[A_i, T] = -i M_i"),
    check!("SO-COM-MT", Core, Core, None, false, so_mt, "M with the dilation", "[M_i, T] = -i A_i"),
    check!("SO21-METRIC", Core, Core, None, false, so21_metric, "so(d+1,1) relations with metric diag(1,...,1,-1)", "[L_ab, L_cd] = i(g_ac L_bd + g_ad L_cb + g_bc L_da + g_bd L_ac)"),
    check!("CASIMIR-Q2", Core, Core, None, false, casimir_q2, "second-order Casimir is a constant", "J^2 + A^2 - M^2 - T^2 = -(d-1)(d+2)/8"),
    check!("SO-GAMMA-JG", Core, Core, None, false, sg_jg, "Gamma_k is a vector", "[J_ij, Gamma_k] = i(d_ik Gamma_j - d_jk Gamma_i)"),
    check!("SO-GAMMA-AG", Core, Core, None, false, sg_ag, "A on Gamma_{d+1}", "[A_i, Gamma_{d+1}] = -i Gamma_i"),
    check!("SO-GAMMA-MG", Core, Core, None, false, sg_mg, "M on Gamma_0", "-[M_i, Gamma_0] = -i Gamma_i"),
    check!("SO-GAMMA-TG0", Core, Core, None, false, sg_tg0, "T on Gamma_0", "[T, Gamma_0] = i Gamma_{d+1}"),
    check!("SO-GAMMA-TGD1", Core, Core, None, false, sg_tgd1, "T on Gamma_{d+1}", "[T, Gamma_{d+1}] = i Gamma_0"),
    check!("SO-GAMMA-JZERO", Core, Core, None, false, sg_jzero, "Gamma_0, Gamma_{d+1} are rotation invariant", "[J_ij, Gamma_0] = [J_ij, Gamma_{d+1}] = 0"),
    check!("SO-GAMMA-AMTZERO", Core, Core, None, false, sg_amtzero, "vanishing mixed commutators", "[A_i, Gamma_0] = [M_i, Gamma_{d+1}] = [T, Gamma_i] = 0"),
    check!("NONCLOSE-G0GD1", Core, Transcription, None, false, nc_g0gd1, "Gamma_0 with Gamma_{d+1}", "[Gamma_0, Gamma_{d+1}] = i(T + i(d-1)/2 + i L_ij S_ij)"),
    check!("NONCLOSE-GIG0", Core, Transcription, None, false, nc_gig0, "Gamma_i with Gamma_0", "[Gamma_i, Gamma_0] = -i M_i - S_ij x_j (p^2+1) - ((d-1)/2 + L_jk S_jk) p_i + i S_ij p_j"),
    check!("NONCLOSE-GIGD1", Core, Transcription, None, false, nc_gigd1, "Gamma_i with Gamma_{d+1}, as printed", "[Gamma_i, Gamma_{d+1}] = -i A_i - S_ij x_j (p^2+1) - ((d-1)/2 + L_jk S_jk) p_i + i S_ij p_j"),
    check!("NONCLOSE-GIGD1-FIXED", Core, Core, None, false, nc_gigd1_fixed, "Gamma_i with Gamma_{d+1}, with (p^2-1) in the spin term", "[Gamma_i, Gamma_{d+1}] = -i A_i - S_ij x_j (p^2-1) - ((d-1)/2 + L_jk S_jk) p_i + i S_ij p_j"),
    check!("NONCLOSE-GIGJ", Core, Transcription, None, false, nc_gigj, "Gamma_i with Gamma_j", "[Gamma_i, Gamma_j] = -i J_ij + i S_ij - 2 x_k (S_ik p_j - S_jk p_i)"),
    check!("REL-GXGI", Core, Core, None, false, rel_gxgi, "gamma.x times gamma_i", "(gamma.x) gamma_i = x_i - 2i S_ij x_j"),
    check!("REL-GXGP", Core, Core, None, false, rel_gxgp, "gamma.x times gamma.p", "(gamma.x)(gamma.p) = x.p + i L_ij S_ij"),
    check!("CAS-GAMMA", Core, Core, None, false, cas_gamma, "so(2,1)-like Casimir of Gamma_0, Gamma_{d+1}, T", "Gamma_0^2 - Gamma_{d+1}^2 - T^2 = J^2 + (d-1)(d-2)/8"),
    check!("K-DECOMP", Sturm, Core, None, false, k_decomp, "K as a combination of Gamma_0, Gamma_{d+1}", "K = (1-2E)/2 Gamma_0 + (1+2E)/2 Gamma_{d+1}"),
    check!("STURM-INV", Sturm, Core, None, false, sturm_inv, "integrals of motion of K", "[J_ij, K] = [B_i, K] = 0"),
    check!("B-EXPLICIT", Sturm, Core, None, false, b_explicit, "B from A and M equals its explicit form", "B_i = ((1-2E) A_i + (1+2E) M_i)/2 = x_i p^2/2 - (x.p - i(d-1)/2) p_i + S_ij p_j + E x_i"),
    check!("JB-ALG", Sturm, Core, None, false, jb_alg, "algebra of J and B", "[J_ij, B_k] = i(d_ik B_j - d_jk B_i); [B_i, B_j] = -2i E J_ij"),
    check!("B-SPLIT", Sturm, Core, None, false, b_split, "spin-independent and spin-dependent parts of B", "B_i = B1_i + B2_i; B^2 = B1^2 + B1.B2 + B2.B1 + B2^2"),
    check!("B1-SQUARE", Sturm, Core, None, false, b1_square, "square of the spin-independent part", "B1^2 = {r^2 p^4 - 2i(x.p - i(d-1)/2) p^2 + 4E[r^2 p^2 - 2(x.p)^2 + i(2d-3) x.p + d(d-1)/2] + 4E^2 r^2}/4"),
    check!("B-CROSS", Sturm, Core, None, false, b_cross, "cross terms of B^2", "B1.B2 + B2.B1 = L_ij S_ij (p^2 + 2E)/2"),
    check!("B2-SQUARE", Sturm, Core, None, false, b2_square, "square of the spin-dependent part", "B2^2 = S_ij S_ik p_j p_k = {S_ij, S_ik} p_j p_k/2 = (d-1) p^2/4"),
    check!("S-ANTICOMM", Sturm, Core, None, false, s_anticomm, "contracted anticommutator of spin matrices", "{S_ij, S_ik} = (d-1) delta_jk/2"),
    check!("B-SQUARE", Sturm, Core, None, false, b_square, "explicit B^2", "B^2 = {r^2 p^4 - 2i(x.p) p^2 + 4E[...] + 4E^2 r^2}/4 + L_ij S_ij (p^2 + 2E)/2"),
    check!("PSQ-GX", Sturm, Core, None, false, psq_gx, "p^2 past gamma.x (sign reading [p^2, gamma.x]; the printed text has a +/- sign)", "[p^2, gamma.x] = -2i gamma.p"),
    check!("K-SQUARE", Sturm, Core, None, false, k_square, "explicit K^2", "K^2 = r^2 p^4/4 - i(x.p)p^2/2 + L_ij S_ij p^2/2 - E(r^2 p^2 - i x.p + L_ij S_ij) + E^2 r^2"),
    check!("B2-K2-J2", Sturm, Core, None, false, b2_k2_j2, "B^2 in terms of K^2 and J^2", "B^2 = K^2 + 2E[J^2 + d(d-1)/8]"),
    check!("D3-SO3", D3, Core, Some(3), false, d3_so3, "three-dimensional angular momentum vectors", "[J_i, J_j] = i eps_ijk J_k (and L, S)"),
    check!("D3-DOTS", D3, Core, Some(3), false, d3_dots, "dot products of L, S with B1, B2", "L.B1 = 0; L.B2 = (x.p)(p.S) - (x.S)p^2; S.B1 = (x.S)p^2/2 - (x.p - i)(p.S) + E x.S; S.B2 = -i p.S"),
    check!("JB-DOT", D3, Core, Some(3), false, jb_dot, "J.B in three dimensions", "J.B = -(x.S)(p^2/2 - E)"),
    check!("JB-DOT-SIGMA", D3, Core, Some(3), true, jb_dot_sigma, "J.B with gamma_i = sigma_i", "J.B = -K/2"),
    check!("JX-DOT-SIGMA", D3, Core, Some(3), true, jx_dot_sigma, "J.x with gamma_i = sigma_i", "J.x = sigma.x/2"),
    check!("JA-DOT", D3, Core, Some(3), true, ja_dot, "J.LRL with gamma_i = sigma_i", "J.A~ = alpha/2"),
    check!("JH-COM", Schrodinger, Core, None, false, jh_com, "J is conserved", "[J_ij, H] = 0"),
    check!("LRL-CONSERVED", Schrodinger, Core, None, false, lrl_conserved, "LRL vector is conserved", "[A~_i, H] = 0"),
    check!("XH-COM", Schrodinger, Core, None, false, xh_com, "x with H", "[x_i, H] = [x_i, p^2/2] = i p_i"),
    check!("BH-CHAIN", Schrodinger, Core, None, false, bh_chain, "reduction of [A~_i, H] = 0 to a commutator with gamma.x/r^2", "[B_i, H] + [x_i, H](H-E) = 0; [B_i, gamma.x/r^2] = -i p_i gamma.x/r^2"),
    check!("LRL-EXPLICIT", Schrodinger, Core, None, false, lrl_explicit, "closed form of the LRL vector", "A~_i = x_i p^2 - (x.p - i(d-1)/2) p_i + S_ij p_j + alpha x_i gamma.x/r^2"),
    check!("LRL-ALG", Schrodinger, Core, None, false, lrl_alg, "algebra of J and the LRL vector", "[J_ij, A~_k] = i(d_ik A~_j - d_jk A~_i); [A~_i, A~_j] = -2i H J_ij"),
    check!("LRL-AUX-1", Schrodinger, Core, None, false, lrl_aux1, "B with x(H-E)", "[B_i, x_j(H-E)] - [B_j, x_i(H-E)] = (-2i J_ij + i L_ij)(H-E)"),
    check!("LRL-AUX-2", Schrodinger, Core, None, false, lrl_aux2, "x(H-E) with itself", "[x_i(H-E), x_j(H-E)] = -i L_ij (H-E)"),
    check!("LRL-AUX-3", Schrodinger, Core, None, false, lrl_aux3, "B with x", "[B_i, x_j] = i delta_ij T - i J_ij"),
    check!("LRL-SQUARE", Schrodinger, Core, None, false, lrl_square, "square of the LRL vector", "A~^2 = 2H(J^2 + d(d-1)/8) + alpha^2"),
    check!("APP-A-J2", Appendix, Transcription, None, false, app_a_j2, "J^2 split and closed form", "J^2 = (L_ij L_ij + 2 L_ij S_ij + S_ij S_ij)/2 = r^2 p^2 - (x.p)^2 + i(d-2) x.p + L_ij S_ij + d(d-1)/8"),
    check!("APP-A-LL", Appendix, Transcription, None, false, app_a_ll, "orbital part of J^2", "L_ij L_ij/2 = r^2 p^2 - (x.p)^2 + i(d-2) x.p"),
    check!("APP-A-SS", Appendix, Transcription, None, false, app_a_ss, "spin part of J^2", "S_ij S_ij/2 = d(d-1)/8"),
    check!("APP-A-AM2", Appendix, Transcription, None, false, app_a_am2, "A^2 - M^2", "A^2 - M^2 = -r^2 p^2 + 2(x.p)^2 - i(2d-3) x.p - L_ij S_ij - d(d-1)/2"),
    check!("APP-A-T2", Appendix, Transcription, None, false, app_a_t2, "T^2", "T^2 = (x.p)^2 - i(d-1) x.p - (d-1)^2/4"),
    check!("APP-A-G2", Appendix, Transcription, None, false, app_a_g2, "Gamma_0^2 - Gamma_{d+1}^2", "Gamma_0^2 - Gamma_{d+1}^2 = r^2 p^2 - i x.p + L_ij S_ij"),
    check!("APP-B-1", Appendix, Transcription, None, false, app_b_1, "p_i with gamma.x/r^2", "[p_i, gamma.x/r^2] = -i gamma_i/r^2 + 2i x_i gamma.x/r^4"),
    check!("APP-B-2", Appendix, Transcription, None, false, app_b_2, "p^2 with gamma.x/r^2", "[p^2, gamma.x/r^2] = -2i gamma.p/r^2 + 4i gamma.x (x.p - i(d-2)/2)/r^4"),
    check!("APP-B-3", Appendix, Transcription, None, false, app_b_3, "x.p with gamma.x/r^2", "[x.p, gamma.x/r^2] = i gamma.x/r^2"),
    check!("APP-B-4", Appendix, Transcription, None, false, app_b_4, "(x.p - i(d-1)/2) p_i with gamma.x/r^2", "[(x.p - i(d-1)/2) p_i, gamma.x/r^2] = [-i gamma_i/r^2 + 2i x_i gamma.x/r^4](x.p - i(d-5)/2) + i gamma.x p_i/r^2"),
    check!("APP-B-5", Appendix, Transcription, None, false, app_b_5, "S_ij p_j with gamma.x/r^2", "[S_ij p_j, gamma.x/r^2] = -i gamma_i (x.p - i(d-3)/2)/r^2 - x_i gamma.x/r^4 + i x_i gamma.p/r^2"),
    check!("APP-B-6", Appendix, Transcription, None, false, app_b_6, "contractions of S with gamma and x", "S_ij gamma_j = -i(d-1) gamma_i/2; S_ij x_j = -i(gamma_i gamma.x - x_i)/2"),
    check!("APP-B-7", Appendix, Transcription, None, false, app_b_7, "B with gamma.x/r^2", "[B_i, gamma.x/r^2] = 2 x_i gamma.x/r^4 - gamma_i/r^2 - i gamma.x p_i/r^2"),
    check!("APP-B-FINAL", Appendix, Transcription, None, false, app_b_final, "the B commutator equals -i p_i gamma.x/r^2", "2 x_i gamma.x/r^4 - gamma_i/r^2 - i gamma.x p_i/r^2 = -i p_i gamma.x/r^2"),
    check!("APP-C-1", Appendix, Transcription, None, false, app_c_1, "expansion of the LRL square", "A~^2 = B^2 + x(H-E).B + B.x(H-E) + x(H-E).x(H-E)"),
    check!("APP-C-2", Appendix, Transcription, None, false, app_c_2, "x(H-E).x(H-E)", "x(H-E).x(H-E) = r^2 (H-E)^2 - i x.p (H-E)"),
    check!("APP-C-3", Appendix, Transcription, None, false, app_c_3, "(H-E)^2", "(H-E)^2 = p^4/4 + alpha gamma.x/r^2 {p^2 + i[x.p - i(d-2)]/r^2 + L_ij S_ij/r^2} + alpha^2/r^2 - E(p^2 + 2 alpha gamma.x/r^2) + E^2"),
    check!("APP-C-4", Appendix, Transcription, None, false, app_c_4, "-i x.p (H-E)", "-i x.p (H-E) = -i(x.p)p^2/2 - alpha i gamma.x (x.p + i)/r^2 + E i x.p"),
    check!("APP-C-5", Appendix, Transcription, None, false, app_c_5, "x(H-E).x(H-E) closed form", "x(H-E).x(H-E) = r^2 p^4/4 - i(x.p)p^2/2 + alpha gamma.x (p^2 + (d-1)/r^2 + L_ij S_ij/r^2) + alpha^2 + E(-r^2 p^2 + i x.p - 2 alpha gamma.x) + E^2 r^2"),
    check!("APP-C-6", Appendix, Transcription, None, false, app_c_6, "gamma.p through gamma.x/r^2", "-i gamma.p = gamma.x (-i x.p + L_ij S_ij)/r^2"),
    check!("APP-C-7", Appendix, Transcription, None, false, app_c_7, "cross terms of the LRL square", "x(H-E).B + B.x(H-E) = [r^2 p^2 - 2(x.p)^2 + 2i(d-1) x.p + L_ij S_ij + d(d-1)/2 + 2E r^2](H-E)"),
    check!("APP-C-8", Appendix, Transcription, None, false, app_c_8, "kinetic part of the cross terms", "[...] p^2/2 = [r^2 p^4 - 2(x.p)^2 p^2 + 2i(d-1)(x.p)p^2 + L_ij S_ij p^2 + d(d-1)p^2/2]/2 + E r^2 p^2"),
    check!("APP-C-9", Appendix, Transcription, None, false, app_c_9, "potential part of the cross terms", "alpha [...] gamma.x/r^2 = alpha gamma.x/r^2 [r^2 p^2 - 2(x.p)^2 + 2i(d-2) x.p + L_ij S_ij + (d-1)(d-2)/2] + 2 alpha E gamma.x"),
    check!("APP-C-10", Appendix, Transcription, None, false, app_c_10, "(x.p)^2 with gamma.x/r^2", "[(x.p)^2, gamma.x/r^2] = gamma.x (2i x.p - 1)/r^2"),
    check!("APP-C-11", Appendix, Transcription, None, false, app_c_11, "L.S with gamma.x/r^2", "[L_ij S_ij, gamma.x/r^2] = [-2i gamma.x (x.p - i(d-1)/2) + 2i r^2 gamma.p]/r^2"),
    check!("APP-C-12", Appendix, Transcription, None, false, app_c_12, "energy part of the cross terms", "-E[...] = -E[r^2 p^2 - 2(x.p)^2 + 2i(d-1) x.p + L_ij S_ij + d(d-1)/2] - 2E^2 r^2"),
    check!("APP-C-13", Appendix, Transcription, None, false, app_c_13, "cross terms assembled", "x(H-E).B + B.x(H-E) = first + second + third terms"),
    check!("APP-C-14", Appendix, Transcription, None, false, app_c_14, "LRL square before comparison with J^2", "A~^2 = r^2 p^4 - (x.p)^2 p^2 + i(d-2)(x.p)p^2 + L_ij S_ij p^2 + d(d-1)p^2/4 + 2 alpha gamma.x/r^2 [...] + alpha^2"),
];

/// `-(d-1)(d+2)/8` as a scalar.
pub fn casimir_constant(d: usize) -> ParamPoly {
    let n = d as i64;
    ParamPoly::from(Rational::new(-(n - 1) * (n + 2), 8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn catalog_ids_unique() {
        let ids: BTreeSet<_> = CHECKS.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), CHECKS.len());
        assert!(find("SO-COM-AM").is_some());
        assert!(find("APP-B-FINAL").is_some());
    }

    #[test]
    fn examples() {
        let r = run_check("CASIMIR-Q2", 3).unwrap();
        assert!(r.pass);
        assert!(run_check("LRL-CONSERVED", 2).unwrap().pass);
        assert!(run_check("SO-COM-AA", 4).unwrap().pass);
        assert!(matches!(run_check("NOPE", 3), Err(Error::UnknownCheck(_))));
        assert!(matches!(run_check("JB-DOT", 2), Err(Error::InapplicableDimension { .. })));
    }

    #[test]
    fn suite_selection() {
        let core = select(Suite::Core, 2);
        assert!(core.len() >= 12);
        let d3 = select(Suite::D3, 3);
        assert!(d3.iter().any(|c| c.id == "JB-DOT") && d3.iter().any(|c| c.id == "JA-DOT"));
        assert!(select(Suite::D3, 2).is_empty());
    }
}
