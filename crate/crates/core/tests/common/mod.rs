//! Strategies and checks shared by the property and acceptance targets.

#![allow(dead_code)]

use proptest::prelude::*;

use spinlrl_core::clifford::{gamma_matrices, spin_matrix, Matrix};
use spinlrl_core::coeff::{GaussianRational, ParamPoly, Rational};
use spinlrl_core::weyl::{normalize, Dim, Generator, OperatorExpr, RawSum};

pub fn dim(d: usize) -> Dim {
    Dim::new(d).unwrap()
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, m)| Rational::new(n, m))
}

pub fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

pub fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((gaussian(), 0u16..3, 0u16..3), 0..4).prop_map(|ts| {
        ts.into_iter().fold(ParamPoly::zero(), |acc, (c, a, e)| acc.add(&ParamPoly::monomial(c, a, e)))
    })
}

pub fn small_coeff() -> impl Strategy<Value = ParamPoly> {
    prop_oneof![
        4 => (-3i64..=3, -2i64..=2).prop_map(|(re, im)| ParamPoly::constant(GaussianRational::new(re.into(), im.into()))),
        1 => Just(ParamPoly::alpha()),
        1 => Just(ParamPoly::energy()),
    ]
}

pub fn generator(d: usize, rinv: bool) -> BoxedStrategy<Generator> {
    let base = prop_oneof![
        (1..=d).prop_map(Generator::X),
        (1..=d).prop_map(Generator::P),
        (1..=d).prop_map(Generator::Gamma),
    ];
    if rinv {
        prop_oneof![6 => base, 1 => Just(Generator::RInv2)].boxed()
    } else {
        base.boxed()
    }
}

pub fn word(d: usize, max_len: usize, rinv: bool) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(generator(d, rinv), 0..=max_len)
}

pub fn raw_sum(d: usize, max_len: usize, rinv: bool) -> impl Strategy<Value = RawSum> {
    prop::collection::vec((small_coeff(), word(d, max_len, rinv)), 0..=3)
}

pub fn element(d: usize, max_len: usize, rinv: bool) -> impl Strategy<Value = OperatorExpr> {
    raw_sum(d, max_len, rinv).prop_map(move |raw| normalize(dim(d), &raw).unwrap())
}

pub fn triple(max_len: usize) -> impl Strategy<Value = (OperatorExpr, OperatorExpr, OperatorExpr)> {
    (2usize..=4).prop_flat_map(move |d| (element(d, max_len, true), element(d, max_len, true), element(d, max_len, true)))
}

pub fn product(d: Dim, gens: &[Generator]) -> OperatorExpr {
    gens.iter().fold(OperatorExpr::one(d), |acc, g| acc.multiply(&OperatorExpr::generator(d, *g).unwrap()).unwrap())
}

/// Product of `gens` bracketed by the split points in `cuts`.
pub fn bracketed(d: Dim, gens: &[Generator], cuts: &[usize]) -> OperatorExpr {
    if gens.len() <= 1 || cuts.is_empty() {
        return gens.iter().rev().fold(OperatorExpr::one(d), |acc, g| OperatorExpr::generator(d, *g).unwrap().multiply(&acc).unwrap());
    }
    let at = 1 + cuts[0] % (gens.len() - 1);
    let (l, r) = gens.split_at(at);
    bracketed(d, l, &cuts[1..]).multiply(&bracketed(d, r, &cuts[1..])).unwrap()
}

/// `[a, b]` for two generators, from the defining relations.
pub fn swap_correction(d: Dim, a: Generator, b: Generator) -> (i64, OperatorExpr) {
    use Generator::*;
    match (a, b) {
        (Gamma(i), Gamma(j)) if i == j => (1, OperatorExpr::zero(d)),
        (Gamma(_), Gamma(_)) => (-1, OperatorExpr::zero(d)),
        (X(i), P(j)) if i == j => (1, OperatorExpr::scalar(d, ParamPoly::i())),
        (P(i), X(j)) if i == j => (1, OperatorExpr::scalar(d, ParamPoly::i().neg())),
        _ => (1, OperatorExpr::zero(d)),
    }
}

/// Any bracketing, and any single application of a defining relation,
/// reaches the same normal form.
pub fn confluence(d: usize, gens: &[Generator], cuts: &[usize], at: usize) -> Result<(), TestCaseError> {
    let d = dim(d);
    let left = product(d, gens);
    prop_assert!(left.is_canonical());
    prop_assert_eq!(&bracketed(d, gens, cuts), &left);
    if gens.len() >= 2 {
        let k = at % (gens.len() - 1);
        let (a, b) = (gens[k], gens[k + 1]);
        if a != Generator::RInv2 && b != Generator::RInv2 {
            let mut swapped = gens.to_vec();
            swapped.swap(k, k + 1);
            let (sign, comm) = swap_correction(d, a, b);
            let pre = product(d, &gens[..k]);
            let post = product(d, &gens[k + 2..]);
            let via = product(d, &swapped)
                .scale(&ParamPoly::from_int(sign))
                .add(&pre.multiply(&comm).unwrap().multiply(&post).unwrap())
                .unwrap();
            prop_assert_eq!(via, left);
        }
    }
    Ok(())
}

pub fn is_identity(m: &Matrix) -> bool {
    m.as_scalar().is_some_and(|c| c.is_one())
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Clifford relations, hermiticity, `S_ij = -(i/4)[g_i, g_j]` and the so(d)
/// brackets of the spin matrices, exactly.
pub fn check_matrix_properties(d: usize) -> Result<(), String> {
    let rep = gamma_matrices(d).map_err(|e| e.to_string())?;
    ensure!(rep.spinor_dim() == 1 << (d / 2), "spinor dimension at d={d}");
    for i in 1..=d {
        let gi = rep.gamma(i);
        ensure!(is_identity(&gi.mul(gi)), "gamma_{i}^2 at d={d}");
        ensure!(gi.conj_transpose() == *gi, "gamma_{i} hermitian at d={d}");
        for j in i + 1..=d {
            let gj = rep.gamma(j);
            ensure!(gi.mul(gj).add(&gj.mul(gi)).is_zero(), "anticommute {i},{j} at d={d}");
        }
    }
    let s = |i, j| spin_matrix(&rep, i, j).unwrap().matrix;
    let quarter = GaussianRational::imag(Rational::new(-1, 4));
    let i_unit = GaussianRational::I;
    for a in 1..=d {
        for b in a + 1..=d {
            let (ga, gb) = (rep.gamma(a), rep.gamma(b));
            ensure!(s(a, b) == ga.mul(gb).sub(&gb.mul(ga)).scale(&quarter), "S_{a}{b} at d={d}");
            for c in 1..=d {
                for e in c + 1..=d {
                    let lhs = s(a, b).mul(&s(c, e)).sub(&s(c, e).mul(&s(a, b)));
                    let term = |p: usize, q: usize, r: usize, t: usize| {
                        if p != q || r == t {
                            return Matrix::zeros(rep.spinor_dim());
                        }
                        if r < t { s(r, t) } else { s(t, r).scale(&GaussianRational::from_int(-1)) }
                    };
                    let rhs = term(a, c, b, e).add(&term(a, e, c, b)).add(&term(b, c, e, a)).add(&term(b, e, a, c)).scale(&i_unit);
                    ensure!(lhs == rhs, "so(d) relation for ({a}{b}),({c}{e}) at d={d}");
                }
            }
        }
    }
    Ok(())
}
