mod common;

use common::*;
use proptest::prelude::*;
use proptest::test_runner::Config;

use spinlrl_core::clifford::{gamma_matrices, parse_fixture, render_fixture, spin_matrix, FixtureBlock};
use spinlrl_core::coeff::{ParamPoly, Rational};
use spinlrl_core::expr::{self, parse, Expr};
use spinlrl_core::oracle::{apply, crosscheck, random_function, OracleConfig};
use spinlrl_core::weyl::OperatorExpr;

proptest! {
    #![proptest_config(Config::with_cases(1000))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), Rational::from_int(0));
        if let Some(r) = a.recip() {
            prop_assert_eq!(a * r, Rational::from_int(1));
        }
    }

    #[test]
    fn gaussian_ring_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
        if let Some(r) = a.recip() {
            prop_assert!((a * r).is_one());
        }
    }

    #[test]
    fn param_poly_ring_axioms(a in param_poly(), b in param_poly(), c in param_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&ParamPoly::one()), a.clone());
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.mul(&b).conjugate(), a.conjugate().mul(&b.conjugate()));
    }
}

proptest! {
    #![proptest_config(Config::with_cases(500))]

    #[test]
    fn normalize_is_confluent_d2(gens in word(2, 6, true), cuts in prop::collection::vec(any::<usize>(), 0..4), at in any::<usize>()) {
        confluence(2, &gens, &cuts, at)?;
    }

    #[test]
    fn normalize_is_confluent_d3(gens in word(3, 6, true), cuts in prop::collection::vec(any::<usize>(), 0..4), at in any::<usize>()) {
        confluence(3, &gens, &cuts, at)?;
    }

    #[test]
    fn normalize_is_confluent_d4(gens in word(4, 6, true), cuts in prop::collection::vec(any::<usize>(), 0..4), at in any::<usize>()) {
        confluence(4, &gens, &cuts, at)?;
    }
}

proptest! {
    #![proptest_config(Config::with_cases(300))]

    #[test]
    fn multiplication_is_associative((a, b, c) in triple(3)) {
        let ab_c = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let a_bc = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn operator_ring_axioms((a, b, c) in triple(3)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        let left = a.multiply(&b.add(&c).unwrap()).unwrap();
        let right = a.multiply(&b).unwrap().add(&a.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let left = a.add(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&c).unwrap().add(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.multiply(&OperatorExpr::one(a.dim())).unwrap(), a.clone());
    }

    #[test]
    fn adjoint_is_an_anti_automorphism((a, b, _c) in triple(3)) {
        prop_assert_eq!(a.adjoint().adjoint(), a.clone());
        prop_assert_eq!(a.multiply(&b).unwrap().adjoint(), b.adjoint().multiply(&a.adjoint()).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().adjoint(), a.adjoint().add(&b.adjoint()).unwrap());
        let i = ParamPoly::i();
        prop_assert_eq!(a.scale(&i).adjoint(), a.adjoint().scale(&i.conjugate()));
    }

    #[test]
    fn format_reduce_round_trip(a in (2usize..=4).prop_flat_map(|d| element(d, 4, true))) {
        let text = expr::format(&a);
        prop_assert_eq!(expr::reduce(&text, a.dim()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(Config::with_cases(64))]

    #[test]
    fn apply_is_a_homomorphism(
        (a, b) in (2usize..=3).prop_flat_map(|d| (element(d, 3, true), element(d, 3, true))),
        trial in 0u32..1000,
    ) {
        let d = a.dim();
        let rep = gamma_matrices(d.get()).unwrap();
        let f = random_function(d, 11, trial, 3, -1);
        let ab = apply(&a.multiply(&b).unwrap(), &f, &rep).unwrap();
        let a_of_b = apply(&a, &apply(&b, &f, &rep).unwrap(), &rep).unwrap();
        prop_assert_eq!(ab, a_of_b);
    }

    #[test]
    fn apply_is_linear(
        (a, b) in (2usize..=3).prop_flat_map(|d| (element(d, 3, true), element(d, 3, true))),
        c in small_coeff(),
        trial in 0u32..1000,
    ) {
        let d = a.dim();
        let rep = gamma_matrices(d.get()).unwrap();
        let f = random_function(d, 5, trial, 3, -1);
        let g = random_function(d, 6, trial, 3, -1);
        let sum = apply(&a.add(&b.scale(&c)).unwrap(), &f, &rep).unwrap();
        let parts = apply(&a, &f, &rep).unwrap().add(&apply(&b, &f, &rep).unwrap().scale(&c));
        prop_assert_eq!(sum, parts);
        let lhs = apply(&a, &f.add(&g.scale(&c)), &rep).unwrap();
        let rhs = apply(&a, &f, &rep).unwrap().add(&apply(&a, &g, &rep).unwrap().scale(&c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn oracle_detects_nonzero_operators(a in (2usize..=3).prop_flat_map(|d| element(d, 3, true))) {
        prop_assume!(!a.is_zero());
        let zero = OperatorExpr::zero(a.dim());
        let found = crosscheck(&a, &zero, &OracleConfig::default()).unwrap();
        prop_assert!(found.is_err(), "no witness for {}", expr::format(&a));
    }
}

fn leaf(d: usize) -> BoxedStrategy<Expr> {
    use spinlrl_core::expr::{alpha, energy, frac, g, imag, named, p, rinv2, x};
    use spinlrl_core::ops::OperatorName as N;
    prop_oneof![
        (1..=d).prop_map(x),
        (1..=d).prop_map(p),
        (1..=d).prop_map(g),
        Just(rinv2()),
        (-4i64..=4, 1i64..=3).prop_map(|(n, m)| frac(n, m)),
        (-3i64..=3).prop_map(|n| imag(n, 2)),
        Just(alpha()),
        Just(energy()),
        Just(named(N::T)),
        Just(named(N::XP)),
        (1..=d as u8).prop_map(|i| named(N::A(i))),
        Just(named(N::J(1, 2))),
    ]
    .boxed()
}

fn expr_tree(d: usize) -> impl Strategy<Value = Expr> {
    leaf(d).prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(Expr::sum),
            prop::collection::vec(inner.clone(), 2..3).prop_map(|v| v.into_iter().reduce(|a, b| a * b).unwrap()),
            (inner.clone(), 0u32..3).prop_map(|(e, n)| e.pow(n)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::comm(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::anti(a, b)),
            Just(-spinlrl_core::expr::x(1)),
        ]
    })
}

proptest! {
    #![proptest_config(Config::with_cases(300))]

    #[test]
    fn expression_text_round_trip(e in expr_tree(3)) {
        let d = dim(3);
        let text = e.to_string();
        let back = parse(&text, d).unwrap();
        prop_assert_eq!(expr::evaluate(&back, d).unwrap(), expr::evaluate(&e, d).unwrap());
        let again = back.to_string();
        prop_assert_eq!(parse(&again, d).unwrap().to_string(), again);
    }

    #[test]
    fn parser_never_panics(tokens in prop::collection::vec(prop_oneof![
        Just("x1"), Just("p2"), Just("g3"), Just("x9"), Just("+"), Just("-"), Just("*"), Just("/"), Just("^"),
        Just("("), Just(")"), Just("["), Just("]"), Just("{"), Just("}"), Just(","), Just("2"), Just("0"),
        Just("i"), Just("alpha"), Just("E"), Just("J(1,2)"), Just("A("), Just("foo"), Just("\n"), Just(" "), Just("#"),
    ], 0..16)) {
        let text: String = tokens.concat();
        match parse(&text, dim(3)) {
            Ok(_) => {}
            Err(e) => {
                let lines = text.split('\n').count();
                prop_assert!(e.line >= 1 && e.line <= lines, "{}: {}", text, e);
                prop_assert!(e.col >= 1);
            }
        }
    }
}

#[test]
fn clifford_matrix_properties() {
    for d in 2..=8 {
        check_matrix_properties(d).unwrap();
    }
}

#[test]
fn fixtures_round_trip() {
    for d in 2..=8 {
        let text = render_fixture(d).unwrap();
        let blocks = parse_fixture(&text).unwrap();
        assert_eq!(blocks.len(), d + d * (d - 1) / 2);
        let rep = gamma_matrices(d).unwrap();
        for b in blocks {
            match b {
                FixtureBlock::Gamma { d: bd, i, matrix } => {
                    assert_eq!(bd, d);
                    assert_eq!(&matrix, rep.gamma(i));
                }
                FixtureBlock::Spin { i, j, matrix, .. } => assert_eq!(matrix, spin_matrix(&rep, i, j).unwrap().matrix),
            }
        }
    }
}
