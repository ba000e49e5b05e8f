//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines show up in `cargo test`
//! output. Exits non-zero only on failures not listed in `KNOWN_FAILURES`.

mod common;

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use common::*;
use spinlrl_core::clifford::{gamma_matrices, render_fixture};
use spinlrl_core::coeff::{ParamPoly, Rational};
use spinlrl_core::expr;
use spinlrl_core::ops::Evaluator;
use spinlrl_core::oracle::{apply, crosscheck_expr, random_function, Oracle, OracleConfig};
use spinlrl_core::verify::{self, select, CheckResult, Suite};
use spinlrl_core::Dim;

/// Checks whose printed form is known not to hold; reported, not fatal.
const KNOWN_FAILURES: &[&str] = &["NONCLOSE-GIGD1"];

const ORACLE_BUDGET: Duration = Duration::from_secs(300);

struct Verdict {
    pass: bool,
    detail: String,
    /// Failing items outside `KNOWN_FAILURES`.
    unexpected: Vec<String>,
}

type Results = BTreeMap<(usize, &'static str), CheckResult>;

fn run_registry(dims: impl Iterator<Item = usize>) -> Results {
    let mut out = BTreeMap::new();
    for d in dims {
        let mut ev = Evaluator::new(Dim::new(d).unwrap());
        for c in select(Suite::All, d) {
            out.insert((d, c.id), verify::run_check_with(&mut ev, c).unwrap());
        }
    }
    out
}

/// Verdict over every stored result whose id matches `pick`, for `dims`.
fn over(results: &Results, dims: &[usize], pick: impl Fn(&str) -> bool) -> Verdict {
    let mut count = 0;
    let mut failed = Vec::new();
    for ((d, id), r) in results {
        if dims.contains(d) && pick(id) {
            count += 1;
            if !r.pass {
                failed.push(format!("{id} at d={d}: {}", expr::format(&r.residual)));
            }
        }
    }
    let unexpected = failed.iter().filter(|f| !KNOWN_FAILURES.iter().any(|k| f.starts_with(&format!("{k} at")))).cloned().collect();
    let dims_text = match dims {
        [d] => format!("d={d}"),
        _ => format!("d={}..{}", dims[0], dims[dims.len() - 1]),
    };
    let detail = if count == 0 {
        format!("no checks selected at {dims_text}")
    } else if failed.is_empty() {
        format!("{count} check runs with zero residual at {dims_text}")
    } else {
        format!("{} of {count} check runs fail at {dims_text}; first: {}", failed.len(), failed[0])
    };
    Verdict { pass: count > 0 && failed.is_empty(), detail, unexpected }
}

fn ok(detail: String) -> Verdict {
    Verdict { pass: true, detail, unexpected: vec![] }
}

fn fail(detail: String) -> Verdict {
    Verdict { pass: false, unexpected: vec![detail.clone()], detail }
}

fn fixtures() -> Verdict {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    for d in 2..=5 {
        let want = std::fs::read_to_string(dir.join(format!("matrices_d{d}.txt"))).unwrap();
        if render_fixture(d).unwrap() != want {
            return fail(format!("matrices for d={d} differ from the golden fixture"));
        }
    }
    for d in 6..=8 {
        if let Err(e) = check_matrix_properties(d) {
            return fail(e);
        }
    }
    ok("d=2..5 byte-identical to fixtures; Clifford and so(d) relations exact for d=6..8".into())
}

fn oracle_concordance(results: &Results) -> Verdict {
    let d = Dim::new(3).unwrap();
    let cfg = OracleConfig { trials: 20, seed: 0, max_degree: 4, min_k: -2 };
    let mut oracle = Oracle::new(d).unwrap();
    let start = Instant::now();
    let (mut checks, mut instances, mut agreed_failures) = (0, 0, Vec::new());
    let mut disagreements = Vec::new();
    for suite in [Suite::Core, Suite::Sturm, Suite::Schrodinger] {
        for c in select(suite, 3) {
            let insts = c.instances(3).unwrap();
            instances += insts.len();
            checks += 1;
            let mut witness = false;
            for inst in &insts {
                if crosscheck_expr(&mut oracle, &inst.lhs, &inst.rhs, &cfg).unwrap().is_err() {
                    witness = true;
                    break;
                }
            }
            let engine = results[&(3, c.id)].pass;
            if witness == engine {
                disagreements.push(c.id.to_string());
            } else if witness {
                agreed_failures.push(c.id);
            }
        }
    }
    let elapsed = start.elapsed();
    let mut detail = format!("{checks} checks, {instances} instances, 20 functions each, {:.1} s", elapsed.as_secs_f64());
    if !agreed_failures.is_empty() {
        detail.push_str(&format!("; oracle and engine agree that {} does not hold", agreed_failures.join(", ")));
    }
    if !disagreements.is_empty() {
        return fail(format!("oracle disagrees with the engine on {}", disagreements.join(", ")));
    }
    if elapsed > ORACLE_BUDGET {
        return fail(format!("{detail}; over the {} s budget", ORACLE_BUDGET.as_secs()));
    }
    ok(detail)
}

fn run_property<S: Strategy>(name: &str, cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn self_consistency() -> Verdict {
    let confluence_cases = (2usize..=4).prop_flat_map(|d| (Just(d), word(d, 6, true), prop::collection::vec(any::<usize>(), 0..4), any::<usize>()));
    let steps = [
        run_property("confluence", 600, confluence_cases, |(d, gens, cuts, at)| confluence(d, &gens, &cuts, at)),
        run_property("associativity", 200, triple(3), |(a, b, c)| {
            prop_assert_eq!(a.multiply(&b).unwrap().multiply(&c).unwrap(), a.multiply(&b.multiply(&c).unwrap()).unwrap());
            Ok(())
        }),
        run_property("adjoint", 200, triple(3), |(a, b, _)| {
            prop_assert_eq!(a.adjoint().adjoint(), a.clone());
            prop_assert_eq!(a.multiply(&b).unwrap().adjoint(), b.adjoint().multiply(&a.adjoint()).unwrap());
            Ok(())
        }),
        run_property(
            "apply homomorphism",
            48,
            ((2usize..=3).prop_flat_map(|d| (element(d, 3, true), element(d, 3, true))), 0u32..1000),
            |((a, b), trial)| {
                let rep = gamma_matrices(a.dim().get()).unwrap();
                let f = random_function(a.dim(), 17, trial, 3, -1);
                let ab = apply(&a.multiply(&b).unwrap(), &f, &rep).unwrap();
                prop_assert_eq!(ab, apply(&a, &apply(&b, &f, &rep).unwrap(), &rep).unwrap());
                Ok(())
            },
        ),
    ];
    match steps.into_iter().find_map(Result::err) {
        Some(e) => fail(e),
        None => ok("confluence 600 cases, associativity 200, adjoint 200, apply homomorphism 48".into()),
    }
}

fn casimir(results: &Results) -> Verdict {
    let mut v = over(results, &[2, 3, 4, 5, 6], |id| id == "CASIMIR-Q2");
    let expect = [(2, Rational::new(-1, 2)), (3, Rational::new(-5, 4))];
    for (d, q) in expect {
        if verify::casimir_constant(d) != ParamPoly::from(q.clone()) {
            return fail(format!("Casimir constant at d={d} is not {q}"));
        }
    }
    if v.pass {
        v.detail.push_str("; -1/2 at d=2, -5/4 at d=3");
    }
    v
}

fn main() -> ExitCode {
    let all_dims = [2, 3, 4, 5, 6];
    let start = Instant::now();
    let results = run_registry(2..=6);
    println!("registry evaluated at d=2..6 in {:.1} s", start.elapsed().as_secs_f64());

    let gamma_sector = |id: &str| {
        id.starts_with("SO-GAMMA-") || (id.starts_with("NONCLOSE-") && !id.ends_with("-FIXED")) || id.starts_with("REL-") || id == "CAS-GAMMA"
    };
    let mut third = over(&results, &all_dims, gamma_sector);
    if !third.pass {
        let fixed = over(&results, &all_dims, |id| id == "NONCLOSE-GIGD1-FIXED");
        third.detail.push_str(&format!("; with (p^2 - 1) in place of p^2 that commutator holds ({})", fixed.detail));
    }
    let criteria = [
        (1, over(&results, &all_dims, |id| id.starts_with("SO-COM-") || id == "SO21-METRIC")),
        (2, casimir(&results)),
        (3, third),
        (4, over(&results, &all_dims, |id| verify::find(id).is_some_and(|c| c.suite == Suite::Sturm))),
        (5, over(&results, &all_dims, |id| verify::find(id).is_some_and(|c| c.suite == Suite::Schrodinger))),
        (6, over(&results, &[3], |id| verify::find(id).is_some_and(|c| c.suite == Suite::D3))),
        (7, over(&results, &[2, 3, 4, 5], |id| id.starts_with("APP-"))),
        (8, fixtures()),
        (9, oracle_concordance(&results)),
        (10, self_consistency()),
    ];

    let mut unexpected = 0;
    for (n, v) in &criteria {
        println!("criterion {n}: {}  {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        for u in &v.unexpected {
            println!("    unexpected: {u}");
        }
        unexpected += v.unexpected.len();
    }
    let passed = criteria.iter().filter(|(_, v)| v.pass).count();
    println!("acceptance: {passed}/{} criteria pass; {unexpected} unexpected failures", criteria.len());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
