use std::time::{Duration, Instant};

use rayon::prelude::*;
use spinlrl_core::ops::Evaluator;
use spinlrl_core::oracle::{crosscheck_expr, Oracle, OracleConfig, Witness};
use spinlrl_core::verify::{self, Check, CheckResult, Suite, Tier};
use spinlrl_core::{Dim, Error};

/// Oracle verdict on one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    /// The oracle reaches the same verdict as the engine.
    pub agrees: bool,
    /// First instance on which the two sides act differently.
    pub witness: Option<(String, Witness)>,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub check: &'static Check,
    pub result: CheckResult,
    pub elapsed: Duration,
    pub oracle: Option<OracleVerdict>,
}

impl Outcome {
    pub fn blocking(&self, strict: bool) -> bool {
        let engine = !self.result.pass && (strict || self.check.tier == Tier::Core);
        let oracle = self.oracle.as_ref().is_some_and(|o| !o.agrees);
        engine || oracle
    }
}

/// Runs every check of `suite` that applies at `d`, sorted by id.
pub fn run_suite(suite: Suite, d: usize, oracle: Option<&OracleConfig>) -> Result<Vec<Outcome>, Error> {
    let dim = Dim::new(d)?;
    let mut out = verify::select(suite, d)
        .into_par_iter()
        .map(|check| run_one(check, dim, oracle))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_by(|a, b| a.check.id.cmp(b.check.id));
    Ok(out)
}

pub fn run_one(check: &'static Check, d: Dim, oracle: Option<&OracleConfig>) -> Result<Outcome, Error> {
    let start = Instant::now();
    let mut ev = Evaluator::new(d);
    let result = verify::run_check_with(&mut ev, check)?;
    let elapsed = start.elapsed();
    let oracle = match oracle {
        Some(cfg) => {
            let witness = oracle_witness(check, d, cfg)?;
            Some(OracleVerdict { agrees: witness.is_none() == result.pass, witness })
        }
        None => None,
    };
    Ok(Outcome { check, result, elapsed, oracle })
}

/// First instance of `check` the oracle can tell apart, if any.
pub fn oracle_witness(check: &Check, d: Dim, cfg: &OracleConfig) -> Result<Option<(String, Witness)>, Error> {
    let insts = check.instances(d.get())?;
    let found = insts
        .par_iter()
        .map_init(
            || Oracle::new(d),
            |oracle, inst| {
                let oracle = oracle.as_mut().map_err(|e| e.clone())?;
                Ok(crosscheck_expr(oracle, &inst.lhs, &inst.rhs, cfg)?.err().map(|w| (inst.label.clone(), w)))
            },
        )
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(found.into_iter().flatten().next())
}
