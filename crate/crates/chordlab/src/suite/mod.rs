//! Registry of named identity checks.
//!
//! Each check compares two independently computed sides (enumeration against
//! a formula, recurrence, grammar or series) for every `n` in its range and
//! stops at the first failing `n`, whose message becomes the witness.

mod golden;
mod matchings;
mod perms;
mod stirling;
mod words;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use chordlab_core::algebra::{binomial, BigRat, MVPoly, Monomial};
use serde::Serialize;

use crate::ctx::{Ctx, Fault};

pub type Outcome = Result<(), String>;

/// What a check enumerates; decides its default range and size limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckFamily {
    Golden,
    Permutations,
    Signed,
    Matchings,
    Stirling,
    Trees,
    Tables,
    Series,
}

impl CheckFamily {
    /// Largest `n` accepted without `--force`.
    pub fn hard_limit(self) -> usize {
        match self {
            CheckFamily::Golden => 6,
            CheckFamily::Permutations => 10,
            CheckFamily::Signed => 8,
            CheckFamily::Matchings | CheckFamily::Stirling => 10,
            CheckFamily::Trees => 10,
            CheckFamily::Tables => 40,
            CheckFamily::Series => 10,
        }
    }
}

pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    pub family: CheckFamily,
    pub min_n: usize,
    pub default_max_n: usize,
    /// Printed next to the result; used for statements that hold only in a
    /// corrected form.
    pub note: Option<&'static str>,
    /// Appended to the witness when the check fails.
    pub on_failure: Option<&'static str>,
    run: fn(&Ctx, usize) -> Outcome,
}

impl Check {
    pub fn run_n(&self, ctx: &Ctx, n: usize) -> Outcome {
        (self.run)(ctx, n)
    }
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check").field("id", &self.id).finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerN {
    pub n: usize,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub max_n: usize,
    pub per_n: Vec<PerN>,
    pub witness: Option<String>,
    pub ms: u64,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown check id `{0}`")]
    UnknownCheckId(String),
    #[error("check {id} at n = {n} exceeds the limit {limit} for its family; pass --force to run it")]
    TooLarge { id: String, n: usize, limit: usize },
}

/// Suite-wide run options.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Replaces every enumeration check's default upper bound.
    pub max_n: Option<usize>,
    /// Highest series coefficient compared by the generating-function checks.
    pub egf_order: usize,
    pub jobs: usize,
    pub timings: bool,
    pub force: bool,
    pub fault: Option<Fault>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_n: None,
            egf_order: DEFAULT_EGF_ORDER,
            jobs: 1,
            timings: true,
            force: false,
            fault: None,
        }
    }
}

pub const DEFAULT_EGF_ORDER: usize = 8;

pub fn registry() -> Vec<Check> {
    let mut all = Vec::new();
    all.extend(golden::checks());
    all.extend(perms::checks());
    all.extend(matchings::checks());
    all.extend(words::checks());
    all.extend(stirling::checks());
    all
}

pub fn find_check(id: &str) -> Option<Check> {
    registry().into_iter().find(|c| c.id == id)
}

/// Resolves `ids` against the registry, keeping registry order; an empty
/// selection or `all` selects everything.
pub fn select(ids: &[String]) -> Result<Vec<Check>, SuiteError> {
    let all = registry();
    if ids.is_empty() || ids.iter().any(|i| i == "all") {
        return Ok(all);
    }
    for id in ids {
        if !all.iter().any(|c| c.id == id) {
            return Err(SuiteError::UnknownCheckId(id.clone()));
        }
    }
    Ok(all.into_iter().filter(|c| ids.iter().any(|i| i == c.id)).collect())
}

pub fn effective_max_n(check: &Check, cfg: &RunConfig) -> usize {
    match check.family {
        CheckFamily::Series => cfg.egf_order,
        CheckFamily::Golden => check.default_max_n,
        _ => cfg.max_n.unwrap_or(check.default_max_n),
    }
}

/// Rejects configurations that would exceed a family's size limit.
pub fn validate(checks: &[Check], cfg: &RunConfig) -> Result<(), SuiteError> {
    if cfg.force {
        return Ok(());
    }
    for c in checks {
        let n = effective_max_n(c, cfg);
        let limit = c.family.hard_limit();
        if n > limit {
            return Err(SuiteError::TooLarge {
                id: c.id.to_string(),
                n,
                limit,
            });
        }
    }
    Ok(())
}

pub fn run_check(check: &Check, ctx: &Ctx, cfg: &RunConfig) -> CheckResult {
    let start = Instant::now();
    let max_n = effective_max_n(check, cfg);
    let mut per_n = Vec::new();
    let mut witness = None;
    for n in check.min_n..=max_n {
        match check.run_n(ctx, n) {
            Ok(()) => per_n.push(PerN {
                n,
                status: Status::Pass,
            }),
            Err(msg) => {
                per_n.push(PerN {
                    n,
                    status: Status::Fail,
                });
                let mut w = format!("n={n}: {msg}");
                if let Some(hint) = check.on_failure {
                    w.push_str(" [");
                    w.push_str(hint);
                    w.push(']');
                }
                witness = Some(w);
                break;
            }
        }
    }
    let status = if witness.is_some() {
        Status::Fail
    } else if per_n.is_empty() {
        Status::Skip
    } else {
        Status::Pass
    };
    CheckResult {
        id: check.id.to_string(),
        status,
        max_n,
        per_n,
        witness,
        ms: if cfg.timings {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
    }
}

/// Runs the selected checks in order; a failure never stops the suite.
pub fn run_checks(ids: &[String], cfg: &RunConfig) -> Result<Vec<CheckResult>, SuiteError> {
    let checks = select(ids)?;
    validate(&checks, cfg)?;
    let mut ctx = Ctx::new(cfg.jobs);
    if let Some(f) = cfg.fault {
        ctx = ctx.with_fault(f);
    }
    Ok(checks.iter().map(|c| run_check(c, &ctx, cfg)).collect())
}

// Helpers shared by the check modules.

const WITNESS_LIMIT: usize = 400;

fn clip(s: String) -> String {
    if s.len() <= WITNESS_LIMIT {
        return s;
    }
    let mut cut = WITNESS_LIMIT;
    while !s.is_char_boundary(cut) {
        cut -= 1;
    }
    format!("{}...", &s[..cut])
}

pub(crate) fn same(what: &str, lhs: &MVPoly, rhs: &MVPoly) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(clip(format!("{what}: difference {}", lhs - rhs)))
    }
}

pub(crate) fn same_value<T: PartialEq + fmt::Display>(what: &str, lhs: T, rhs: T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(clip(msg()))
    }
}

pub(crate) fn object_failure(found: Option<String>) -> Outcome {
    match found {
        None => Ok(()),
        Some(w) => Err(clip(w)),
    }
}

pub(crate) fn var(name: &str) -> MVPoly {
    MVPoly::var(name)
}

pub(crate) fn int(c: i64) -> MVPoly {
    MVPoly::int(c)
}

pub(crate) fn subst(p: &MVPoly, pairs: &[(&str, MVPoly)]) -> MVPoly {
    p.subst_pairs(pairs.iter().map(|(v, q)| (*v, q.clone())))
}

pub(crate) fn pow2(k: usize) -> MVPoly {
    MVPoly::int(1i64 << k)
}

/// `prod v^e` with unit coefficient.
pub(crate) fn mono(pairs: &[(&str, u32)]) -> MVPoly {
    MVPoly::term(
        BigRat::from_integer(1.into()),
        Monomial::from_pairs(pairs.iter().copied()),
    )
}

pub(crate) fn eval_at(p: &MVPoly, point: &[(&str, &BigRat)]) -> Result<BigRat, String> {
    let bind: BTreeMap<String, BigRat> = point.iter().map(|(v, c)| (v.to_string(), (*c).clone())).collect();
    p.eval(&bind).map_err(|e| e.to_string())
}

/// `sum_k C(n,k) f(k) g(n-k)`.
pub(crate) fn binomial_convolution(n: usize, f: impl Fn(usize) -> MVPoly, g: impl Fn(usize) -> MVPoly) -> MVPoly {
    let mut out = MVPoly::zero();
    for k in 0..=n {
        let c = BigRat::from_integer(binomial(n as u32, k as u32));
        out.add_assign_scaled(&(&f(k) * &g(n - k)), &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let all = registry();
        let mut ids: Vec<&str> = all.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
    }

    #[test]
    fn unknown_ids_are_rejected() {
        assert_eq!(
            select(&["NOPE".to_string()]).unwrap_err(),
            SuiteError::UnknownCheckId("NOPE".into())
        );
    }

    #[test]
    fn limits_need_force() {
        let cfg = RunConfig {
            max_n: Some(11),
            ..RunConfig::default()
        };
        let checks = select(&["M-SYM".to_string()]).unwrap();
        assert!(validate(&checks, &cfg).is_err());
        assert!(validate(&checks, &RunConfig { force: true, ..cfg }).is_ok());
    }
}
