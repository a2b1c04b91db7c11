//! Acceptance criteria 1-10, one PASS/FAIL line each.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use chordlab::ctx::{Fault, Stat};
use chordlab::report;
use chordlab::suite::{find_check, run_checks, CheckResult, RunConfig, Status};
use chordlab_core::algebra::{frac, BigRat, MVPoly, Monomial};
use chordlab_core::grammar::Grammar;
use chordlab_core::matching::{
    block_stats, extend_psi, extend_psi1, extend_psi2, reduce_step, trace_indices, trace_indices_by_reduction,
    Matching, Matchings, Step,
};
use chordlab_core::words::{neighbor_classify, MatchingWord};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

struct Verdict {
    pass: bool,
    details: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            pass: true,
            details: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, msg: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.details.push(msg.into());
        }
    }

    fn info(&mut self, msg: impl Into<String>) {
        self.details.push(msg.into());
    }
}

fn result<'a>(all: &'a [CheckResult], id: &str) -> &'a CheckResult {
    all.iter()
        .find(|r| r.id == id)
        .unwrap_or_else(|| panic!("{id} is registered"))
}

/// Each listed check passes and ran at least up to its bound.
fn checks_pass(all: &[CheckResult], wanted: &[(&str, usize)]) -> Verdict {
    let mut v = Verdict::new();
    for &(id, n) in wanted {
        let r = result(all, id);
        v.require(
            r.status == Status::Pass,
            format!("{id}: {} ({})", r.status, r.witness.as_deref().unwrap_or("")),
        );
        v.require(r.max_n >= n, format!("{id}: ran to n = {} but needs n = {n}", r.max_n));
        if let Some(note) = find_check(id).and_then(|c| c.note) {
            v.info(format!("{id} {note}"));
        }
    }
    v
}

fn config(jobs: usize) -> RunConfig {
    RunConfig {
        jobs,
        ..RunConfig::default()
    }
}

fn without_timings(results: &[CheckResult]) -> String {
    let mut copy = results.to_vec();
    for r in &mut copy {
        r.ms = 0;
    }
    report::to_json(&copy)
}

fn small_poly() -> impl Strategy<Value = MVPoly> {
    prop::collection::vec((-4i64..=4, 1i64..=3, [0u32..3, 0u32..3, 0u32..3]), 0..5).prop_map(|terms| {
        MVPoly::from_terms(terms.into_iter().map(|(n, d, e)| {
            let m = Monomial::from_pairs(["a", "b", "c"].into_iter().zip(e));
            (m, frac(n, d))
        }))
    })
}

fn matching(max_n: usize) -> impl Strategy<Value = Matching> {
    (1..=max_n)
        .prop_flat_map(|n| (0..Matchings::count(n)).prop_map(move |r| Matchings::from_rank(n, r).next().unwrap()))
}

fn structural(m: &Matching) -> Result<(), String> {
    let n = m.order() as u32;
    let b = block_stats(m);
    if b.fixb + b.elblock + b.olblock != n || b.fixb + b.esblock + b.osblock != n {
        return Err(format!("{m}: block classes do not partition the arcs"));
    }
    let w = MatchingWord::from_matching(m);
    let c = neighbor_classify(&w);
    let mut all: Vec<u32> = [&c.lne, &c.lcr, &c.nal, &c.rrp, &c.lrp]
        .into_iter()
        .flatten()
        .copied()
        .collect();
    all.sort_unstable();
    if all != (1..2 * n).collect::<Vec<_>>() || c.rrp.len() + c.lrp.len() != n as usize {
        return Err(format!("{w}: neighbor classes do not partition the positions"));
    }
    let (smaller, step) = reduce_step(m);
    let rebuilt = match step {
        Step::Psi => extend_psi(&smaller),
        Step::Psi1(arc) => extend_psi1(&smaller, arc).map_err(|e| e.to_string())?,
        Step::Psi2(arc) => extend_psi2(&smaller, arc).map_err(|e| e.to_string())?,
    };
    if rebuilt != *m || trace_indices(m) != trace_indices_by_reduction(m) {
        return Err(format!("{m}: generation step does not invert its reduction"));
    }
    Ok(())
}

fn prop_run<S: Strategy>(v: &mut Verdict, name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), String>) {
    let mut runner = TestRunner::new(Config {
        cases: 256,
        failure_persistence: None,
        ..Config::default()
    });
    let outcome = runner.run(&strategy, |value| test(value).map_err(TestCaseError::fail));
    v.require(outcome.is_ok(), format!("{name}: {:?}", outcome.err()));
}

fn properties() -> Verdict {
    let mut v = Verdict::new();
    prop_run(
        &mut v,
        "ring axioms",
        (small_poly(), small_poly(), small_poly()),
        |(a, b, c)| {
            let ok = &(&a + &b) + &c == &a + &(&b + &c)
                && &a + &b == &b + &a
                && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
                && &(&a * &b) * &c == &a * &(&b * &c)
                && &(&a + &b) - &b == a;
            if ok {
                Ok(())
            } else {
                Err(format!("a = {a}, b = {b}, c = {c}"))
            }
        },
    );
    let grammar =
        (small_poly(), small_poly()).prop_map(|(ra, rb)| Grammar::new().with_rule("a", ra).with_rule("b", rb));
    prop_run(
        &mut v,
        "derivative rules",
        (grammar, small_poly(), small_poly(), -3i64..=3),
        |(g, p, q, k)| {
            let c: BigRat = frac(k, 2);
            let leibniz = g.d_apply(&(&p * &q)) == &(&g.d_apply(&p) * &q) + &(&p * &g.d_apply(&q));
            let linear = g.d_apply(&(&p + &q)) == &g.d_apply(&p) + &g.d_apply(&q)
                && g.d_apply(&p.scale(&c)) == g.d_apply(&p).scale(&c);
            if leibniz && linear {
                Ok(())
            } else {
                Err(format!("{g} on p = {p}, q = {q}"))
            }
        },
    );
    prop_run(&mut v, "matching invariants, n <= 10", matching(10), |m| structural(&m));
    for n in 1..=6 {
        if let Some(err) = Matchings::from_rank(n, 0).find_map(|m| structural(&m).err()) {
            v.require(false, format!("exhaustive n = {n}: {err}"));
        }
    }
    for n in 0..=6 {
        let mut seen = BTreeSet::new();
        let mut produced = 0u64;
        for m in Matchings::from_rank(n, 0) {
            let mut children = vec![extend_psi(&m)];
            for &arc in m.arcs() {
                children.extend(extend_psi1(&m, arc).ok());
                children.extend(extend_psi2(&m, arc).ok());
            }
            produced += children.len() as u64;
            seen.extend(children);
        }
        v.require(
            produced == Matchings::count(n + 1) && seen.len() as u64 == produced,
            format!("generation from n = {n}: {produced} produced, {} distinct", seen.len()),
        );
    }
    v
}

fn fault_sweep() -> Verdict {
    let mut v = Verdict::new();
    let cfg = |fault| RunConfig {
        max_n: Some(5),
        egf_order: 6,
        timings: false,
        fault: Some(fault),
        ..config(2)
    };
    let faults = Stat::ALL
        .iter()
        .map(|&s| Fault::Perturb(s))
        .chain([Fault::SwapWordLneLcr]);
    for fault in faults {
        let results = run_checks(&[], &cfg(fault)).expect("suite runs");
        let failed: Vec<&CheckResult> = results.iter().filter(|r| r.status == Status::Fail).collect();
        match failed.first() {
            None => v.require(false, format!("{fault}: no check fails")),
            Some(first) => {
                let witness = first.witness.as_deref().unwrap_or("");
                v.require(
                    !witness.is_empty(),
                    format!("{fault}: {} fails without a witness", first.id),
                );
                let short: String = witness.chars().take(120).collect();
                v.info(format!(
                    "{fault}: failing checks {}, first {} ({short})",
                    failed.len(),
                    first.id
                ));
            }
        }
        if fault == Fault::SwapWordLneLcr {
            let six = result(&results, "SIX-EULERIAN");
            let w = six.witness.as_deref().unwrap_or("");
            v.require(
                w.contains("word "),
                format!("SIX-EULERIAN under {fault}: no witness word ({w})"),
            );
        }
    }
    v
}

fn main() -> ExitCode {
    let start = Instant::now();
    let single = run_checks(&[], &config(1)).expect("suite runs");
    let single_time = start.elapsed();
    let start = Instant::now();
    let sharded = run_checks(&[], &config(4)).expect("suite runs");
    let sharded_time = start.elapsed();

    let mut lines: Vec<(u32, &str, Verdict)> = Vec::new();

    let mut v = checks_pass(&single, &[("GOLDEN", 6)]);
    let ms = result(&single, "GOLDEN").ms;
    v.require(ms < 1000, format!("GOLDEN took {ms} ms"));
    lines.push((1, "printed polynomial values", v));

    let mut v = checks_pass(&single, &[("M-MAIN", 7), ("M-SYM", 7)]);
    let ms = result(&single, "M-MAIN").ms;
    v.require(ms <= 120_000, format!("M-MAIN took {ms} ms"));
    lines.push((2, "matching and permutation sides of M_n agree, x <-> y symmetric", v));

    lines.push((
        3,
        "trace distribution",
        checks_pass(&single, &[("TRACE-RISING", 7), ("STIRLING1-ID", 7)]),
    ));
    lines.push((
        4,
        "generating-function coefficients through z^8",
        checks_pass(&single, &[("A-EGF", 8), ("M-EGF", 8), ("CALLAN-EGF", 8)]),
    ));
    lines.push((
        5,
        "corollaries on matchings, derangements and signed permutations",
        checks_pass(
            &single,
            &[
                ("CONV", 6),
                ("COR2", 6),
                ("M-GAMMA", 6),
                ("DER-COUNT", 6),
                ("DNK", 6),
                ("B-MAIN", 5),
                ("B-DUAL", 5),
                ("COLORED", 5),
            ],
        ),
    ));
    lines.push((
        6,
        "neighbor expansion, xi tables and tree censuses",
        checks_pass(
            &single,
            &[("C-EPOS", 5), ("XI-TREE", 7), ("GAMMA-TREE", 7), ("XI-GAMMA", 7)],
        ),
    ));
    lines.push((
        7,
        "matching permutations and matching counts",
        checks_pass(
            &single,
            &[
                ("MP-BIJ", 6),
                ("I-STATS", 6),
                ("KZ-SYM", 6),
                ("KLAZAR-SYM", 6),
                ("A-EQUIDIST", 6),
                ("SIX-EULERIAN", 6),
                ("COUNT-LNE-FACT", 7),
                ("COUNT-CATALAN", 7),
                ("COUNT-NARAYANA", 7),
            ],
        ),
    ));

    let mut v = checks_pass(
        &single,
        &[
            ("Q-DUMONT", 6),
            ("Q-SYM", 6),
            ("Q-GRAMMAR", 6),
            ("Q-CHEN22", 6),
            ("C-Q-TRANSFORM", 6),
            ("Q-LNE", 6),
            ("Q-LRP", 6),
            ("NCA-RECU", 6),
        ],
    );
    let failed = single.iter().filter(|r| r.status != Status::Pass).count();
    v.require(
        failed == 0,
        format!("{failed} of {} suite checks do not pass", single.len()),
    );
    v.require(
        single_time <= Duration::from_secs(600),
        format!("full suite, 1 job: {single_time:.1?}"),
    );
    v.require(
        sharded_time <= Duration::from_secs(180),
        format!("full suite, 4 jobs: {sharded_time:.1?}"),
    );
    v.require(
        without_timings(&single) == without_timings(&sharded),
        "reports differ between 1 and 4 jobs",
    );
    v.info(format!(
        "{} checks; full suite {single_time:.1?} with 1 job, {sharded_time:.1?} with 4 jobs",
        single.len()
    ));
    lines.push((8, "Stirling permutation identities and full-suite runtime", v));

    lines.push((9, "property suites", properties()));
    lines.push((10, "fault injection", fault_sweep()));

    let mut all_pass = true;
    for (n, what, v) in &lines {
        all_pass &= v.pass;
        println!("criterion {n:>2}: {}  {what}", if v.pass { "PASS" } else { "FAIL" });
        for d in &v.details {
            println!("    {d}");
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
