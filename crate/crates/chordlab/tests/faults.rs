//! Every perturbed statistic must make at least one check fail with a witness.

use chordlab::ctx::{Fault, Stat};
use chordlab::suite::{run_checks, RunConfig, Status};

fn sweep_config(fault: Fault) -> RunConfig {
    RunConfig {
        max_n: Some(5),
        egf_order: 6,
        jobs: 2,
        timings: false,
        force: false,
        fault: Some(fault),
    }
}

fn failing(fault: Fault) -> Vec<(String, String)> {
    run_checks(&[], &sweep_config(fault))
        .unwrap()
        .into_iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| (r.id, r.witness.expect("failing checks carry a witness")))
        .collect()
}

#[test]
fn every_statistic_fault_is_caught() {
    let mut missed = Vec::new();
    for &stat in Stat::ALL {
        let fails = failing(Fault::Perturb(stat));
        if fails.is_empty() {
            missed.push(stat.name());
        }
    }
    assert!(missed.is_empty(), "undetected faults: {missed:?}");
}

#[test]
fn swapped_word_neighbors_fail_six_eulerian_with_a_word() {
    let fails = failing(Fault::SwapWordLneLcr);
    let (_, witness) = fails
        .iter()
        .find(|(id, _)| id == "SIX-EULERIAN")
        .expect("SIX-EULERIAN fails");
    assert!(witness.starts_with("n=2: word "), "{witness}");
}
