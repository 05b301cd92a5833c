#![allow(dead_code)]

use mobi::harness::{check_space_axioms, check_space_properties, AxiomReport};
use mobi::space::MobiSpace;

pub fn failures(reports: &[AxiomReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("{} x{}: {:?}", r.axiom_id, r.failure_count, r.failures.first()))
        .collect()
}

/// X1–X5 and Y1–Y8 (plus the implication checks) must all pass.
pub fn assert_space_laws<S: MobiSpace>(space: &S, seed: u64, n: usize, tol: f64) {
    let mut reports = check_space_axioms(space, seed, n, tol);
    reports.extend(check_space_properties(space, seed, n, tol));
    let bad = failures(&reports);
    assert!(bad.is_empty(), "{}: {bad:#?}", space.name());
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
