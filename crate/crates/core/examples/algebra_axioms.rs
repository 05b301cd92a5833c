// Check the eight mobi algebra axioms and the derived identities on the
// four built-in algebras.
//
// ```text
// cargo run --example algebra_axioms
// ```

use mobi::algebra::{rational_algebra, real_line_algebra, CanonicalAlgebra, LozengeAlgebra};
use mobi::harness::{all_passed, check_algebra_axioms, check_derived_properties, AxiomReport};

fn summarise(name: &str, reports: &[AxiomReport]) {
    let passed = reports.iter().filter(|r| r.passed).count();
    println!("{name:<10} {passed}/{} laws hold", reports.len());
    for r in reports.iter().filter(|r| !r.passed) {
        println!("  {} failed {} times: {:?}", r.axiom_id, r.failure_count, r.first_witness());
    }
}

pub fn run() -> mobi::Result<()> {
    let (seed, n, tol) = (42, 2_000, 1e-9);
    let mut reports = check_algebra_axioms(&CanonicalAlgebra, seed, n, tol);
    reports.extend(check_derived_properties(&CanonicalAlgebra, seed, n, tol));
    summarise("canonical", &reports);
    assert!(all_passed(&reports));

    summarise("lozenge", &check_algebra_axioms(&LozengeAlgebra, seed, n, tol));
    summarise("real-line", &check_algebra_axioms(&real_line_algebra(), seed, n, tol));
    // Exact arithmetic: zero tolerance.
    summarise("rational", &check_algebra_axioms(&rational_algebra(), seed, 300, 0.0));
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
