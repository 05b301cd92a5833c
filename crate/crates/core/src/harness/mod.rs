//! Sampling harnesses that check axioms and derived identities.
//!
//! Equational laws compare both sides with the instance metric. Laws of the
//! form `P ⇒ Q` with a cancellation conclusion are checked through their
//! contrapositive: inputs at least [`SEPARATION_FLOOR`] apart must map to
//! outputs at least `tol` apart.

mod algebra;
mod midpoint;
mod space;

use std::fmt::Debug;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::MobiError;

pub use algebra::{check_algebra_axioms, check_derived_properties};
pub use midpoint::{algebra_midpoint_axioms, check_midpoint_axioms, space_midpoint_axioms};
pub use space::{
    affine_sides, check_space_axioms, check_space_properties, interchange_sides, is_affine,
    AffineVerdict, AffineWitness,
};

/// Minimum input separation for contrapositive cancellation checks.
pub const SEPARATION_FLOOR: f64 = 1e-3;

/// Witnesses kept per report.
pub const MAX_WITNESSES: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub dist: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub axiom_id: String,
    pub statement: String,
    pub samples_tested: usize,
    pub failure_count: usize,
    pub failures: Vec<Witness>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl AxiomReport {
    pub fn first_witness(&self) -> Option<&Witness> {
        self.failures.first()
    }
}

pub fn all_passed(reports: &[AxiomReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

pub fn find<'a>(reports: &'a [AxiomReport], id: &str) -> Option<&'a AxiomReport> {
    reports.iter().find(|r| r.axiom_id == id)
}

/// Independent random stream per law so reports do not depend on each other.
pub(crate) fn stream(seed: u64, law: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(law);
    rng
}

pub(crate) fn show(v: &impl Debug) -> String {
    format!("{v:?}")
}

macro_rules! inputs {
    ($($v:expr),+ $(,)?) => {
        || vec![$($crate::harness::show($v)),+]
    };
}
pub(crate) use inputs;

pub(crate) struct Tally {
    id: &'static str,
    statement: &'static str,
    tested: usize,
    count: usize,
    failures: Vec<Witness>,
}

impl Tally {
    pub fn new(id: &'static str, statement: &'static str) -> Self {
        Self { id, statement, tested: 0, count: 0, failures: Vec::new() }
    }

    fn fail(&mut self, inputs: impl FnOnce() -> Vec<String>, lhs: String, rhs: String, dist: f64) {
        self.count += 1;
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(Witness { inputs: inputs(), lhs, rhs, dist });
        }
    }

    /// Records one equational sample: passes when `dist <= tol`.
    pub fn equal<P: Debug>(
        &mut self,
        inputs: impl FnOnce() -> Vec<String>,
        lhs: &P,
        rhs: &P,
        dist: f64,
        tol: f64,
    ) {
        self.tested += 1;
        if !(dist <= tol) {
            self.fail(inputs, show(lhs), show(rhs), dist);
        }
    }

    /// Records one contrapositive sample: passes when `dist >= tol`.
    pub fn separated<P: Debug>(
        &mut self,
        inputs: impl FnOnce() -> Vec<String>,
        lhs: &P,
        rhs: &P,
        dist: f64,
        tol: f64,
    ) {
        self.tested += 1;
        if !(dist >= tol) {
            self.fail(inputs, show(lhs), show(rhs), dist);
        }
    }

    /// Equational sample where either side may have failed to evaluate.
    pub fn equal_results<P: Debug>(
        &mut self,
        inputs: impl FnOnce() -> Vec<String>,
        lhs: Result<P, MobiError>,
        rhs: Result<P, MobiError>,
        dist: impl Fn(&P, &P) -> f64,
        tol: f64,
    ) {
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                let d = dist(&l, &r);
                self.equal(inputs, &l, &r, d, tol)
            }
            (l, r) => {
                self.tested += 1;
                let render = |x: Result<P, MobiError>| match x {
                    Ok(p) => show(&p),
                    Err(e) => format!("error: {e}"),
                };
                self.fail(inputs, render(l), render(r), f64::INFINITY);
            }
        }
    }

    pub fn separated_results<P: Debug>(
        &mut self,
        inputs: impl FnOnce() -> Vec<String>,
        lhs: Result<P, MobiError>,
        rhs: Result<P, MobiError>,
        dist: impl Fn(&P, &P) -> f64,
        tol: f64,
    ) {
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                let d = dist(&l, &r);
                self.separated(inputs, &l, &r, d, tol)
            }
            (l, r) => {
                self.tested += 1;
                let render = |x: Result<P, MobiError>| match x {
                    Ok(p) => show(&p),
                    Err(e) => format!("error: {e}"),
                };
                self.fail(inputs, render(l), render(r), f64::NAN);
            }
        }
    }

    pub fn finish(self) -> AxiomReport {
        let note =
            (self.tested == 0).then(|| "no sample satisfied the hypothesis".to_string());
        AxiomReport {
            axiom_id: self.id.to_string(),
            statement: self.statement.to_string(),
            samples_tested: self.tested,
            failure_count: self.count,
            passed: self.count == 0,
            failures: self.failures,
            note,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nan_distances_count_as_failures() {
        let mut t = Tally::new("T", "test");
        t.equal(inputs!(&1.0), &f64::NAN, &0.0, f64::NAN, 1e-9);
        t.separated(inputs!(&1.0), &0.0, &0.0, f64::NAN, 1e-9);
        let r = t.finish();
        assert_eq!(r.failure_count, 2);
        assert!(!r.passed);
    }

    #[test]
    fn witnesses_are_capped() {
        let mut t = Tally::new("T", "test");
        for i in 0..25 {
            t.equal(inputs!(&i), &0.0, &1.0, 1.0, 1e-9);
        }
        let r = t.finish();
        assert_eq!(r.failure_count, 25);
        assert_eq!(r.failures.len(), MAX_WITNESSES);
        assert_eq!(r.failures[0].inputs, vec!["0".to_string()]);
    }
}
