use rand::Rng;

use super::MobiSpace;
use crate::algebra::MobiAlgebra;
use crate::error::Result;
use crate::scalar::Scalar;

/// A real interval, possibly unbounded or open at either end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub const REAL: Interval = Interval::open(f64::NEG_INFINITY, f64::INFINITY);
    pub const POSITIVE: Interval = Interval::open(0.0, f64::INFINITY);
    pub const NONNEGATIVE: Interval =
        Interval { lo: 0.0, hi: f64::INFINITY, lo_closed: true, hi_closed: false };
    pub const UNIT: Interval = Interval::closed(0.0, 1.0);

    pub const fn open(lo: f64, hi: f64) -> Self {
        Self { lo, hi, lo_closed: false, hi_closed: false }
    }

    pub const fn closed(lo: f64, hi: f64) -> Self {
        Self { lo, hi, lo_closed: true, hi_closed: true }
    }

    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_closed { x >= self.lo } else { x > self.lo };
        let below = if self.hi_closed { x <= self.hi } else { x < self.hi };
        x.is_finite() && above && below
    }

    /// Default sampling box: the interval clipped to `[-10, 10]`.
    pub fn sampling_box(&self) -> (f64, f64) {
        let lo = if self.lo.is_finite() { self.lo } else { -10.0 };
        let hi = if self.hi.is_finite() { self.hi } else { 10.0 };
        let lo = if self.lo_closed || !self.lo.is_finite() { lo } else { lo + 1e-3 * (hi - lo) };
        let hi = if self.hi_closed || !self.hi.is_finite() { hi } else { hi - 1e-3 * (hi - lo) };
        (lo, hi.max(lo))
    }
}

/// An interval of scalars with `q(x, a, y) = (1 - a) x + a y`.
///
/// The interval must be convex for the algebra: any interval works over the
/// unit interval, only the whole line over the real-line algebra.
#[derive(Debug, Clone)]
pub struct LineSpace<A> {
    name: String,
    algebra: A,
    carrier: Interval,
    sample_box: (f64, f64),
}

impl<A: MobiAlgebra> LineSpace<A> {
    pub fn new(name: impl Into<String>, algebra: A, carrier: Interval) -> Self {
        let sample_box = carrier.sampling_box();
        Self { name: name.into(), algebra, carrier, sample_box }
    }

    pub fn with_sample_box(mut self, lo: f64, hi: f64) -> Self {
        self.sample_box = (lo, hi);
        self
    }

    pub fn carrier(&self) -> Interval {
        self.carrier
    }
}

impl<A, F> MobiSpace for LineSpace<A>
where
    A: MobiAlgebra<Elem = F>,
    F: Scalar,
{
    type Algebra = A;
    type Point = F;

    fn name(&self) -> &str {
        &self.name
    }

    fn algebra(&self) -> &A {
        &self.algebra
    }

    fn q(&self, x: &F, a: &F, y: &F) -> Result<F> {
        // Coincident endpoints must stay put exactly; `(1 - a) x + a x` can
        // drift by an ulp, which would push pair spaces off their shared-time branch.
        if x == y {
            return Ok(x.clone());
        }
        Ok((F::one() - a.clone()) * x.clone() + a.clone() * y.clone())
    }

    fn contains(&self, x: &F) -> bool {
        self.carrier.contains(x.to_f64())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> F {
        F::sample_in(rng, self.sample_box.0, self.sample_box.1)
    }

    fn sample_pair<R: Rng + ?Sized>(&self, rng: &mut R) -> (F, F) {
        let x = self.sample(rng);
        if rng.gen_range(0..16) == 0 {
            (x.clone(), x)
        } else {
            (x, self.sample(rng))
        }
    }

    fn dist(&self, x: &F, y: &F) -> f64 {
        if x == y {
            0.0
        } else {
            (x.clone() - y.clone()).abs().to_f64()
        }
    }
}

/// `R^n` with `q(x, a, y) = (1 - a) x + a y`, sampled in `[-10, 10]^n`.
#[derive(Debug, Clone)]
pub struct EuclideanSpace<A> {
    name: String,
    algebra: A,
    dim: usize,
}

impl<A: MobiAlgebra<Elem = f64>> EuclideanSpace<A> {
    pub fn new(algebra: A, dim: usize) -> Self {
        Self { name: format!("canonical-r{dim}"), algebra, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl<A: MobiAlgebra<Elem = f64>> MobiSpace for EuclideanSpace<A> {
    type Algebra = A;
    type Point = Vec<f64>;

    fn name(&self) -> &str {
        &self.name
    }

    fn algebra(&self) -> &A {
        &self.algebra
    }

    fn q(&self, x: &Vec<f64>, a: &f64, y: &Vec<f64>) -> Result<Vec<f64>> {
        Ok(x.iter().zip(y).map(|(xi, yi)| (1.0 - a) * xi + a * yi).collect())
    }

    fn contains(&self, x: &Vec<f64>) -> bool {
        x.len() == self.dim && x.iter().all(|v| v.is_finite())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        (0..self.dim).map(|_| rng.gen_range(-10.0..=10.0)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational_algebra, CanonicalAlgebra};
    use crate::scalar::rational;
    use crate::space::{midpoint, q_eval};

    #[test]
    fn canonical_line_values() {
        let s = LineSpace::new("line", CanonicalAlgebra, Interval::REAL);
        assert_eq!(q_eval(&s, &2.0, &0.25, &6.0).unwrap(), 3.0);
        assert_eq!(midpoint(&s, &0.0, &1.0).unwrap(), 0.5);
        assert_eq!(s.q(&-3.5, &0.0, &8.0).unwrap(), -3.5);
        assert_eq!(s.q(&-3.5, &1.0, &8.0).unwrap(), 8.0);
        assert!(q_eval(&s, &2.0, &1.25, &6.0).is_err());
    }

    #[test]
    fn positive_half_line_excludes_zero() {
        let s = LineSpace::new("pos", CanonicalAlgebra, Interval::POSITIVE);
        assert!(!s.contains(&0.0));
        assert!(s.contains(&1e-300));
        assert!(q_eval(&s, &0.0, &0.5, &1.0).is_err());
    }

    #[test]
    fn rational_line_is_exact() {
        let s = LineSpace::new("q-line", rational_algebra(), Interval::REAL);
        let got = s.q(&rational(1, 3), &rational(3, 2), &rational(2, 3)).unwrap();
        assert_eq!(got, rational(5, 6));
    }

    #[test]
    fn euclidean_dimension_is_checked() {
        let s = EuclideanSpace::new(CanonicalAlgebra, 2);
        assert!(q_eval(&s, &vec![0.0, 1.0], &0.5, &vec![1.0]).is_err());
        assert_eq!(s.q(&vec![0.0, 2.0], &0.5, &vec![1.0, 4.0]).unwrap(), vec![0.5, 3.0]);
    }
}
