use num::{BigRational, One, Signed, Zero};
use rand::Rng;

use super::{MobiAlgebra, Timeline};
use crate::scalar::{rational, Scalar};

/// The unit interval with `p(a, b, c) = (1 - b) a + b c`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CanonicalAlgebra;

impl MobiAlgebra for CanonicalAlgebra {
    type Elem = f64;

    fn name(&self) -> &str {
        "canonical"
    }

    fn p(&self, a: &f64, b: &f64, c: &f64) -> f64 {
        (1.0 - b) * a + b * c
    }

    fn zero(&self) -> f64 {
        0.0
    }

    fn half(&self) -> f64 {
        0.5
    }

    fn one(&self) -> f64 {
        1.0
    }

    fn contains(&self, a: &f64) -> bool {
        (0.0..=1.0).contains(a)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        rng.gen_range(0.0..=1.0)
    }

    fn dist(&self, a: &f64, b: &f64) -> f64 {
        (a - b).abs()
    }
}

impl Timeline for CanonicalAlgebra {
    fn at_time(&self, t: f64) -> f64 {
        t
    }
}

/// The canonical algebra over exact rationals, for reproducing closed-form
/// values without rounding. Samples lie on a 1/64 grid.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ExactUnitInterval;

impl MobiAlgebra for ExactUnitInterval {
    type Elem = BigRational;

    fn name(&self) -> &str {
        "canonical-exact"
    }

    fn p(&self, a: &BigRational, b: &BigRational, c: &BigRational) -> BigRational {
        (BigRational::one() - b) * a + b * c
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn half(&self) -> BigRational {
        rational(1, 2)
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn contains(&self, a: &BigRational) -> bool {
        !a.is_negative() && *a <= BigRational::one()
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        BigRational::sample_in(rng, 0.0, 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::p_eval;

    #[test]
    fn paper_and_direct_values() {
        let alg = CanonicalAlgebra;
        assert_eq!(p_eval(&alg, &1.0, &0.5, &0.0).unwrap(), 0.5);
        assert_eq!(alg.p(&0.3, &0.0, &0.9), 0.3);
        assert!((alg.p(&(1.0 / 3.0), &0.5, &1.0) - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(alg.complement(&0.25), 0.75);
        assert_eq!(alg.product(&0.4, &1.0), 0.4);
        assert_eq!(alg.oplus(&0.5, &0.5), 0.5);
    }

    #[test]
    fn exact_interval_is_exact() {
        let alg = ExactUnitInterval;
        let third = rational(1, 3);
        assert_eq!(alg.p(&third, &alg.half(), &alg.one()), rational(2, 3));
        assert!(!alg.contains(&rational(-1, 64)));
    }
}
