//! Mobi algebras: a carrier with a ternary operation `p` and three constants
//! `0`, `1/2`, `1` modelling the unit interval of "time" scalars.

mod canonical;
mod lozenge;
mod ring;

use std::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coords::{coord_distance, Coords};
use crate::error::{domain, Result};

pub use canonical::{CanonicalAlgebra, ExactUnitInterval};
pub use lozenge::{lozenge_p, LozengeAlgebra};
pub use ring::{
    rational_algebra, real_line_algebra, AlgebraRing, RationalField, RealField, RingDerivedAlgebra,
    RingWithHalf,
};

pub trait MobiAlgebra {
    type Elem: Clone + Debug + Coords;

    fn name(&self) -> &str;

    fn p(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem;

    fn zero(&self) -> Self::Elem;
    fn half(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    fn contains(&self, a: &Self::Elem) -> bool;

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Euclidean distance on coordinates unless the instance says otherwise.
    fn dist(&self, a: &Self::Elem, b: &Self::Elem) -> f64 {
        coord_distance(a, b)
    }

    fn approx_eq(&self, a: &Self::Elem, b: &Self::Elem, tol: f64) -> bool {
        self.dist(a, b) <= tol
    }

    /// The inverse of `1/2` for the product, when the carrier has one.
    fn two(&self) -> Option<Self::Elem> {
        None
    }

    /// `p(1, a, 0)`
    fn complement(&self, a: &Self::Elem) -> Self::Elem {
        self.p(&self.one(), a, &self.zero())
    }

    /// `p(0, a, b)`
    fn product(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.p(&self.zero(), a, b)
    }

    /// `p(a, 1/2, b)`
    fn oplus(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.p(a, &self.half(), b)
    }

    /// `p(a, b, 1)`
    fn circ(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.p(a, b, &self.one())
    }
}

/// Algebras that contain a copy of the real time parameter `t ∈ [0, 1]`.
pub trait Timeline: MobiAlgebra {
    fn at_time(&self, t: f64) -> Self::Elem;
}

fn check<A: MobiAlgebra>(alg: &A, a: &A::Elem) -> Result<()> {
    if alg.contains(a) {
        Ok(())
    } else {
        Err(domain(alg.name(), a))
    }
}

/// Evaluates `p(a, b, c)` after checking that all three inputs are members.
pub fn p_eval<A: MobiAlgebra>(alg: &A, a: &A::Elem, b: &A::Elem, c: &A::Elem) -> Result<A::Elem> {
    check(alg, a)?;
    check(alg, b)?;
    check(alg, c)?;
    Ok(alg.p(a, b, c))
}

pub fn complement<A: MobiAlgebra>(alg: &A, a: &A::Elem) -> Result<A::Elem> {
    check(alg, a)?;
    Ok(alg.complement(a))
}

pub fn product<A: MobiAlgebra>(alg: &A, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
    check(alg, a)?;
    check(alg, b)?;
    Ok(alg.product(a, b))
}

pub fn oplus<A: MobiAlgebra>(alg: &A, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
    check(alg, a)?;
    check(alg, b)?;
    Ok(alg.oplus(a, b))
}

pub fn circ<A: MobiAlgebra>(alg: &A, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
    check(alg, a)?;
    check(alg, b)?;
    Ok(alg.circ(a, b))
}

/// Deterministic batch of samples for a given seed.
pub fn sample_elements<A: MobiAlgebra>(alg: &A, seed: u64, count: usize) -> Vec<A::Elem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| alg.sample(&mut rng)).collect()
}

/// Sample used by the harnesses: mostly the instance sampler, sometimes one of
/// the three constants so that boundary cases are exercised.
pub(crate) fn draw<A: MobiAlgebra, R: Rng + ?Sized>(alg: &A, rng: &mut R) -> A::Elem {
    match rng.gen_range(0..20) {
        0 => alg.zero(),
        1 => alg.half(),
        2 => alg.one(),
        _ => alg.sample(rng),
    }
}
