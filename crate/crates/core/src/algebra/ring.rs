//! Rings in which `2` is invertible, the mobi algebra they induce, and the
//! ring recovered from a mobi algebra that contains `2`.

use std::fmt::Debug;

use num::{BigRational, One, Zero};
use rand::Rng;

use super::{MobiAlgebra, Timeline};
use crate::coords::{coord_distance, Coords};
use crate::error::{MobiError, Result};
use crate::scalar::{rational, Scalar};

/// A commutative unitary ring carrying `1/2` (with `1/2 + 1/2 = 1`) and,
/// when available, `2` (with `2 · 1/2 = 1`).
pub trait RingWithHalf: Clone {
    type Elem: Clone + Debug + Coords;

    fn name(&self) -> &str;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn half(&self) -> Self::Elem;
    fn two(&self) -> Option<Self::Elem>;

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn contains(&self, _a: &Self::Elem) -> bool {
        true
    }

    fn dist(&self, a: &Self::Elem, b: &Self::Elem) -> f64 {
        coord_distance(a, b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// Box used when sampling unbounded rings.
pub const RING_SAMPLE_BOX: f64 = 10.0;

/// The real numbers, sampled in `[-10, 10]`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RealField;

impl RingWithHalf for RealField {
    type Elem = f64;

    fn name(&self) -> &str {
        "real-line"
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a * b
    }

    fn neg(&self, a: &f64) -> f64 {
        -a
    }

    fn zero(&self) -> f64 {
        0.0
    }

    fn one(&self) -> f64 {
        1.0
    }

    fn half(&self) -> f64 {
        0.5
    }

    fn two(&self) -> Option<f64> {
        Some(2.0)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        f64::sample_in(rng, -RING_SAMPLE_BOX, RING_SAMPLE_BOX)
    }

    fn contains(&self, a: &f64) -> bool {
        a.is_finite()
    }

    fn sub(&self, a: &f64, b: &f64) -> f64 {
        a - b
    }
}

/// Exact rationals, sampled on a 1/64 grid in `[-10, 10]`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RationalField;

impl RingWithHalf for RationalField {
    type Elem = BigRational;

    fn name(&self) -> &str {
        "rational"
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn half(&self) -> BigRational {
        rational(1, 2)
    }

    fn two(&self) -> Option<BigRational> {
        Some(rational(2, 1))
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        BigRational::sample_in(rng, -RING_SAMPLE_BOX, RING_SAMPLE_BOX)
    }

    fn dist(&self, a: &BigRational, b: &BigRational) -> f64 {
        if a == b {
            0.0
        } else {
            Scalar::to_f64(&(a - b)).abs()
        }
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
}

/// The mobi algebra `p(a, b, c) = a + b c - b a` carried by a ring with `1/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct RingDerivedAlgebra<R> {
    ring: R,
    name: String,
}

impl<R: RingWithHalf> RingDerivedAlgebra<R> {
    /// Validates `1/2 + 1/2 = 1` and, when present, `2 · 1/2 = 1`.
    pub fn new(ring: R) -> Result<Self> {
        let tol = 1e-12;
        let sum = ring.add(&ring.half(), &ring.half());
        if ring.dist(&sum, &ring.one()) > tol {
            return Err(MobiError::Config(format!("{}: 1/2 + 1/2 != 1", ring.name())));
        }
        if let Some(two) = ring.two() {
            if ring.dist(&ring.mul(&two, &ring.half()), &ring.one()) > tol {
                return Err(MobiError::Config(format!("{}: 2 · 1/2 != 1", ring.name())));
            }
        }
        let name = ring.name().to_string();
        Ok(Self { ring, name })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }
}

impl<R: RingWithHalf> MobiAlgebra for RingDerivedAlgebra<R> {
    type Elem = R::Elem;

    fn name(&self) -> &str {
        &self.name
    }

    fn p(&self, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> R::Elem {
        let r = &self.ring;
        r.sub(&r.add(a, &r.mul(b, c)), &r.mul(b, a))
    }

    fn zero(&self) -> R::Elem {
        self.ring.zero()
    }

    fn half(&self) -> R::Elem {
        self.ring.half()
    }

    fn one(&self) -> R::Elem {
        self.ring.one()
    }

    fn contains(&self, a: &R::Elem) -> bool {
        self.ring.contains(a)
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> R::Elem {
        self.ring.sample(rng)
    }

    fn dist(&self, a: &R::Elem, b: &R::Elem) -> f64 {
        self.ring.dist(a, b)
    }

    fn two(&self) -> Option<R::Elem> {
        self.ring.two()
    }
}

impl<R> Timeline for RingDerivedAlgebra<R>
where
    R: RingWithHalf,
    R::Elem: Scalar,
{
    fn at_time(&self, t: f64) -> R::Elem {
        R::Elem::from_f64(t)
    }
}

/// `(R, p, 0, 1/2, 1)` over the reals.
pub fn real_line_algebra() -> RingDerivedAlgebra<RealField> {
    RingDerivedAlgebra::new(RealField).expect("real field has 1/2 and 2")
}

/// `(Q, p, 0, 1/2, 1)` with exact arithmetic.
pub fn rational_algebra() -> RingDerivedAlgebra<RationalField> {
    RingDerivedAlgebra::new(RationalField).expect("rationals have 1/2 and 2")
}

/// The unitary ring `(A, +, ·, 0, 1)` of a mobi algebra containing `2`, with
/// `a + b = p(0, 2, p(a, 1/2, b))` and `a · b = p(0, a, b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraRing<A: MobiAlgebra> {
    algebra: A,
    two: A::Elem,
    minus_one: A::Elem,
}

impl<A: MobiAlgebra + Clone> AlgebraRing<A> {
    pub fn new(algebra: A) -> Result<Self> {
        let two = algebra
            .two()
            .ok_or_else(|| MobiError::MissingTwo(algebra.name().to_string()))?;
        let check = algebra.p(&algebra.zero(), &algebra.half(), &two);
        if algebra.dist(&check, &algebra.one()) > 1e-12 {
            return Err(MobiError::MissingTwo(algebra.name().to_string()));
        }
        let minus_one = algebra.p(&algebra.one(), &two, &algebra.zero());
        Ok(Self { algebra, two, minus_one })
    }

    pub fn algebra(&self) -> &A {
        &self.algebra
    }
}

impl<A: MobiAlgebra + Clone> RingWithHalf for AlgebraRing<A> {
    type Elem = A::Elem;

    fn name(&self) -> &str {
        self.algebra.name()
    }

    fn add(&self, a: &A::Elem, b: &A::Elem) -> A::Elem {
        let alg = &self.algebra;
        alg.p(&alg.zero(), &self.two, &alg.oplus(a, b))
    }

    fn mul(&self, a: &A::Elem, b: &A::Elem) -> A::Elem {
        self.algebra.product(a, b)
    }

    // -a = p(1, 2, 0) · a
    fn neg(&self, a: &A::Elem) -> A::Elem {
        self.algebra.product(&self.minus_one, a)
    }

    fn zero(&self) -> A::Elem {
        self.algebra.zero()
    }

    fn one(&self) -> A::Elem {
        self.algebra.one()
    }

    fn half(&self) -> A::Elem {
        self.algebra.half()
    }

    fn two(&self) -> Option<A::Elem> {
        Some(self.two.clone())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> A::Elem {
        self.algebra.sample(rng)
    }

    fn contains(&self, a: &A::Elem) -> bool {
        self.algebra.contains(a)
    }

    fn dist(&self, a: &A::Elem, b: &A::Elem) -> f64 {
        self.algebra.dist(a, b)
    }
}
