//! Mobi spaces: a carrier with `q(x, a, y)` giving the position at time `a`
//! along a chosen geodesic from `x` to `y`.

mod line;

use std::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::MobiAlgebra;
use crate::coords::{coord_distance, Coords};
use crate::error::{domain, Result};

pub use line::{EuclideanSpace, Interval, LineSpace};

pub type Elem<S> = <<S as MobiSpace>::Algebra as MobiAlgebra>::Elem;

pub trait MobiSpace {
    type Algebra: MobiAlgebra;
    type Point: Clone + Debug + Coords;

    fn name(&self) -> &str;

    fn algebra(&self) -> &Self::Algebra;

    /// The ternary operation. Members in, member out; constructions whose
    /// boundary system can fail report it here.
    fn q(&self, x: &Self::Point, a: &Elem<Self>, y: &Self::Point) -> Result<Self::Point>;

    fn contains(&self, x: &Self::Point) -> bool;

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Point;

    /// Endpoint pairs for the harnesses. Instances override this to mix in
    /// the degenerate configurations their `q` branches on.
    fn sample_pair<R: Rng + ?Sized>(&self, rng: &mut R) -> (Self::Point, Self::Point) {
        (self.sample(rng), self.sample(rng))
    }

    fn dist(&self, x: &Self::Point, y: &Self::Point) -> f64 {
        coord_distance(x, y)
    }

    /// `x ⊕ y = q(x, 1/2, y)`
    fn midpoint(&self, x: &Self::Point, y: &Self::Point) -> Result<Self::Point> {
        self.q(x, &self.algebra().half(), y)
    }
}

/// `q(x, a, y)` with membership checks on every input.
pub fn q_eval<S: MobiSpace>(
    space: &S,
    x: &S::Point,
    a: &Elem<S>,
    y: &S::Point,
) -> Result<S::Point> {
    for p in [x, y] {
        if !space.contains(p) {
            return Err(domain(space.name(), p));
        }
    }
    if !space.algebra().contains(a) {
        return Err(domain(space.algebra().name(), a));
    }
    space.q(x, a, y)
}

pub fn midpoint<S: MobiSpace>(space: &S, x: &S::Point, y: &S::Point) -> Result<S::Point> {
    q_eval(space, x, &space.algebra().half(), y)
}

pub fn sample_points<S: MobiSpace>(space: &S, seed: u64, count: usize) -> Vec<S::Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| space.sample(&mut rng)).collect()
}
