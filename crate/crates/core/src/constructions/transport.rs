use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{domain, Result};
use crate::space::{Elem, MobiSpace};

type Map<P> = Arc<dyn Fn(&P) -> P + Send + Sync>;
type Pred<P> = Arc<dyn Fn(&P) -> bool + Send + Sync>;

/// A space structure carried over a bijection `F`:
/// `q(x, a, y) = F⁻¹((1 - a) F(x) + a F(y))`, with the base space supplying
/// the right-hand combination.
#[derive(Clone)]
pub struct TransportSpace<B: MobiSpace> {
    name: String,
    base: B,
    forward: Map<B::Point>,
    inverse: Map<B::Point>,
    domain: Pred<B::Point>,
}

impl<B: MobiSpace> fmt::Debug for TransportSpace<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TransportSpace").field("name", &self.name).finish_non_exhaustive()
    }
}

impl<B: MobiSpace> TransportSpace<B> {
    /// `domain` is the carrier `X`; `forward` must map it bijectively onto the
    /// base carrier with `inverse` as its inverse.
    pub fn new(
        name: impl Into<String>,
        base: B,
        forward: impl Fn(&B::Point) -> B::Point + Send + Sync + 'static,
        inverse: impl Fn(&B::Point) -> B::Point + Send + Sync + 'static,
        domain: impl Fn(&B::Point) -> bool + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            base,
            forward: Arc::new(forward),
            inverse: Arc::new(inverse),
            domain: Arc::new(domain),
        }
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn forward(&self, x: &B::Point) -> B::Point {
        (self.forward)(x)
    }

    pub fn inverse(&self, x: &B::Point) -> B::Point {
        (self.inverse)(x)
    }

    /// Largest `dist(inverse(forward(x)), x)` over `n` sampled points.
    pub fn roundtrip_error<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> f64 {
        (0..n)
            .map(|_| {
                let x = self.sample(rng);
                self.dist(&self.inverse(&self.forward(&x)), &x)
            })
            .fold(0.0, f64::max)
    }
}

impl<B: MobiSpace> MobiSpace for TransportSpace<B> {
    type Algebra = B::Algebra;
    type Point = B::Point;

    fn name(&self) -> &str {
        &self.name
    }

    fn algebra(&self) -> &B::Algebra {
        self.base.algebra()
    }

    fn q(&self, x: &B::Point, a: &Elem<B>, y: &B::Point) -> Result<B::Point> {
        let image = self.base.q(&self.forward(x), a, &self.forward(y))?;
        let out = self.inverse(&image);
        if self.contains(&out) {
            Ok(out)
        } else {
            Err(domain(&self.name, &out))
        }
    }

    fn contains(&self, x: &B::Point) -> bool {
        (self.domain)(x)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> B::Point {
        self.inverse(&self.base.sample(rng))
    }

    fn sample_pair<R: Rng + ?Sized>(&self, rng: &mut R) -> (B::Point, B::Point) {
        let (x, y) = self.base.sample_pair(rng);
        (self.inverse(&x), self.inverse(&y))
    }
}
