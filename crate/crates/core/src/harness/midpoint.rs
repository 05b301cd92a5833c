use std::fmt::Debug;

use rand_chacha::ChaCha8Rng;

use crate::algebra::{draw, MobiAlgebra};
use crate::error::Result;
use crate::space::MobiSpace;

use super::{inputs, stream, AxiomReport, Tally, SEPARATION_FLOOR};

/// Checks idempotency, commutativity, cancellation and mediality of a binary
/// midpoint operation. Cancellation is tested contrapositively.
pub fn check_midpoint_axioms<T, M, S, D>(
    oplus: M,
    mut sampler: S,
    dist: D,
    seed: u64,
    n: usize,
    tol: f64,
) -> Vec<AxiomReport>
where
    T: Clone + Debug,
    M: Fn(&T, &T) -> Result<T>,
    S: FnMut(&mut ChaCha8Rng) -> T,
    D: Fn(&T, &T) -> f64,
{
    let mut out = Vec::with_capacity(4);

    let mut rng = stream(seed, 201);
    let mut t = Tally::new("idempotency", "x (+) x = x");
    for _ in 0..n {
        let x = sampler(&mut rng);
        t.equal_results(inputs!(&x), oplus(&x, &x), Ok(x.clone()), &dist, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 202);
    let mut t = Tally::new("commutativity", "x (+) y = y (+) x");
    for _ in 0..n {
        let (x, y) = (sampler(&mut rng), sampler(&mut rng));
        t.equal_results(inputs!(&x, &y), oplus(&x, &y), oplus(&y, &x), &dist, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 203);
    let mut t = Tally::new("cancellation", "x (+) y = x' (+) y implies x = x'");
    for _ in 0..n {
        let (x, x2, y) = (sampler(&mut rng), sampler(&mut rng), sampler(&mut rng));
        if dist(&x, &x2) < SEPARATION_FLOOR {
            continue;
        }
        t.separated_results(inputs!(&x, &x2, &y), oplus(&x, &y), oplus(&x2, &y), &dist, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 204);
    let mut t = Tally::new("mediality", "(x (+) y) (+) (z (+) w) = (x (+) z) (+) (y (+) w)");
    for _ in 0..n {
        let x = sampler(&mut rng);
        let y = sampler(&mut rng);
        let z = sampler(&mut rng);
        let w = sampler(&mut rng);
        let lhs = oplus(&x, &y).and_then(|xy| oplus(&xy, &oplus(&z, &w)?));
        let rhs = oplus(&x, &z).and_then(|xz| oplus(&xz, &oplus(&y, &w)?));
        t.equal_results(inputs!(&x, &y, &z, &w), lhs, rhs, &dist, tol);
    }
    out.push(t.finish());

    out
}

/// The midpoint laws for `a (+) b = p(a, 1/2, b)`.
pub fn algebra_midpoint_axioms<A: MobiAlgebra>(
    alg: &A,
    seed: u64,
    n: usize,
    tol: f64,
) -> Vec<AxiomReport> {
    check_midpoint_axioms(
        |a: &A::Elem, b: &A::Elem| Ok(alg.oplus(a, b)),
        |rng| draw(alg, rng),
        |a, b| alg.dist(a, b),
        seed,
        n,
        tol,
    )
}

/// The midpoint laws for `x (+) y = q(x, 1/2, y)`.
pub fn space_midpoint_axioms<S: MobiSpace>(
    space: &S,
    seed: u64,
    n: usize,
    tol: f64,
) -> Vec<AxiomReport> {
    check_midpoint_axioms(
        |x: &S::Point, y: &S::Point| space.midpoint(x, y),
        |rng| space.sample(rng),
        |x, y| space.dist(x, y),
        seed,
        n,
        tol,
    )
}
