//! Modules over rings with `1/2` and affine mobi spaces, in both directions.
//!
//! A module `(M, +, e, φ)` gives the space `q(x, a, y) = φ_{1-a}(x) + φ_a(y)`
//! over the ring's algebra. An affine space with a basepoint `e`, over an
//! algebra containing `2`, gives back the module
//!
//! ```text
//! x + y = q(e, 2, q(x, 1/2, y))      φ_a(x) = q(e, a, x)      -x = q(e, p(1, 2, 0), x)
//! ```
//!
//! Comparisons in this module are relative: a distance `d` between values of
//! size `m` passes when `d <= tol · max(1, m)`. Module actions by unbounded
//! ring elements grow values quadratically, so an absolute bound would only
//! measure the sample box.

use std::fmt::Debug;

use rand::Rng;

use crate::algebra::{AlgebraRing, MobiAlgebra, RingDerivedAlgebra, RingWithHalf};
use crate::coords::{coord_distance, Coords};
use crate::error::{domain, MobiError, Result};
use crate::harness::{inputs, is_affine, stream, AxiomReport, Tally};
use crate::space::MobiSpace;

pub type Scalar<M> = <<M as ModuleOverRing>::Ring as RingWithHalf>::Elem;

pub trait ModuleOverRing {
    type Ring: RingWithHalf;
    type Elem: Clone + Debug + Coords;

    fn name(&self) -> &str;

    fn ring(&self) -> &Self::Ring;

    /// The group identity `e`.
    fn identity(&self) -> Self::Elem;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;

    /// `φ_a(x)`
    fn act(&self, a: &Scalar<Self>, x: &Self::Elem) -> Result<Self::Elem>;

    fn neg(&self, x: &Self::Elem) -> Result<Self::Elem>;

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn contains(&self, _x: &Self::Elem) -> bool {
        true
    }
}

/// Distance scaled by the size of the values compared.
pub fn relative_dist<T: Coords>(x: &T, y: &T) -> f64 {
    let scale = x
        .coords()
        .iter()
        .chain(y.coords().iter())
        .fold(1.0_f64, |m, v| m.max(v.abs()));
    coord_distance(x, y) / scale
}

/// Abelian group laws and the four action laws, on samples.
pub fn check_module_laws<M: ModuleOverRing>(
    m: &M,
    seed: u64,
    n: usize,
    tol: f64,
) -> Vec<AxiomReport> {
    let ring = m.ring();
    let d = relative_dist::<M::Elem>;
    let mut out = Vec::with_capacity(8);

    let mut rng = stream(seed, 601);
    let mut t = Tally::new("M-assoc", "(x+y)+z = x+(y+z)");
    for _ in 0..n {
        let (x, y, z) = (m.sample(&mut rng), m.sample(&mut rng), m.sample(&mut rng));
        let l = m.add(&x, &y).and_then(|u| m.add(&u, &z));
        let r = m.add(&y, &z).and_then(|u| m.add(&x, &u));
        t.equal_results(inputs!(&x, &y, &z), l, r, d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 602);
    let mut t = Tally::new("M-comm", "x+y = y+x");
    for _ in 0..n {
        let (x, y) = (m.sample(&mut rng), m.sample(&mut rng));
        t.equal_results(inputs!(&x, &y), m.add(&x, &y), m.add(&y, &x), d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 603);
    let mut t = Tally::new("M-identity", "x+e = x");
    for _ in 0..n {
        let x = m.sample(&mut rng);
        t.equal_results(inputs!(&x), m.add(&x, &m.identity()), Ok(x.clone()), d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 604);
    let mut t = Tally::new("M-inverse", "x+(-x) = e");
    for _ in 0..n {
        let x = m.sample(&mut rng);
        let l = m.neg(&x).and_then(|nx| m.add(&x, &nx));
        t.equal_results(inputs!(&x), l, Ok(m.identity()), d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 605);
    let mut t = Tally::new("M-unit", "φ_1(x) = x");
    for _ in 0..n {
        let x = m.sample(&mut rng);
        t.equal_results(inputs!(&x), m.act(&ring.one(), &x), Ok(x.clone()), d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 606);
    let mut t = Tally::new("M-compat", "φ_{ab}(x) = φ_a(φ_b(x))");
    for _ in 0..n {
        let (a, b, x) = (ring.sample(&mut rng), ring.sample(&mut rng), m.sample(&mut rng));
        let l = m.act(&ring.mul(&a, &b), &x);
        let r = m.act(&b, &x).and_then(|u| m.act(&a, &u));
        t.equal_results(inputs!(&a, &b, &x), l, r, d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 607);
    let mut t = Tally::new("M-dist-ring", "φ_{a+b}(x) = φ_a(x) + φ_b(x)");
    for _ in 0..n {
        let (a, b, x) = (ring.sample(&mut rng), ring.sample(&mut rng), m.sample(&mut rng));
        let l = m.act(&ring.add(&a, &b), &x);
        let r = m.act(&a, &x).and_then(|u| m.add(&u, &m.act(&b, &x)?));
        t.equal_results(inputs!(&a, &b, &x), l, r, d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 608);
    let mut t = Tally::new("M-dist-module", "φ_a(x+y) = φ_a(x) + φ_a(y)");
    for _ in 0..n {
        let (a, x, y) = (ring.sample(&mut rng), m.sample(&mut rng), m.sample(&mut rng));
        let l = m.add(&x, &y).and_then(|u| m.act(&a, &u));
        let r = m.act(&a, &x).and_then(|u| m.add(&u, &m.act(&a, &y)?));
        t.equal_results(inputs!(&a, &x, &y), l, r, d, tol);
    }
    out.push(t.finish());

    out
}

/// The affine space of a module, over the ring's own algebra.
#[derive(Debug, Clone)]
pub struct ModuleSpace<M: ModuleOverRing> {
    module: M,
    algebra: RingDerivedAlgebra<M::Ring>,
    name: String,
}

impl<M: ModuleOverRing> ModuleSpace<M> {
    pub fn new(module: M) -> Result<Self> {
        let algebra = RingDerivedAlgebra::new(module.ring().clone())?;
        let name = format!("{}-space", module.name());
        Ok(Self { module, algebra, name })
    }

    pub fn module(&self) -> &M {
        &self.module
    }
}

impl<M: ModuleOverRing> MobiSpace for ModuleSpace<M> {
    type Algebra = RingDerivedAlgebra<M::Ring>;
    type Point = M::Elem;

    fn name(&self) -> &str {
        &self.name
    }

    fn algebra(&self) -> &Self::Algebra {
        &self.algebra
    }

    fn q(&self, x: &M::Elem, a: &Scalar<M>, y: &M::Elem) -> Result<M::Elem> {
        let ring = self.module.ring();
        let m = &self.module;
        m.add(&m.act(&ring.sub(&ring.one(), a), x)?, &m.act(a, y)?)
    }

    fn contains(&self, x: &M::Elem) -> bool {
        self.module.contains(x)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> M::Elem {
        self.module.sample(rng)
    }
}

/// The module recovered from an affine space and a basepoint.
#[derive(Debug, Clone)]
pub struct SpaceModule<S: MobiSpace> {
    space: S,
    ring: AlgebraRing<S::Algebra>,
    e: S::Point,
    name: String,
}

impl<S> SpaceModule<S>
where
    S: MobiSpace,
    S::Algebra: Clone,
{
    /// Checks the interchange law on `n` samples first and refuses spaces
    /// that fail it.
    pub fn new(space: S, e: S::Point, seed: u64, n: usize, tol: f64) -> Result<Self> {
        let verdict = is_affine(&space, seed, n, tol);
        if let Some(w) = verdict.witness {
            return Err(MobiError::NotAffine(format!(
                "{}: interchange law off by {:e} at a = {}",
                space.name(),
                w.dist,
                w.a
            )));
        }
        Self::assume_affine(space, e)
    }

    /// Skips the affineness check. On a space that is not affine the result
    /// is not a module, which [`check_module_laws`] will report.
    pub fn assume_affine(space: S, e: S::Point) -> Result<Self> {
        if !space.contains(&e) {
            return Err(domain(space.name(), &e));
        }
        let ring = AlgebraRing::new(space.algebra().clone())?;
        let name = format!("{}-module", space.name());
        Ok(Self { space, ring, e, name })
    }

    pub fn space(&self) -> &S {
        &self.space
    }

    pub fn basepoint(&self) -> &S::Point {
        &self.e
    }
}

impl<S> ModuleOverRing for SpaceModule<S>
where
    S: MobiSpace,
    S::Algebra: Clone,
{
    type Ring = AlgebraRing<S::Algebra>;
    type Elem = S::Point;

    fn name(&self) -> &str {
        &self.name
    }

    fn ring(&self) -> &Self::Ring {
        &self.ring
    }

    fn identity(&self) -> S::Point {
        self.e.clone()
    }

    fn add(&self, x: &S::Point, y: &S::Point) -> Result<S::Point> {
        let two = self.ring.two().expect("checked at construction");
        let mid = self.space.midpoint(x, y)?;
        self.space.q(&self.e, &two, &mid)
    }

    fn act(&self, a: &Scalar<Self>, x: &S::Point) -> Result<S::Point> {
        self.space.q(&self.e, a, x)
    }

    fn neg(&self, x: &S::Point) -> Result<S::Point> {
        let alg = self.space.algebra();
        let two = self.ring.two().expect("checked at construction");
        self.space.q(&self.e, &alg.p(&alg.one(), &two, &alg.zero()), x)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> S::Point {
        self.space.sample(rng)
    }

    fn contains(&self, x: &S::Point) -> bool {
        self.space.contains(x)
    }
}

/// Largest relative deviation seen by a round trip, with the worst input.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundTrip {
    pub samples: usize,
    pub max_dist: f64,
    pub worst: Option<String>,
}

impl RoundTrip {
    pub fn holds(&self, tol: f64) -> bool {
        self.max_dist <= tol
    }

    fn record(&mut self, d: f64, what: impl FnOnce() -> String) {
        self.samples += 1;
        let d = if d.is_nan() { f64::INFINITY } else { d };
        if d > self.max_dist {
            self.max_dist = d;
            self.worst = Some(what());
        }
    }
}

fn gap<T: Coords>(l: Result<T>, r: Result<T>) -> f64 {
    match (l, r) {
        (Ok(l), Ok(r)) => relative_dist(&l, &r),
        _ => f64::INFINITY,
    }
}

/// Module to space to module, comparing addition and action pointwise.
pub fn roundtrip_module<M>(m: &M, seed: u64, n: usize) -> Result<RoundTrip>
where
    M: ModuleOverRing + Clone,
{
    let back = SpaceModule::assume_affine(ModuleSpace::new(m.clone())?, m.identity())?;
    let ring = m.ring();
    let mut rng = stream(seed, 611);
    let mut report = RoundTrip { samples: 0, max_dist: 0.0, worst: None };
    for _ in 0..n {
        let (x, y, a) = (m.sample(&mut rng), m.sample(&mut rng), ring.sample(&mut rng));
        let d = gap(m.add(&x, &y), back.add(&x, &y));
        report.record(d, || format!("add {x:?} {y:?}"));
        let d = gap(m.act(&a, &x), back.act(&a, &x));
        report.record(d, || format!("act {a:?} {x:?}"));
    }
    Ok(report)
}

/// Space to module to space, comparing `q` pointwise. Refuses spaces that
/// fail the affineness check.
pub fn roundtrip_space<S>(space: &S, e: S::Point, seed: u64, n: usize, tol: f64) -> Result<RoundTrip>
where
    S: MobiSpace + Clone,
    S::Algebra: Clone,
{
    let rebuilt = ModuleSpace::new(SpaceModule::new(space.clone(), e, seed, n, tol)?)?;
    let mut rng = stream(seed, 612);
    let mut report = RoundTrip { samples: 0, max_dist: 0.0, worst: None };
    for _ in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        let a = space.algebra().sample(&mut rng);
        let d = gap(space.q(&x, &a, &y), rebuilt.q(&x, &a, &y));
        report.record(d, || format!("q {x:?} {a:?} {y:?}"));
    }
    Ok(report)
}

/// `ℝⁿ` over a ring of reals with the usual operations.
#[derive(Debug, Clone)]
pub struct EuclideanModule<R> {
    ring: R,
    dim: usize,
}

impl<R: RingWithHalf<Elem = f64>> EuclideanModule<R> {
    pub fn new(ring: R, dim: usize) -> Self {
        Self { ring, dim }
    }
}

impl<R: RingWithHalf<Elem = f64>> ModuleOverRing for EuclideanModule<R> {
    type Ring = R;
    type Elem = Vec<f64>;

    fn name(&self) -> &str {
        "euclidean"
    }

    fn ring(&self) -> &R {
        &self.ring
    }

    fn identity(&self) -> Vec<f64> {
        vec![0.0; self.dim]
    }

    fn add(&self, x: &Vec<f64>, y: &Vec<f64>) -> Result<Vec<f64>> {
        Ok(x.iter().zip(y).map(|(a, b)| a + b).collect())
    }

    fn act(&self, a: &f64, x: &Vec<f64>) -> Result<Vec<f64>> {
        Ok(x.iter().map(|v| a * v).collect())
    }

    fn neg(&self, x: &Vec<f64>) -> Result<Vec<f64>> {
        Ok(x.iter().map(|v| -v).collect())
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Vec<f64> {
        (0..self.dim).map(|_| rng.gen_range(-10.0..=10.0)).collect()
    }

    fn contains(&self, x: &Vec<f64>) -> bool {
        x.len() == self.dim
    }
}

/// `ℝⁿ × ℝ` with the twisted addition of constant-acceleration motion:
///
/// ```text
/// (x, s) + (y, t) = (x + y - 2kst, s + t)      φ_a(x, s) = (ax + k a(1 - a)s², as)
/// ```
#[derive(Debug, Clone)]
pub struct ProjectileModule<R> {
    ring: R,
    k: Vec<f64>,
}

impl<R: RingWithHalf<Elem = f64>> ProjectileModule<R> {
    pub fn new(ring: R, k: Vec<f64>) -> Self {
        Self { ring, k }
    }

    pub fn k(&self) -> &[f64] {
        &self.k
    }
}

impl<R: RingWithHalf<Elem = f64>> ModuleOverRing for ProjectileModule<R> {
    type Ring = R;
    type Elem = (Vec<f64>, f64);

    fn name(&self) -> &str {
        "projectile"
    }

    fn ring(&self) -> &R {
        &self.ring
    }

    fn identity(&self) -> (Vec<f64>, f64) {
        (vec![0.0; self.k.len()], 0.0)
    }

    fn add(&self, (x, s): &(Vec<f64>, f64), (y, t): &(Vec<f64>, f64)) -> Result<(Vec<f64>, f64)> {
        let pos = x.iter().zip(y).zip(&self.k).map(|((a, b), k)| a + b - 2.0 * k * s * t);
        Ok((pos.collect(), s + t))
    }

    fn act(&self, a: &f64, (x, s): &(Vec<f64>, f64)) -> Result<(Vec<f64>, f64)> {
        let bend = a * (1.0 - a) * s * s;
        Ok((x.iter().zip(&self.k).map(|(v, k)| a * v + k * bend).collect(), a * s))
    }

    // Solves (x, s) + (y, -s) = 0 for y.
    fn neg(&self, (x, s): &(Vec<f64>, f64)) -> Result<(Vec<f64>, f64)> {
        Ok((x.iter().zip(&self.k).map(|(v, k)| -v - 2.0 * k * s * s).collect(), -s))
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> (Vec<f64>, f64) {
        let x = self.k.iter().map(|_| rng.gen_range(-10.0..=10.0)).collect();
        (x, rng.gen_range(-10.0..=10.0))
    }

    fn contains(&self, (x, s): &(Vec<f64>, f64)) -> bool {
        x.len() == self.k.len() && s.is_finite()
    }
}

/// The zero module `{e}`; its space has a single point.
#[derive(Debug, Clone)]
pub struct TrivialModule<R>(pub R);

impl<R: RingWithHalf> ModuleOverRing for TrivialModule<R> {
    type Ring = R;
    type Elem = ();

    fn name(&self) -> &str {
        "trivial"
    }

    fn ring(&self) -> &R {
        &self.0
    }

    fn identity(&self) {}

    fn add(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }

    fn act(&self, _: &Scalar<Self>, _: &()) -> Result<()> {
        Ok(())
    }

    fn neg(&self, _: &()) -> Result<()> {
        Ok(())
    }

    fn sample<G: Rng + ?Sized>(&self, _: &mut G) {}
}

/// `f(x, s) = (x + k(s² - s), s)`, a module isomorphism from the projectile
/// module onto `ℝⁿ⁺¹` with its ordinary operations.
#[derive(Debug, Clone)]
pub struct ProjectileHom {
    k: Vec<f64>,
}

impl ProjectileHom {
    pub fn new(k: Vec<f64>) -> Self {
        Self { k }
    }

    pub fn apply(&self, (x, s): &(Vec<f64>, f64)) -> Vec<f64> {
        let mut out: Vec<f64> = x.iter().zip(&self.k).map(|(v, k)| v + k * (s * s - s)).collect();
        out.push(*s);
        out
    }

    /// Checks `f(u + v) = f(u) + f(v)` and `f(φ_a u) = a f(u)`.
    pub fn check(&self, seed: u64, n: usize, tol: f64) -> Vec<AxiomReport> {
        use crate::algebra::RealField;
        let source = ProjectileModule::new(RealField, self.k.clone());
        let target = EuclideanModule::new(RealField, self.k.len() + 1);
        let d = relative_dist::<Vec<f64>>;

        let mut rng = stream(seed, 621);
        let mut add = Tally::new("hom-add", "f(u + v) = f(u) + f(v)");
        let mut act = Tally::new("hom-act", "f(φ_a u) = a f(u)");
        for _ in 0..n {
            let (u, v) = (source.sample(&mut rng), source.sample(&mut rng));
            let a = RealField.sample(&mut rng);
            let l = source.add(&u, &v).map(|w| self.apply(&w));
            let r = target.add(&self.apply(&u), &self.apply(&v));
            add.equal_results(inputs!(&u, &v), l, r, d, tol);
            let l = source.act(&a, &u).map(|w| self.apply(&w));
            let r = target.act(&a, &self.apply(&u));
            act.equal_results(inputs!(&a, &u), l, r, d, tol);
        }
        vec![add.finish(), act.finish()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::real_line_algebra;
    use crate::constructions::ProjectileSpace;

    #[test]
    fn recovered_projectile_addition_matches_the_closed_form() {
        let space = ProjectileSpace::new(real_line_algebra(), vec![1.0]);
        let m = SpaceModule::new(space, (vec![0.0], 0.0), 1, 200, 1e-9).unwrap();
        let sum = m.add(&(vec![1.0], 2.0), &(vec![3.0], 5.0)).unwrap();
        assert!(relative_dist(&sum, &(vec![1.0 + 3.0 - 20.0], 7.0)) < 1e-14);
    }

    #[test]
    fn hom_values() {
        let f = ProjectileHom::new(vec![1.0]);
        assert_eq!(f.apply(&(vec![0.0], 0.0)), vec![0.0, 0.0]);
        assert_eq!(f.apply(&(vec![2.0], 3.0)), vec![8.0, 3.0]);
    }
}
