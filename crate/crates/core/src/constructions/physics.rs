use std::f64::consts::PI;

use rand::Rng;

use crate::algebra::{CanonicalAlgebra, MobiAlgebra};
use crate::error::{MobiError, Result};
use crate::space::{EuclideanSpace, Interval, LineSpace, MobiSpace};

use super::instances::LinearPair;
use super::linear::LinearFamily;
use super::pair::PairSpace;

/// Constant-acceleration motion on `ℝⁿ × ℝ` (position, time):
///
/// ```text
/// q((x,s), a, (y,t)) = (x + a(y - x) + k a(1 - a)(t - s)², s + a(t - s))
/// ```
///
/// `k` is the half-acceleration. Works over any algebra of reals, which lets
/// the same space be read as a module over the real line.
#[derive(Debug, Clone)]
pub struct ProjectileSpace<A> {
    algebra: A,
    k: Vec<f64>,
    x_box: f64,
    s_box: f64,
}

impl<A: MobiAlgebra<Elem = f64>> ProjectileSpace<A> {
    pub fn new(algebra: A, k: Vec<f64>) -> Self {
        Self { algebra, k, x_box: 10.0, s_box: 10.0 }
    }

    /// Positions are sampled in `[-x, x]ⁿ` and times in `[-s, s]`.
    pub fn with_sample_box(mut self, x: f64, s: f64) -> Self {
        self.x_box = x;
        self.s_box = s;
        self
    }

    pub fn k(&self) -> &[f64] {
        &self.k
    }

    pub fn dim(&self) -> usize {
        self.k.len()
    }
}

impl<A: MobiAlgebra<Elem = f64>> MobiSpace for ProjectileSpace<A> {
    type Algebra = A;
    type Point = (Vec<f64>, f64);

    fn name(&self) -> &str {
        "projectile"
    }

    fn algebra(&self) -> &A {
        &self.algebra
    }

    fn q(&self, (x, s): &Self::Point, a: &f64, (y, t): &Self::Point) -> Result<Self::Point> {
        let bend = a * (1.0 - a) * (t - s) * (t - s);
        let pos = x
            .iter()
            .zip(y)
            .zip(&self.k)
            .map(|((xi, yi), ki)| xi + a * (yi - xi) + ki * bend)
            .collect();
        Ok((pos, s + a * (t - s)))
    }

    fn contains(&self, (x, s): &Self::Point) -> bool {
        x.len() == self.k.len() && x.iter().all(|v| v.is_finite()) && s.is_finite()
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Point {
        let x = (0..self.k.len()).map(|_| rng.gen_range(-self.x_box..=self.x_box)).collect();
        (x, rng.gen_range(-self.s_box..=self.s_box))
    }
}

/// The projectile motion written as a linear pair: `f(t) = t`, `g = 1`,
/// `K(t) = k t²`. Agrees with [`ProjectileSpace`] up to rounding.
pub fn projectile_linear_pair(
    k: Vec<f64>,
) -> PairSpace<LinearFamily<f64, Vec<f64>>, EuclideanSpace<CanonicalAlgebra>, LineSpace<CanonicalAlgebra>>
{
    let n = k.len();
    let family = LinearFamily::new(|t: &f64| *t, |_: &f64| 1.0)
        .with_offset(move |t: &f64| k.iter().map(|ki| ki * t * t).collect());
    PairSpace::new(
        "projectile-pair",
        family,
        EuclideanSpace::new(CanonicalAlgebra, n),
        LineSpace::new("time", CanonicalAlgebra, Interval::REAL),
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Damping {
    /// `f = e^{αt}`, `g = t e^{αt}`
    Critical { alpha: f64 },
    /// `f = e^{αt}`, `g = e^{βt}`, `α ≠ β`
    Overdamped { alpha: f64, beta: f64 },
}

/// The damped oscillator on `ℝ²` (position, time), critical or overdamped.
#[derive(Debug, Clone)]
pub struct DampingSpace {
    kind: Damping,
    x_box: f64,
    s_box: f64,
}

impl DampingSpace {
    pub fn critical(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(MobiError::Config(format!("alpha must be finite, got {alpha}")));
        }
        Ok(Self { kind: Damping::Critical { alpha }, x_box: 10.0, s_box: 1.0 })
    }

    pub fn overdamped(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite()) || alpha == beta {
            return Err(MobiError::Config(format!(
                "overdamping needs finite alpha != beta, got {alpha} and {beta}"
            )));
        }
        Ok(Self { kind: Damping::Overdamped { alpha, beta }, x_box: 10.0, s_box: 1.0 })
    }

    pub fn with_sample_box(mut self, x: f64, s: f64) -> Self {
        self.x_box = x;
        self.s_box = s;
        self
    }

    pub fn kind(&self) -> Damping {
        self.kind
    }

    /// Weights `(w_x, w_y)` with first coordinate `w_x x + w_y y`.
    pub fn weights(&self, s: f64, a: f64, t: f64) -> (f64, f64) {
        let u = t - s;
        match self.kind {
            Damping::Critical { alpha } => {
                ((1.0 - a) * (alpha * a * u).exp(), a * (-alpha * (1.0 - a) * u).exp())
            }
            Damping::Overdamped { alpha, beta } => {
                // The two-exponential closed form divided through by
                // e^{αs+βt}, with expm1 so that t → s stays accurate.
                let den = -((alpha - beta) * u).exp_m1();
                let wx = ((alpha - beta * (1.0 - a)) * u).exp()
                    * ((beta - alpha) * (1.0 - a) * u).exp_m1()
                    / den;
                let wy = ((alpha * a - beta) * u).exp() * ((beta - alpha) * a * u).exp_m1() / den;
                (wx, wy)
            }
        }
    }
}

impl MobiSpace for DampingSpace {
    type Algebra = CanonicalAlgebra;
    type Point = (f64, f64);

    fn name(&self) -> &str {
        match self.kind {
            Damping::Critical { .. } => "damping-critical",
            Damping::Overdamped { .. } => "damping-over",
        }
    }

    fn algebra(&self) -> &CanonicalAlgebra {
        &CanonicalAlgebra
    }

    fn q(&self, &(x, s): &(f64, f64), a: &f64, &(y, t): &(f64, f64)) -> Result<(f64, f64)> {
        let time = s + a * (t - s);
        if s == t && matches!(self.kind, Damping::Overdamped { .. }) {
            return Ok((x + a * (y - x), time));
        }
        let (wx, wy) = self.weights(s, *a, t);
        Ok((wx * x + wy * y, time))
    }

    fn contains(&self, (x, s): &(f64, f64)) -> bool {
        x.is_finite() && s.is_finite()
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (f64, f64) {
        (rng.gen_range(-self.x_box..=self.x_box), rng.gen_range(-self.s_box..=self.s_box))
    }

    fn sample_pair<R: Rng + ?Sized>(&self, rng: &mut R) -> ((f64, f64), (f64, f64)) {
        let u = self.sample(rng);
        let mut v = self.sample(rng);
        if rng.gen_range(0..8) == 0 {
            v.1 = u.1;
        }
        (u, v)
    }
}

/// Underdamping, `f = e^{αt} sin βt` and `g = e^{αt} cos βt`, as a linear
/// pair. The determinant is `e^{α(s+t)} sin β(s - t)`, so time is restricted
/// to `[0, π/|β|)` where it cannot vanish.
pub fn underdamped(alpha: f64, beta: f64) -> Result<LinearPair<CanonicalAlgebra, f64>> {
    if !(alpha.is_finite() && beta.is_finite()) || beta == 0.0 {
        return Err(MobiError::Config(format!(
            "underdamping needs finite alpha and nonzero beta, got {alpha} and {beta}"
        )));
    }
    let end = PI / beta.abs();
    let time = Interval { lo: 0.0, hi: end, lo_closed: true, hi_closed: false };
    let family = LinearFamily::new(
        move |t: &f64| (alpha * t).exp() * (beta * t).sin(),
        move |t: &f64| (alpha * t).exp() * (beta * t).cos(),
    );
    let base_x = LineSpace::new("real", CanonicalAlgebra, Interval::REAL);
    // keep |s - t| well inside the period so the solve stays conditioned
    let base_y = LineSpace::new("time", CanonicalAlgebra, time).with_sample_box(0.0, 0.75 * end);
    Ok(PairSpace::new("damping-under", family, base_x, base_y))
}
