use std::fmt::Debug;

use rand::Rng;

use crate::coords::Coords;
use crate::error::{domain, MobiError, Result};
use crate::space::{Elem, MobiSpace};

/// A two-parameter family `h(α, y, β)` whose boundary system
/// `h(α, y₁, β) = x₁, h(α, y₂, β) = x₂` has a unique solution whenever
/// `y₁ ≠ y₂`.
pub trait PairFamily {
    type X: Clone + Debug + Coords;
    type Y: Clone + Debug + Coords + PartialEq;
    /// The solved pair `(α, β)`, in whatever representation is convenient.
    type Params: Clone + Debug;

    fn h(&self, params: &Self::Params, y: &Self::Y) -> Result<Self::X>;

    fn solve(&self, x1: &Self::X, y1: &Self::Y, x2: &Self::X, y2: &Self::Y)
        -> Result<Self::Params>;
}

/// The space on `X × Y` built from a pair family:
///
/// ```text
/// q((x₁,y₁), a, (x₂,y₂)) = (χ, q_Y(y₁, a, y₂))
/// χ = h(α, q_Y(y₁, a, y₂), β)   if y₁ ≠ y₂
///   = q_X(x₁, a, x₂)            if y₁ = y₂
/// ```
///
/// The branch test is exact equality on the `Y` coordinate.
#[derive(Debug, Clone)]
pub struct PairSpace<Fam, BX, BY> {
    name: String,
    family: Fam,
    base_x: BX,
    base_y: BY,
}

impl<Fam, BX, BY> PairSpace<Fam, BX, BY>
where
    Fam: PairFamily,
    BX: MobiSpace<Point = Fam::X>,
    BY: MobiSpace<Point = Fam::Y, Algebra = BX::Algebra>,
{
    pub fn new(name: impl Into<String>, family: Fam, base_x: BX, base_y: BY) -> Self {
        Self { name: name.into(), family, base_x, base_y }
    }

    pub fn family(&self) -> &Fam {
        &self.family
    }

    pub fn base_x(&self) -> &BX {
        &self.base_x
    }

    pub fn base_y(&self) -> &BY {
        &self.base_y
    }

    /// The first coordinate `χ` of `q`.
    pub fn chi(
        &self,
        (x1, y1): &(Fam::X, Fam::Y),
        a: &Elem<BY>,
        (x2, y2): &(Fam::X, Fam::Y),
    ) -> Result<Fam::X> {
        if y1 == y2 {
            return self.base_x.q(x1, a, x2);
        }
        let params = self.family.solve(x1, y1, x2, y2)?;
        self.family.h(&params, &self.base_y.q(y1, a, y2)?)
    }
}

impl<Fam, BX, BY> MobiSpace for PairSpace<Fam, BX, BY>
where
    Fam: PairFamily,
    BX: MobiSpace<Point = Fam::X>,
    BY: MobiSpace<Point = Fam::Y, Algebra = BX::Algebra>,
{
    type Algebra = BY::Algebra;
    type Point = (Fam::X, Fam::Y);

    fn name(&self) -> &str {
        &self.name
    }

    fn algebra(&self) -> &BY::Algebra {
        self.base_y.algebra()
    }

    fn q(&self, u: &Self::Point, a: &Elem<BY>, v: &Self::Point) -> Result<Self::Point> {
        let x = self.chi(u, a, v)?;
        let y = self.base_y.q(&u.1, a, &v.1)?;
        if !self.base_x.contains(&x) {
            return Err(domain(self.base_x.name(), &x));
        }
        Ok((x, y))
    }

    fn contains(&self, (x, y): &Self::Point) -> bool {
        self.base_x.contains(x) && self.base_y.contains(y)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Point {
        (self.base_x.sample(rng), self.base_y.sample(rng))
    }

    // One draw in eight shares the Y coordinate so the q_X branch is exercised.
    fn sample_pair<R: Rng + ?Sized>(&self, rng: &mut R) -> (Self::Point, Self::Point) {
        let (x1, x2) = self.base_x.sample_pair(rng);
        let (y1, y2) = self.base_y.sample_pair(rng);
        let y2 = if rng.gen_range(0..8) == 0 { y1.clone() } else { y2 };
        ((x1, y1), (x2, y2))
    }
}

/// `h(α, y, β) = α β^y` on `X = ℝ⁺` with `Y = [0, ∞)`.
///
/// Parameters are kept as `(ln α, ln β)`: the solution is
/// `ln β = (ln x₁ - ln x₂) / (y₁ - y₂)`, `ln α = ln x₁ - y₁ ln β`, and
/// evaluating `h` in log form avoids overflow in `β^y`. Positive `x` is
/// required because `α β^y` has a fixed sign, so opposite-sign boundary
/// values have no solution.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct AlphaBetaPow;

impl PairFamily for AlphaBetaPow {
    type X = f64;
    type Y = f64;
    type Params = (f64, f64);

    fn h(&self, &(ln_alpha, ln_beta): &(f64, f64), y: &f64) -> Result<f64> {
        Ok((ln_alpha + y * ln_beta).exp())
    }

    fn solve(&self, x1: &f64, y1: &f64, x2: &f64, y2: &f64) -> Result<(f64, f64)> {
        if !(*x1 > 0.0 && *x2 > 0.0) {
            return Err(MobiError::Solver(format!(
                "α·β^y has a fixed sign, so it cannot reach both {x1} and {x2}"
            )));
        }
        let ln_beta = (x1.ln() - x2.ln()) / (y1 - y2);
        Ok((x1.ln() - y1 * ln_beta, ln_beta))
    }
}
