use std::fmt;
use std::str::FromStr;

use num::BigRational;

use crate::algebra::{CanonicalAlgebra, ExactUnitInterval, MobiAlgebra};
use crate::error::MobiError;
use crate::scalar::Scalar;
use crate::space::{Interval, LineSpace};

use super::linear::LinearFamily;
use super::pair::{AlphaBetaPow, PairSpace};
use super::transport::TransportSpace;

/// A linear pair space with scalar `X` and `Y` coordinates.
pub type LinearPair<A, F> = PairSpace<LinearFamily<F, F>, LineSpace<A>, LineSpace<A>>;

pub fn canonical_line() -> LineSpace<CanonicalAlgebra> {
    LineSpace::new("canonical-r", CanonicalAlgebra, Interval::REAL)
}

/// `ℝ⁺` transported along `log`: `q(x, a, y) = x^(1-a) y^a`.
pub fn geometric_mean() -> TransportSpace<LineSpace<CanonicalAlgebra>> {
    let base = canonical_line().with_sample_box(-3.0, 3.0);
    TransportSpace::new("geometric-mean", base, |x: &f64| x.ln(), |u: &f64| u.exp(), |x: &f64| {
        Interval::POSITIVE.contains(*x)
    })
}

/// `ℝ⁺` transported along `1/x`: `q(x, a, y) = xy / (a x + (1-a) y)`.
pub fn harmonic() -> TransportSpace<LineSpace<CanonicalAlgebra>> {
    let base = LineSpace::new("positive", CanonicalAlgebra, Interval::POSITIVE)
        .with_sample_box(0.1, 10.0);
    TransportSpace::new("harmonic", base, |x: &f64| x.recip(), |u: &f64| u.recip(), |x: &f64| {
        Interval::POSITIVE.contains(*x)
    })
}

/// The identity transport, which reproduces the canonical line.
pub fn identity_transport() -> TransportSpace<LineSpace<CanonicalAlgebra>> {
    TransportSpace::new("identity", canonical_line(), |x: &f64| *x, |u: &f64| *u, |x: &f64| {
        x.is_finite()
    })
}

/// `f`-pairs with `g = 1` and `K = 0` over a given unit-interval algebra.
pub fn f_pair<A, F>(
    name: &str,
    algebra: A,
    f: impl Fn(&F) -> F + Send + Sync + 'static,
    y: Interval,
    y_box: (f64, f64),
) -> LinearPair<A, F>
where
    A: MobiAlgebra<Elem = F> + Clone,
    F: Scalar,
{
    let base_x = LineSpace::new("real", algebra.clone(), Interval::REAL);
    let base_y = LineSpace::new("time", algebra, y).with_sample_box(y_box.0, y_box.1);
    PairSpace::new(name, LinearFamily::new(f, |_: &F| F::one()), base_x, base_y)
}

fn square<F: Scalar>(s: &F) -> F {
    s.clone() * s.clone()
}

fn cube<F: Scalar>(s: &F) -> F {
    s.clone() * s.clone() * s.clone()
}

/// `f(s) = s²` on `ℝ × [0, ∞)`. The closed `Y` end admits the `s = 0`
/// endpoints used in the standard non-affineness witness.
pub fn sq_pair() -> LinearPair<CanonicalAlgebra, f64> {
    f_pair("sq-pair", CanonicalAlgebra, square, Interval::NONNEGATIVE, (0.0, 10.0))
}

pub fn sq_pair_exact() -> LinearPair<ExactUnitInterval, BigRational> {
    f_pair("sq-pair", ExactUnitInterval, square, Interval::NONNEGATIVE, (0.0, 4.0))
}

/// `f(s) = 1/s` on `ℝ × ℝ⁺`.
pub fn inv_pair() -> LinearPair<CanonicalAlgebra, f64> {
    f_pair("inv-pair", CanonicalAlgebra, |s: &f64| s.recip(), Interval::POSITIVE, (0.25, 10.0))
}

/// `f(s) = s³` on `ℝ²`. The point `s = t = 0` falls in the equal-`Y` branch,
/// which is the canonical choice there.
pub fn cube_pair() -> LinearPair<CanonicalAlgebra, f64> {
    f_pair("cube-pair", CanonicalAlgebra, cube, Interval::REAL, (-5.0, 5.0))
}

pub fn cube_pair_exact() -> LinearPair<ExactUnitInterval, BigRational> {
    f_pair("cube-pair", ExactUnitInterval, cube, Interval::REAL, (-2.0, 2.0))
}

/// Injective functions offered for the general `f`-pair, each with the
/// largest interval on which it is injective and finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFn {
    Identity,
    Square,
    Cube,
    Inverse,
    Exp,
    Log,
    Atan,
}

impl NamedFn {
    pub const ALL: [NamedFn; 7] = [
        NamedFn::Identity,
        NamedFn::Square,
        NamedFn::Cube,
        NamedFn::Inverse,
        NamedFn::Exp,
        NamedFn::Log,
        NamedFn::Atan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedFn::Identity => "identity",
            NamedFn::Square => "square",
            NamedFn::Cube => "cube",
            NamedFn::Inverse => "inverse",
            NamedFn::Exp => "exp",
            NamedFn::Log => "log",
            NamedFn::Atan => "atan",
        }
    }

    pub fn eval(self, s: f64) -> f64 {
        match self {
            NamedFn::Identity => s,
            NamedFn::Square => s * s,
            NamedFn::Cube => s * s * s,
            NamedFn::Inverse => s.recip(),
            NamedFn::Exp => s.exp(),
            NamedFn::Log => s.ln(),
            NamedFn::Atan => s.atan(),
        }
    }

    pub fn domain(self) -> Interval {
        match self {
            NamedFn::Square => Interval::NONNEGATIVE,
            NamedFn::Inverse | NamedFn::Log => Interval::POSITIVE,
            _ => Interval::REAL,
        }
    }

    fn sample_box(self) -> (f64, f64) {
        match self {
            NamedFn::Identity | NamedFn::Atan => (-10.0, 10.0),
            NamedFn::Square => (0.0, 10.0),
            NamedFn::Cube => (-5.0, 5.0),
            NamedFn::Inverse => (0.25, 10.0),
            NamedFn::Exp => (-3.0, 3.0),
            NamedFn::Log => (0.1, 10.0),
        }
    }
}

impl fmt::Display for NamedFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedFn {
    type Err = MobiError;

    fn from_str(s: &str) -> Result<Self, MobiError> {
        NamedFn::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<_> = NamedFn::ALL.iter().map(|f| f.name()).collect();
            MobiError::Config(format!("unknown function {s:?}; expected one of {names:?}"))
        })
    }
}

/// The general `f`-pair: `g = 1`, `K = 0` and `f` from the menu.
pub fn general_f_pair(f: NamedFn) -> LinearPair<CanonicalAlgebra, f64> {
    f_pair("general-f-pair", CanonicalAlgebra, move |s: &f64| f.eval(*s), f.domain(), f.sample_box())
}

pub type AlphaBetaPowSpace =
    PairSpace<AlphaBetaPow, TransportSpace<LineSpace<CanonicalAlgebra>>, LineSpace<CanonicalAlgebra>>;

/// `h(α, y, β) = α β^y` over the geometric-mean space on `ℝ⁺` and `[0, ∞)`.
/// Its `q` reduces to `(x₁^(1-a) x₂^a, y₁ + a (y₂ - y₁))`.
pub fn alpha_beta_pow() -> AlphaBetaPowSpace {
    let base_y = LineSpace::new("time", CanonicalAlgebra, Interval::NONNEGATIVE)
        .with_sample_box(0.0, 10.0);
    PairSpace::new("alpha-beta-pow", AlphaBetaPow, geometric_mean(), base_y)
}
