//! Geodesics on the n-sphere and on the hyperboloid model of hyperbolic
//! space, written once for the family
//!
//! ```text
//! f(a) = (e^{αa} - e^{-αa}) / 2α        g(a) = (e^{αa} + e^{-αa}) / 2
//! ```
//!
//! with `α = i` (sphere), `α = 1` (hyperbolic space) or the limit `α → 0`.
//! Points are plain coordinate vectors in `ℝⁿ⁺¹`; membership is checked by
//! the spaces.

mod chooser;
mod spaces;

use serde::Serialize;

use crate::error::{MobiError, Result};
use crate::harness::{inputs, stream, AxiomReport, Tally};

pub use chooser::{AntipodalChooser, ChooserCheck};
pub use spaces::{HyperbolicSpace, SlerpSpace};

/// Tolerance on `⟨x,x⟩` for model membership.
pub const MODEL_TOL: f64 = 1e-9;

/// Pairs with `θ` within this distance of `π` take the antipodal branch.
pub const ANTIPODAL_COLLAR: f64 = 1e-9;

/// Below this angle the coefficient `f(θt)/f(θ)` is evaluated by its series.
pub const SERIES_THETA: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FGKind {
    /// `α = i`: `f = sin`, `g = cos`
    Trig,
    /// `α = 1`: `f = sinh`, `g = cosh`
    Hyperbolic,
    /// `α → 0`: `f(a) = a`, `g = 1`
    Linear,
}

impl FGKind {
    pub const ALL: [FGKind; 3] = [FGKind::Trig, FGKind::Hyperbolic, FGKind::Linear];

    pub fn alpha_sq(self) -> f64 {
        match self {
            FGKind::Trig => -1.0,
            FGKind::Hyperbolic => 1.0,
            FGKind::Linear => 0.0,
        }
    }

    pub fn f(self, a: f64) -> f64 {
        match self {
            FGKind::Trig => a.sin(),
            FGKind::Hyperbolic => a.sinh(),
            FGKind::Linear => a,
        }
    }

    pub fn g(self, a: f64) -> f64 {
        match self {
            FGKind::Trig => a.cos(),
            FGKind::Hyperbolic => a.cosh(),
            FGKind::Linear => 1.0,
        }
    }

    /// `f(θt) / f(θ)`, using `t(1 + α²θ²(t² - 1)/6)` for tiny `θ`.
    pub fn ratio(self, theta: f64, t: f64) -> f64 {
        if theta.abs() < SERIES_THETA {
            t * (1.0 + self.alpha_sq() * theta * theta * (t * t - 1.0) / 6.0)
        } else {
            self.f(theta * t) / self.f(theta)
        }
    }

    /// Residuals of the five identity groups at `(a, b)`, in the order
    /// Pythagorean, f-addition, g-addition, parity, initial values.
    pub fn residuals(self, a: f64, b: f64) -> [f64; 5] {
        let (f, g, al2) = (|x| self.f(x), |x| self.g(x), self.alpha_sq());
        [
            (-al2 * f(a) * f(a) + g(a) * g(a) - 1.0).abs(),
            (f(a) * g(b) + f(b) * g(a) - f(a + b)).abs(),
            (al2 * f(a) * f(b) + g(a) * g(b) - g(a + b)).abs(),
            (f(-a) + f(a)).abs().max((g(-a) - g(a)).abs()),
            f(0.0).abs().max((g(0.0) - 1.0).abs()),
        ]
    }

    /// The largest magnitude among the terms entering each residual, for
    /// reading the residuals relative to the size of the values involved.
    pub fn residual_scales(self, a: f64, b: f64) -> [f64; 5] {
        let m = |xs: &[f64]| xs.iter().fold(1.0_f64, |acc, x| acc.max(x.abs()));
        let (f, g) = (|x| self.f(x), |x| self.g(x));
        [
            m(&[f(a) * f(a), g(a) * g(a)]),
            m(&[f(a) * g(b), f(b) * g(a), f(a + b)]),
            m(&[f(a) * f(b), g(a) * g(b), g(a + b)]),
            m(&[f(a), g(a)]),
            1.0,
        ]
    }
}

const FG_LAWS: [(&str, &str); 5] = [
    ("FG-pythagoras", "-α²f(a)² + g(a)² = 1"),
    ("FG-add-f", "f(a)g(b) + f(b)g(a) = f(a+b)"),
    ("FG-add-g", "α²f(a)f(b) + g(a)g(b) = g(a+b)"),
    ("FG-parity", "f(-a) = -f(a), g(-a) = g(a)"),
    ("FG-initial", "f(0) = 0, g(0) = 1"),
];

/// Checks the identities with absolute residuals at `a, b` uniform in
/// `[-range, range]`.
pub fn check_fg_identities(
    kind: FGKind,
    seed: u64,
    n: usize,
    range: f64,
    tol: f64,
) -> Vec<AxiomReport> {
    use rand::Rng;
    let mut rng = stream(seed, 701);
    let mut tallies: Vec<Tally> = FG_LAWS.iter().map(|(id, st)| Tally::new(id, st)).collect();
    for _ in 0..n {
        let a: f64 = rng.gen_range(-range..=range);
        let b: f64 = rng.gen_range(-range..=range);
        for (t, r) in tallies.iter_mut().zip(kind.residuals(a, b)) {
            t.equal(inputs!(&a, &b), &r, &0.0, r, tol);
        }
    }
    tallies.into_iter().map(Tally::finish).collect()
}

pub fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// `⟨x, y⟩_L = -x₁y₁ + Σᵢ≥₂ xᵢyᵢ`
pub fn lorentz(x: &[f64], y: &[f64]) -> f64 {
    match (x.split_first(), y.split_first()) {
        (Some((x1, xs)), Some((y1, ys))) => -x1 * y1 + dot(xs, ys),
        _ => 0.0,
    }
}

fn diff(x: &[f64], y: &[f64]) -> Vec<f64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn sum(x: &[f64], y: &[f64]) -> Vec<f64> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// The angle between two unit vectors, in `[0, π]`.
///
/// Computed as `2 atan2(|x - y|, |x + y|)`, which equals `arccos⟨x, y⟩` on
/// the sphere but keeps full precision near `0` and `π`, where the arccosine
/// of a rounded inner product loses half the digits.
pub fn theta_sphere(x: &[f64], y: &[f64]) -> f64 {
    let (d, s) = (diff(x, y), sum(x, y));
    2.0 * dot(&d, &d).sqrt().atan2(dot(&s, &s).sqrt())
}

/// The hyperbolic distance `arccosh(-⟨x, y⟩_L)` on the upper sheet,
/// computed as `2 asinh(√⟨x - y, x - y⟩_L / 2)` for accuracy at short range.
pub fn theta_hyperbolic(x: &[f64], y: &[f64]) -> f64 {
    let d = diff(x, y);
    2.0 * (lorentz(&d, &d).max(0.0).sqrt() / 2.0).asinh()
}

/// `f(θ(1-t))/f(θ) · x + f(θt)/f(θ) · y` with `θ = theta(x, y)`.
///
/// Returns `x` when `x == y`. Fails with [`MobiError::Antipodal`] when the
/// family vanishes at `θ` for `θ > 0`, which on the sphere means `y = -x`.
pub fn geodesic_q(
    kind: FGKind,
    theta: impl Fn(&[f64], &[f64]) -> f64,
    x: &[f64],
    t: f64,
    y: &[f64],
) -> Result<Vec<f64>> {
    if x == y {
        return Ok(x.to_vec());
    }
    let th = theta(x, y);
    if kind == FGKind::Trig && th >= std::f64::consts::PI - ANTIPODAL_COLLAR {
        return Err(MobiError::Antipodal(format!("{x:?}, {y:?}")));
    }
    let (cx, cy) = (kind.ratio(th, 1.0 - t), kind.ratio(th, t));
    Ok(x.iter().zip(y).map(|(a, b)| cx * a + cy * b).collect())
}
