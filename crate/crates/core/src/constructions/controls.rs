use std::f64::consts::FRAC_PI_2;

use rand::Rng;

use crate::algebra::{CanonicalAlgebra, LozengeAlgebra};
use crate::error::{MobiError, Result};
use crate::space::MobiSpace;

/// `[0, 1]` over the lozenge algebra with
/// `q(x, (t, s), y) = (1 - t - h s) x + (t + h s) y` for `h = ±1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LozengeSpace {
    h: f64,
}

impl LozengeSpace {
    pub fn new(h: i32) -> Result<Self> {
        match h {
            1 | -1 => Ok(Self { h: h as f64 }),
            _ => Err(MobiError::Config(format!("h must be 1 or -1, got {h}"))),
        }
    }

    pub fn h(&self) -> f64 {
        self.h
    }
}

impl MobiSpace for LozengeSpace {
    type Algebra = LozengeAlgebra;
    type Point = f64;

    fn name(&self) -> &str {
        "lozenge-space"
    }

    fn algebra(&self) -> &LozengeAlgebra {
        &LozengeAlgebra
    }

    fn q(&self, x: &f64, &(t, s): &(f64, f64), y: &f64) -> Result<f64> {
        let w = t + self.h * s;
        Ok((1.0 - w) * x + w * y)
    }

    fn contains(&self, x: &f64) -> bool {
        (0.0..=1.0).contains(x)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        rng.gen_range(0.0..=1.0)
    }
}

/// The three rejected trigonometric interpolations on `ℝ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigControl {
    /// `x cos t + y sin t`: breaks `q(x,1,y) = y`.
    Cos,
    /// `x cos(tπ/2) + y sin(tπ/2)`: breaks `q(x,a,x) = x`.
    CosScaled,
    /// `x cos²(tπ/2) + y sin²(tπ/2)`: breaks only the composition law.
    CosSquared,
}

impl TrigControl {
    pub fn name(self) -> &'static str {
        match self {
            TrigControl::Cos => "negative-cos",
            TrigControl::CosScaled => "negative-cos-scaled",
            TrigControl::CosSquared => "negative-cos2",
        }
    }

    /// The axiom this formula is known to violate.
    pub fn broken_axiom(self) -> &'static str {
        match self {
            TrigControl::Cos => "X2",
            TrigControl::CosScaled => "X3",
            TrigControl::CosSquared => "X5",
        }
    }
}

impl MobiSpace for TrigControl {
    type Algebra = CanonicalAlgebra;
    type Point = f64;

    fn name(&self) -> &str {
        TrigControl::name(*self)
    }

    fn algebra(&self) -> &CanonicalAlgebra {
        &CanonicalAlgebra
    }

    fn q(&self, x: &f64, t: &f64, y: &f64) -> Result<f64> {
        Ok(match self {
            TrigControl::Cos => x * t.cos() + y * t.sin(),
            TrigControl::CosScaled => {
                let u = t * FRAC_PI_2;
                x * u.cos() + y * u.sin()
            }
            TrigControl::CosSquared => {
                let u = t * FRAC_PI_2;
                x * u.cos().powi(2) + y * u.sin().powi(2)
            }
        })
    }

    fn contains(&self, x: &f64) -> bool {
        x.is_finite()
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        rng.gen_range(-10.0..=10.0)
    }
}
