use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use super::{dot, MODEL_TOL};
use crate::coords::euclidean;
use crate::error::{MobiError, Result};

/// An even unit field `v` with `⟨x, v(x)⟩ = 0`, used to pick the great
/// circle through a pair of antipodal points.
#[derive(Clone)]
pub enum AntipodalChooser {
    /// Anticlockwise from the upper half of the circle, clockwise from the lower.
    Circle,
    /// On `S²`: through the north pole, and the poles through the positive x-axis.
    S2Pole,
    /// On `S²`: along the parallel band between the two points, with a
    /// half-turn rule on the equator; the poles go through the positive y-axis.
    S2Equator,
    Custom { name: String, ambient: usize, v: Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync> },
}

impl fmt::Debug for AntipodalChooser {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl AntipodalChooser {
    pub fn name(&self) -> &str {
        match self {
            AntipodalChooser::Circle => "circle",
            AntipodalChooser::S2Pole => "pole",
            AntipodalChooser::S2Equator => "equator",
            AntipodalChooser::Custom { name, .. } => name,
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "circle" => Ok(AntipodalChooser::Circle),
            "pole" => Ok(AntipodalChooser::S2Pole),
            "equator" => Ok(AntipodalChooser::S2Equator),
            other => Err(MobiError::Config(format!(
                "unknown chooser {other:?} (expected circle, pole or equator)"
            ))),
        }
    }

    /// Dimension of the ambient space `ℝⁿ⁺¹` the chooser is defined on.
    pub fn ambient(&self) -> usize {
        match self {
            AntipodalChooser::Circle => 2,
            AntipodalChooser::S2Pole | AntipodalChooser::S2Equator => 3,
            AntipodalChooser::Custom { ambient, .. } => *ambient,
        }
    }

    pub fn v(&self, x: &[f64]) -> Vec<f64> {
        match self {
            AntipodalChooser::Circle => {
                let upper = x[1] > 0.0 || (x[1] == 0.0 && x[0] > 0.0);
                if upper {
                    vec![-x[1], x[0]]
                } else {
                    vec![x[1], -x[0]]
                }
            }
            AntipodalChooser::S2Pole => {
                let r = x[0].hypot(x[1]);
                if r == 0.0 {
                    vec![1.0, 0.0, 0.0]
                } else {
                    // r² = 1 - x₃² on the sphere, and is exact near the poles.
                    vec![-x[0] * x[2] / r, -x[1] * x[2] / r, r]
                }
            }
            AntipodalChooser::S2Equator => {
                let r = x[0].hypot(x[1]);
                if r == 0.0 {
                    return vec![0.0, 1.0, 0.0];
                }
                let upper = x[2] > 0.0
                    || (x[2] == 0.0 && (x[1] > 0.0 || (x[1] == 0.0 && x[0] > 0.0)));
                if upper {
                    vec![-x[1] / r, x[0] / r, 0.0]
                } else {
                    vec![x[1] / r, -x[0] / r, 0.0]
                }
            }
            AntipodalChooser::Custom { v, .. } => v(x),
        }
    }

    /// Largest evenness, orthogonality and unit-length defects over `n`
    /// random points of the sphere.
    pub fn check<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> ChooserCheck {
        let mut out = ChooserCheck::default();
        for i in 0..n {
            let x = match i % 50 {
                // Seams of the piecewise definitions.
                0 => axis_point(self.ambient(), rng.gen_range(0..self.ambient()), rng.gen()),
                1 if self.ambient() == 3 => {
                    let a: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                    vec![a.cos(), a.sin(), 0.0]
                }
                _ => super::spaces::random_unit(rng, self.ambient()),
            };
            let v = self.v(&x);
            let minus: Vec<f64> = x.iter().map(|c| -c).collect();
            out.evenness = out.evenness.max(euclidean(&v, &self.v(&minus)));
            out.orthogonality = out.orthogonality.max(dot(&x, &v).abs());
            out.unit = out.unit.max((dot(&v, &v) - 1.0).abs());
            out.samples += 1;
        }
        out
    }
}

fn axis_point(dim: usize, axis: usize, positive: bool) -> Vec<f64> {
    let mut x = vec![0.0; dim];
    x[axis] = if positive { 1.0 } else { -1.0 };
    x
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct ChooserCheck {
    pub samples: usize,
    pub evenness: f64,
    pub orthogonality: f64,
    pub unit: f64,
}

impl ChooserCheck {
    pub fn holds(&self) -> bool {
        self.evenness <= MODEL_TOL && self.orthogonality <= MODEL_TOL && self.unit <= MODEL_TOL
    }
}
