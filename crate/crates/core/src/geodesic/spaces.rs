use std::f64::consts::PI;

use rand::Rng;
use rand_distr::StandardNormal;

use super::{
    dot, geodesic_q, lorentz, theta_hyperbolic, theta_sphere, AntipodalChooser, FGKind,
    ANTIPODAL_COLLAR, MODEL_TOL,
};
use crate::algebra::CanonicalAlgebra;
use crate::error::{MobiError, Result};
use crate::space::MobiSpace;

pub(crate) fn random_unit<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let norm = dot(&v, &v).sqrt();
        if norm > 1e-6 {
            return v.into_iter().map(|c| c / norm).collect();
        }
    }
}

fn normalized(v: Vec<f64>) -> Vec<f64> {
    let norm = dot(&v, &v).sqrt();
    v.into_iter().map(|c| c / norm).collect()
}

/// Spherical linear interpolation on `Sⁿ ⊂ ℝⁿ⁺¹` over the unit interval.
///
/// Away from antipodes `q` is the Slerp formula. For `y = -x` it follows
/// `cos(πt) x + sin(πt) v(x)` for the configured chooser `v`; without a
/// chooser such pairs are an error. The hemisphere variant `x₁ > 0` never
/// contains an antipodal pair.
#[derive(Debug, Clone)]
pub struct SlerpSpace {
    name: String,
    n: usize,
    chooser: Option<AntipodalChooser>,
    hemisphere: bool,
}

impl SlerpSpace {
    pub fn new(n: usize, chooser: AntipodalChooser) -> Result<Self> {
        if chooser.ambient() != n + 1 {
            return Err(MobiError::Config(format!(
                "chooser {} is defined on S^{}, not S^{n}",
                chooser.name(),
                chooser.ambient() - 1
            )));
        }
        let name = match n {
            1 => "slerp-s1".to_string(),
            _ => format!("slerp-s{n}-{}", chooser.name()),
        };
        Ok(Self { name, n, chooser: Some(chooser), hemisphere: false })
    }

    /// The full sphere with no rule for antipodal pairs.
    pub fn without_chooser(n: usize) -> Self {
        Self { name: format!("slerp-s{n}-bare"), n, chooser: None, hemisphere: false }
    }

    /// The open hemisphere `x₁ > 0`, where geodesics are unique.
    pub fn hemisphere(n: usize) -> Self {
        Self { name: "slerp-hemisphere".to_string(), n, chooser: None, hemisphere: true }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chooser(&self) -> Option<&AntipodalChooser> {
        self.chooser.as_ref()
    }

    fn sample_with_seams<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        if self.hemisphere {
            loop {
                let mut x = random_unit(rng, self.n + 1);
                x[0] = x[0].abs();
                if x[0] >= 0.05 {
                    return x;
                }
            }
        }
        match rng.gen_range(0..16) {
            // Where the choosers switch branches: the poles and the equator.
            0 => {
                let mut x = vec![0.0; self.n + 1];
                x[self.n] = if rng.gen() { 1.0 } else { -1.0 };
                x
            }
            1 => {
                let mut x = random_unit(rng, self.n);
                x.push(0.0);
                x
            }
            _ => random_unit(rng, self.n + 1),
        }
    }
}

impl MobiSpace for SlerpSpace {
    type Algebra = CanonicalAlgebra;
    type Point = Vec<f64>;

    fn name(&self) -> &str {
        &self.name
    }

    fn algebra(&self) -> &CanonicalAlgebra {
        &CanonicalAlgebra
    }

    fn q(&self, x: &Vec<f64>, t: &f64, y: &Vec<f64>) -> Result<Vec<f64>> {
        if x == y {
            return Ok(x.clone());
        }
        match &self.chooser {
            Some(chooser) if theta_sphere(x, y) >= PI - ANTIPODAL_COLLAR => {
                // sin(π) is not zero in floating point, and the endpoint it
                // would produce can land across a chooser seam from `y`.
                if *t == 1.0 {
                    return Ok(y.clone());
                }
                let v = chooser.v(x);
                let (c, s) = ((PI * t).cos(), (PI * t).sin());
                Ok(x.iter().zip(&v).map(|(a, b)| c * a + s * b).collect())
            }
            _ => geodesic_q(FGKind::Trig, theta_sphere, x, *t, y),
        }
    }

    fn contains(&self, x: &Vec<f64>) -> bool {
        x.len() == self.n + 1
            && x.iter().all(|c| c.is_finite())
            && (dot(x, x) - 1.0).abs() <= MODEL_TOL
            && (!self.hemisphere || x[0] > 0.0)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.sample_with_seams(rng)
    }

    /// Mixes in antipodal, coincident and nearly coincident pairs.
    fn sample_pair<R: Rng + ?Sized>(&self, rng: &mut R) -> (Vec<f64>, Vec<f64>) {
        let x = self.sample_with_seams(rng);
        let y = match rng.gen_range(0..16) {
            0 | 1 if !self.hemisphere => x.iter().map(|c| -c).collect(),
            2 => x.clone(),
            3 => normalized(x.iter().map(|c| c + 1e-7 * rng.gen_range(-1.0..1.0)).collect()),
            _ => self.sample_with_seams(rng),
        };
        (x, y)
    }
}

/// The upper sheet `Hⁿ = {⟨x,x⟩_L = -1, x₁ > 0}` with its geodesics.
#[derive(Debug, Clone)]
pub struct HyperbolicSpace {
    name: String,
    n: usize,
    radius: f64,
}

impl HyperbolicSpace {
    pub fn new(n: usize) -> Self {
        Self { name: "hyperbolic-hn".to_string(), n, radius: 2.0 }
    }

    /// Samples lie within hyperbolic distance `radius` of `(1, 0, …, 0)`.
    pub fn with_sample_radius(mut self, radius: f64) -> Self {
        self.radius = radius;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(cosh r, sinh r · u)` for a unit vector `u ∈ ℝⁿ`.
    pub fn point(r: f64, u: &[f64]) -> Vec<f64> {
        std::iter::once(r.cosh()).chain(u.iter().map(|c| r.sinh() * c)).collect()
    }
}

impl MobiSpace for HyperbolicSpace {
    type Algebra = CanonicalAlgebra;
    type Point = Vec<f64>;

    fn name(&self) -> &str {
        &self.name
    }

    fn algebra(&self) -> &CanonicalAlgebra {
        &CanonicalAlgebra
    }

    fn q(&self, x: &Vec<f64>, t: &f64, y: &Vec<f64>) -> Result<Vec<f64>> {
        geodesic_q(FGKind::Hyperbolic, theta_hyperbolic, x, *t, y)
    }

    /// The norm is checked relative to `x₁²`, the size of the terms it cancels.
    fn contains(&self, x: &Vec<f64>) -> bool {
        x.len() == self.n + 1
            && x.iter().all(|c| c.is_finite())
            && x[0] > 0.0
            && (lorentz(x, x) + 1.0).abs() <= MODEL_TOL * x[0] * x[0]
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let r = rng.gen_range(0.0..=self.radius);
        Self::point(r, &random_unit(rng, self.n))
    }

    fn sample_pair<R: Rng + ?Sized>(&self, rng: &mut R) -> (Vec<f64>, Vec<f64>) {
        let x = self.sample(rng);
        let y = if rng.gen_range(0..16) == 0 { x.clone() } else { self.sample(rng) };
        (x, y)
    }
}
