//! Scalars and linear carriers used by the line spaces and the linear pair
//! construction. Implemented for `f64` and for exact rationals.

use std::fmt::Debug;

use num::{BigInt, BigRational, FromPrimitive, Signed, ToPrimitive};
use rand::Rng;

use crate::coords::Coords;

pub trait Scalar:
    Clone + Debug + PartialEq + PartialOrd + Signed + Coords + Send + Sync + 'static
{
    fn from_f64(x: f64) -> Self;

    fn to_f64(&self) -> f64;

    /// Draws a value from `[lo, hi]`. Rational scalars use a 1/64 grid so that
    /// exact arithmetic stays small.
    fn sample_in<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> Self;

    fn is_finite(&self) -> bool {
        true
    }
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn sample_in<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> Self {
        if lo == hi {
            lo
        } else {
            rng.gen_range(lo..=hi)
        }
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
}

impl Scalar for BigRational {
    fn from_f64(x: f64) -> Self {
        <BigRational as FromPrimitive>::from_f64(x).expect("finite value")
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sample_in<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> Self {
        let lo = (lo * 64.0).ceil() as i64;
        let hi = (hi * 64.0).floor() as i64;
        let k = if lo >= hi { lo } else { rng.gen_range(lo..=hi) };
        BigRational::new(BigInt::from(k), BigInt::from(64))
    }
}

/// A carrier closed under the vector operations needed to solve the
/// boundary system of the linear pair construction.
pub trait LinearCarrier<F>: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn scale(&self, s: &F) -> Self;
    fn unscale(&self, s: &F) -> Self;
}

impl<F: Scalar> LinearCarrier<F> for F {
    fn add(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn scale(&self, s: &F) -> Self {
        self.clone() * s.clone()
    }

    fn unscale(&self, s: &F) -> Self {
        self.clone() / s.clone()
    }
}

impl LinearCarrier<f64> for Vec<f64> {
    fn add(&self, other: &Self) -> Self {
        self.iter().zip(other).map(|(a, b)| a + b).collect()
    }

    fn sub(&self, other: &Self) -> Self {
        self.iter().zip(other).map(|(a, b)| a - b).collect()
    }

    fn scale(&self, s: &f64) -> Self {
        self.iter().map(|a| a * s).collect()
    }

    fn unscale(&self, s: &f64) -> Self {
        self.iter().map(|a| a / s).collect()
    }
}

pub(crate) fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
