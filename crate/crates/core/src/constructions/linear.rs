use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use crate::coords::Coords;
use crate::error::{MobiError, Result};
use crate::scalar::{LinearCarrier, Scalar};

use super::pair::PairFamily;

/// Determinants below this magnitude are treated as singular.
pub const SINGULAR_DET: f64 = 1e-12;

type ScalarFn<F> = Arc<dyn Fn(&F) -> F + Send + Sync>;
type OffsetFn<F, X> = Arc<dyn Fn(&F) -> X + Send + Sync>;

/// `h(α, y, β) = α f(y) + β g(y) - K(y)` with scalar `f`, `g` and a
/// vector-valued offset `K` (absent means zero).
///
/// Requires `f(y₁) g(y₂) ≠ f(y₂) g(y₁)` for `y₁ ≠ y₂`. The boundary system
/// is solved with the explicit 2×2 inverse.
pub struct LinearFamily<F, X> {
    f: ScalarFn<F>,
    g: ScalarFn<F>,
    k: Option<OffsetFn<F, X>>,
    _x: PhantomData<fn() -> X>,
}

impl<F, X> Clone for LinearFamily<F, X> {
    fn clone(&self) -> Self {
        Self { f: self.f.clone(), g: self.g.clone(), k: self.k.clone(), _x: PhantomData }
    }
}

impl<F, X> fmt::Debug for LinearFamily<F, X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearFamily").field("offset", &self.k.is_some()).finish_non_exhaustive()
    }
}

impl<F: Scalar, X: LinearCarrier<F>> LinearFamily<F, X> {
    pub fn new(
        f: impl Fn(&F) -> F + Send + Sync + 'static,
        g: impl Fn(&F) -> F + Send + Sync + 'static,
    ) -> Self {
        Self { f: Arc::new(f), g: Arc::new(g), k: None, _x: PhantomData }
    }

    pub fn with_offset(mut self, k: impl Fn(&F) -> X + Send + Sync + 'static) -> Self {
        self.k = Some(Arc::new(k));
        self
    }

    pub fn f(&self, y: &F) -> F {
        (self.f)(y)
    }

    pub fn g(&self, y: &F) -> F {
        (self.g)(y)
    }

    /// `f(y₁) g(y₂) - f(y₂) g(y₁)`
    pub fn det(&self, y1: &F, y2: &F) -> F {
        self.f(y1) * self.g(y2) - self.f(y2) * self.g(y1)
    }

    fn shifted(&self, x: &X, y: &F) -> X {
        match &self.k {
            Some(k) => x.add(&k(y)),
            None => x.clone(),
        }
    }
}

impl<F, X> PairFamily for LinearFamily<F, X>
where
    F: Scalar,
    X: LinearCarrier<F> + fmt::Debug + Coords,
{
    type X = X;
    type Y = F;
    type Params = (X, X);

    fn h(&self, (alpha, beta): &(X, X), y: &F) -> Result<X> {
        let v = alpha.scale(&self.f(y)).add(&beta.scale(&self.g(y)));
        Ok(match &self.k {
            Some(k) => v.sub(&k(y)),
            None => v,
        })
    }

    fn solve(&self, x1: &X, y1: &F, x2: &X, y2: &F) -> Result<(X, X)> {
        let det = self.det(y1, y2);
        let det_f = det.to_f64();
        if det.is_zero() || !(det_f.abs() >= SINGULAR_DET) {
            return Err(MobiError::Singular { det: det_f });
        }
        let (b1, b2) = (self.shifted(x1, y1), self.shifted(x2, y2));
        let alpha = b1.scale(&self.g(y2)).sub(&b2.scale(&self.g(y1))).unscale(&det);
        let beta = b2.scale(&self.f(y1)).sub(&b1.scale(&self.f(y2))).unscale(&det);
        Ok((alpha, beta))
    }
}
