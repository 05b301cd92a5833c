use rand::Rng;

use super::{MobiAlgebra, Timeline};
use crate::error::{domain, Result};

/// The mobi algebra on `{(t1, t2) : |t2| <= t1 <= 1 - |t2|}` with constants
/// `(0, 0)`, `(1/2, 0)`, `(1, 0)`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct LozengeAlgebra;

impl LozengeAlgebra {
    pub fn contains_pair(t: &(f64, f64)) -> bool {
        let (t1, t2) = *t;
        t2.abs() <= t1 && t1 <= 1.0 - t2.abs()
    }
}

fn raw_p(a: &(f64, f64), b: &(f64, f64), c: &(f64, f64)) -> (f64, f64) {
    let (a1, a2) = *a;
    let (b1, b2) = *b;
    let (c1, c2) = *c;
    (
        a1 - b1 * a1 - b2 * a2 + b1 * c1 + b2 * c2,
        a2 - b1 * a2 - b2 * a1 + b1 * c2 + b2 * c1,
    )
}

/// Checked evaluation of the lozenge operation.
pub fn lozenge_p(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Result<(f64, f64)> {
    for t in [&a, &b, &c] {
        if !LozengeAlgebra::contains_pair(t) {
            return Err(domain("lozenge", t));
        }
    }
    Ok(raw_p(&a, &b, &c))
}

impl MobiAlgebra for LozengeAlgebra {
    type Elem = (f64, f64);

    fn name(&self) -> &str {
        "lozenge"
    }

    fn p(&self, a: &(f64, f64), b: &(f64, f64), c: &(f64, f64)) -> (f64, f64) {
        raw_p(a, b, c)
    }

    fn zero(&self) -> (f64, f64) {
        (0.0, 0.0)
    }

    fn half(&self) -> (f64, f64) {
        (0.5, 0.0)
    }

    fn one(&self) -> (f64, f64) {
        (1.0, 0.0)
    }

    fn contains(&self, a: &(f64, f64)) -> bool {
        Self::contains_pair(a)
    }

    // rejection from the bounding box; the lozenge fills half of it
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (f64, f64) {
        loop {
            let t = (rng.gen_range(0.0..=1.0), rng.gen_range(-0.5..=0.5));
            if Self::contains_pair(&t) {
                return t;
            }
        }
    }
}

impl Timeline for LozengeAlgebra {
    fn at_time(&self, t: f64) -> (f64, f64) {
        (t, 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_values() {
        assert_eq!(lozenge_p((1.0, 0.0), (0.5, 0.0), (0.0, 0.0)).unwrap(), (0.5, 0.0));
        assert_eq!(lozenge_p((0.3, 0.1), (0.0, 0.0), (0.6, -0.2)).unwrap(), (0.3, 0.1));
        assert_eq!(lozenge_p((0.0, 0.0), (0.25, 0.25), (1.0, 0.0)).unwrap(), (0.25, 0.25));
    }

    #[test]
    fn membership_matches_the_set() {
        assert!(LozengeAlgebra::contains_pair(&(0.5, 0.5)));
        assert!(LozengeAlgebra::contains_pair(&(0.5, -0.5)));
        assert!(!LozengeAlgebra::contains_pair(&(0.25, 0.3)));
        assert!(!LozengeAlgebra::contains_pair(&(0.9, 0.2)));
        assert!(lozenge_p((0.9, 0.2), (0.5, 0.0), (0.0, 0.0)).is_err());
    }
}
