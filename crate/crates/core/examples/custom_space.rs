// Implement `MobiSpace` for your own type and let the harness judge it.
//
// The space here is the positive reals with `q(x, a, y) = ((1-a)√x + a√y)²`,
// a transport of the canonical line through the square root.
//
// ```text
// cargo run --example custom_space
// ```

use mobi::algebra::CanonicalAlgebra;
use mobi::harness::{all_passed, check_space_axioms, check_space_properties, is_affine};
use mobi::space::MobiSpace;
use rand::Rng;

struct RootMean;

impl MobiSpace for RootMean {
    type Algebra = CanonicalAlgebra;
    type Point = f64;

    fn name(&self) -> &str {
        "root-mean"
    }

    fn algebra(&self) -> &CanonicalAlgebra {
        &CanonicalAlgebra
    }

    fn q(&self, x: &f64, a: &f64, y: &f64) -> mobi::Result<f64> {
        Ok(((1.0 - a) * x.sqrt() + a * y.sqrt()).powi(2))
    }

    fn contains(&self, x: &f64) -> bool {
        *x > 0.0 && x.is_finite()
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        rng.gen_range(0.1..10.0)
    }
}

pub fn run() -> mobi::Result<()> {
    let mut reports = check_space_axioms(&RootMean, 9, 1_000, 1e-9);
    reports.extend(check_space_properties(&RootMean, 9, 1_000, 1e-9));
    println!("root mean is a mobi space: {}", all_passed(&reports));
    println!("root mean is affine: {}", is_affine(&RootMean, 9, 1_000, 1e-9).affine);
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
