// Geometric and harmonic means as mobi spaces, obtained by transporting
// the canonical line through a bijection.
//
// ```text
// cargo run --example transported_means
// ```

use mobi::constructions::{geometric_mean, harmonic, TransportSpace};
use mobi::space::{Interval, LineSpace, MobiSpace};
use mobi::algebra::CanonicalAlgebra;
use mobi::harness::{all_passed, check_space_axioms};

pub fn run() -> mobi::Result<()> {
    let geo = geometric_mean();
    let har = harmonic();
    println!("geometric: q(1, 1/2, 4) = {}", geo.q(&1.0, &0.5, &4.0)?);
    println!("harmonic:  q(1, 1/2, 3) = {}", har.q(&1.0, &0.5, &3.0)?);

    // Any bijection works. Here the cube root transports ℝ onto itself.
    let cubic = TransportSpace::new(
        "cubic-mean",
        LineSpace::new("line", CanonicalAlgebra, Interval::REAL),
        |x: &f64| x.powi(3),
        |y: &f64| y.cbrt(),
        |x: &f64| x.is_finite(),
    );
    println!("cubic:     q(1, 1/2, 2) = {}", cubic.q(&1.0, &0.5, &2.0)?);
    let ok = all_passed(&check_space_axioms(&cubic, 3, 1_000, 1e-9));
    println!("cubic mean satisfies X1-X5: {ok}");
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
