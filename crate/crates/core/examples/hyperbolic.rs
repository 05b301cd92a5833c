// Geodesics on the hyperboloid model of the hyperbolic plane.
//
// ```text
// cargo run --example hyperbolic
// ```

use mobi::geodesic::{lorentz, theta_hyperbolic, HyperbolicSpace};
use mobi::harness::{all_passed, check_space_axioms};
use mobi::space::MobiSpace;

pub fn run() -> mobi::Result<()> {
    let h2 = HyperbolicSpace::new(2);
    let x = HyperbolicSpace::point(0.0, &[1.0, 0.0]);
    let y = HyperbolicSpace::point(2.0, &[0.0, 1.0]);
    println!("distance: {:.12}", theta_hyperbolic(&x, &y));
    for t in [0.25, 0.5, 0.75] {
        let p = h2.q(&x, &t, &y)?;
        println!("t = {t}: {p:.6?}  <p,p>_L = {:.3e}", lorentz(&p, &p));
    }
    println!("X1-X5 hold: {}", all_passed(&check_space_axioms(&h2, 1, 500, 1e-6)));
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
