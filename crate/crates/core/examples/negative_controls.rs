// Three plausible trigonometric interpolations that are not mobi spaces,
// and the axiom each one breaks.
//
// ```text
// cargo run --example negative_controls
// ```

use std::f64::consts::PI;

use mobi::constructions::TrigControl;
use mobi::harness::check_space_axioms;
use mobi::space::MobiSpace;

pub fn run() -> mobi::Result<()> {
    for control in [TrigControl::Cos, TrigControl::CosScaled, TrigControl::CosSquared] {
        let failing: Vec<_> = check_space_axioms(&control, 1, 500, 1e-9)
            .into_iter()
            .filter(|r| !r.passed)
            .map(|r| r.axiom_id)
            .collect();
        println!("{:<20} fails {failing:?}", control.name());
    }

    let c = TrigControl::CosSquared;
    let third = 1.0 / 3.0;
    let direct = c.q(&1.0, &(5.0 / 9.0), &0.0)?;
    let composed = c.q(&c.q(&1.0, &third, &0.0)?, &third, &c.q(&1.0, &1.0, &0.0)?)?;
    println!("cos²(5π/18) = {direct:.6} ({:.6}), composed = {composed:.6}", (5.0 * PI / 18.0).cos().powi(2));
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
