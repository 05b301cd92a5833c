// Damped oscillators as mobi spaces: the overdamped space is not affine,
// and it approaches the critical one as the exponents merge.
//
// ```text
// cargo run --example damping
// ```

use mobi::constructions::{underdamped, DampingSpace};
use mobi::harness::{interchange_sides, is_affine};
use mobi::space::MobiSpace;

pub fn run() -> mobi::Result<()> {
    let over = DampingSpace::overdamped(1.0, 2.0)?;
    let (l, r) = interchange_sides(&over, &(0.0, 0.0), &(0.0, 1.0), &(1.0, 1.0), &(0.0, 0.0), &(1.0 / 3.0), &(1.0 / 6.0))?;
    println!("overdamped interchange: {:.12} vs {:.12} (time {})", l.0, r.0, l.1);
    println!("critical affine: {}", is_affine(&DampingSpace::critical(1.0)?, 1, 500, 1e-9).affine);

    let crit = DampingSpace::critical(1.0)?;
    let (u, v) = ((1.0, 0.0), (-2.0, 0.8));
    for eps in [1e-1, 1e-2, 1e-3, 1e-4] {
        let near = DampingSpace::overdamped(1.0, 1.0 + eps)?;
        let gap = crit.dist(&crit.q(&u, &0.4, &v)?, &near.q(&u, &0.4, &v)?);
        println!("beta - alpha = {eps:e}: distance to critical {gap:.3e}");
    }

    let under = underdamped(-0.3, 2.0)?;
    println!("underdamped q((1,0), 1/2, (0,1)) = {:?}", under.q(&(1.0, 0.0), &0.5, &(0.0, 1.0))?);
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
