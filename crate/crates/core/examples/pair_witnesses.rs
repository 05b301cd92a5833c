// Pair spaces built from two functions of time, and exact rational
// witnesses that the x²- and x³-pairs are not affine.
//
// ```text
// cargo run --example pair_witnesses
// ```

use mobi::constructions::{cube_pair_exact, inv_pair, sq_pair, sq_pair_exact};
use mobi::harness::{affine_sides, is_affine};
use mobi::space::MobiSpace;
use num::BigRational;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn run() -> mobi::Result<()> {
    let sq = sq_pair();
    println!("sq-pair: q((0,0), 1/2, (1,1)) = {:?}", sq.q(&(0.0, 0.0), &0.5, &(1.0, 1.0))?);

    let (z, o) = (r(0, 1), r(1, 1));
    let (x1, y1, x2, y2) = ((z.clone(), z.clone()), (z.clone(), o.clone()), (o.clone(), o), (z.clone(), z));
    let (l, rr) = affine_sides(&sq_pair_exact(), &x1, &y1, &x2, &y2, &r(1, 3))?;
    println!("x² pair:  {} , {}  vs  {} , {}", l.0, l.1, rr.0, rr.1);
    let (l, rr) = affine_sides(&cube_pair_exact(), &x1, &y1, &x2, &y2, &r(1, 3))?;
    println!("x³ pair:  {} , {}  vs  {} , {}", l.0, l.1, rr.0, rr.1);

    println!("1/x pair affine: {}", is_affine(&inv_pair(), 1, 1_000, 1e-9).affine);
    println!("x² pair affine:  {}", is_affine(&sq, 1, 1_000, 1e-9).affine);
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
