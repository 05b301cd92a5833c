// The lozenge algebra, a two-dimensional mobi algebra, and the interval
// space it acts on.
//
// ```text
// cargo run --example lozenge
// ```

use mobi::algebra::{LozengeAlgebra, MobiAlgebra};
use mobi::constructions::LozengeSpace;
use mobi::space::MobiSpace;

pub fn run() -> mobi::Result<()> {
    let alg = LozengeAlgebra;
    let (a, b, c) = ((0.5, 0.25), (0.5, 0.0), (0.75, -0.125));
    println!("p({a:?}, {b:?}, {c:?}) = {:?}", alg.p(&a, &b, &c));
    println!("complement of {a:?} = {:?}", alg.complement(&a));
    println!("{a:?} (+) {c:?} = {:?}", alg.oplus(&a, &c));

    for h in [1, -1] {
        let space = LozengeSpace::new(h)?;
        println!("h = {h:+}: q(0, (1/2, 1/4), 1) = {}", space.q(&0.0, &(0.5, 0.25), &1.0)?);
    }
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
