// Round trips between modules and affine spaces, and what happens when the
// space is not affine.
//
// ```text
// cargo run --example module_round_trip
// ```

use mobi::algebra::{real_line_algebra, RealField};
use mobi::module_bridge::{
    check_module_laws, roundtrip_module, roundtrip_space, EuclideanModule, ModuleOverRing,
    ModuleSpace, SpaceModule,
};
use mobi::space::{Interval, LineSpace, MobiSpace};

pub fn run() -> mobi::Result<()> {
    let m = EuclideanModule::new(RealField, 2);
    let space = ModuleSpace::new(m.clone())?;
    println!("q((0,0), 1/4, (4,8)) = {:?}", space.q(&vec![0.0, 0.0], &0.25, &vec![4.0, 8.0])?);
    println!("module round trip: {:?}", roundtrip_module(&m, 1, 500)?);

    // A basepoint other than 0 gives the same group with 1 as identity.
    let line = LineSpace::new("real", real_line_algebra(), Interval::REAL);
    println!("space round trip:  {:?}", roundtrip_space(&line, 1.0, 1, 500, 1e-9)?);
    let shifted = SpaceModule::new(line, 1.0, 1, 500, 1e-9)?;
    println!("with e = 1: 2 + 5 = {}", shifted.add(&2.0, &5.0)?);
    let failing = check_module_laws(&shifted, 1, 500, 1e-12).into_iter().filter(|r| !r.passed).count();
    println!("module laws failing: {failing}");
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
