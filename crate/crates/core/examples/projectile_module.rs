// Constant-acceleration motion read three ways: as a mobi space, as a
// module over the reals, and through the isomorphism that straightens it.
//
// ```text
// cargo run --example projectile_module
// ```

use mobi::algebra::real_line_algebra;
use mobi::constructions::ProjectileSpace;
use mobi::harness::all_passed;
use mobi::module_bridge::{ModuleOverRing, ProjectileHom, SpaceModule};
use mobi::space::MobiSpace;

pub fn run() -> mobi::Result<()> {
    let space = ProjectileSpace::new(real_line_algebra(), vec![1.0]);
    let top = space.q(&(vec![0.0], 0.0), &0.5, &(vec![0.0], 1.0))?;
    println!("halfway through a unit throw: {top:?}");

    let module = SpaceModule::new(space, (vec![0.0], 0.0), 7, 1_000, 1e-9)?;
    let (u, v) = ((vec![1.0], 2.0), (vec![3.0], 5.0));
    println!("{u:?} + {v:?} = {:?}", module.add(&u, &v)?);
    println!("φ_3 {u:?} = {:?}", module.act(&3.0, &u)?);
    println!("-{u:?} = {:?}", module.neg(&u)?);

    let f = ProjectileHom::new(vec![1.0]);
    println!("f(2, 3) = {:?}", f.apply(&(vec![2.0], 3.0)));
    println!("f is a module homomorphism: {}", all_passed(&f.check(7, 1_000, 1e-9)));
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
