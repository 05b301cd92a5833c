// Drive the registry the way the command line does: build every space
// by name and run its suite.
//
// ```text
// cargo run --example catalog
// ```

use mobi::harness::all_passed;
use mobi::registry::{build_space, spaces, SpaceConfig};

pub fn run() -> mobi::Result<()> {
    for entry in spaces() {
        let space = build_space(&SpaceConfig::new(entry.name))?;
        let ok = all_passed(&space.verify(1, 200, entry.default_tol));
        let tag = if entry.control { " (control)" } else { "" };
        println!("{:<22}{}{tag}", entry.name, if ok { "ok" } else { "fails" });
    }
    let cfg = SpaceConfig::parse("projectile", &["k=[0, -4.9]".into()])?;
    let path = build_space(&cfg)?.path(&[0.0, 0.0, 0.0], &[10.0, 0.0, 2.0], &[0.0, 0.5, 1.0])?;
    println!("projectile path: {path:?}");
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
