// Spherical linear interpolation as a mobi space, including what happens
// between antipodal points under each of the three choosers.
//
// ```text
// cargo run --example slerp
// ```

use mobi::geodesic::{theta_sphere, AntipodalChooser, SlerpSpace};
use mobi::harness::is_affine;
use mobi::space::MobiSpace;

pub fn run() -> mobi::Result<()> {
    let (e1, e2) = (vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]);
    let s2 = SlerpSpace::new(2, AntipodalChooser::S2Pole)?;
    println!("midpoint of e1 and e2: {:?}", s2.q(&e1, &0.5, &e2)?);

    let minus_e1 = vec![-1.0, 0.0, 0.0];
    for chooser in [AntipodalChooser::S2Pole, AntipodalChooser::S2Equator] {
        let space = SlerpSpace::new(2, chooser.clone())?;
        println!("{:<8} midpoint of e1 and -e1: {:?}", chooser.name(), space.q(&e1, &0.5, &minus_e1)?);
    }
    let circle = SlerpSpace::new(1, AntipodalChooser::Circle)?;
    println!("circle: halfway from (1,0) to (-1,0): {:?}", circle.q(&vec![1.0, 0.0], &0.5, &vec![-1.0, 0.0])?);

    let bare = SlerpSpace::without_chooser(2);
    println!("no chooser: {}", bare.q(&e1, &0.5, &minus_e1).unwrap_err());

    let q = s2.q(&e1, &0.3, &e2)?;
    println!("angle from e1 after t = 0.3: {:.6} (0.3 · π/2 = {:.6})", theta_sphere(&e1, &q), 0.3 * std::f64::consts::FRAC_PI_2);
    println!("S² is affine: {}", is_affine(&s2, 1, 500, 1e-9).affine);
    Ok(())
}

fn main() -> mobi::Result<()> {
    run()
}
