mod common;

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use common::assert_space_laws;
use mobi::geodesic::*;
use mobi::harness::{check_midpoint_axioms, find, is_affine};
use mobi::space::MobiSpace;
use mobi::MobiError;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn choosers() -> Vec<SlerpSpace> {
    vec![
        SlerpSpace::new(1, AntipodalChooser::Circle).unwrap(),
        SlerpSpace::new(2, AntipodalChooser::S2Pole).unwrap(),
        SlerpSpace::new(2, AntipodalChooser::S2Equator).unwrap(),
    ]
}

fn close_vec(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[test]
fn fg_identities_trig_and_linear() {
    for kind in [FGKind::Trig, FGKind::Linear] {
        let reports = check_fg_identities(kind, 1, 1_000, 10.0, 1e-12);
        for r in &reports {
            assert!(r.passed, "{kind:?} {} {:?}", r.axiom_id, r.first_witness());
        }
    }
}

#[test]
fn fg_identities_hold_relatively_for_the_hyperbolic_kind() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1_000 {
        let (a, b) = (rng.gen_range(-10.0..=10.0), rng.gen_range(-10.0..=10.0));
        let res = FGKind::Hyperbolic.residuals(a, b);
        let scale = FGKind::Hyperbolic.residual_scales(a, b);
        for (r, s) in res.iter().zip(scale) {
            assert!(r / s <= 1e-14, "a={a} b={b} residual {r:e} at scale {s:e}");
        }
    }
    // Up to |a| = 1 the absolute bound holds as well.
    for r in check_fg_identities(FGKind::Hyperbolic, 2, 1_000, 1.0, 1e-12) {
        assert!(r.passed, "{}", r.axiom_id);
    }
}

#[test]
fn geodesic_values() {
    let sphere = SlerpSpace::without_chooser(2);
    let q = sphere.q(&vec![1.0, 0.0, 0.0], &0.5, &vec![0.0, 1.0, 0.0]).unwrap();
    assert!(close_vec(&q, &[FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0], 1e-15));

    let h = HyperbolicSpace::new(1);
    let y = vec![1.0_f64.cosh(), 1.0_f64.sinh()];
    let q = h.q(&vec![1.0, 0.0], &0.5, &y).unwrap();
    assert!(close_vec(&q, &[0.5_f64.cosh(), 0.5_f64.sinh()], 1e-15));
    let (a, b) = (0.3_f64, -1.7_f64);
    let theta = theta_hyperbolic(&[a.cosh(), a.sinh()], &[b.cosh(), b.sinh()]);
    assert!((theta - (b - a).abs()).abs() < 1e-14);

    for space in choosers() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (x, y) = space.sample_pair(&mut rng);
        assert_eq!(space.q(&x, &0.0, &y).unwrap(), x);
    }
    assert!(matches!(
        sphere.q(&vec![0.0, 0.0, 1.0], &0.3, &vec![0.0, 0.0, -1.0]),
        Err(MobiError::Antipodal(_))
    ));
}

#[test]
fn antipodal_branches() {
    let circle = SlerpSpace::new(1, AntipodalChooser::Circle).unwrap();
    let q = circle.q(&vec![1.0, 0.0], &0.5, &vec![-1.0, 0.0]).unwrap();
    assert!(close_vec(&q, &[0.0, 1.0], 1e-15));
    // Starting from the lower half goes clockwise, which is the same path.
    let back = circle.q(&vec![-1.0, 0.0], &0.5, &vec![1.0, 0.0]).unwrap();
    assert!(close_vec(&back, &[0.0, 1.0], 1e-15));

    let pole = SlerpSpace::new(2, AntipodalChooser::S2Pole).unwrap();
    let q = pole.q(&vec![1.0, 0.0, 0.0], &0.5, &vec![-1.0, 0.0, 0.0]).unwrap();
    assert!(close_vec(&q, &[0.0, 0.0, 1.0], 1e-15));
    let q = pole.q(&vec![0.0, 0.0, 1.0], &0.5, &vec![0.0, 0.0, -1.0]).unwrap();
    assert!(close_vec(&q, &[1.0, 0.0, 0.0], 1e-15));

    let eq = SlerpSpace::new(2, AntipodalChooser::S2Equator).unwrap();
    let q = eq.q(&vec![0.0, 0.0, -1.0], &0.5, &vec![0.0, 0.0, 1.0]).unwrap();
    assert!(close_vec(&q, &[0.0, 1.0, 0.0], 1e-15));

    for space in choosers() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..1_000 {
            let x = space.sample(&mut rng);
            let minus: Vec<f64> = x.iter().map(|c| -c).collect();
            let t: f64 = rng.gen_range(0.0..=1.0);
            let go = space.q(&x, &t, &minus).unwrap();
            let back = space.q(&minus, &(1.0 - t), &x).unwrap();
            assert!(close_vec(&go, &back, 1e-12), "{}: {x:?} at {t}", space.name());
        }
    }
}

#[test]
fn chooser_values_and_invariants() {
    assert_eq!(AntipodalChooser::S2Pole.v(&[0.0, 0.0, 1.0]), vec![1.0, 0.0, 0.0]);
    assert_eq!(AntipodalChooser::S2Pole.v(&[0.0, 0.0, -1.0]), vec![1.0, 0.0, 0.0]);
    let x = [0.48, 0.6, 0.64];
    let s = (1.0_f64 - 0.64 * 0.64).sqrt();
    let want = [-0.48 * 0.64 / s, -0.6 * 0.64 / s, (1.0 - 0.64 * 0.64) / s];
    assert!(close_vec(&AntipodalChooser::S2Pole.v(&x), &want, 1e-15));
    assert_eq!(AntipodalChooser::Circle.v(&[1.0, 0.0]), vec![-0.0, 1.0]);

    for chooser in [AntipodalChooser::Circle, AntipodalChooser::S2Pole, AntipodalChooser::S2Equator] {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let check = chooser.check(&mut rng, 10_000);
        assert!(check.holds(), "{chooser:?}: {check:?}");
    }
    let odd = AntipodalChooser::Custom {
        name: "odd".into(),
        ambient: 2,
        v: std::sync::Arc::new(|x: &[f64]| vec![-x[1], x[0]]),
    };
    assert!(!odd.check(&mut ChaCha8Rng::seed_from_u64(5), 100).holds());
    assert!(AntipodalChooser::parse("west").is_err());
    assert!(SlerpSpace::new(3, AntipodalChooser::S2Pole).is_err());
}

#[test]
fn norms_are_preserved() {
    for space in choosers().into_iter().chain([SlerpSpace::hemisphere(3)]) {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..10_000 {
            let (x, y) = space.sample_pair(&mut rng);
            let t: f64 = rng.gen_range(0.0..=1.0);
            let q = space.q(&x, &t, &y).unwrap();
            assert!((dot(&q, &q) - 1.0).abs() <= 1e-9, "{}: {x:?} {y:?} {t}", space.name());
        }
    }
    let h = HyperbolicSpace::new(3);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..10_000 {
        let (x, y) = h.sample_pair(&mut rng);
        let t: f64 = rng.gen_range(0.0..=1.0);
        let q = h.q(&x, &t, &y).unwrap();
        assert!((lorentz(&q, &q) + 1.0).abs() <= 1e-9 && q[0] > 0.0, "{x:?} {y:?} {t}");
    }
}

#[test]
fn angles_scale_along_geodesics() {
    for space in choosers() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1_000 {
            let (x, y) = space.sample_pair(&mut rng);
            let (a, c): (f64, f64) = (rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0));
            let (u, w) = (space.q(&x, &a, &y).unwrap(), space.q(&x, &c, &y).unwrap());
            let got = theta_sphere(&u, &w);
            let want = theta_sphere(&x, &y) * (c - a).abs();
            assert!((got - want).abs() <= 1e-9, "{}: {got} vs {want}", space.name());
        }
    }
    let h = HyperbolicSpace::new(2);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1_000 {
        let (x, y) = h.sample_pair(&mut rng);
        let (a, c): (f64, f64) = (rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0));
        let got = theta_hyperbolic(&h.q(&x, &a, &y).unwrap(), &h.q(&x, &c, &y).unwrap());
        assert!((got - theta_hyperbolic(&x, &y) * (c - a).abs()).abs() <= 1e-9);
    }
}

#[test]
fn geodesic_spaces_satisfy_the_space_laws() {
    for space in choosers() {
        assert_space_laws(&space, 8, 1_000, 1e-6);
    }
    assert_space_laws(&SlerpSpace::hemisphere(2), 8, 1_000, 1e-6);
    assert_space_laws(&HyperbolicSpace::new(2), 8, 1_000, 1e-6);
}

#[test]
fn the_sphere_is_not_affine() {
    let s2 = SlerpSpace::new(2, AntipodalChooser::S2Pole).unwrap();
    let verdict = is_affine(&s2, 9, 1_000, 1e-9);
    assert!(!verdict.affine);
    assert!(verdict.witness.unwrap().dist > 1e-9);
    assert!(!is_affine(&HyperbolicSpace::new(2), 9, 1_000, 1e-9).affine);
}

#[test]
fn midpoints_on_the_sphere_are_not_medial() {
    let s2 = SlerpSpace::new(2, AntipodalChooser::S2Pole).unwrap();
    let n = vec![0.0, 0.0, 1.0];
    let (a, b) = (vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]);
    let m = |x: &Vec<f64>, y: &Vec<f64>| s2.midpoint(x, y).unwrap();
    let an = m(&a, &n);
    assert!((an[2] - FRAC_1_SQRT_2).abs() < 1e-15, "on the 45th parallel");
    let lhs = m(&m(&a, &b), &m(&n, &n));
    let rhs = m(&an, &m(&b, &n));
    assert!((lhs[2] - FRAC_1_SQRT_2).abs() < 1e-15);
    assert!(rhs[2] > FRAC_1_SQRT_2 + 0.05, "north of the parallel: {rhs:?}");

    let reports = check_midpoint_axioms(
        |x: &Vec<f64>, y: &Vec<f64>| s2.midpoint(x, y),
        |rng: &mut ChaCha8Rng| s2.sample(rng),
        |x: &Vec<f64>, y: &Vec<f64>| mobi::coords::euclidean(x, y),
        10,
        1_000,
        1e-9,
    );
    assert!(!find(&reports, "mediality").unwrap().passed);
    assert!(find(&reports, "commutativity").unwrap().passed);
}

#[test]
fn near_coincident_pairs_use_the_series() {
    let s2 = SlerpSpace::without_chooser(2);
    let x = vec![0.0, 0.6, 0.8];
    let y = vec![0.0, 0.6 + 8e-9, (1.0 - (0.6_f64 + 8e-9).powi(2)).sqrt()];
    let q = s2.q(&x, &0.5, &y).unwrap();
    let lin: Vec<f64> = x.iter().zip(&y).map(|(a, b)| 0.5 * (a + b)).collect();
    assert!(close_vec(&q, &lin, 1e-15));
    assert!(theta_sphere(&x, &y) > 0.0 && theta_sphere(&x, &y) < SERIES_THETA);
    assert!((theta_sphere(&[1.0, 0.0], &[-1.0, 1e-12]) - (PI - 1e-12)).abs() < 1e-15);
}

proptest! {
    #[test]
    fn circle_geodesics_rotate_at_constant_speed(phi in 0.0..std::f64::consts::TAU, psi in 0.0..std::f64::consts::TAU, t in 0.0..=1.0f64) {
        let circle = SlerpSpace::new(1, AntipodalChooser::Circle).unwrap();
        let x = vec![phi.cos(), phi.sin()];
        let y = vec![psi.cos(), psi.sin()];
        let q = circle.q(&x, &t, &y).unwrap();
        let th = theta_sphere(&x, &y);
        prop_assert!((theta_sphere(&x, &q) - th * t).abs() <= 1e-9);
    }

    #[test]
    fn hyperbolic_geodesics_stay_on_the_sheet(r in 0.0..3.0f64, s in 0.0..3.0f64, a in 0.0..std::f64::consts::TAU, t in 0.0..=1.0f64) {
        let h = HyperbolicSpace::new(2);
        let x = HyperbolicSpace::point(r, &[1.0, 0.0]);
        let y = HyperbolicSpace::point(s, &[a.cos(), a.sin()]);
        let q = h.q(&x, &t, &y).unwrap();
        prop_assert!(h.contains(&q));
    }
}
