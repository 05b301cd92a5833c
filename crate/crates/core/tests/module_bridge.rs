use mobi::algebra::{real_line_algebra, AlgebraRing, MobiAlgebra, RealField, RingWithHalf};
use mobi::constructions::{sq_pair, ProjectileSpace};
use mobi::harness::{all_passed, check_space_axioms, is_affine, AxiomReport};
use mobi::module_bridge::*;
use mobi::space::{EuclideanSpace, LineSpace, Interval, MobiSpace};
use mobi::MobiError;
use proptest::prelude::*;

fn assert_all(reports: &[AxiomReport]) {
    let bad: Vec<_> = reports.iter().filter(|r| !r.passed).map(|r| (&r.axiom_id, r.first_witness())).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn modules_satisfy_their_laws() {
    assert_all(&check_module_laws(&EuclideanModule::new(RealField, 3), 1, 1_000, 1e-12));
    assert_all(&check_module_laws(&ProjectileModule::new(RealField, vec![1.0, -4.9]), 1, 1_000, 1e-12));
    assert_all(&check_module_laws(&TrivialModule(RealField), 1, 100, 0.0));
}

#[test]
fn module_spaces_are_affine_mobi_spaces() {
    let spaces = (
        ModuleSpace::new(EuclideanModule::new(RealField, 2)).unwrap(),
        ModuleSpace::new(ProjectileModule::new(RealField, vec![1.0])).unwrap(),
        ModuleSpace::new(TrivialModule(RealField)).unwrap(),
    );
    // Real-line scalars reach 10 in the samples, so projectile values reach 1e4
    // and the absolute bound is loosened accordingly.
    assert_all(&check_space_axioms(&spaces.0, 2, 1_000, 1e-9));
    assert!(is_affine(&spaces.0, 2, 1_000, 1e-9).affine);
    assert!(is_affine(&spaces.1, 2, 1_000, 1e-6).affine);
    assert_all(&check_space_axioms(&spaces.2, 2, 100, 0.0));
    assert!(is_affine(&spaces.2, 2, 100, 0.0).affine);
}

#[test]
fn euclidean_module_gives_the_canonical_space() {
    let space = ModuleSpace::new(EuclideanModule::new(RealField, 2)).unwrap();
    let canon = EuclideanSpace::new(real_line_algebra(), 2);
    let (x, y) = (vec![1.0, -2.0], vec![4.0, 6.0]);
    for a in [0.0, 0.25, 0.5, 1.0, 3.0, -2.0] {
        assert!(relative_dist(&space.q(&x, &a, &y).unwrap(), &canon.q(&x, &a, &y).unwrap()) < 1e-15);
    }
}

#[test]
fn projectile_module_space_matches_the_projectile_space() {
    let from_module = ModuleSpace::new(ProjectileModule::new(RealField, vec![1.0, 2.0])).unwrap();
    let direct = ProjectileSpace::new(real_line_algebra(), vec![1.0, 2.0]);
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
    for _ in 0..1_000 {
        let (u, v) = direct.sample_pair(&mut rng);
        let a = real_line_algebra().sample(&mut rng);
        let l = from_module.q(&u, &a, &v).unwrap();
        let r = direct.q(&u, &a, &v).unwrap();
        assert!(relative_dist(&l, &r) <= 1e-12, "{l:?} vs {r:?}");
    }
}

#[test]
fn recovered_projectile_module_has_the_twisted_operations() {
    let k = 1.5;
    let space = ProjectileSpace::new(real_line_algebra(), vec![k]);
    let m = SpaceModule::new(space, (vec![0.0], 0.0), 4, 1_000, 1e-9).unwrap();
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(4);
    for _ in 0..1_000 {
        let (u, v) = (m.sample(&mut rng), m.sample(&mut rng));
        let a = m.ring().sample(&mut rng);
        let ((x, s), (y, t)) = (u.clone(), v.clone());
        let sum = m.add(&u, &v).unwrap();
        let want = (vec![x[0] + y[0] - 2.0 * k * s * t], s + t);
        assert!(relative_dist(&sum, &want) <= 1e-12, "{sum:?} vs {want:?}");
        let scaled = m.act(&a, &u).unwrap();
        let want = (vec![a * x[0] + k * a * (1.0 - a) * s * s], a * s);
        assert!(relative_dist(&scaled, &want) <= 1e-12, "{scaled:?} vs {want:?}");
    }
    assert_all(&check_module_laws(&m, 5, 1_000, 1e-12));
}

#[test]
fn shifted_basepoint_moves_the_identity() {
    let line = LineSpace::new("real", real_line_algebra(), Interval::REAL);
    let m = SpaceModule::new(line, 1.0, 6, 1_000, 1e-9).unwrap();
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(6);
    for _ in 0..1_000 {
        let (x, y) = (m.sample(&mut rng), m.sample(&mut rng));
        let sum = m.add(&x, &y).unwrap();
        assert!((sum - (x + y - 1.0)).abs() <= 1e-12 * (1.0 + sum.abs()));
    }
    assert_eq!(m.identity(), 1.0);
    assert_all(&check_module_laws(&m, 6, 1_000, 1e-12));
}

#[test]
fn round_trips_are_identities() {
    for report in [
        roundtrip_module(&EuclideanModule::new(RealField, 3), 7, 1_000).unwrap(),
        roundtrip_module(&ProjectileModule::new(RealField, vec![1.0]), 7, 1_000).unwrap(),
    ] {
        assert!(report.holds(1e-12), "{report:?}");
    }
    let line = LineSpace::new("real", real_line_algebra(), Interval::REAL);
    let projectile = ProjectileSpace::new(real_line_algebra(), vec![2.0]);
    assert!(roundtrip_space(&line, 0.0, 8, 1_000, 1e-9).unwrap().holds(1e-12));
    let r = roundtrip_space(&projectile, (vec![0.0], 0.0), 8, 1_000, 1e-9).unwrap();
    assert!(r.holds(1e-12), "{r:?}");
}

/// Wraps a module and perturbs its action, to make sure round trips notice.
#[derive(Debug, Clone)]
struct Corrupted(EuclideanModule<RealField>);

impl ModuleOverRing for Corrupted {
    type Ring = RealField;
    type Elem = Vec<f64>;
    fn name(&self) -> &str {
        "corrupted"
    }
    fn ring(&self) -> &RealField {
        self.0.ring()
    }
    fn identity(&self) -> Vec<f64> {
        self.0.identity()
    }
    fn add(&self, x: &Vec<f64>, y: &Vec<f64>) -> mobi::Result<Vec<f64>> {
        self.0.add(x, y)
    }
    fn act(&self, a: &f64, x: &Vec<f64>) -> mobi::Result<Vec<f64>> {
        Ok(x.iter().map(|v| a * v + a * (1.0 - a)).collect())
    }
    fn neg(&self, x: &Vec<f64>) -> mobi::Result<Vec<f64>> {
        self.0.neg(x)
    }
    fn sample<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.0.sample(rng)
    }
}

#[test]
fn corrupted_action_breaks_the_round_trip() {
    let report = roundtrip_module(&Corrupted(EuclideanModule::new(RealField, 2)), 9, 1_000).unwrap();
    assert!(!report.holds(1e-12));
    assert!(report.worst.is_some());
    assert!(!all_passed(&check_module_laws(&Corrupted(EuclideanModule::new(RealField, 2)), 9, 1_000, 1e-12)));
}

#[test]
fn non_affine_spaces_are_refused() {
    // The square pair lives over the unit interval, which has no 2; build it
    // again over the real line to exercise the affineness refusal.
    let err = SpaceModule::new(sq_pair_over_reals(), (0.0, 1.0), 10, 1_000, 1e-9).unwrap_err();
    assert!(matches!(err, MobiError::NotAffine(_)), "{err}");
    assert!(roundtrip_space(&sq_pair_over_reals(), (0.0, 1.0), 10, 1_000, 1e-9).is_err());

    let forced = SpaceModule::assume_affine(sq_pair_over_reals(), (0.0, 1.0)).unwrap();
    let laws = check_module_laws(&forced, 10, 1_000, 1e-9);
    assert!(!mobi::harness::find(&laws, "M-assoc").unwrap().passed);

    assert_eq!(
        SpaceModule::assume_affine(sq_pair(), (0.0, 1.0)).unwrap_err(),
        MobiError::MissingTwo("canonical".into())
    );
}

fn sq_pair_over_reals() -> impl MobiSpace<Algebra = mobi::algebra::RingDerivedAlgebra<RealField>, Point = (f64, f64)> + Clone + std::fmt::Debug {
    use mobi::constructions::{LinearFamily, PairSpace};
    PairSpace::new(
        "sq-pair-real",
        LinearFamily::new(|t: &f64| t * t, |_: &f64| 1.0),
        LineSpace::new("x", real_line_algebra(), Interval::REAL),
        LineSpace::new("y", real_line_algebra(), Interval::REAL).with_sample_box(0.5, 3.0),
    )
}

#[test]
fn projectile_homomorphism() {
    let f = ProjectileHom::new(vec![1.0]);
    assert_eq!(f.apply(&(vec![0.0], 0.0)), vec![0.0, 0.0]);
    assert_eq!(f.apply(&(vec![2.0], 3.0)), vec![8.0, 3.0]);
    assert_all(&f.check(11, 1_000, 1e-9));
    assert_all(&ProjectileHom::new(vec![0.5, -3.0]).check(11, 1_000, 1e-9));
}

#[test]
fn algebra_ring_of_the_real_line_is_the_field() {
    let ring = AlgebraRing::new(real_line_algebra()).unwrap();
    assert_eq!(ring.add(&2.5, &-4.0), -1.5);
    assert_eq!(ring.mul(&2.5, &-4.0), -10.0);
}

proptest! {
    #[test]
    fn euclidean_recovery_is_exact_on_small_integers(x in -50i32..50, y in -50i32..50, a in -8i32..8) {
        let line = LineSpace::new("real", real_line_algebra(), Interval::REAL);
        let m = SpaceModule::assume_affine(line, 0.0).unwrap();
        prop_assert_eq!(m.add(&(x as f64), &(y as f64)).unwrap(), (x + y) as f64);
        prop_assert_eq!(m.act(&(a as f64), &(x as f64)).unwrap(), (a * x) as f64);
        prop_assert_eq!(m.neg(&(x as f64)).unwrap(), -(x as f64));
    }
}
