//! Named, parameterised instances for the command line and for whole-catalog
//! checks. Every entry builds a type-erased [`DynSpace`] or [`DynAlgebra`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{
    rational_algebra, real_line_algebra, CanonicalAlgebra, LozengeAlgebra, MobiAlgebra, Timeline,
};
use crate::constructions::{
    alpha_beta_pow, cube_pair, general_f_pair, geometric_mean, harmonic, inv_pair, sq_pair,
    underdamped, DampingSpace, LozengeSpace, NamedFn, ProjectileSpace, TrigControl,
};
use crate::coords::Coords;
use crate::error::{domain, MobiError, Result};
use crate::geodesic::{AntipodalChooser, HyperbolicSpace, SlerpSpace};
use crate::harness::{
    check_algebra_axioms, check_derived_properties, check_space_axioms, check_space_properties,
    is_affine, AffineVerdict, AxiomReport,
};
use crate::space::{EuclideanSpace, MobiSpace};

/// A space with its point type erased to coordinate vectors and its
/// parameters read as real times.
pub trait DynSpace {
    fn name(&self) -> &str;

    /// X1 to X5 followed by the Y properties.
    fn verify(&self, seed: u64, n: usize, tol: f64) -> Vec<AxiomReport>;

    fn affine(&self, seed: u64, n: usize, tol: f64) -> AffineVerdict;

    /// `q(from, t, to)` at each time, as coordinates.
    fn path(&self, from: &[f64], to: &[f64], times: &[f64]) -> Result<Vec<Vec<f64>>>;
}

impl<S> DynSpace for S
where
    S: MobiSpace,
    S::Algebra: Timeline,
{
    fn name(&self) -> &str {
        MobiSpace::name(self)
    }

    fn verify(&self, seed: u64, n: usize, tol: f64) -> Vec<AxiomReport> {
        let mut reports = check_space_axioms(self, seed, n, tol);
        reports.extend(check_space_properties(self, seed, n, tol));
        reports
    }

    fn affine(&self, seed: u64, n: usize, tol: f64) -> AffineVerdict {
        is_affine(self, seed, n, tol)
    }

    fn path(&self, from: &[f64], to: &[f64], times: &[f64]) -> Result<Vec<Vec<f64>>> {
        let read = |c: &[f64]| -> Result<S::Point> {
            let p = S::Point::read_coords(c).ok_or_else(|| {
                let arity = S::Point::ARITY.map_or("a different number of".into(), |n| n.to_string());
                MobiError::Config(format!("{:?} has the wrong arity; expected {arity} coordinates", c))
            })?;
            if self.contains(&p) {
                Ok(p)
            } else {
                Err(domain(MobiSpace::name(self), &c))
            }
        };
        let (x, y) = (read(from)?, read(to)?);
        let alg = self.algebra();
        times.iter().map(|&t| Ok(self.q(&x, &alg.at_time(t), &y)?.coords())).collect()
    }
}

pub trait DynAlgebra {
    fn name(&self) -> &str;

    /// A1 to A8 followed by the derived identities.
    fn verify(&self, seed: u64, n: usize, tol: f64) -> Vec<AxiomReport>;
}

impl<A: MobiAlgebra> DynAlgebra for A {
    fn name(&self) -> &str {
        MobiAlgebra::name(self)
    }

    fn verify(&self, seed: u64, n: usize, tol: f64) -> Vec<AxiomReport> {
        let mut reports = check_algebra_axioms(self, seed, n, tol);
        reports.extend(check_derived_properties(self, seed, n, tol));
        reports
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamKind {
    Number,
    Integer,
    String,
    Numbers,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamSpec {
    pub name: String,
    pub kind: ParamKind,
    pub default: Value,
    pub description: String,
}

fn param(name: &str, kind: ParamKind, default: Value, description: &str) -> ParamSpec {
    ParamSpec { name: name.into(), kind, default, description: description.into() }
}

/// A registry name with parameter values, as given on the command line.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SpaceConfig {
    pub name: String,
    pub params: BTreeMap<String, Value>,
}

impl SpaceConfig {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), params: BTreeMap::new() }
    }

    /// Parses `key=value` pairs. Values are read as JSON, falling back to a
    /// plain string, so `k=[1,2]`, `alpha=0.5` and `chooser=pole` all work.
    pub fn parse(name: &str, pairs: &[String]) -> Result<Self> {
        let mut cfg = Self::new(name);
        for pair in pairs {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| MobiError::Config(format!("expected key=value, got {pair:?}")))?;
            let value = serde_json::from_str(v).unwrap_or_else(|_| Value::String(v.to_string()));
            if cfg.params.insert(k.to_string(), value).is_some() {
                return Err(MobiError::Config(format!("parameter {k:?} given twice")));
            }
        }
        Ok(cfg)
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.params.insert(key.into(), value);
        self
    }
}

/// Parameter values checked against an entry's specs, defaults filled in.
pub struct Params<'a> {
    entry: &'a str,
    values: BTreeMap<String, Value>,
}

impl Params<'_> {
    fn get(&self, key: &str) -> &Value {
        &self.values[key]
    }

    fn bad(&self, key: &str, want: &str) -> MobiError {
        MobiError::Config(format!("{}: parameter {key} must be {want}, got {}", self.entry, self.get(key)))
    }

    pub fn number(&self, key: &str) -> Result<f64> {
        self.get(key).as_f64().ok_or_else(|| self.bad(key, "a number"))
    }

    pub fn integer(&self, key: &str) -> Result<i64> {
        self.get(key).as_i64().ok_or_else(|| self.bad(key, "an integer"))
    }

    pub fn dimension(&self, key: &str) -> Result<usize> {
        match self.integer(key)? {
            n @ 1..=64 => Ok(n as usize),
            _ => Err(self.bad(key, "an integer in 1..=64")),
        }
    }

    pub fn string(&self, key: &str) -> Result<&str> {
        self.get(key).as_str().ok_or_else(|| self.bad(key, "a string"))
    }

    /// A JSON array of numbers, or a single number read as a 1-vector.
    pub fn numbers(&self, key: &str) -> Result<Vec<f64>> {
        match self.get(key) {
            Value::Number(n) => Ok(vec![n.as_f64().unwrap_or(f64::NAN)]),
            Value::Array(xs) if !xs.is_empty() => xs
                .iter()
                .map(|x| x.as_f64().ok_or_else(|| self.bad(key, "an array of numbers")))
                .collect(),
            _ => Err(self.bad(key, "an array of numbers")),
        }
    }
}

type Builder = fn(&Params) -> Result<Box<dyn DynSpace>>;

pub struct SpaceEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub params: Vec<ParamSpec>,
    /// Tolerance the entry's laws are expected to meet.
    pub default_tol: f64,
    /// Negative controls are registered to fail.
    pub control: bool,
    build: Builder,
}

impl SpaceEntry {
    fn new(name: &'static str, description: &'static str, build: Builder) -> Self {
        Self { name, description, params: Vec::new(), default_tol: 1e-9, control: false, build }
    }

    fn param(mut self, spec: ParamSpec) -> Self {
        self.params.push(spec);
        self
    }

    fn tol(mut self, tol: f64) -> Self {
        self.default_tol = tol;
        self
    }

    fn control(mut self) -> Self {
        self.control = true;
        self
    }

    /// Validates parameters against the specs and builds the space.
    pub fn build(&self, given: &BTreeMap<String, Value>) -> Result<Box<dyn DynSpace>> {
        for key in given.keys() {
            if !self.params.iter().any(|p| &p.name == key) {
                let known: Vec<_> = self.params.iter().map(|p| p.name.as_str()).collect();
                return Err(MobiError::Config(format!(
                    "{}: unknown parameter {key:?} (accepted: {known:?})",
                    self.name
                )));
            }
        }
        let values = self
            .params
            .iter()
            .map(|p| (p.name.clone(), given.get(&p.name).unwrap_or(&p.default).clone()))
            .collect();
        (self.build)(&Params { entry: self.name, values })
    }
}

fn boxed<S: DynSpace + 'static>(s: S) -> Result<Box<dyn DynSpace>> {
    Ok(Box::new(s))
}

fn algebra_param() -> ParamSpec {
    param("algebra", ParamKind::String, "canonical".into(), "canonical or real-line")
}

fn with_real_algebra<F, G>(p: &Params, canonical: F, real: G) -> Result<Box<dyn DynSpace>>
where
    F: FnOnce() -> Result<Box<dyn DynSpace>>,
    G: FnOnce() -> Result<Box<dyn DynSpace>>,
{
    match p.string("algebra")? {
        "canonical" => canonical(),
        "real-line" => real(),
        other => Err(MobiError::Config(format!("algebra must be canonical or real-line, got {other:?}"))),
    }
}

/// Every registered space, sorted by name.
pub fn spaces() -> Vec<SpaceEntry> {
    use ParamKind::*;
    let mut all = vec![
        SpaceEntry::new("alpha-beta-pow", "pair space h(α, y, β) = α β^y over ℝ⁺ × [0, ∞)", |_| {
            boxed(alpha_beta_pow())
        }),
        SpaceEntry::new("canonical-rn", "ℝⁿ with q(x, a, y) = (1 - a) x + a y", |p| {
            let n = p.dimension("n")?;
            with_real_algebra(
                p,
                || boxed(EuclideanSpace::new(CanonicalAlgebra, n)),
                || boxed(EuclideanSpace::new(real_line_algebra(), n)),
            )
        })
        .param(param("n", Integer, 1.into(), "dimension"))
        .param(algebra_param()),
        SpaceEntry::new("cube-pair", "pair space with f(t) = t³, g = 1", |_| boxed(cube_pair())),
        SpaceEntry::new("damping-critical", "critically damped oscillator, f = e^{αt}, g = t e^{αt}", |p| {
            boxed(DampingSpace::critical(p.number("alpha")?)?)
        })
        .param(param("alpha", Number, 1.0.into(), "damping exponent")),
        SpaceEntry::new("damping-over", "overdamped oscillator, f = e^{αt}, g = e^{βt}", |p| {
            boxed(DampingSpace::overdamped(p.number("alpha")?, p.number("beta")?)?)
        })
        .param(param("alpha", Number, 1.0.into(), "first exponent"))
        .param(param("beta", Number, 2.0.into(), "second exponent, different from alpha")),
        SpaceEntry::new(
            "damping-under",
            "underdamped oscillator on times [0, π/|β|), f = e^{αt} sin βt, g = e^{αt} cos βt",
            |p| boxed(underdamped(p.number("alpha")?, p.number("beta")?)?),
        )
        .param(param("alpha", Number, (-0.3).into(), "decay exponent"))
        .param(param("beta", Number, 2.0.into(), "angular frequency, nonzero")),
        SpaceEntry::new("general-f-pair", "pair space with g = 1 and f chosen by name", |p| {
            boxed(general_f_pair(p.string("f")?.parse::<NamedFn>()?))
        })
        .param(param("f", String, "square".into(), "identity, square, cube, inverse, exp, log or atan")),
        SpaceEntry::new("geometric-mean", "ℝ⁺ with q(x, a, y) = x^(1-a) y^a", |_| boxed(geometric_mean())),
        SpaceEntry::new("harmonic", "ℝ⁺ with q(x, a, y) = xy / (ax + (1-a)y)", |_| boxed(harmonic())),
        SpaceEntry::new("hyperbolic-hn", "geodesics on the hyperboloid model of Hⁿ", |p| {
            boxed(HyperbolicSpace::new(p.dimension("n")?))
        })
        .param(param("n", Integer, 2.into(), "dimension of Hⁿ"))
        .tol(1e-6),
        SpaceEntry::new("inv-pair", "pair space with f(t) = 1/t, g = 1", |_| boxed(inv_pair())),
        SpaceEntry::new("lozenge-space", "[0, 1] over the lozenge algebra", |p| {
            let h = p.integer("h")?;
            boxed(LozengeSpace::new(i32::try_from(h).unwrap_or(0))?)
        })
        .param(param("h", Integer, 1.into(), "1 or -1")),
        SpaceEntry::new("negative-cos", "x cos t + y sin t (not a mobi space)", |_| boxed(TrigControl::Cos))
            .control(),
        SpaceEntry::new("negative-cos-scaled", "x cos(tπ/2) + y sin(tπ/2) (not a mobi space)", |_| {
            boxed(TrigControl::CosScaled)
        })
        .control(),
        SpaceEntry::new("negative-cos2", "x cos²(tπ/2) + y sin²(tπ/2) (not a mobi space)", |_| {
            boxed(TrigControl::CosSquared)
        })
        .control(),
        SpaceEntry::new("projectile", "constant acceleration on ℝⁿ × time", |p| {
            let k = p.numbers("k")?;
            with_real_algebra(
                p,
                || boxed(ProjectileSpace::new(CanonicalAlgebra, k.clone())),
                || boxed(ProjectileSpace::new(real_line_algebra(), k.clone()).with_sample_box(2.0, 2.0)),
            )
        })
        .param(param("k", Numbers, Value::from(vec![1.0]), "half-acceleration per coordinate"))
        .param(algebra_param()),
        SpaceEntry::new("slerp-hemisphere", "Slerp on the open hemisphere x₁ > 0 of Sⁿ", |p| {
            boxed(SlerpSpace::hemisphere(p.dimension("n")?))
        })
        .param(param("n", Integer, 2.into(), "dimension of Sⁿ"))
        .tol(1e-6),
        SpaceEntry::new("slerp-s1", "Slerp on the circle, antipodes anticlockwise from the top", |_| {
            boxed(SlerpSpace::new(1, AntipodalChooser::Circle)?)
        })
        .tol(1e-6),
        SpaceEntry::new("slerp-s2", "Slerp on S² with a selectable antipodal chooser", |p| {
            boxed(SlerpSpace::new(2, AntipodalChooser::parse(p.string("chooser")?)?)?)
        })
        .param(param("chooser", String, "pole".into(), "pole or equator"))
        .tol(1e-6),
        SpaceEntry::new("slerp-s2-equator", "Slerp on S², antipodes along the parallel band", |_| {
            boxed(SlerpSpace::new(2, AntipodalChooser::S2Equator)?)
        })
        .tol(1e-6),
        SpaceEntry::new("slerp-s2-pole", "Slerp on S², antipodes through the north pole", |_| {
            boxed(SlerpSpace::new(2, AntipodalChooser::S2Pole)?)
        })
        .tol(1e-6),
        SpaceEntry::new("sq-pair", "pair space with f(t) = t², g = 1", |_| boxed(sq_pair())),
    ];
    all.sort_by_key(|e| e.name);
    all
}

pub struct AlgebraEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub build: fn() -> Box<dyn DynAlgebra>,
}

/// Every registered algebra, sorted by name.
pub fn algebras() -> Vec<AlgebraEntry> {
    vec![
        AlgebraEntry {
            name: "canonical",
            description: "[0, 1] with p(a, b, c) = (1 - b) a + b c",
            build: || Box::new(CanonicalAlgebra),
        },
        AlgebraEntry {
            name: "lozenge",
            description: "the lozenge |t₂| ≤ t₁ ≤ 1 - |t₂| in ℝ²",
            build: || Box::new(LozengeAlgebra),
        },
        AlgebraEntry {
            name: "rational",
            description: "ℚ with p(a, b, c) = a + bc - ba, exact",
            build: || Box::new(rational_algebra()),
        },
        AlgebraEntry {
            name: "real-line",
            description: "ℝ with p(a, b, c) = a + bc - ba",
            build: || Box::new(real_line_algebra()),
        },
    ]
}

pub fn space_entry(name: &str) -> Result<SpaceEntry> {
    spaces().into_iter().find(|e| e.name == name).ok_or_else(|| {
        MobiError::Config(format!("unknown space {name:?}; run `mobi list` for the catalog"))
    })
}

pub fn build_space(cfg: &SpaceConfig) -> Result<Box<dyn DynSpace>> {
    space_entry(&cfg.name)?.build(&cfg.params)
}

pub fn build_algebra(cfg: &SpaceConfig) -> Result<Box<dyn DynAlgebra>> {
    if !cfg.params.is_empty() {
        return Err(MobiError::Config(format!("algebra {} takes no parameters", cfg.name)));
    }
    algebras()
        .into_iter()
        .find(|e| e.name == cfg.name)
        .map(|e| (e.build)())
        .ok_or_else(|| MobiError::Config(format!("unknown algebra {:?}", cfg.name)))
}
