use serde::Serialize;

use crate::algebra::{draw, MobiAlgebra};
use crate::error::Result;
use crate::space::{Elem, MobiSpace};

use super::{inputs, show, stream, AxiomReport, Tally, SEPARATION_FLOOR};

/// Samples X1 to X5. X4 is checked through its contrapositive.
///
/// Two in every ten X5 draws pin `(a, c)` to `(0, 1)` or `(1, 0)`, the
/// parameter choices that expose a chooser-based `q` at antipodal pairs.
pub fn check_space_axioms<S: MobiSpace>(
    space: &S,
    seed: u64,
    n: usize,
    tol: f64,
) -> Vec<AxiomReport> {
    let alg = space.algebra();
    let d = |x: &S::Point, y: &S::Point| space.dist(x, y);
    let (zero, half, one) = (alg.zero(), alg.half(), alg.one());
    let mut out = Vec::with_capacity(5);

    let mut rng = stream(seed, 301);
    let mut t = Tally::new("X1", "q(x,0,y) = x");
    for _ in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        t.equal_results(inputs!(&x, &y), space.q(&x, &zero, &y), Ok(x.clone()), d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 302);
    let mut t = Tally::new("X2", "q(x,1,y) = y");
    for _ in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        t.equal_results(inputs!(&x, &y), space.q(&x, &one, &y), Ok(y.clone()), d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 303);
    let mut t = Tally::new("X3", "q(x,a,x) = x");
    for _ in 0..n {
        let x = space.sample(&mut rng);
        let a = draw(alg, &mut rng);
        t.equal_results(inputs!(&x, &a), space.q(&x, &a, &x), Ok(x.clone()), d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 304);
    let mut t = Tally::new("X4", "q(x,1/2,y1) = q(x,1/2,y2) implies y1 = y2");
    for _ in 0..n {
        let (x, y1) = space.sample_pair(&mut rng);
        let y2 = space.sample(&mut rng);
        if d(&y1, &y2) < SEPARATION_FLOOR {
            continue;
        }
        let (l, r) = (space.q(&x, &half, &y1), space.q(&x, &half, &y2));
        t.separated_results(inputs!(&x, &y1, &y2), l, r, d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 305);
    let mut t = Tally::new("X5", "q(q(x,a,y),b,q(x,c,y)) = q(x,p(a,b,c),y)");
    for i in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        let b = draw(alg, &mut rng);
        let (a, c) = match i % 10 {
            0 => (zero.clone(), one.clone()),
            1 => (one.clone(), zero.clone()),
            _ => (draw(alg, &mut rng), draw(alg, &mut rng)),
        };
        let lhs = space.q(&x, &a, &y).and_then(|u| space.q(&u, &b, &space.q(&x, &c, &y)?));
        let rhs = space.q(&x, &alg.p(&a, &b, &c), &y);
        t.equal_results(inputs!(&x, &y, &a, &b, &c), lhs, rhs, d, tol);
    }
    out.push(t.finish());

    out
}

/// Samples the ten consequences Y1 to Y10 of the space axioms.
///
/// Y9 and Y10 are implications whose hypotheses generic draws almost never
/// meet. Y9 is fed `a = 1/2` and coincident endpoints; Y10 is fed `a = b`
/// and coincident endpoints. Generic draws that happen to meet a hypothesis
/// within `tol` are checked too.
pub fn check_space_properties<S: MobiSpace>(
    space: &S,
    seed: u64,
    n: usize,
    tol: f64,
) -> Vec<AxiomReport> {
    let alg = space.algebra();
    let d = |x: &S::Point, y: &S::Point| space.dist(x, y);
    let half = alg.half();
    let q = |x: &S::Point, a: &Elem<S>, y: &S::Point| space.q(x, a, y);
    let mut out = Vec::with_capacity(10);

    let mut rng = stream(seed, 401);
    let mut t = Tally::new("Y1", "q(y,a,x) = q(x,complement(a),y)");
    for _ in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        let a = draw(alg, &mut rng);
        let (l, r) = (q(&y, &a, &x), q(&x, &alg.complement(&a), &y));
        t.equal_results(inputs!(&x, &y, &a), l, r, d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 402);
    let mut t = Tally::new("Y2", "q(y,1/2,x) = q(x,1/2,y)");
    for _ in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        t.equal_results(inputs!(&x, &y), q(&y, &half, &x), q(&x, &half, &y), d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 403);
    let mut t = Tally::new("Y3", "q(x,a,q(x,b,y)) = q(x,a.b,y)");
    for _ in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        let (a, b) = (draw(alg, &mut rng), draw(alg, &mut rng));
        let l = q(&x, &b, &y).and_then(|u| q(&x, &a, &u));
        let r = q(&x, &alg.product(&a, &b), &y);
        t.equal_results(inputs!(&x, &y, &a, &b), l, r, d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 404);
    let mut t = Tally::new("Y4", "q(q(x,a,y),b,y) = q(x,a o b,y)");
    for _ in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        let (a, b) = (draw(alg, &mut rng), draw(alg, &mut rng));
        let l = q(&x, &a, &y).and_then(|u| q(&u, &b, &y));
        let r = q(&x, &alg.circ(&a, &b), &y);
        t.equal_results(inputs!(&x, &y, &a, &b), l, r, d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 405);
    let mut t = Tally::new("Y5", "q(q(x,a,y),1/2,q(x,b,y)) = q(x,a (+) b,y)");
    for _ in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        let (a, b) = (draw(alg, &mut rng), draw(alg, &mut rng));
        let l = q(&x, &a, &y).and_then(|u| q(&u, &half, &q(&x, &b, &y)?));
        let r = q(&x, &alg.oplus(&a, &b), &y);
        t.equal_results(inputs!(&x, &y, &a, &b), l, r, d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 406);
    let mut t = Tally::new("Y6", "q(x,1/2,q(x,a,y)) = q(x,a,q(x,1/2,y))");
    for _ in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        let a = draw(alg, &mut rng);
        let l = q(&x, &a, &y).and_then(|u| q(&x, &half, &u));
        let r = q(&x, &half, &y).and_then(|u| q(&x, &a, &u));
        t.equal_results(inputs!(&x, &y, &a), l, r, d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 407);
    let mut t = Tally::new("Y7", "q(q(x,a,y),1/2,q(y,a,x)) = q(x,1/2,y)");
    for _ in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        let a = draw(alg, &mut rng);
        let l = q(&x, &a, &y).and_then(|u| q(&u, &half, &q(&y, &a, &x)?));
        t.equal_results(inputs!(&x, &y, &a), l, q(&x, &half, &y), d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 408);
    let mut t = Tally::new(
        "Y8",
        "q(q(q(x,a,y),b,x),1/2,q(x,b,q(x,c,y))) = q(x,1/2,q(x,p(a,b,c),y))",
    );
    for _ in 0..n {
        let (x, y) = space.sample_pair(&mut rng);
        let (a, b, c) = (draw(alg, &mut rng), draw(alg, &mut rng), draw(alg, &mut rng));
        let l = (|| {
            let left = q(&q(&x, &a, &y)?, &b, &x)?;
            let right = q(&x, &b, &q(&x, &c, &y)?)?;
            q(&left, &half, &right)
        })();
        let r = q(&x, &alg.p(&a, &b, &c), &y).and_then(|u| q(&x, &half, &u));
        t.equal_results(inputs!(&x, &y, &a, &b, &c), l, r, d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 409);
    let mut t = Tally::new("Y9", "q(x,a,y) = q(y,a,x) implies q(x,a,y) = q(x,1/2,y)");
    for i in 0..n {
        let (mut x, y) = space.sample_pair(&mut rng);
        let mut a = draw(alg, &mut rng);
        match i % 3 {
            0 => a = half.clone(),
            1 => x = y.clone(),
            _ => {}
        }
        let (Ok(u), Ok(v)) = (q(&x, &a, &y), q(&y, &a, &x)) else {
            continue;
        };
        if d(&u, &v) > tol {
            continue;
        }
        t.equal_results(inputs!(&x, &y, &a), Ok(u), q(&x, &half, &y), d, tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 410);
    let mut t = Tally::new(
        "Y10",
        "q(x,a,y) = q(x,b,y) implies q(x,p(a,s,b),y) = q(x,a,y) for all s",
    );
    for i in 0..n {
        let (mut x, y) = space.sample_pair(&mut rng);
        let a = draw(alg, &mut rng);
        let mut b = draw(alg, &mut rng);
        let s = draw(alg, &mut rng);
        match i % 3 {
            0 => b = a.clone(),
            1 => x = y.clone(),
            _ => {}
        }
        let (Ok(u), Ok(v)) = (q(&x, &a, &y), q(&x, &b, &y)) else {
            continue;
        };
        if d(&u, &v) > tol {
            continue;
        }
        t.equal_results(inputs!(&x, &y, &a, &b, &s), q(&x, &alg.p(&a, &s, &b), &y), Ok(u), d, tol);
    }
    out.push(t.finish());

    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AffineWitness {
    pub x1: String,
    pub y1: String,
    pub x2: String,
    pub y2: String,
    pub a: String,
    pub lhs: String,
    pub rhs: String,
    pub dist: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AffineVerdict {
    pub affine: bool,
    pub samples_tested: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<AffineWitness>,
}

/// Both sides of the interchange condition:
/// `q(q(x1,a,y1),1/2,q(x2,a,y2))` and `q(q(x1,1/2,x2),a,q(y1,1/2,y2))`.
pub fn affine_sides<S: MobiSpace>(
    space: &S,
    x1: &S::Point,
    y1: &S::Point,
    x2: &S::Point,
    y2: &S::Point,
    a: &Elem<S>,
) -> Result<(S::Point, S::Point)> {
    interchange_sides(space, x1, y1, x2, y2, a, &space.algebra().half())
}

/// The interchange condition with a general outer parameter `b`:
/// `q(q(x1,a,y1),b,q(x2,a,y2))` and `q(q(x1,b,x2),a,q(y1,b,y2))`.
pub fn interchange_sides<S: MobiSpace>(
    space: &S,
    x1: &S::Point,
    y1: &S::Point,
    x2: &S::Point,
    y2: &S::Point,
    a: &Elem<S>,
    b: &Elem<S>,
) -> Result<(S::Point, S::Point)> {
    let lhs = space.q(&space.q(x1, a, y1)?, b, &space.q(x2, a, y2)?)?;
    let rhs = space.q(&space.q(x1, b, x2)?, a, &space.q(y1, b, y2)?)?;
    Ok((lhs, rhs))
}

/// Samples the interchange condition and stops at the first violation.
pub fn is_affine<S: MobiSpace>(space: &S, seed: u64, n: usize, tol: f64) -> AffineVerdict {
    let mut rng = stream(seed, 501);
    for i in 0..n {
        let (x1, y1) = space.sample_pair(&mut rng);
        let (x2, y2) = space.sample_pair(&mut rng);
        let a = draw(space.algebra(), &mut rng);
        let (lhs, rhs, dist) = match affine_sides(space, &x1, &y1, &x2, &y2, &a) {
            Ok((l, r)) => {
                let dist = space.dist(&l, &r);
                (show(&l), show(&r), dist)
            }
            Err(e) => (format!("error: {e}"), String::new(), f64::INFINITY),
        };
        if !(dist <= tol) {
            return AffineVerdict {
                affine: false,
                samples_tested: i + 1,
                witness: Some(AffineWitness {
                    x1: show(&x1),
                    y1: show(&y1),
                    x2: show(&x2),
                    y2: show(&y2),
                    a: show(&a),
                    lhs,
                    rhs,
                    dist: if dist.is_nan() { f64::INFINITY } else { dist },
                }),
            };
        }
    }
    AffineVerdict { affine: true, samples_tested: n, witness: None }
}
