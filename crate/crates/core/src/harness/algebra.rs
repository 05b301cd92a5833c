use crate::algebra::{draw, MobiAlgebra};

use super::{inputs, stream, AxiomReport, Tally, SEPARATION_FLOOR};

/// Samples every mobi algebra axiom `n` times.
pub fn check_algebra_axioms<A: MobiAlgebra>(
    alg: &A,
    seed: u64,
    n: usize,
    tol: f64,
) -> Vec<AxiomReport> {
    let d = |x: &A::Elem, y: &A::Elem| alg.dist(x, y);
    let (zero, half, one) = (alg.zero(), alg.half(), alg.one());
    let mut out = Vec::with_capacity(8);

    let mut t = Tally::new("A1", "p(1,1/2,0) = 1/2");
    let lhs = alg.p(&one, &half, &zero);
    t.equal(inputs!(&one, &half, &zero), &lhs, &half, d(&lhs, &half), tol);
    out.push(t.finish());

    let mut rng = stream(seed, 2);
    let mut t = Tally::new("A2", "p(0,a,1) = a");
    for _ in 0..n {
        let a = draw(alg, &mut rng);
        let lhs = alg.p(&zero, &a, &one);
        t.equal(inputs!(&a), &lhs, &a, d(&lhs, &a), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 3);
    let mut t = Tally::new("A3", "p(a,b,a) = a");
    for _ in 0..n {
        let (a, b) = (draw(alg, &mut rng), draw(alg, &mut rng));
        let lhs = alg.p(&a, &b, &a);
        t.equal(inputs!(&a, &b), &lhs, &a, d(&lhs, &a), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 4);
    let mut t = Tally::new("A4", "p(a,0,b) = a");
    for _ in 0..n {
        let (a, b) = (draw(alg, &mut rng), draw(alg, &mut rng));
        let lhs = alg.p(&a, &zero, &b);
        t.equal(inputs!(&a, &b), &lhs, &a, d(&lhs, &a), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 5);
    let mut t = Tally::new("A5", "p(a,1,b) = b");
    for _ in 0..n {
        let (a, b) = (draw(alg, &mut rng), draw(alg, &mut rng));
        let lhs = alg.p(&a, &one, &b);
        t.equal(inputs!(&a, &b), &lhs, &b, d(&lhs, &b), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 6);
    let mut t = Tally::new("A6", "p(a,1/2,b1) = p(a,1/2,b2) implies b1 = b2");
    for _ in 0..n {
        let a = draw(alg, &mut rng);
        let (b1, b2) = (draw(alg, &mut rng), draw(alg, &mut rng));
        if d(&b1, &b2) < SEPARATION_FLOOR {
            continue;
        }
        let (l, r) = (alg.p(&a, &half, &b1), alg.p(&a, &half, &b2));
        t.separated(inputs!(&a, &b1, &b2), &l, &r, d(&l, &r), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 7);
    let mut t = Tally::new("A7", "p(a,p(c1,c2,c3),b) = p(p(a,c1,b),c2,p(a,c3,b))");
    for _ in 0..n {
        let a = draw(alg, &mut rng);
        let b = draw(alg, &mut rng);
        let c1 = draw(alg, &mut rng);
        let c2 = draw(alg, &mut rng);
        let c3 = draw(alg, &mut rng);
        let lhs = alg.p(&a, &alg.p(&c1, &c2, &c3), &b);
        let rhs = alg.p(&alg.p(&a, &c1, &b), &c2, &alg.p(&a, &c3, &b));
        t.equal(inputs!(&a, &b, &c1, &c2, &c3), &lhs, &rhs, d(&lhs, &rhs), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 8);
    let mut t = Tally::new(
        "A8",
        "p(p(a1,c,b1),1/2,p(a2,c,b2)) = p(p(a1,1/2,a2),c,p(b1,1/2,b2))",
    );
    for _ in 0..n {
        let a1 = draw(alg, &mut rng);
        let a2 = draw(alg, &mut rng);
        let b1 = draw(alg, &mut rng);
        let b2 = draw(alg, &mut rng);
        let c = draw(alg, &mut rng);
        let lhs = alg.p(&alg.p(&a1, &c, &b1), &half, &alg.p(&a2, &c, &b2));
        let rhs = alg.p(&alg.p(&a1, &half, &a2), &c, &alg.p(&b1, &half, &b2));
        t.equal(inputs!(&a1, &a2, &b1, &b2, &c), &lhs, &rhs, d(&lhs, &rhs), tol);
    }
    out.push(t.finish());

    out
}

/// Samples the nine standard identities that follow from the axioms.
pub fn check_derived_properties<A: MobiAlgebra>(
    alg: &A,
    seed: u64,
    n: usize,
    tol: f64,
) -> Vec<AxiomReport> {
    let d = |x: &A::Elem, y: &A::Elem| alg.dist(x, y);
    let (zero, half) = (alg.zero(), alg.half());
    let bar = |a: &A::Elem| alg.complement(a);
    let mut out = Vec::with_capacity(9);

    let mut t = Tally::new("complement-half", "complement(1/2) = 1/2");
    let lhs = bar(&half);
    t.equal(inputs!(&half), &lhs, &half, d(&lhs, &half), tol);
    out.push(t.finish());

    let mut rng = stream(seed, 106);
    let mut t = Tally::new("half-product", "a.(1/2) = (1/2).a = 0 (+) a");
    for _ in 0..n {
        let a = draw(alg, &mut rng);
        let rhs = alg.oplus(&zero, &a);
        for lhs in [alg.product(&a, &half), alg.product(&half, &a)] {
            t.equal(inputs!(&a), &lhs, &rhs, d(&lhs, &rhs), tol);
        }
    }
    out.push(t.finish());

    let mut rng = stream(seed, 107);
    let mut t = Tally::new("half-cancel", "(1/2).a = (1/2).a' implies a = a'");
    for _ in 0..n {
        let (a, b) = (draw(alg, &mut rng), draw(alg, &mut rng));
        if d(&a, &b) < SEPARATION_FLOOR {
            continue;
        }
        let (l, r) = (alg.product(&half, &a), alg.product(&half, &b));
        t.separated(inputs!(&a, &b), &l, &r, d(&l, &r), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 108);
    let mut t = Tally::new("complement-midpoint", "p(complement(a),1/2,a) = 1/2");
    for _ in 0..n {
        let a = draw(alg, &mut rng);
        let lhs = alg.p(&bar(&a), &half, &a);
        t.equal(inputs!(&a), &lhs, &half, d(&lhs, &half), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 109);
    let mut t = Tally::new("complement-fixed", "complement(a) = a implies a = 1/2");
    for _ in 0..n {
        let a = draw(alg, &mut rng);
        if d(&a, &half) < SEPARATION_FLOOR {
            continue;
        }
        let abar = bar(&a);
        t.separated(inputs!(&a), &abar, &a, d(&abar, &a), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 110);
    let mut t = Tally::new("complement-p", "complement(p(a,b,c)) = p(complement(a),b,complement(c))");
    for _ in 0..n {
        let (a, b, c) = (draw(alg, &mut rng), draw(alg, &mut rng), draw(alg, &mut rng));
        let lhs = bar(&alg.p(&a, &b, &c));
        let rhs = alg.p(&bar(&a), &b, &bar(&c));
        t.equal(inputs!(&a, &b, &c), &lhs, &rhs, d(&lhs, &rhs), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 111);
    let mut t = Tally::new("reverse", "p(c,b,a) = p(a,complement(b),c)");
    for _ in 0..n {
        let (a, b, c) = (draw(alg, &mut rng), draw(alg, &mut rng), draw(alg, &mut rng));
        let lhs = alg.p(&c, &b, &a);
        let rhs = alg.p(&a, &bar(&b), &c);
        t.equal(inputs!(&a, &b, &c), &lhs, &rhs, d(&lhs, &rhs), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 112);
    let mut t = Tally::new("complement-circ", "complement(a o b) = complement(b).complement(a)");
    for _ in 0..n {
        let (a, b) = (draw(alg, &mut rng), draw(alg, &mut rng));
        let lhs = bar(&alg.circ(&a, &b));
        let rhs = alg.product(&bar(&b), &bar(&a));
        t.equal(inputs!(&a, &b), &lhs, &rhs, d(&lhs, &rhs), tol);
    }
    out.push(t.finish());

    let mut rng = stream(seed, 113);
    let mut t = Tally::new(
        "half-p",
        "(1/2).p(a,b,c) = (complement(b).a) (+) (b.c)",
    );
    for _ in 0..n {
        let (a, b, c) = (draw(alg, &mut rng), draw(alg, &mut rng), draw(alg, &mut rng));
        let lhs = alg.product(&half, &alg.p(&a, &b, &c));
        let rhs = alg.oplus(&alg.product(&bar(&b), &a), &alg.product(&b, &c));
        t.equal(inputs!(&a, &b, &c), &lhs, &rhs, d(&lhs, &rhs), tol);
    }
    out.push(t.finish());

    out
}
