#![allow(dead_code)]

pub mod oracle;

use pmcx_core::cheby::chebyshev;
use pmcx_core::moments::moment;
use pmcx_core::{CyclotomicContext, Instance, Poly, Rational};
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn p(v: &[i64]) -> Poly<Rational> {
    Poly::from_ints(v)
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn rational_poly(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(small_rational(), 0..=max_deg + 1).prop_map(Poly::new)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.random_range(-5i64..=5), rng.random_range(1i64..=3)).unwrap()
}

/// Random polynomial of exact degree `deg` with small integer coefficients.
pub fn random_int_poly<R: Rng>(rng: &mut R, deg: usize, bound: i64) -> Poly<Rational> {
    let mut c: Vec<i64> = (0..=deg)
        .map(|_| rng.random_range(-bound..=bound))
        .collect();
    while c[deg] == 0 {
        c[deg] = rng.random_range(-bound..=bound);
    }
    Poly::from_ints(&c)
}

/// Random polynomial of exact degree `deg` with small rational coefficients.
pub fn random_rational_poly<R: Rng>(rng: &mut R, deg: usize) -> Poly<Rational> {
    loop {
        let f = Poly::new((0..=deg).map(|_| random_rational(rng)).collect());
        if f.deg() == Some(deg) {
            return f;
        }
    }
}

/// Monic, zero constant term, exact degree `deg`.
pub fn random_normalized<R: Rng>(rng: &mut R, deg: usize) -> Poly<Rational> {
    let mut c: Vec<i64> = (0..deg).map(|_| rng.random_range(-3i64..=3)).collect();
    c[0] = 0;
    c.push(1);
    Poly::from_ints(&c)
}

pub fn random_monic<R: Rng>(rng: &mut R, deg: usize) -> Poly<Rational> {
    let mut c: Vec<i64> = (0..deg).map(|_| rng.random_range(-3i64..=3)).collect();
    c.push(1);
    Poly::from_ints(&c)
}

/// Fixed corpus of pairs with degree ≤ 6: composites, random pairs and
/// hand-picked structured cases.
pub fn pair_corpus() -> Vec<(Poly<Rational>, Poly<Rational>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut out = Vec::new();
    for _ in 0..24 {
        let dw = rng.random_range(2..=3usize);
        let w = random_int_poly(&mut rng, dw, 3);
        let max_outer = 6 / dw;
        let (da, db) = (
            rng.random_range(1..=max_outer),
            rng.random_range(1..=max_outer),
        );
        let a = random_int_poly(&mut rng, da, 3);
        let b = random_int_poly(&mut rng, db, 3);
        out.push((a.compose(&w), b.compose(&w)));
    }
    for _ in 0..24 {
        let dp = rng.random_range(2..=6usize);
        let dq = rng.random_range(1..=6usize);
        out.push((
            random_int_poly(&mut rng, dp, 3),
            random_int_poly(&mut rng, dq, 3),
        ));
    }
    out.extend([
        (p(&[0, 0, 0, 0, 1]), p(&[0, 0, 1])),
        (chebyshev(6), chebyshev(2) + &chebyshev(3)),
        (chebyshev(6), chebyshev(3)),
        (chebyshev(6), chebyshev(2)),
        (chebyshev(4), chebyshev(2)),
        (p(&[0, 0, 0, 0, 0, 0, 1]), p(&[0, 1, 0, 0, 0, 0, 1])),
        (p(&[0, 0, 0, 0, 0, 0, 1]), p(&[0, 0, 1, 0, 1])),
        (p(&[0, 0, 0, 0, 0, 0, 1]), p(&[0, 0, 1, 1])),
        (p(&[1, 0, 0, 0, 0, 0, 2]), p(&[3, 0, 0, 5])),
        (p(&[0, 1, 0, 0, 1]), p(&[0, 0, 1])),
    ]);
    out
}

/// m_i(A∘W, B∘W, a, b) = m_i(A, B, W(a), W(b)).
pub fn change_of_variables_holds(seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (da, db, dw) = (
        rng.random_range(1..=4usize),
        rng.random_range(1..=4usize),
        rng.random_range(1..=4usize),
    );
    let a_poly = random_rational_poly(&mut rng, da);
    let b_poly = random_rational_poly(&mut rng, db);
    let w = random_rational_poly(&mut rng, dw);
    let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
    let i = rng.random_range(1..=3usize);
    let lhs = moment(&a_poly.compose(&w), &b_poly.compose(&w), &a, &b, i).unwrap();
    let rhs = moment(&a_poly, &b_poly, &w.eval(&a), &w.eval(&b), i).unwrap();
    lhs == rhs
}

/// P = P̃∘W, Q = Q̃∘W with W(a) = W(b): moments vanish and the composition condition holds.
pub fn random_composite_instance(rng: &mut ChaCha8Rng) -> Instance {
    let ctx = CyclotomicContext::new(1).unwrap();
    let a = Rational::from(rng.random_range(-3i64..=3));
    let b = loop {
        let b = Rational::new(rng.random_range(-6i64..=6), rng.random_range(1i64..=2)).unwrap();
        if b != a {
            break b;
        }
    };
    // W = (z − a)(z − b)·L + w0 with L of degree 0 or 1
    let dl = rng.random_range(0..=1usize);
    let l = random_int_poly(rng, dl, 2);
    let roots = &Poly::new(vec![-a.clone(), Rational::one()])
        * &Poly::new(vec![-b.clone(), Rational::one()]);
    let w = &roots * &l + &Poly::constant(Rational::from(rng.random_range(-2i64..=2)));
    let (dp, dq) = (rng.random_range(1..=3usize), rng.random_range(1..=3usize));
    let pt = random_int_poly(rng, dp, 3);
    let qt = random_int_poly(rng, dq, 3);
    Instance {
        field_order: 1,
        p: pt.compose(&w),
        q: qt.compose(&w),
        a: ctx.embed(&a),
        b: ctx.embed(&b),
        witnesses: None,
        provenance: None,
    }
}
