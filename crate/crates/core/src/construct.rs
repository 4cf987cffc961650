//! Generators for the two counterexample families.
//!
//! Power family: B = z^m, D = z^n·R(z^m), Q = B + D, P a polynomial in
//! z^{nm}·R(z^m)^m, endpoints a, b with a^m = b^m a root of R.
//!
//! Chebyshev family: B = T_n, D = T_m, Q = T_n + T_m, P a polynomial in
//! T_{nm}, endpoints a = α + 1/α, b = β + 1/β with α^m = β^m and (αβ)^n = 1.

use std::sync::Arc;

use num_integer::Integer;

use crate::cheby::chebyshev;
use crate::decomp::outer_factor;
use crate::error::{Error, Result};
use crate::numfield::{CycElem, CyclotomicContext, Rational};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq)]
pub struct PowerCaseParams {
    pub m: usize,
    pub n: usize,
    pub r: Poly<Rational>,
    /// Rational with R(c^m) = 0; the endpoints are c times m-th roots of unity.
    pub c: Rational,
    /// Exponents (j, l), 0 ≤ j < l < m, giving a = c·ζ_m^j and b = c·ζ_m^l.
    pub root_pair: (usize, usize),
    pub outer: Option<Poly<Rational>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChebyCaseParams {
    pub n: usize,
    pub m: usize,
    pub outer: Option<Poly<Rational>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    Power(PowerCaseParams),
    Chebyshev(ChebyCaseParams),
}

/// Moment-vanishing witnesses: Q = B + D with P a polynomial in B and in D, and
/// B(a) = B(b), D(a) = D(b).
#[derive(Debug, Clone, PartialEq)]
pub struct Witnesses {
    pub b: Poly<Rational>,
    pub d: Poly<Rational>,
}

/// A candidate counterexample (P, Q, a, b) with endpoints in ℚ(ζ_k).
///
/// Generated instances always carry witnesses and provenance; instances read
/// from outside may lack either.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub field_order: u64,
    pub p: Poly<Rational>,
    pub q: Poly<Rational>,
    pub a: CycElem,
    pub b: CycElem,
    pub witnesses: Option<Witnesses>,
    pub provenance: Option<Provenance>,
}

impl Instance {
    /// Checks every structural invariant exactly; the first violation is
    /// returned as an error.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Invariant(msg.to_string()));
        if self.a.order() != self.field_order || self.b.order() != self.field_order {
            return fail("endpoints are not in the instance field");
        }
        if self.p.deg().unwrap_or(0) < 2 {
            return fail("deg P must exceed 1");
        }
        if self.a == self.b {
            return fail("a = b");
        }
        if self.p.eval_embedded(&self.a) != self.p.eval_embedded(&self.b) {
            return fail("P(a) != P(b)");
        }
        if self.q.eval_embedded(&self.a) != self.q.eval_embedded(&self.b) {
            return fail("Q(a) != Q(b)");
        }
        if let Some(w) = &self.witnesses {
            if w.b.clone() + &w.d != self.q {
                return fail("Q != B + D");
            }
            if w.b.eval_embedded(&self.a) != w.b.eval_embedded(&self.b) {
                return fail("B(a) != B(b)");
            }
            if w.d.eval_embedded(&self.a) != w.d.eval_embedded(&self.b) {
                return fail("D(a) != D(b)");
            }
            for (name, f) in [("B", &w.b), ("D", &w.d)] {
                if f.is_constant() || outer_factor(&self.p, f)?.is_none() {
                    return Err(Error::Invariant(format!("P is not a polynomial in {name}")));
                }
            }
        }
        Ok(())
    }
}

fn apply_outer(outer: &Option<Poly<Rational>>, core: Poly<Rational>) -> Poly<Rational> {
    match outer {
        Some(o) => o.compose(&core),
        None => core,
    }
}

/// Power-family instance. Fails if any parameter invariant is violated.
pub fn build_power_case(params: &PowerCaseParams) -> Result<Instance> {
    let PowerCaseParams {
        m,
        n,
        r,
        c,
        root_pair: (j, l),
        outer,
    } = params;
    let (m, n, j, l) = (*m, *n, *j, *l);
    if m < 2 || n < 1 {
        return Err(Error::invalid(format!(
            "need m >= 2 and n >= 1, got m = {m}, n = {n}"
        )));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::invalid(format!(
            "gcd(m, n) = {} but m and n must be coprime",
            m.gcd(&n)
        )));
    }
    if r.coeffs().iter().filter(|x| !x.is_zero()).count() < 2 {
        return Err(Error::invalid(format!(
            "R = {r} is a monomial and has no nonzero root"
        )));
    }
    if c.is_zero() {
        return Err(Error::invalid("c must be nonzero"));
    }
    let zeta_value = c.pow(m as u32);
    if !r.eval(&zeta_value).is_zero() {
        return Err(Error::invalid(format!(
            "R(c^m) = R({zeta_value}) is not zero"
        )));
    }
    if !(j < l && l < m) {
        return Err(Error::invalid(format!(
            "root pair ({j}, {l}) must satisfy 0 <= j < l < m = {m}"
        )));
    }

    let z_m = Poly::monomial(Rational::one(), m);
    let r_of_zm = r.compose(&z_m);
    let b_poly = z_m;
    let d_poly = &Poly::monomial(Rational::one(), n) * &r_of_zm;
    let q = b_poly.clone() + &d_poly;
    let core = &Poly::monomial(Rational::one(), n * m) * &r_of_zm.pow(m as u32);
    let p = apply_outer(outer, core);
    if p.deg().unwrap_or(0) < 2 {
        return Err(Error::invalid("deg P must exceed 1"));
    }

    let ctx = CyclotomicContext::new(m as u64)?;
    let scale = ctx.embed(c);
    let a = ctx.zeta(j as i64) * &scale;
    let b = ctx.zeta(l as i64) * &scale;
    let inst = Instance {
        field_order: m as u64,
        p,
        q,
        a,
        b,
        witnesses: Some(Witnesses {
            b: b_poly,
            d: d_poly,
        }),
        provenance: Some(Provenance::Power(params.clone())),
    };
    inst.check_invariants()?;
    Ok(inst)
}

/// α = ζ^{m+n}, β = ζ^{m−n} in ℚ(ζ_{2nm}).
fn cheby_parameters(ctx: &Arc<CyclotomicContext>, n: usize, m: usize) -> (CycElem, CycElem) {
    let (n, m) = (n as i64, m as i64);
    (ctx.zeta(m + n), ctx.zeta(m - n))
}

/// Chebyshev-family instance. Fails if any parameter invariant is violated.
pub fn build_cheby_case(params: &ChebyCaseParams) -> Result<Instance> {
    let ChebyCaseParams { n, m, outer } = params;
    let (n, m) = (*n, *m);
    if n < 2 || m < 2 {
        return Err(Error::invalid(format!(
            "need n, m >= 2, got n = {n}, m = {m}"
        )));
    }
    if n.gcd(&m) != 1 {
        return Err(Error::invalid(format!(
            "gcd(n, m) = {} but n and m must be coprime",
            n.gcd(&m)
        )));
    }
    let k = 2 * n * m;
    let ctx = CyclotomicContext::new(k as u64)?;
    let (alpha, beta) = cheby_parameters(&ctx, n, m);
    let (alpha_inv, beta_inv) = (alpha.inv()?, beta.inv()?);
    if alpha.pow(m as u64) != beta.pow(m as u64)
        || (alpha.clone() * &beta).pow(n as u64) != ctx.one()
        || alpha == beta
        || alpha == beta_inv
    {
        return Err(Error::Invariant(
            "endpoint parameters fail the exponent constraints".into(),
        ));
    }
    let a = alpha + &alpha_inv;
    let b = beta + &beta_inv;

    let b_poly = chebyshev(n);
    let d_poly = chebyshev(m);
    let q = b_poly.clone() + &d_poly;
    let p = apply_outer(outer, chebyshev(n * m));
    if p.deg().unwrap_or(0) < 2 {
        return Err(Error::invalid("deg P must exceed 1"));
    }
    let inst = Instance {
        field_order: k as u64,
        p,
        q,
        a,
        b,
        witnesses: Some(Witnesses {
            b: b_poly,
            d: d_poly,
        }),
        provenance: Some(Provenance::Chebyshev(params.clone())),
    };
    inst.check_invariants()?;
    Ok(inst)
}

/// The small fixed corpus used for cross-checks: every P has degree ≤ 12 and
/// |P| ≤ 2 on the segment [a, b], so double-precision shadows of the zero
/// moments stay well below 1e−6 up to i = 20.
pub fn standard_corpus() -> Vec<Instance> {
    let z_minus_1 = Poly::from_ints(&[-1, 1]);
    let quad = Poly::from_ints(&[-2, 1, 1]);
    let power = |m, n, r: &Poly<Rational>| PowerCaseParams {
        m,
        n,
        r: r.clone(),
        c: Rational::one(),
        root_pair: (0, 1),
        outer: None,
    };
    let cheby = |n, m, outer| ChebyCaseParams { n, m, outer };
    let mut out = vec![
        build_power_case(&power(2, 3, &z_minus_1)),
        build_power_case(&power(3, 1, &z_minus_1)),
        build_power_case(&power(2, 1, &quad)),
        build_cheby_case(&cheby(2, 3, None)),
        build_cheby_case(&cheby(2, 5, None)),
        build_cheby_case(&cheby(3, 4, None)),
        // (w² − 2w)/4 keeps |P| ≤ 2 along [a, b]
        build_cheby_case(&cheby(
            2,
            3,
            Some(Poly::from_ints(&[0, -2, 1]).mul_rational(&Rational::new(1, 4).unwrap())),
        )),
    ];
    out.push(build_power_case(&PowerCaseParams {
        root_pair: (1, 2),
        ..power(3, 1, &z_minus_1)
    }));
    out.into_iter()
        .map(|r| r.expect("corpus parameters are valid"))
        .collect()
}
