//! Functional decomposition: W-adic expansion, right composition factors per
//! degree, and the exhaustive common-right-factor search.
//!
//! A right factor W of F (F = A∘W) is normalized monic with W(0) = 0. For a
//! fixed degree there is at most one normalized right factor, so the search is
//! candidate-then-verify: an e-th root series proposes the only possible W,
//! and a W-adic expansion either certifies it or rules the degree out.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numfield::{Field, Rational};
use crate::poly::Poly;

/// A certified common right factor: P = outer_P∘W and Q = outer_Q∘W.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorEntry {
    d: usize,
    #[serde(rename = "W")]
    w: Poly<Rational>,
    #[serde(rename = "outer_P")]
    outer_p: Poly<Rational>,
    #[serde(rename = "outer_Q")]
    outer_q: Poly<Rational>,
}

impl FactorEntry {
    /// Builds an entry after checking normalization and both recompositions.
    pub fn certify(
        w: Poly<Rational>,
        outer_p: Poly<Rational>,
        outer_q: Poly<Rational>,
        p: &Poly<Rational>,
        q: &Poly<Rational>,
    ) -> Result<Self> {
        let d = w.deg().unwrap_or(0);
        if d < 2 || !w.is_monic() || !w.coeff(0).is_zero() {
            return Err(Error::Invariant(format!(
                "W = {w} is not a normalized factor of degree > 1"
            )));
        }
        if outer_p.compose(&w) != *p || outer_q.compose(&w) != *q {
            return Err(Error::Invariant(format!(
                "recomposition through W = {w} fails"
            )));
        }
        Ok(FactorEntry {
            d,
            w,
            outer_p,
            outer_q,
        })
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn w(&self) -> &Poly<Rational> {
        &self.w
    }

    pub fn outer_p(&self) -> &Poly<Rational> {
        &self.outer_p
    }

    pub fn outer_q(&self) -> &Poly<Rational> {
        &self.outer_q
    }
}

/// Base-W digits c₀, c₁, … with F = Σ c_i·W^i and deg c_i < deg W.
/// The zero polynomial has no digits.
pub fn wadic_digits<F: Field>(f: &Poly<F>, w: &Poly<F>) -> Result<Vec<Poly<F>>> {
    if w.deg().unwrap_or(0) < 1 {
        return Err(Error::invalid("W-adic expansion needs a nonconstant W"));
    }
    let mut digits = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (quot, rem) = rest.divmod(w)?;
        digits.push(rem);
        rest = quot;
    }
    Ok(digits)
}

/// Returns A with F = A∘W when every W-adic digit of F is constant.
pub fn outer_factor<F: Field>(f: &Poly<F>, w: &Poly<F>) -> Result<Option<Poly<F>>> {
    let digits = wadic_digits(f, w)?;
    if digits.iter().any(|c| !c.is_constant()) {
        return Ok(None);
    }
    let Some(like) = w.coeffs().last() else {
        unreachable!("W is nonconstant");
    };
    let outer = Poly::new(
        digits
            .into_iter()
            .map(|c| c.into_coeffs().pop().unwrap_or_else(|| like.zero_like()))
            .collect(),
    );
    if outer.compose(w) != *f {
        return Ok(None);
    }
    Ok(Some(outer))
}

fn binomial_series_coeff(alpha: &Rational, k: usize) -> Rational {
    let mut c = Rational::one();
    for j in 0..k {
        let num = alpha - &Rational::from(j as i64);
        c = c * num * Rational::new(1, j as i64 + 1).expect("nonzero");
    }
    c
}

/// Polynomial part of P^{1/e} for monic P.
///
/// With P(z) = z^n·(1 + u(1/z)), expands (1 + u(t))^{1/e} to order t^{n/e} and
/// returns the polynomial part of z^{n/e}·series. When P = A∘W with W monic
/// this equals W plus a constant.
pub fn eth_root_poly_part(p: &Poly<Rational>, e: usize) -> Result<Poly<Rational>> {
    if !p.is_monic() {
        return Err(Error::invalid(
            "e-th root expansion needs a monic polynomial",
        ));
    }
    let n = p.deg().expect("monic implies nonzero");
    if e == 0 || !n.is_multiple_of(e) {
        return Err(Error::invalid(format!("{e} does not divide deg P = {n}")));
    }
    let r = n / e;
    // u(t) truncated to t^r
    let mut u = vec![Rational::zero(); r + 1];
    for (j, uj) in u.iter_mut().enumerate().skip(1) {
        if j <= n {
            *uj = p.coeff(n - j);
        }
    }
    let alpha = Rational::new(1, e as i64)?;
    let mut series = vec![Rational::zero(); r + 1];
    series[0] = Rational::one();
    let mut u_pow = vec![Rational::zero(); r + 1];
    u_pow[0] = Rational::one();
    for k in 1..=r {
        // u_pow ← u_pow·u mod t^{r+1}
        let mut next = vec![Rational::zero(); r + 1];
        for (i, a) in u_pow.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in u.iter().enumerate().take(r + 1 - i).skip(1) {
                if !b.is_zero() {
                    next[i + j] += &(a * b);
                }
            }
        }
        u_pow = next;
        let c = binomial_series_coeff(&alpha, k);
        for (s, t) in series.iter_mut().zip(&u_pow) {
            if !t.is_zero() {
                *s += &(&c * t);
            }
        }
    }
    let mut coeffs = vec![Rational::zero(); r + 1];
    for (j, s) in series.into_iter().enumerate() {
        coeffs[r - j] = s;
    }
    Ok(Poly::new(coeffs))
}

/// The normalized right factor of degree `d` of P, with its outer factor.
///
/// `None` means P has no right composition factor of degree `d`.
pub fn right_factor(
    p: &Poly<Rational>,
    d: usize,
) -> Result<Option<(Poly<Rational>, Poly<Rational>)>> {
    let n = p.deg().unwrap_or(0);
    if n < 2 {
        return Err(Error::invalid("right factors need deg P > 1"));
    }
    if d < 2 || !n.is_multiple_of(d) {
        return Err(Error::invalid(format!(
            "factor degree {d} must exceed 1 and divide {n}"
        )));
    }
    let candidate = eth_root_poly_part(&p.monic()?, n / d)?;
    let w = candidate.clone() - &Poly::constant(candidate.coeff(0));
    Ok(outer_factor(p, &w)?.map(|a| (w, a)))
}

/// Every certified common right factor of degree > 1, one per common divisor
/// of the degrees at most. An empty result means C(P, Q) = C(z).
pub fn common_right_factors(p: &Poly<Rational>, q: &Poly<Rational>) -> Vec<FactorEntry> {
    let (Some(dp), Some(dq)) = (p.deg(), q.deg()) else {
        return Vec::new();
    };
    if dp < 2 || dq < 1 {
        return Vec::new();
    }
    let g = dp.gcd(&dq);
    (2..=g)
        .filter(|d| g % d == 0)
        .filter_map(|d| {
            let (w, outer_p) = right_factor(p, d).ok()??;
            let outer_q = outer_factor(q, &w).ok()??;
            FactorEntry::certify(w, outer_p, outer_q, p, q).ok()
        })
        .collect()
}

/// The composition condition, endpoint clause included: a common right
/// factor W of degree > 1 with W(a) = W(b). Returns the first witnessing entry.
pub fn composition_condition_holds<X: Field>(
    p: &Poly<Rational>,
    q: &Poly<Rational>,
    a: &X,
    b: &X,
) -> (bool, Option<FactorEntry>) {
    let found = common_right_factors(p, q)
        .into_iter()
        .find(|entry| entry.w.eval_embedded(a) == entry.w.eval_embedded(b));
    (found.is_some(), found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheby::chebyshev;
    use crate::numfield::CyclotomicContext;

    fn p(v: &[i64]) -> Poly<Rational> {
        Poly::from_ints(v)
    }

    #[test]
    fn digits_examples() {
        assert_eq!(
            wadic_digits(&p(&[0, 0, 1, 0, 1]), &p(&[0, 0, 1])).unwrap(),
            vec![Poly::zero(), p(&[1]), p(&[1])]
        );
        assert_eq!(
            wadic_digits(&p(&[0, 0, 0, 1]), &p(&[-1, 1])).unwrap(),
            vec![p(&[1]), p(&[3]), p(&[3]), p(&[1])]
        );
        assert_eq!(
            wadic_digits(&p(&[5]), &p(&[0, 1, 1])).unwrap(),
            vec![p(&[5])]
        );
        assert!(wadic_digits(&p(&[1, 1]), &p(&[3])).is_err());
        assert!(wadic_digits(&p(&[1, 1]), &Poly::zero()).is_err());
    }

    #[test]
    fn outer_factor_examples() {
        assert_eq!(
            outer_factor(&p(&[0, 0, 1, 0, 1]), &p(&[0, 0, 1])).unwrap(),
            Some(p(&[0, 1, 1]))
        );
        assert_eq!(
            outer_factor(&chebyshev(6), &p(&[0, -3, 0, 1])).unwrap(),
            Some(p(&[-2, 0, 1]))
        );
        assert_eq!(
            outer_factor(&p(&[0, 1, 0, 0, 1]), &p(&[0, 0, 1])).unwrap(),
            None
        );
    }

    #[test]
    fn eth_root_examples() {
        assert_eq!(
            eth_root_poly_part(&p(&[0, 0, 0, 0, 0, 0, 1]), 3).unwrap(),
            p(&[0, 0, 1])
        );
        assert_eq!(
            eth_root_poly_part(&chebyshev(6), 2).unwrap(),
            p(&[0, -3, 0, 1])
        );
        assert_eq!(
            eth_root_poly_part(&p(&[0, 1, 0, 0, 1]), 2).unwrap(),
            p(&[0, 0, 1])
        );
        assert!(eth_root_poly_part(&p(&[0, 0, 2]), 2).is_err());
        assert!(eth_root_poly_part(&p(&[0, 0, 0, 1]), 2).is_err());
    }

    #[test]
    fn right_factor_examples() {
        assert_eq!(
            right_factor(&p(&[0, 0, 0, 0, 0, 0, 1]), 2).unwrap(),
            Some((p(&[0, 0, 1]), p(&[0, 0, 0, 1])))
        );
        assert_eq!(
            right_factor(&chebyshev(6), 3).unwrap(),
            Some((p(&[0, -3, 0, 1]), p(&[-2, 0, 1])))
        );
        assert_eq!(right_factor(&p(&[0, 1, 0, 0, 1]), 2).unwrap(), None);
        assert!(right_factor(&p(&[0, 1, 0, 0, 1]), 3).is_err());
        assert!(right_factor(&p(&[0, 1, 0, 0, 1]), 1).is_err());
    }

    #[test]
    fn right_factor_of_non_monic() {
        // 3(z^2 + z)^2 - 1
        let w = p(&[0, 1, 1]);
        let f = p(&[-1, 0, 3]).compose(&w);
        let (got, outer) = right_factor(&f, 2).unwrap().unwrap();
        assert_eq!(got, w);
        assert_eq!(outer.compose(&got), f);
    }

    #[test]
    fn common_factor_examples() {
        let entries = common_right_factors(&p(&[0, 0, 0, 0, 1]), &p(&[0, 0, 1]));
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].degree(), 2);
        assert_eq!(entries[0].w(), &p(&[0, 0, 1]));

        let q = chebyshev(2) + &chebyshev(3);
        assert!(common_right_factors(&chebyshev(6), &q).is_empty());

        let pp = p(&[0, 0, 0, 0, 0, 0, 1, 0, -2, 0, 1]);
        let qq = p(&[0, 0, 1, -1, 0, 1]);
        assert!(common_right_factors(&pp, &qq).is_empty());
    }

    #[test]
    fn composition_condition_examples() {
        let z4 = p(&[0, 0, 0, 0, 1]);
        let z2 = p(&[0, 0, 1]);
        let one = Rational::one();
        let (holds, entry) = composition_condition_holds(&z4, &z2, &one, &-one.clone());
        assert!(holds);
        assert_eq!(entry.unwrap().w(), &z2);
        let (holds, _) = composition_condition_holds(&z4, &z2, &one, &Rational::from(2));
        assert!(!holds);

        let c12 = CyclotomicContext::new(12).unwrap();
        let a = c12.zeta(5) + &c12.zeta(-5);
        let b = c12.zeta(1) + &c12.zeta(-1);
        let q = chebyshev(2) + &chebyshev(3);
        assert_eq!(
            composition_condition_holds(&chebyshev(6), &q, &a, &b),
            (false, None)
        );
    }

    #[test]
    fn certify_rejects_bad_entries() {
        let z2 = p(&[0, 0, 1]);
        assert!(FactorEntry::certify(p(&[1, 0, 1]), p(&[0, 1]), p(&[0, 1]), &z2, &z2).is_err());
        assert!(FactorEntry::certify(z2.clone(), p(&[0, 2]), p(&[0, 1]), &z2, &z2).is_err());
        assert!(FactorEntry::certify(z2.clone(), p(&[0, 1]), p(&[0, 1]), &z2, &z2).is_ok());
    }
}
