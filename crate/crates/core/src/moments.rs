//! Moments m_i(P, Q, a, b) = ∫_a^b P(z)^i Q'(z) dz.
//!
//! The exact route evaluates the polynomial antiderivative H of P^i·Q' at the
//! endpoints, m_i = H(b) − H(a). The integrand is a polynomial, so the value
//! does not depend on the path from a to b.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numfield::{ComplexApprox, ComplexEmbedding, Field, Rational};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentResult<X> {
    pub index: usize,
    pub value: X,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_value: Option<ComplexApprox>,
}

/// Cached b^j − a^j, so one moment costs a dot product with H's coefficients.
struct PowerDifferences<X> {
    a_pow: X,
    b_pow: X,
    a: X,
    b: X,
    diffs: Vec<X>,
}

impl<X: Field> PowerDifferences<X> {
    fn new(a: &X, b: &X) -> Self {
        let one = a.one_like();
        PowerDifferences {
            a_pow: one.clone(),
            b_pow: one,
            a: a.clone(),
            b: b.clone(),
            diffs: vec![a.zero_like()],
        }
    }

    fn ensure(&mut self, len: usize) {
        while self.diffs.len() < len {
            self.a_pow = self.a_pow.clone() * &self.a;
            self.b_pow = self.b_pow.clone() * &self.b;
            self.diffs.push(self.b_pow.clone() - &self.a_pow);
        }
    }

    /// H(b) − H(a)
    fn apply(&mut self, h: &Poly<Rational>) -> X {
        self.ensure(h.len());
        let mut acc = self.a.zero_like();
        for (c, d) in h.coeffs().iter().zip(&self.diffs).skip(1) {
            if !c.is_zero() {
                acc += &d.mul_rational(c);
            }
        }
        acc
    }
}

fn check_endpoints<X: Field>(a: &X, b: &X) -> Result<()> {
    if !a.same_field(b) {
        return Err(Error::invalid("endpoints live in different fields"));
    }
    Ok(())
}

/// Exact m_i for rational P, Q and endpoints in any field containing ℚ.
pub fn moment<X: Field>(
    p: &Poly<Rational>,
    q: &Poly<Rational>,
    a: &X,
    b: &X,
    i: usize,
) -> Result<X> {
    if i < 1 {
        return Err(Error::invalid("moment index must be at least 1"));
    }
    check_endpoints(a, b)?;
    let integrand = &p.pow(i as u32) * &q.derivative();
    Ok(PowerDifferences::new(a, b).apply(&integrand.antiderivative()))
}

/// m_1, …, m_n, maintaining P^i incrementally.
pub fn moment_sequence<X: Field>(
    p: &Poly<Rational>,
    q: &Poly<Rational>,
    a: &X,
    b: &X,
    n: usize,
) -> Result<Vec<MomentResult<X>>> {
    if n < 1 {
        return Err(Error::invalid("moment count must be at least 1"));
    }
    check_endpoints(a, b)?;
    let dq = q.derivative();
    let mut diffs = PowerDifferences::new(a, b);
    let mut power = Poly::constant(Rational::one());
    let mut out = Vec::with_capacity(n);
    for index in 1..=n {
        power = &power * p;
        let h = (&power * &dq).antiderivative();
        out.push(MomentResult {
            index,
            value: diffs.apply(&h),
            numeric_value: None,
        });
    }
    Ok(out)
}

/// As [`moment_sequence`], with each entry's floating-point shadow attached.
pub fn moment_sequence_with_numeric<X: Field + ComplexEmbedding>(
    p: &Poly<Rational>,
    q: &Poly<Rational>,
    a: &X,
    b: &X,
    n: usize,
) -> Result<Vec<MomentResult<X>>> {
    let mut seq = moment_sequence(p, q, a, b, n)?;
    let (ca, cb) = (a.to_complex()?, b.to_complex()?);
    for m in &mut seq {
        m.numeric_value = Some(moment_numeric(p, q, ca, cb, m.index)?);
    }
    Ok(seq)
}

/// Gauss–Legendre nodes and weights on [−1, 1]; exact for degree ≤ 2n − 1.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let mut x = (std::f64::consts::PI * (k as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

fn horner_c(coeffs: &[f64], z: ComplexApprox) -> ComplexApprox {
    coeffs
        .iter()
        .rev()
        .fold(ComplexApprox::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Double-precision m_i.
///
/// Integrates P^i·Q' along the segment [a, b] with a Gauss–Legendre rule that
/// is exact for the integrand's degree, so mathematically it coincides with
/// H(b) − H(a); numerically it avoids the cancellation of expanding P^i in the
/// monomial basis.
pub fn moment_numeric(
    p: &Poly<Rational>,
    q: &Poly<Rational>,
    a: ComplexApprox,
    b: ComplexApprox,
    i: usize,
) -> Result<ComplexApprox> {
    if i < 1 {
        return Err(Error::invalid("moment index must be at least 1"));
    }
    let dq = q.derivative();
    if a == b || dq.is_zero() || p.is_zero() {
        return Ok(ComplexApprox::new(0.0, 0.0));
    }
    let to_f = |f: &Poly<Rational>| {
        f.coeffs()
            .iter()
            .map(Rational::to_f64)
            .collect::<Result<Vec<_>>>()
    };
    let (pc, dqc) = (to_f(p)?, to_f(&dq)?);
    let degree = i * p.deg().unwrap_or(0) + dq.deg().unwrap_or(0);
    let half = (b - a) * 0.5;
    let mid = (b + a) * 0.5;
    let mut acc = ComplexApprox::new(0.0, 0.0);
    for (s, w) in gauss_legendre(degree / 2 + 1) {
        let z = mid + half * s;
        acc += horner_c(&pc, z).powu(i as u32) * horner_c(&dqc, z) * w;
    }
    let result = acc * half;
    if !(result.re.is_finite() && result.im.is_finite()) {
        return Err(Error::Overflow(format!(
            "numeric moment m_{i} is not finite"
        )));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly<Rational> {
        Poly::from_ints(v)
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn negative_control_values() {
        let (pp, qq) = (p(&[0, 0, 1]), p(&[0, -1, 0, 1]));
        let (a, b) = (q("-1"), q("1"));
        assert_eq!(moment(&pp, &qq, &a, &b, 1).unwrap(), q("8/15"));
        let seq = moment_sequence(&pp, &qq, &a, &b, 2).unwrap();
        let vals: Vec<_> = seq.iter().map(|m| m.value.clone()).collect();
        assert_eq!(vals, vec![q("8/15"), q("16/35")]);
        let num = moment_numeric(
            &pp,
            &qq,
            a.to_complex().unwrap(),
            b.to_complex().unwrap(),
            1,
        )
        .unwrap();
        assert!((num.re - 8.0 / 15.0).abs() < 1e-9 && num.im.abs() < 1e-12);
    }

    #[test]
    fn equal_endpoints() {
        let (pp, qq) = (p(&[1, 2, 3]), p(&[0, 5, 0, 1]));
        let x = q("7/3");
        assert!(moment(&pp, &qq, &x, &x, 3).unwrap().is_zero());
        let seq = moment_sequence(&pp, &qq, &x, &x, 1).unwrap();
        assert_eq!(seq.len(), 1);
        assert!(seq[0].value.is_zero());
        let c = ComplexApprox::new(0.3, -1.0);
        assert_eq!(
            moment_numeric(&pp, &qq, c, c, 4).unwrap(),
            ComplexApprox::new(0.0, 0.0)
        );
    }

    #[test]
    fn power_case_vanishes() {
        let pp = p(&[0, 0, 0, 0, 0, 0, 1, 0, -2, 0, 1]);
        let qq = p(&[0, 0, 1, -1, 0, 1]);
        let (a, b) = (q("1"), q("-1"));
        for m in moment_sequence(&pp, &qq, &a, &b, 20).unwrap() {
            assert!(m.value.is_zero(), "m_{} = {}", m.index, m.value);
        }
    }

    #[test]
    fn index_zero_rejected() {
        let one = Rational::one();
        assert!(moment(&p(&[0, 1]), &p(&[0, 1]), &one, &one, 0).is_err());
        assert!(moment_sequence(&p(&[0, 1]), &p(&[0, 1]), &one, &one, 0).is_err());
        let c = ComplexApprox::new(0.0, 0.0);
        assert!(moment_numeric(&p(&[0, 1]), &p(&[0, 1]), c, c, 0).is_err());
    }

    #[test]
    fn gauss_legendre_integrates_monomials() {
        for n in [1usize, 2, 5, 17, 64] {
            let rule = gauss_legendre(n);
            for k in 0..(2 * n) {
                let approx: f64 = rule.iter().map(|(x, w)| w * x.powi(k as i32)).sum();
                let exact = if k % 2 == 1 {
                    0.0
                } else {
                    2.0 / (k as f64 + 1.0)
                };
                assert!(
                    (approx - exact).abs() < 1e-12,
                    "n={n} k={k}: {approx} vs {exact}"
                );
            }
        }
    }
}
