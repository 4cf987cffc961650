//! Cyclotomic number fields ℚ(ζ_k) = ℚ[z]/(Φ_k) with exact rational coordinates.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{ComplexApprox, ComplexEmbedding, Field, Rational};
use crate::error::{Error, Result};
use crate::poly::Poly;

fn divisors(k: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= k {
        if k.is_multiple_of(d) {
            small.push(d);
            if d * d != k {
                large.push(k / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(k: u64) -> u64 {
    let mut n = k;
    let mut phi = k;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// The k-th cyclotomic polynomial, by exact division
/// Φ_k = (z^k − 1) / ∏_{d | k, d < k} Φ_d.
pub fn cyclotomic_polynomial(k: u64) -> Result<Poly<Rational>> {
    if k == 0 {
        return Err(Error::invalid("cyclotomic order must be at least 1"));
    }
    let mut table: BTreeMap<u64, Poly<Rational>> = BTreeMap::new();
    for d in divisors(k) {
        let mut num =
            Poly::monomial(Rational::one(), d as usize) - &Poly::constant(Rational::one());
        for (e, phi_e) in &table {
            if d % e == 0 {
                let (q, r) = num.divmod(phi_e)?;
                debug_assert!(r.is_zero());
                num = q;
            }
        }
        table.insert(d, num);
    }
    Ok(table.remove(&k).expect("k divides itself"))
}

/// Arithmetic context for ℚ(ζ_k): the modulus Φ_k and its degree φ(k).
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicContext {
    order: u64,
    modulus: Poly<Rational>,
    degree: usize,
    // nonzero lower coefficients of Φ_k, for reduction
    reduction: Vec<(usize, Rational)>,
}

impl CyclotomicContext {
    pub fn new(order: u64) -> Result<Arc<Self>> {
        let modulus = cyclotomic_polynomial(order)?;
        let degree = modulus.len() - 1;
        let reduction = modulus.coeffs()[..degree]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect();
        Ok(Arc::new(CyclotomicContext {
            order,
            modulus,
            degree,
            reduction,
        }))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &Poly<Rational> {
        &self.modulus
    }

    /// φ(k), the dimension of the field over ℚ.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Reduces an arbitrary-length coordinate vector modulo Φ_k.
    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        let phi = self.degree;
        while v.len() > phi {
            let c = v.pop().expect("nonempty");
            if c.is_zero() {
                continue;
            }
            let shift = v.len() - phi;
            for (j, m) in &self.reduction {
                v[shift + j] -= &(&c * m);
            }
        }
        v.resize(phi, Rational::zero());
        v
    }

    pub fn zero(self: &Arc<Self>) -> CycElem {
        CycElem {
            ctx: Arc::clone(self),
            coords: vec![Rational::zero(); self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycElem {
        self.embed(&Rational::one())
    }

    pub fn embed(self: &Arc<Self>, q: &Rational) -> CycElem {
        let mut e = self.zero();
        e.coords[0] = q.clone();
        e
    }

    /// ζ_k^t in reduced coordinates; `t` is taken modulo k.
    pub fn zeta(self: &Arc<Self>, t: i64) -> CycElem {
        let e = t.rem_euclid(self.order as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        CycElem {
            ctx: Arc::clone(self),
            coords: self.reduce(v),
        }
    }

    /// The class of a polynomial in ζ, reduced modulo Φ_k.
    pub fn from_poly(self: &Arc<Self>, f: &Poly<Rational>) -> CycElem {
        CycElem {
            ctx: Arc::clone(self),
            coords: self.reduce(f.coeffs().to_vec()),
        }
    }

    /// Builds an element from exactly φ(k) coordinates.
    pub fn from_coords(self: &Arc<Self>, coords: Vec<Rational>) -> Result<CycElem> {
        if coords.len() != self.degree {
            return Err(Error::invalid(format!(
                "order {} needs {} coordinates, got {}",
                self.order,
                self.degree,
                coords.len()
            )));
        }
        Ok(CycElem {
            ctx: Arc::clone(self),
            coords,
        })
    }
}

/// An element of ℚ(ζ_k) in the power basis 1, ζ, …, ζ^{φ(k)−1}.
#[derive(Clone)]
pub struct CycElem {
    ctx: Arc<CyclotomicContext>,
    coords: Vec<Rational>,
}

impl CycElem {
    pub fn context(&self) -> &Arc<CyclotomicContext> {
        &self.ctx
    }

    pub fn order(&self) -> u64 {
        self.ctx.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_poly(&self) -> Poly<Rational> {
        Poly::new(self.coords.clone())
    }

    fn check(&self, other: &CycElem) -> Result<()> {
        if self.ctx.order != other.ctx.order {
            return Err(Error::ContextMismatch {
                left: self.ctx.order,
                right: other.ctx.order,
            });
        }
        Ok(())
    }

    fn expect_same(&self, other: &CycElem) {
        if let Err(e) = self.check(other) {
            panic!("{e}");
        }
    }

    pub fn checked_add(&self, other: &CycElem) -> Result<CycElem> {
        self.check(other)?;
        Ok(self.clone() + other)
    }

    pub fn checked_sub(&self, other: &CycElem) -> Result<CycElem> {
        self.check(other)?;
        Ok(self.clone() - other)
    }

    pub fn checked_mul(&self, other: &CycElem) -> Result<CycElem> {
        self.check(other)?;
        Ok(self.mul_impl(other))
    }

    fn mul_impl(&self, other: &CycElem) -> CycElem {
        let phi = self.ctx.degree;
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coords.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += &(x * y);
                }
            }
        }
        CycElem {
            ctx: Arc::clone(&self.ctx),
            coords: self.ctx.reduce(prod),
        }
    }

    pub fn pow(&self, mut exp: u64) -> CycElem {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// coordinate polynomial and Φ_k.
    pub fn inv(&self) -> Result<CycElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = Poly::xgcd(&self.to_poly(), &self.ctx.modulus)?;
        // Φ_k is irreducible, so the gcd is a nonzero constant.
        let g0 = g.coeff(0).recip()?;
        Ok(self.ctx.from_poly(&s.scale(&g0)))
    }

    /// The element as a rational, if it lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(Rational::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.order == other.ctx.order && self.coords == other.coords
    }
}

impl Eq for CycElem {}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem(k={}; {:?})", self.ctx.order, self.coords)
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·ζ{}", self.ctx.order)?,
                _ => write!(f, "({c})·ζ{}^{j}", self.ctx.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for CycElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CycElem", 2)?;
        st.serialize_field("order", &self.ctx.order)?;
        st.serialize_field("coords", &self.coords)?;
        st.end()
    }
}

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(mut self) -> CycElem {
        for c in &mut self.coords {
            *c = -&*c;
        }
        self
    }
}

impl<'a> AddAssign<&'a CycElem> for CycElem {
    fn add_assign(&mut self, rhs: &'a CycElem) {
        self.expect_same(rhs);
        for (x, y) in self.coords.iter_mut().zip(&rhs.coords) {
            *x += y;
        }
    }
}

impl<'a> SubAssign<&'a CycElem> for CycElem {
    fn sub_assign(&mut self, rhs: &'a CycElem) {
        self.expect_same(rhs);
        for (x, y) in self.coords.iter_mut().zip(&rhs.coords) {
            *x -= y;
        }
    }
}

impl<'a> Add<&'a CycElem> for CycElem {
    type Output = CycElem;
    fn add(mut self, rhs: &'a CycElem) -> CycElem {
        self += rhs;
        self
    }
}

impl<'a> Sub<&'a CycElem> for CycElem {
    type Output = CycElem;
    fn sub(mut self, rhs: &'a CycElem) -> CycElem {
        self -= rhs;
        self
    }
}

impl<'a> Mul<&'a CycElem> for CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &'a CycElem) -> CycElem {
        self.expect_same(rhs);
        self.mul_impl(rhs)
    }
}

impl<'b> Add<&'b CycElem> for &CycElem {
    type Output = CycElem;
    fn add(self, rhs: &'b CycElem) -> CycElem {
        self.clone() + rhs
    }
}

impl<'b> Sub<&'b CycElem> for &CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &'b CycElem) -> CycElem {
        self.clone() - rhs
    }
}

impl<'b> Mul<&'b CycElem> for &CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &'b CycElem) -> CycElem {
        self.expect_same(rhs);
        self.mul_impl(rhs)
    }
}

impl Field for CycElem {
    fn is_zero(&self) -> bool {
        CycElem::is_zero(self)
    }

    fn zero_like(&self) -> Self {
        self.ctx.zero()
    }

    fn one_like(&self) -> Self {
        self.ctx.one()
    }

    fn inv(&self) -> Result<Self> {
        CycElem::inv(self)
    }

    fn from_rational_like(&self, q: &Rational) -> Self {
        self.ctx.embed(q)
    }

    fn mul_rational(&self, q: &Rational) -> Self {
        let coords = self.coords.iter().map(|c| c * q).collect();
        CycElem {
            ctx: Arc::clone(&self.ctx),
            coords,
        }
    }

    fn same_field(&self, other: &Self) -> bool {
        self.ctx.order == other.ctx.order
    }
}

impl ComplexEmbedding for CycElem {
    /// Evaluates the coordinate polynomial at ζ_k ↦ e^{2πi/k}.
    fn to_complex(&self) -> Result<ComplexApprox> {
        let k = self.ctx.order as f64;
        let mut acc = ComplexApprox::new(0.0, 0.0);
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let theta = 2.0 * PI * j as f64 / k;
            acc += ComplexApprox::from_polar(1.0, theta) * c.to_f64()?;
        }
        if !(acc.re.is_finite() && acc.im.is_finite()) {
            return Err(Error::Overflow(self.to_string()));
        }
        Ok(acc)
    }
}
