//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::numfield::{Field, Rational};

/// Degree of a polynomial. The zero polynomial has degree `MinusInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Polynomial with coefficients in ascending degree order. The last stored
/// coefficient is nonzero; the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// c·z^k
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&F> {
        self.coeffs.get(i)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Finite degree, `None` for zero.
    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Result<&F> {
        self.coeffs
            .last()
            .ok_or_else(|| Error::invalid("leading coefficient of the zero polynomial"))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == c.one_like())
    }

    pub fn monic(&self) -> Result<Self> {
        let inv = self.leading_coeff()?.inv()?;
        Ok(self.scale(&inv))
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s).collect())
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.mul_rational(q)).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = match self.coeffs.first() {
            Some(c) => Poly::constant(c.one_like()),
            None if exp == 0 => panic!("0^0 has no field context"),
            None => return Poly::zero(),
        };
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        let mut it = self.coeffs.iter().rev();
        let Some(top) = it.next() else {
            return x.zero_like();
        };
        let mut acc = top.clone();
        for c in it {
            acc = acc * x;
            acc += c;
        }
        acc
    }

    /// f ∘ g, by Horner's scheme over polynomials.
    pub fn compose(&self, g: &Poly<F>) -> Poly<F> {
        let mut it = self.coeffs.iter().rev();
        let Some(top) = it.next() else {
            return Poly::zero();
        };
        let mut acc = Poly::constant(top.clone());
        for c in it {
            acc = &acc * g;
            acc = acc.add_constant(c);
        }
        acc
    }

    fn add_constant(mut self, c: &F) -> Self {
        if self.coeffs.is_empty() {
            return Poly::constant(c.clone());
        }
        self.coeffs[0] += c;
        Poly::new(self.coeffs)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_rational(&Rational::from(i as i64)))
                .collect(),
        )
    }

    /// The antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let Some(first) = self.coeffs.first() else {
            return Poly::zero();
        };
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(first.zero_like());
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = Rational::new(1, i as i64 + 1).expect("nonzero");
            out.push(c.mul_rational(&k));
        }
        Poly::new(out)
    }

    /// Euclidean division: `self = q·g + r` with deg r < deg g.
    pub fn divmod(&self, g: &Poly<F>) -> Result<(Poly<F>, Poly<F>)> {
        let Some(dg) = g.deg() else {
            return Err(Error::DivisionByZero);
        };
        let lc_inv = g.leading_coeff()?.inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((Poly::zero(), self.clone()));
        }
        let zero = lc_inv.zero_like();
        let mut quot = vec![zero.clone(); rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let c = std::mem::replace(&mut rem[i + dg], zero.clone());
            if c.is_zero() {
                continue;
            }
            let t = c * &lc_inv;
            for (j, gj) in g.coeffs[..dg].iter().enumerate() {
                if !gj.is_zero() {
                    rem[i + j] -= &(t.clone() * gj);
                }
            }
            quot[i] = t;
        }
        rem.truncate(dg);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Extended Euclid: returns (g, s, t) with s·a + t·b = g = gcd(a, b)
    /// (not normalized).
    pub fn xgcd(a: &Poly<F>, b: &Poly<F>) -> Result<(Poly<F>, Poly<F>, Poly<F>)> {
        let one = match (a.coeffs.first(), b.coeffs.first()) {
            (Some(c), _) | (None, Some(c)) => c.one_like(),
            (None, None) => return Err(Error::invalid("gcd of two zero polynomials")),
        };
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::constant(one.clone()), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::constant(one));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s2 = s0 - &(&q * &s1);
            let t2 = t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        Ok((r0, s0, t0))
    }
}

impl Poly<Rational> {
    /// The identity polynomial z.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Evaluates a rational polynomial at a point of an extension field by
    /// embedding each coefficient.
    pub fn eval_embedded<X: Field>(&self, x: &X) -> X {
        let mut it = self.coeffs.iter().rev();
        let Some(top) = it.next() else {
            return x.zero_like();
        };
        let mut acc = x.from_rational_like(top);
        for c in it {
            acc = acc * x;
            acc += &x.from_rational_like(c);
        }
        acc
    }

    pub fn embed_into<X: Field>(&self, like: &X) -> Poly<X> {
        Poly::new(
            self.coeffs
                .iter()
                .map(|c| like.from_rational_like(c))
                .collect(),
        )
    }
}

impl<F: Field> Add<&Poly<F>> for Poly<F> {
    type Output = Poly<F>;
    fn add(mut self, rhs: &Poly<F>) -> Poly<F> {
        let overlap = self.coeffs.len().min(rhs.coeffs.len());
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs[..overlap]) {
            *x += y;
        }
        self.coeffs.extend_from_slice(&rhs.coeffs[overlap..]);
        Poly::new(self.coeffs)
    }
}

impl<F: Field> Sub<&Poly<F>> for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self + &(-rhs.clone())
    }
}

impl<F: Field> Add<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        self.clone() + rhs
    }
}

impl<F: Field> Sub<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self.clone() - rhs
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<F: Field> Mul<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    /// Schoolbook product.
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a.clone() * b);
                }
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> Mul<&Poly<F>> for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        &self * rhs
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl fmt::Display for Poly<Rational> {
    /// Human-readable form in `z`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.numer().sign() == num_bigint::Sign::Minus;
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    match k {
                        1 => write!(f, "z")?,
                        _ => write!(f, "z^{k}")?,
                    }
                }
            }
        }
        Ok(())
    }
}
