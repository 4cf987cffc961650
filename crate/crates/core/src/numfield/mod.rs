//! Exact scalar fields: the rationals and cyclotomic fields ℚ(ζ_k), plus a
//! double-precision complex embedding used only for numeric cross-checks.

mod cyclotomic;
mod rational;

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycElem, CyclotomicContext};
pub use num_complex::Complex64 as ComplexApprox;
pub use rational::Rational;

use crate::error::Result;

/// A characteristic-zero field whose elements carry enough context to
/// produce their own zero and one.
///
/// Cyclotomic elements know their context, so `zero_like`/`one_like` take a
/// reference element instead of being associated constants.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    /// Image of `q` under ℚ → (field of `self`).
    fn from_rational_like(&self, q: &Rational) -> Self;
    fn mul_rational(&self, q: &Rational) -> Self;
    /// Whether two elements live in the same field instance.
    fn same_field(&self, other: &Self) -> bool;
}

/// Numeric image of an exact scalar under the fixed complex embedding.
pub trait ComplexEmbedding {
    fn to_complex(&self) -> Result<ComplexApprox>;
}

impl Field for Rational {
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn inv(&self) -> Result<Self> {
        self.recip()
    }

    fn from_rational_like(&self, q: &Rational) -> Self {
        q.clone()
    }

    fn mul_rational(&self, q: &Rational) -> Self {
        self * q
    }

    fn same_field(&self, _other: &Self) -> bool {
        true
    }
}

impl ComplexEmbedding for Rational {
    fn to_complex(&self) -> Result<ComplexApprox> {
        Ok(ComplexApprox::new(self.to_f64()?, 0.0))
    }
}
