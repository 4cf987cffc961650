//! Chebyshev polynomials in the monic (Dickson) normalization
//! T_k(z + 1/z) = z^k + z^{-k}.

use std::sync::Arc;

use crate::numfield::{CyclotomicContext, Rational};
use crate::poly::Poly;

/// T_k via T₀ = 2, T₁ = z, T_k = z·T_{k−1} − T_{k−2}.
///
/// This is not the cosine normalization T_k(cos θ) = cos kθ; the two differ
/// by T_k(z) = 2·C_k(z/2).
pub fn chebyshev(k: usize) -> Poly<Rational> {
    let mut prev = Poly::from_ints(&[2]);
    if k == 0 {
        return prev;
    }
    let mut cur = Poly::x();
    let x = Poly::x();
    for _ in 1..k {
        let next = &x * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Checks T_k(ζ^t + ζ^{−t}) = ζ^{kt} + ζ^{−kt} exactly in ℚ(ζ_order).
pub fn verify_halfplane_identity(k: usize, ctx: &Arc<CyclotomicContext>, t: i64) -> bool {
    let point = ctx.zeta(t) + &ctx.zeta(-t);
    let kt = (k as i64).wrapping_mul(t.rem_euclid(ctx.order() as i64));
    let expected = ctx.zeta(kt) + &ctx.zeta(-kt);
    chebyshev(k).eval_embedded(&point) == expected
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order() {
        assert_eq!(chebyshev(0), Poly::from_ints(&[2]));
        assert_eq!(chebyshev(1), Poly::from_ints(&[0, 1]));
        assert_eq!(chebyshev(2), Poly::from_ints(&[-2, 0, 1]));
        assert_eq!(chebyshev(6), Poly::from_ints(&[-2, 0, 9, 0, -6, 0, 1]));
        assert_eq!(chebyshev(6), chebyshev(2).compose(&chebyshev(3)));
        assert!(chebyshev(6).leading_coeff().unwrap().is_one());
    }

    #[test]
    fn identity_examples() {
        let c12 = CyclotomicContext::new(12).unwrap();
        // T₂(√3) = 1 = ζ² + ζ⁻²
        assert!(verify_halfplane_identity(2, &c12, 1));
        assert!(verify_halfplane_identity(1, &c12, 7));
        // T₃(−√3) = 0 = ζ¹⁵ + ζ⁻¹⁵
        assert!(verify_halfplane_identity(3, &c12, 5));
        let minus_sqrt3 = c12.zeta(5) + &c12.zeta(-5);
        assert!(chebyshev(3).eval_embedded(&minus_sqrt3).is_zero());
    }
}
