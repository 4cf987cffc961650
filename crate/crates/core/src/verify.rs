//! End-to-end certification that an instance refutes the composition
//! conjecture.
//!
//! Vanishing of all moments is certified by the witnesses (B, D); the
//! finite moment prefix is an independent exact check. Failure of the
//! composition condition is certified by an exhaustive common-right-factor
//! search.

use serde::Serialize;

use crate::construct::Instance;
use crate::decomp::{common_right_factors, outer_factor, FactorEntry};
use crate::error::{Error, Result};
use crate::moments::{moment_sequence, moment_sequence_with_numeric};
use crate::numfield::CycElem;

/// Default number of moments checked exactly.
pub const DEFAULT_MAX_MOMENT: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub endpoints_ok: bool,
    pub moments_checked: usize,
    pub moments_all_zero: bool,
    /// m_1, …, m_N in the instance field.
    pub moments: Vec<CycElem>,
    pub claim1_certified: bool,
    pub factor_entries: Vec<FactorEntry>,
    /// For each factor entry, whether W(a) = W(b).
    pub factor_endpoint_agreement: Vec<bool>,
    pub composition_condition: bool,
    pub counterexample_established: bool,
    pub numeric_max_abs: Option<f64>,
    pub numeric_within_tol: Option<bool>,
}

/// True iff (B, D) certify m_i(P, Q, a, b) = 0 for every i ≥ 1: Q = B + D,
/// P is a polynomial in B and in D, B(a) = B(b) and D(a) = D(b).
pub fn verify_claim1_witness(inst: &Instance) -> bool {
    let Some(w) = &inst.witnesses else {
        return false;
    };
    if w.b.clone() + &w.d != inst.q || w.b.is_constant() || w.d.is_constant() {
        return false;
    }
    let polynomial_in = |f| matches!(outer_factor(&inst.p, f), Ok(Some(_)));
    polynomial_in(&w.b)
        && polynomial_in(&w.d)
        && w.b.eval_embedded(&inst.a) == w.b.eval_embedded(&inst.b)
        && w.d.eval_embedded(&inst.a) == w.d.eval_embedded(&inst.b)
}

/// Runs every check and assembles the verdict. Failed checks are verdicts,
/// not errors; errors only signal unusable input.
pub fn verify_instance(
    inst: &Instance,
    max_moment: usize,
    numeric: bool,
    tol: f64,
) -> Result<Report> {
    if max_moment < 1 {
        return Err(Error::invalid("at least one moment must be checked"));
    }
    if inst.a.order() != inst.field_order || inst.b.order() != inst.field_order {
        return Err(Error::invalid("endpoints are not in the declared field"));
    }
    let (p, q, a, b) = (&inst.p, &inst.q, &inst.a, &inst.b);
    let endpoints_ok = a != b
        && p.eval_embedded(a) == p.eval_embedded(b)
        && q.eval_embedded(a) == q.eval_embedded(b);

    let seq = if numeric {
        moment_sequence_with_numeric(p, q, a, b, max_moment)?
    } else {
        moment_sequence(p, q, a, b, max_moment)?
    };
    let moments_all_zero = seq.iter().all(|m| m.value.is_zero());
    let numeric_max_abs = numeric.then(|| {
        seq.iter()
            .filter_map(|m| m.numeric_value)
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    });
    let numeric_within_tol = numeric_max_abs.map(|v| v < tol);

    let claim1_certified = verify_claim1_witness(inst);
    let factor_entries = common_right_factors(p, q);
    let factor_endpoint_agreement: Vec<bool> = factor_entries
        .iter()
        .map(|e| e.w().eval_embedded(a) == e.w().eval_embedded(b))
        .collect();
    let composition_condition = factor_endpoint_agreement.iter().any(|&x| x);

    Ok(Report {
        endpoints_ok,
        moments_checked: max_moment,
        moments_all_zero,
        moments: seq.into_iter().map(|m| m.value).collect(),
        claim1_certified,
        factor_entries,
        factor_endpoint_agreement,
        composition_condition,
        counterexample_established: endpoints_ok
            && moments_all_zero
            && claim1_certified
            && !composition_condition,
        numeric_max_abs,
        numeric_within_tol,
    })
}
