//! Exact construction and certification of polynomial moment problem
//! instances on which the composition conjecture fails.
//!
//! For polynomials P, Q and endpoints a ≠ b with P(a) = P(b), Q(a) = Q(b),
//! the moments m_i = ∫_a^b P^i dQ all vanish whenever P and Q share a right
//! composition factor W with W(a) = W(b). The crate builds instances where
//! every moment vanishes but no such W exists, and certifies both facts with
//! exact arithmetic in cyclotomic fields.
//!
//! ```
//! use pmcx_core::construct::{build_cheby_case, ChebyCaseParams};
//! use pmcx_core::verify::verify_instance;
//!
//! let inst = build_cheby_case(&ChebyCaseParams { n: 2, m: 3, outer: None }).unwrap();
//! let report = verify_instance(&inst, 20, false, 1e-6).unwrap();
//! assert!(report.counterexample_established);
//! ```

pub mod cheby;
pub mod construct;
pub mod decomp;
pub mod error;
pub mod moments;
pub mod numfield;
pub mod poly;
pub mod serial;
pub mod verify;

pub use construct::{ChebyCaseParams, Instance, PowerCaseParams, Provenance, Witnesses};
pub use decomp::FactorEntry;
pub use error::{Error, Result};
pub use numfield::{ComplexApprox, CycElem, CyclotomicContext, Field, Rational};
pub use poly::{Degree, Poly};
pub use verify::Report;
