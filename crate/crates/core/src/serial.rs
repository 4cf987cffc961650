//! JSON encodings of scalars and polynomials.
//!
//! Rationals are strings (`"p/q"`, or `"p"` for integers). Cyclotomic elements
//! are `{"order": k, "coords": [...]}` with exactly φ(k) coordinates.
//! Polynomials are `{"field": "rational" | {"cyclotomic": k}, "coeffs": [...]}`
//! with coefficients in ascending degree.

use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numfield::{CycElem, CyclotomicContext, Rational};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldDoc {
    Rational,
    Cyclotomic(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycElemDoc {
    pub order: u64,
    pub coords: Vec<Rational>,
}

impl CycElemDoc {
    pub fn from_elem(x: &CycElem) -> Self {
        CycElemDoc {
            order: x.order(),
            coords: x.coords().to_vec(),
        }
    }

    /// Materializes the element in `ctx`, which must have the same order.
    pub fn to_elem(&self, ctx: &Arc<CyclotomicContext>) -> Result<CycElem> {
        if ctx.order() != self.order {
            return Err(Error::ContextMismatch {
                left: ctx.order(),
                right: self.order,
            });
        }
        ctx.from_coords(self.coords.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDoc {
    Rational(Rational),
    Cyclotomic(CycElemDoc),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub field: FieldDoc,
    pub coeffs: Vec<ScalarDoc>,
}

impl PolyDoc {
    pub fn from_rational(p: &Poly<Rational>) -> Self {
        PolyDoc {
            field: FieldDoc::Rational,
            coeffs: p
                .coeffs()
                .iter()
                .cloned()
                .map(ScalarDoc::Rational)
                .collect(),
        }
    }

    pub fn from_cyclotomic(order: u64, p: &Poly<CycElem>) -> Self {
        PolyDoc {
            field: FieldDoc::Cyclotomic(order),
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| ScalarDoc::Cyclotomic(CycElemDoc::from_elem(c)))
                .collect(),
        }
    }

    pub fn to_rational(&self) -> Result<Poly<Rational>> {
        if self.field != FieldDoc::Rational {
            return Err(Error::Parse(
                "expected a polynomial over the rationals".into(),
            ));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match c {
                ScalarDoc::Rational(q) => Ok(q.clone()),
                ScalarDoc::Cyclotomic(_) => Err(Error::Parse(
                    "cyclotomic coefficient in a rational polynomial".into(),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    pub fn to_cyclotomic(&self, ctx: &Arc<CyclotomicContext>) -> Result<Poly<CycElem>> {
        match self.field {
            FieldDoc::Cyclotomic(k) if k == ctx.order() => {}
            _ => {
                return Err(Error::Parse(format!(
                    "expected a polynomial over Q(zeta_{})",
                    ctx.order()
                )))
            }
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match c {
                ScalarDoc::Rational(q) => Ok(ctx.embed(q)),
                ScalarDoc::Cyclotomic(doc) => doc.to_elem(ctx),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl Serialize for Poly<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyDoc::from_rational(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        PolyDoc::deserialize(deserializer)?
            .to_rational()
            .map_err(serde::de::Error::custom)
    }
}
