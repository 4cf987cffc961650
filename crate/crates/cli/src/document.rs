//! Versioned JSON interchange for instances.

use anyhow::{bail, Context};
use pmcx_core::serial::CycElemDoc;
use pmcx_core::{
    ChebyCaseParams, CyclotomicContext, Instance, Poly, PowerCaseParams, Provenance, Rational,
    Witnesses,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1.0";

/// Generator parameters recorded alongside an instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum ParamsDoc {
    Power {
        m: usize,
        n: usize,
        #[serde(rename = "R")]
        r: Poly<Rational>,
        c: Rational,
        roots: [usize; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        outer: Option<Poly<Rational>>,
    },
    Chebyshev {
        n: usize,
        m: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        outer: Option<Poly<Rational>>,
    },
}

impl From<&Provenance> for ParamsDoc {
    fn from(p: &Provenance) -> Self {
        match p {
            Provenance::Power(pp) => ParamsDoc::Power {
                m: pp.m,
                n: pp.n,
                r: pp.r.clone(),
                c: pp.c.clone(),
                roots: [pp.root_pair.0, pp.root_pair.1],
                outer: pp.outer.clone(),
            },
            Provenance::Chebyshev(cp) => ParamsDoc::Chebyshev {
                n: cp.n,
                m: cp.m,
                outer: cp.outer.clone(),
            },
        }
    }
}

impl From<ParamsDoc> for Provenance {
    fn from(doc: ParamsDoc) -> Self {
        match doc {
            ParamsDoc::Power {
                m,
                n,
                r,
                c,
                roots,
                outer,
            } => Provenance::Power(PowerCaseParams {
                m,
                n,
                r,
                c,
                root_pair: (roots[0], roots[1]),
                outer,
            }),
            ParamsDoc::Chebyshev { n, m, outer } => {
                Provenance::Chebyshev(ChebyCaseParams { n, m, outer })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub schema_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsDoc>,
    pub field_order: u64,
    #[serde(rename = "P")]
    pub p: Poly<Rational>,
    #[serde(rename = "Q")]
    pub q: Poly<Rational>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub witness_b: Option<Poly<Rational>>,
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub witness_d: Option<Poly<Rational>>,
    pub a: CycElemDoc,
    pub b: CycElemDoc,
}

impl InstanceDocument {
    pub fn from_instance(inst: &Instance) -> Self {
        InstanceDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            params: inst.provenance.as_ref().map(ParamsDoc::from),
            field_order: inst.field_order,
            p: inst.p.clone(),
            q: inst.q.clone(),
            witness_b: inst.witnesses.as_ref().map(|w| w.b.clone()),
            witness_d: inst.witnesses.as_ref().map(|w| w.d.clone()),
            a: CycElemDoc::from_elem(&inst.a),
            b: CycElemDoc::from_elem(&inst.b),
        }
    }

    pub fn to_instance(&self) -> anyhow::Result<Instance> {
        check_version(&self.schema_version)?;
        let ctx = CyclotomicContext::new(self.field_order).context("invalid field_order")?;
        let a = self.a.to_elem(&ctx).context("endpoint a")?;
        let b = self.b.to_elem(&ctx).context("endpoint b")?;
        let witnesses = match (&self.witness_b, &self.witness_d) {
            (Some(b), Some(d)) => Some(Witnesses {
                b: b.clone(),
                d: d.clone(),
            }),
            (None, None) => None,
            _ => bail!("B and D must be given together"),
        };
        Ok(Instance {
            field_order: self.field_order,
            p: self.p.clone(),
            q: self.q.clone(),
            a,
            b,
            witnesses,
            provenance: self.params.clone().map(Provenance::from),
        })
    }
}

/// Accepts any 1.x version.
pub fn check_version(version: &str) -> anyhow::Result<()> {
    let major = version.split('.').next().unwrap_or_default();
    if major != "1" {
        bail!("unsupported schema_version {version:?} (this build reads 1.x)");
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> anyhow::Result<Instance> {
    let doc: InstanceDocument =
        serde_json::from_str(text).context("malformed instance document")?;
    doc.to_instance()
}
