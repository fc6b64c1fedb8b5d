//! JSON documents for certificates. Polynomials and field elements are
//! stored in the text grammar so artifacts stay human-auditable.

use serde::{Deserialize, Serialize};

use super::{BbCertificate, BbChecks, ConstructError};
use crate::arith::parse::{parse_elem, parse_param, parse_poly};
use crate::arith::{FieldElem, FieldSpec};
use crate::galois::{Evidence, GroupCertificate, GroupLabel, SquareClass, SquareWitness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EvidenceDoc {
    CycleType { prime: u64, cycle_type: Vec<usize> },
    Discriminant { value: String, is_square: bool, witness: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupCertificateDoc {
    pub field: String,
    pub polynomial: String,
    pub discriminant: String,
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub evidence: Vec<EvidenceDoc>,
    pub budget_used: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BbCertificateDoc {
    pub field: String,
    pub input_stem: String,
    pub target_n: usize,
    #[serde(rename = "R")]
    pub r: String,
    pub node_a: String,
    pub fiber0: String,
    pub fiber1: String,
    #[serde(rename = "fiberA")]
    pub fiber_a: String,
    pub sn_cert: GroupCertificateDoc,
    pub checks: BbChecks,
    pub assumptions: Vec<String>,
    pub prime_budget: u64,
}

fn bad(msg: impl std::fmt::Display) -> ConstructError {
    ConstructError::BadDocument(msg.to_string())
}

fn witness_string(field: &FieldSpec, w: &SquareWitness) -> String {
    match w {
        SquareWitness::Root(r) => format!("root {}", field.format_elem(r)),
        SquareWitness::Negative => "negative".into(),
        SquareWitness::NonResidueMod(p) => format!("nonresidue mod {p}"),
        SquareWitness::Euler(v) => format!("euler {}", field.format_elem(v)),
        SquareWitness::PerfectField => "characteristic 2".into(),
    }
}

fn parse_witness(field: &FieldSpec, s: &str) -> Result<SquareWitness, ConstructError> {
    let elem = |t: &str| parse_elem(field, t).map_err(bad);
    if let Some(rest) = s.strip_prefix("root ") {
        Ok(SquareWitness::Root(elem(rest)?))
    } else if let Some(rest) = s.strip_prefix("euler ") {
        Ok(SquareWitness::Euler(elem(rest)?))
    } else if let Some(rest) = s.strip_prefix("nonresidue mod ") {
        Ok(SquareWitness::NonResidueMod(rest.parse().map_err(bad)?))
    } else if s == "negative" {
        Ok(SquareWitness::Negative)
    } else if s == "characteristic 2" {
        Ok(SquareWitness::PerfectField)
    } else {
        Err(bad(format!("unknown square witness {s:?}")))
    }
}

fn parse_label(s: &str, reason: Option<&String>) -> Result<GroupLabel, ConstructError> {
    if s == "inconclusive" {
        return Ok(GroupLabel::Inconclusive(reason.cloned().unwrap_or_default()));
    }
    if let Some(inner) = s.strip_prefix("reducible (").and_then(|r| r.strip_suffix(')')) {
        let parts = inner.split(',').map(|d| d.trim().parse::<usize>()).collect::<Result<Vec<_>, _>>();
        return parts.map(GroupLabel::Reducible).map_err(bad);
    }
    let num = |t: &str| t.parse::<usize>().map_err(bad);
    match (s.strip_prefix('S'), s.strip_prefix('C')) {
        (Some(n), _) => Ok(GroupLabel::Symmetric(num(n)?)),
        (_, Some(n)) => Ok(GroupLabel::Cyclic(num(n)?)),
        _ => Err(bad(format!("unknown group label {s:?}"))),
    }
}

impl GroupCertificateDoc {
    pub fn from_cert(c: &GroupCertificate) -> Self {
        let field = c.polynomial.field();
        let evidence = c
            .evidence
            .iter()
            .map(|e| match e {
                Evidence::CycleType { prime, cycle_type } => {
                    EvidenceDoc::CycleType { prime: *prime, cycle_type: cycle_type.clone() }
                }
                Evidence::Discriminant { value, class } => EvidenceDoc::Discriminant {
                    value: field.format_elem(value),
                    is_square: class.is_square,
                    witness: witness_string(field, &class.witness),
                },
            })
            .collect();
        GroupCertificateDoc {
            field: field.to_string(),
            polynomial: c.polynomial.to_string(),
            discriminant: field.format_elem(&c.discriminant),
            group: c.group.to_string(),
            reason: match &c.group {
                GroupLabel::Inconclusive(r) => Some(r.clone()),
                _ => None,
            },
            evidence,
            budget_used: c.budget_used,
        }
    }

    pub fn to_cert(&self) -> Result<GroupCertificate, ConstructError> {
        let field: FieldSpec = self.field.parse()?;
        let elem = |t: &str| -> Result<FieldElem, ConstructError> { parse_elem(&field, t).map_err(bad) };
        let evidence = self
            .evidence
            .iter()
            .map(|e| match e {
                EvidenceDoc::CycleType { prime, cycle_type } => {
                    Ok(Evidence::CycleType { prime: *prime, cycle_type: cycle_type.clone() })
                }
                EvidenceDoc::Discriminant { value, is_square, witness } => Ok(Evidence::Discriminant {
                    value: elem(value)?,
                    class: SquareClass { is_square: *is_square, witness: parse_witness(&field, witness)? },
                }),
            })
            .collect::<Result<Vec<_>, ConstructError>>()?;
        Ok(GroupCertificate {
            polynomial: parse_poly(&field, &self.polynomial).map_err(bad)?,
            discriminant: elem(&self.discriminant)?,
            group: parse_label(&self.group, self.reason.as_ref())?,
            evidence,
            budget_used: self.budget_used,
        })
    }
}

impl BbCertificateDoc {
    pub fn from_cert(c: &BbCertificate) -> Self {
        let q = c.r.field();
        BbCertificateDoc {
            field: q.to_string(),
            input_stem: c.input_stem.to_string(),
            target_n: c.target_n,
            r: c.r.to_string(),
            node_a: q.format_elem(&c.node_a),
            fiber0: c.fiber0.to_string(),
            fiber1: c.fiber1.to_string(),
            fiber_a: c.fiber_a.to_string(),
            sn_cert: GroupCertificateDoc::from_cert(&c.sn_cert),
            checks: c.checks,
            assumptions: c.assumptions.clone(),
            prime_budget: c.prime_budget,
        }
    }

    pub fn to_cert(&self) -> Result<BbCertificate, ConstructError> {
        let field: FieldSpec = self.field.parse()?;
        let poly = |t: &str| parse_poly(&field, t).map_err(bad);
        Ok(BbCertificate {
            input_stem: poly(&self.input_stem)?,
            target_n: self.target_n,
            r: parse_param(&field, &self.r)?,
            node_a: parse_elem(&field, &self.node_a).map_err(bad)?,
            fiber0: poly(&self.fiber0)?,
            fiber1: poly(&self.fiber1)?,
            fiber_a: poly(&self.fiber_a)?,
            sn_cert: self.sn_cert.to_cert()?,
            checks: self.checks,
            assumptions: self.assumptions.clone(),
            prime_budget: self.prime_budget,
        })
    }
}

impl BbCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&BbCertificateDoc::from_cert(self)).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, ConstructError> {
        let doc: BbCertificateDoc = serde_json::from_str(s).map_err(bad)?;
        doc.to_cert()
    }
}
