//! JSON documents and command-line spellings for the core types.
//!
//! Partitions are integer arrays (`[4,2,1]`, `∅` is `[]`), strip lists are
//! `[[r,m,t],…]`, identities are `{"lhs":[{"coeff":1,"factors":[[2,1,1],[1]]}],"rhs":[…]}`
//! and evaluation points are arrays of exact rationals written as strings
//! (`"3"`, `"-7/2"`).

use schurid_core::plucker::SelfTestReport;
use schurid_core::{Identity, Partition, StripSpec, Term, VerificationReport};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Core(#[from] schurid_core::Error),
    #[error("`{0}` is not a non-negative integer")]
    NotAnInteger(String),
    #[error("strip `{0}` is not of the form r:m:t")]
    StripSyntax(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: i64,
    pub factors: [Vec<u32>; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityDoc {
    pub lhs: Vec<TermDoc>,
    pub rhs: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub verified: bool,
    pub points_checked: usize,
    pub counterexample: Option<Vec<String>>,
}

/// An identity together with its verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckedDoc {
    pub identity: IdentityDoc,
    pub report: ReportDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfTestDoc {
    pub trials: usize,
    pub checks: usize,
    pub failures: usize,
}

impl From<&Term> for TermDoc {
    fn from(t: &Term) -> Self {
        TermDoc { coeff: t.coeff, factors: [t.factors[0].parts().to_vec(), t.factors[1].parts().to_vec()] }
    }
}

impl TryFrom<&TermDoc> for Term {
    type Error = FormatError;

    fn try_from(doc: &TermDoc) -> Result<Self, FormatError> {
        Ok(Term::new(doc.coeff, Partition::new(&doc.factors[0])?, Partition::new(&doc.factors[1])?))
    }
}

impl From<&Identity> for IdentityDoc {
    fn from(id: &Identity) -> Self {
        IdentityDoc {
            lhs: id.lhs.iter().map(TermDoc::from).collect(),
            rhs: id.rhs.iter().map(TermDoc::from).collect(),
        }
    }
}

impl TryFrom<&IdentityDoc> for Identity {
    type Error = FormatError;

    fn try_from(doc: &IdentityDoc) -> Result<Self, FormatError> {
        let side = |terms: &[TermDoc]| terms.iter().map(Term::try_from).collect::<Result<Vec<_>, _>>();
        Ok(Identity::new(side(&doc.lhs)?, side(&doc.rhs)?)?)
    }
}

impl From<&VerificationReport> for ReportDoc {
    fn from(r: &VerificationReport) -> Self {
        ReportDoc {
            verified: r.verified,
            points_checked: r.points_checked,
            counterexample: r
                .counterexample
                .as_ref()
                .map(|pt| pt.coords().iter().map(ToString::to_string).collect()),
        }
    }
}

impl From<&SelfTestReport> for SelfTestDoc {
    fn from(r: &SelfTestReport) -> Self {
        SelfTestDoc { trials: r.trials, checks: r.checks, failures: r.failures }
    }
}

pub fn identity_to_json(id: &Identity) -> String {
    serde_json::to_string(&IdentityDoc::from(id)).expect("identity documents always serialize")
}

pub fn identity_from_json(text: &str) -> Result<Identity, FormatError> {
    let doc: IdentityDoc = serde_json::from_str(text)?;
    Identity::try_from(&doc)
}

pub fn specs_to_json(specs: &[StripSpec]) -> serde_json::Value {
    specs.iter().map(|s| serde_json::json!([s.r, s.m, s.t])).collect()
}

/// `"4,2,1"`; the empty string is `∅`.
pub fn parse_partition(text: &str) -> Result<Partition, FormatError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = text
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| FormatError::NotAnInteger(p.trim().to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(&parts)?)
}

/// `"r:m:t,r:m:t"`. Only the syntax is checked here; whether the strips fit
/// a diagram is decided against the diagram.
pub fn parse_specs(text: &str) -> Result<Vec<StripSpec>, FormatError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|chunk| {
            let fields: Vec<&str> = chunk.trim().split(':').collect();
            let [r, m, t] = fields[..] else {
                return Err(FormatError::StripSyntax(chunk.trim().to_string()));
            };
            let num = |s: &str| s.parse::<u32>().map_err(|_| FormatError::NotAnInteger(s.to_string()));
            Ok(StripSpec::new(num(r)? as usize, num(m)? as usize, num(t)?))
        })
        .collect()
}

pub fn format_specs(specs: &[StripSpec]) -> String {
    specs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
