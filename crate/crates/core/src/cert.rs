//! JSON certificates exchanged with the command line tool.
//!
//! A certificate names its category and carries one of three bodies:
//!
//! ```json
//! {"schema":"torsion/1","category":{"shape":"linearA","n":2},"torsion":[[2,2]],"free":[[1,1]]}
//! {"schema":"torsion/1","category":{"shape":"linearA","n":2},"parts":[[[2,2]],[[1,1]],[]]}
//! {"schema":"torsion/1","category":{"shape":"cyclicA","n":2},"tube":{"rank":2,"kind":1,"delta":[1],"residual_partition":[[2]]}}
//! ```
//!
//! A file may hold one certificate, a JSON array of them, or one per line.

use serde::{Deserialize, Serialize};

use crate::an::{Interval, LinearCategory};
use crate::category::{everything, Subcategory};
use crate::classify_tube::{check_l_r, tube_pair_descriptors, TubeTorsionPair};
use crate::error::{Error, Result};
use crate::oracle::{check_tube_tp_truncated, TruncatedViolation};
use crate::quiver::{Quiver, Shape};
use crate::torsion::{is_ntp, is_torsion_pair, TorsionPair};

pub const SCHEMA: &str = "torsion/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Body {
    Pair {
        torsion: Subcategory<Interval>,
        free: Subcategory<Interval>,
    },
    Parts {
        parts: Vec<Subcategory<Interval>>,
    },
    Tube {
        tube: TubeTorsionPair,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub category: Quiver,
    #[serde(flatten)]
    pub body: Body,
}

impl Certificate {
    pub fn pair(category: Quiver, tp: TorsionPair<Interval>) -> Self {
        Certificate {
            schema: SCHEMA.into(),
            category,
            body: Body::Pair { torsion: tp.torsion, free: tp.free },
        }
    }

    pub fn tube(data: TubeTorsionPair) -> Result<Self> {
        Ok(Certificate { schema: SCHEMA.into(), category: Quiver::cyclic_an(data.rank)?, body: Body::Tube { tube: data } })
    }

    /// The linear category and pair of a pair certificate.
    pub fn linear_pair(&self) -> Result<(LinearCategory, TorsionPair<Interval>)> {
        match &self.body {
            Body::Pair { torsion, free } => {
                let cat = LinearCategory::new(self.category.clone())
                    .map_err(|e| Error::MalformedCertificate(e.to_string()))?;
                cat.check_all(torsion.iter().chain(free.iter()))
                    .map_err(|e| Error::MalformedCertificate(e.to_string()))?;
                Ok((cat, TorsionPair::new(torsion.clone(), free.clone())))
            }
            _ => Err(Error::MalformedCertificate("expected a torsion/free certificate".into())),
        }
    }
}

fn parse_one(value: serde_json::Value) -> Result<Certificate> {
    let cert: Certificate = serde_json::from_value(value).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    if cert.schema != SCHEMA {
        return Err(Error::MalformedCertificate(format!("unknown schema {:?}", cert.schema)));
    }
    Ok(cert)
}

/// Reads one certificate, an array, or newline-separated certificates.
pub fn parse_certificates(text: &str) -> Result<Vec<Certificate>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::MalformedCertificate("empty input".into()));
    }
    match serde_json::from_str::<serde_json::Value>(trimmed) {
        Ok(serde_json::Value::Array(items)) => items.into_iter().map(parse_one).collect(),
        Ok(value) => Ok(vec![parse_one(value)?]),
        Err(_) => trimmed
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let value = serde_json::from_str(l).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
                parse_one(value)
            })
            .collect(),
    }
}

/// Result of checking a well-formed certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn pass(detail: impl Into<String>) -> Self {
        Verdict { passed: true, detail: detail.into() }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Verdict { passed: false, detail: detail.into() }
    }
}

/// Checks a certificate. Errors mean the certificate itself is malformed.
pub fn verify(cert: &Certificate, cap: u32) -> Result<Verdict> {
    match &cert.body {
        Body::Pair { .. } => {
            let (cat, tp) = cert.linear_pair()?;
            Ok(match is_torsion_pair(&cat, &everything(&cat), &tp.torsion, &tp.free) {
                Ok(()) => Verdict::pass("torsion pair"),
                Err(v) => Verdict::fail(v.to_string()),
            })
        }
        Body::Parts { parts } => {
            let cat = LinearCategory::new(cert.category.clone()).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
            for part in parts {
                cat.check_all(part.iter()).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
            }
            Ok(match is_ntp(&cat, &everything(&cat), parts) {
                Ok(()) => Verdict::pass(format!("{}-torsion pair", parts.len().saturating_sub(1))),
                Err(v) => Verdict::fail(v.to_string()),
            })
        }
        Body::Tube { tube } => {
            if cert.category.shape() != Shape::CyclicA || cert.category.len() as u32 != tube.rank {
                return Err(Error::MalformedCertificate("tube certificates need the matching cyclic quiver".into()));
            }
            if let Err(e) = tube_pair_descriptors(tube) {
                return Ok(Verdict::fail(e.to_string()));
            }
            let l_r = match check_l_r(tube) {
                Ok(sets) => sets,
                Err(e) => return Ok(Verdict::fail(e.to_string())),
            };
            for c in 2..=cap {
                match check_tube_tp_truncated(tube, c)? {
                    Ok(()) => {}
                    Err(TruncatedViolation::Hom { torsion, free }) => {
                        return Ok(Verdict::fail(format!("orthogonality fails at cap {c}: Hom({torsion}, {free}) != 0")))
                    }
                    Err(TruncatedViolation::NoCanonicalSequence(x)) => {
                        return Ok(Verdict::fail(format!("canonical sequence fails at cap {c} for {x}")))
                    }
                }
            }
            Ok(Verdict::pass(format!("tube torsion pair up to length {cap}, infinite tops {:?}, socles {:?}", l_r.0, l_r.1)))
        }
    }
}
