//! JSON record formats.
//!
//! Rationals are strings (`"p/q"` or `"p"`), always written in lowest terms.
//! Polynomials are arrays of such strings in ascending degree, so
//! `["1/4","31/2","-31/4","1"]` is `λ³ − 31/4·λ² + 31/2·λ + 1/4`.
//! [`to_canonical_string`] sorts object keys so output is byte-stable.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alphafrac::{AlphaSequence, AlphaTriple, Expansion, VerificationReport};
use crate::error::Error;
use crate::jacobi::{CurvePoint, Divisor, JacobiTriple};
use crate::polyring::{parse_rational, Polynomial, Rational};
use crate::symmetry::{Generator, GroupWord, Orbit};

/// Failure to turn a JSON record into a domain value.
#[derive(Debug, Error)]
pub enum DecodeError {
    /// The payload does not match the schema.
    #[error("malformed input: {0}")]
    Malformed(String),
    /// The payload parsed but violates a domain invariant.
    #[error(transparent)]
    Domain(#[from] Error),
}

impl From<serde_json::Error> for DecodeError {
    fn from(e: serde_json::Error) -> Self {
        DecodeError::Malformed(e.to_string())
    }
}

pub type DecodeResult<T> = std::result::Result<T, DecodeError>;

pub fn rational_to_json(x: &Rational) -> String {
    x.to_string()
}

pub fn rational_from_json(s: &str) -> DecodeResult<Rational> {
    parse_rational(s).ok_or_else(|| DecodeError::Malformed(format!("not a rational: {s:?}")))
}

pub fn poly_to_json(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(rational_to_json).collect()
}

pub fn poly_from_json(v: &[String]) -> DecodeResult<Polynomial> {
    Ok(Polynomial::new(
        v.iter().map(|s| rational_from_json(s)).collect::<DecodeResult<_>>()?,
    ))
}

pub fn alpha_from_json(v: &[String]) -> DecodeResult<AlphaSequence> {
    let vals = v.iter().map(|s| rational_from_json(s)).collect::<DecodeResult<_>>()?;
    Ok(AlphaSequence::new(vals)?)
}

pub fn alpha_to_json(a: &AlphaSequence) -> Vec<String> {
    a.values().iter().map(rational_to_json).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    pub b0: String,
    pub block: Vec<String>,
    pub alpha: Vec<String>,
}

impl From<&Expansion> for ExpansionRecord {
    fn from(e: &Expansion) -> Self {
        ExpansionRecord {
            b0: rational_to_json(e.b0()),
            block: e.block().iter().map(rational_to_json).collect(),
            alpha: alpha_to_json(e.alpha()),
        }
    }
}

impl ExpansionRecord {
    pub fn decode(&self) -> DecodeResult<Expansion> {
        let block = self
            .block
            .iter()
            .map(|s| rational_from_json(s))
            .collect::<DecodeResult<_>>()?;
        Ok(Expansion::new(
            rational_from_json(&self.b0)?,
            block,
            alpha_from_json(&self.alpha)?,
        )?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRecord {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
    #[serde(rename = "C")]
    pub c: Vec<String>,
}

impl From<&AlphaTriple> for TripleRecord {
    fn from(t: &AlphaTriple) -> Self {
        TripleRecord {
            a: poly_to_json(t.a()),
            b: poly_to_json(t.b()),
            c: poly_to_json(t.c()),
        }
    }
}

impl TripleRecord {
    pub fn decode(&self) -> DecodeResult<AlphaTriple> {
        Ok(AlphaTriple::new(
            poly_from_json(&self.a)?,
            poly_from_json(&self.b)?,
            poly_from_json(&self.c)?,
        )?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> Self {
        ReportRecord {
            pass: r.pass,
            checks: r
                .checks
                .iter()
                .map(|c| CheckRecord {
                    name: c.name.clone(),
                    pass: c.pass,
                    detail: c.detail.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiRecord {
    #[serde(rename = "U")]
    pub u: Vec<String>,
    #[serde(rename = "V")]
    pub v: Vec<String>,
    #[serde(rename = "W")]
    pub w: Vec<String>,
    #[serde(rename = "R")]
    pub r: Vec<String>,
}

impl From<&JacobiTriple> for JacobiRecord {
    fn from(j: &JacobiTriple) -> Self {
        JacobiRecord {
            u: poly_to_json(j.u()),
            v: poly_to_json(j.v()),
            w: poly_to_json(j.w()),
            r: poly_to_json(j.r()),
        }
    }
}

impl JacobiRecord {
    pub fn decode(&self) -> DecodeResult<JacobiTriple> {
        Ok(JacobiTriple::new(
            poly_from_json(&self.u)?,
            poly_from_json(&self.v)?,
            poly_from_json(&self.w)?,
            poly_from_json(&self.r)?,
        )?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub lambda: String,
    pub mu: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorRecord {
    pub points: Vec<PointRecord>,
    #[serde(rename = "R")]
    pub r: Vec<String>,
}

impl From<&Divisor> for DivisorRecord {
    fn from(d: &Divisor) -> Self {
        DivisorRecord {
            points: d
                .points()
                .iter()
                .map(|p| PointRecord {
                    lambda: rational_to_json(&p.lambda),
                    mu: rational_to_json(&p.mu),
                })
                .collect(),
            r: poly_to_json(d.r()),
        }
    }
}

impl DivisorRecord {
    pub fn decode(&self) -> DecodeResult<Divisor> {
        let points = self
            .points
            .iter()
            .map(|p| Ok(CurvePoint::new(rational_from_json(&p.lambda)?, rational_from_json(&p.mu)?)))
            .collect::<DecodeResult<_>>()?;
        Ok(Divisor::new(points, poly_from_json(&self.r)?)?)
    }
}

/// `["sigma:1", "epspi", …]`.
pub fn word_from_json(v: &[String]) -> DecodeResult<GroupWord> {
    v.iter()
        .map(|s| s.parse::<Generator>().map_err(DecodeError::Malformed))
        .collect()
}

pub fn word_to_json(w: &GroupWord) -> Vec<String> {
    w.letters().iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedEdgeRecord {
    /// Index into `expansions`.
    pub from: usize,
    pub generator: String,
    pub error: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub expansions: Vec<ExpansionRecord>,
    pub complete: bool,
    pub skipped_edges: Vec<SkippedEdgeRecord>,
}

impl From<&Orbit> for OrbitRecord {
    fn from(o: &Orbit) -> Self {
        OrbitRecord {
            expansions: o.expansions.iter().map(ExpansionRecord::from).collect(),
            complete: o.is_complete(),
            skipped_edges: o
                .skipped_edges
                .iter()
                .map(|s| SkippedEdgeRecord {
                    from: o.index_of(&s.from).expect("edge source is in the orbit"),
                    generator: s.generator.to_string(),
                    error: s.reason.code().to_string(),
                    detail: s.reason.to_string(),
                })
                .collect(),
        }
    }
}

/// Pretty JSON with sorted object keys and a trailing newline.
pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("records always serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values always serialize");
    s.push('\n');
    s
}
