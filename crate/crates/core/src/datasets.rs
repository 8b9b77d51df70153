//! Canned worked examples, usable as fixtures.
//!
//! Each dataset pairs an α-triple and α-sequence with the expansions it is
//! known to have. The values are written out literally rather than computed,
//! so they can be checked against the library.

use serde::Serialize;

use crate::alphafrac::{AlphaSequence, AlphaTriple, Expansion};
use crate::error::{Error, Result};
use crate::json::{alpha_to_json, poly_to_json, ExpansionRecord, TripleRecord};
use crate::polyring::{frac, int, Polynomial, Rational};

pub const NAMES: [&str; 4] = ["sect4", "n1-periodic", "n1-pure", "pure-n3"];

#[derive(Clone, Debug)]
pub struct Dataset {
    pub name: &'static str,
    pub description: &'static str,
    pub triple: AlphaTriple,
    pub alpha: AlphaSequence,
    pub pure: bool,
    /// For periodic datasets, consecutive pairs are the `+S` and `−S`
    /// expansions for one ordering of α.
    pub expansions: Vec<Expansion>,
}

#[derive(Serialize)]
struct DatasetRecord {
    name: String,
    description: String,
    triple: TripleRecord,
    #[serde(rename = "R")]
    r: Vec<String>,
    alpha: Vec<String>,
    pure: bool,
    expansions: Vec<ExpansionRecord>,
}

impl Dataset {
    pub fn to_json(&self) -> serde_json::Value {
        let rec = DatasetRecord {
            name: self.name.into(),
            description: self.description.into(),
            triple: TripleRecord::from(&self.triple),
            r: poly_to_json(&self.triple.discriminant()),
            alpha: alpha_to_json(&self.alpha),
            pure: self.pure,
            expansions: self.expansions.iter().map(ExpansionRecord::from).collect(),
        };
        serde_json::to_value(rec).expect("dataset serializes")
    }
}

pub fn example(name: &str) -> Result<Dataset> {
    match name {
        "sect4" => Ok(sect4()),
        "n1-periodic" => Ok(n1_periodic()),
        "n1-pure" => Ok(n1_pure()),
        "pure-n3" => Ok(pure_n3()),
        other => Err(Error::UnknownExample(other.to_string())),
    }
}

fn ex(b0: Rational, block: Vec<Rational>, alpha: [i64; 3]) -> Expansion {
    Expansion::new(b0, block, AlphaSequence::from_ints(&alpha).unwrap()).unwrap()
}

/// `φ = (3λ − 7 + √(4λ³ − 31λ² + 62λ + 1)) / (2(λ − 6))` with α = (1, 3, 4)
/// and its twelve expansions, two per ordering of α.
pub fn sect4() -> Dataset {
    let triple = AlphaTriple::new(
        Polynomial::from_ints(&[-6, 1]),
        Polynomial::new(vec![frac(7, 2), frac(-3, 2)]),
        Polynomial::from_ints(&[-2, 4, -1]),
    )
    .unwrap();
    let expansions = vec![
        ex(int(1), vec![int(-3), int(1), int(3)], [1, 3, 4]),
        ex(frac(-1, 5), vec![frac(-15, 6), frac(6, 5), frac(3, 10)], [1, 3, 4]),
        ex(int(1), vec![int(-2), int(1), int(2)], [1, 4, 3]),
        ex(frac(-1, 5), vec![frac(-5, 3), frac(6, 5), frac(-8, 15)], [1, 4, 3]),
        ex(frac(1, 3), vec![int(-3), frac(5, 3), frac(7, 3)], [3, 1, 4]),
        ex(int(-1), vec![frac(-15, 6), int(2), frac(-1, 2)], [3, 1, 4]),
        ex(frac(1, 3), vec![frac(-6, 5), frac(5, 3), frac(8, 15)], [3, 4, 1]),
        ex(int(-1), vec![int(-1), int(2), int(-2)], [3, 4, 1]),
        ex(frac(-1, 2), vec![frac(-6, 5), frac(15, 6), frac(-3, 10)], [4, 3, 1]),
        ex(int(-2), vec![int(-1), int(3), int(-3)], [4, 3, 1]),
        ex(frac(-1, 2), vec![int(-2), frac(15, 6), frac(1, 2)], [4, 1, 3]),
        ex(int(-2), vec![frac(-5, 3), int(3), frac(-7, 3)], [4, 1, 3]),
    ];
    Dataset {
        name: "sect4",
        description: "genus-1 example: A = λ - 6, B = -(3λ - 7)/2, C = -λ² + 4λ - 2, α = (1, 3, 4); two expansions for each ordering of α",
        triple,
        alpha: AlphaSequence::from_ints(&[1, 3, 4]).unwrap(),
        pure: false,
        expansions,
    }
}

/// `φ = −β + √(λ + γ)` with β = 1, γ = 2, α₁ = 1, so `β² + α₁ + γ = 4` and
/// `b₀ = −β ± 2`, `b₁ − b₀ = β ± 2`.
pub fn n1_periodic() -> Dataset {
    let alpha = AlphaSequence::from_ints(&[1]).unwrap();
    let e = |b0: i64, b1: i64| Expansion::new(int(b0), vec![int(b1)], alpha.clone()).unwrap();
    Dataset {
        name: "n1-periodic",
        description: "period 1: A = 1, B = 1, C = -(λ + 2), α = (1)",
        triple: AlphaTriple::new(
            Polynomial::one(),
            Polynomial::one(),
            Polynomial::from_ints(&[-2, -1]),
        )
        .unwrap(),
        alpha: alpha.clone(),
        pure: false,
        expansions: vec![e(1, 4), e(-3, -4)],
    }
}

/// `φ = −β + √(λ − α₁)` with β = 1, α₁ = 0: the pure expansion has
/// `b₀ = b₁ = −2β`.
pub fn n1_pure() -> Dataset {
    let alpha = AlphaSequence::from_ints(&[0]).unwrap();
    Dataset {
        name: "n1-pure",
        description: "pure period 1: A = 1, B = 1, C = -λ, α = (0)",
        triple: AlphaTriple::new(Polynomial::one(), Polynomial::one(), Polynomial::from_ints(&[0, -1]))
            .unwrap(),
        alpha: alpha.clone(),
        pure: true,
        expansions: vec![Expansion::new(int(-2), vec![int(-2)], alpha).unwrap()],
    }
}

pub fn pure_n3() -> Dataset {
    Dataset {
        name: "pure-n3",
        description: "pure period 3: A = λ, B = -(λ + 2)/2, C = -(λ - 2)(λ + 1), α = (0, 1, 2)",
        triple: AlphaTriple::new(
            Polynomial::x(),
            Polynomial::new(vec![int(-1), frac(-1, 2)]),
            Polynomial::from_ints(&[2, 1, -1]),
        )
        .unwrap(),
        alpha: AlphaSequence::from_ints(&[0, 1, 2]).unwrap(),
        pure: true,
        expansions: vec![ex(int(1), vec![int(1), int(1), int(1)], [0, 1, 2])],
    }
}
