use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{rational_to_f64, Rational};

use super::convergents::convergents;
use super::expand::expansion_to_triple;
use super::types::{AlphaTriple, Expansion};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub pass: bool,
    pub checks: Vec<Check>,
}

/// Recomputes the triple of `e` and compares it with `triple`, and checks
/// `P_N Q_{N−1} − P_{N−1} Q_N = 𝔄`.
pub fn verify_expansion(e: &Expansion, triple: &AlphaTriple) -> VerificationReport {
    let mut checks = Vec::new();
    match expansion_to_triple(e) {
        Ok((got, _)) => {
            for (name, ours, theirs) in [
                ("A", got.a(), triple.a()),
                ("B", got.b(), triple.b()),
                ("C", got.c(), triple.c()),
            ] {
                checks.push(Check {
                    name: name.into(),
                    pass: ours == theirs,
                    detail: format!("expansion gives {ours}, expected {theirs}"),
                });
            }
        }
        Err(err) => checks.push(Check {
            name: "triple".into(),
            pass: false,
            detail: err.to_string(),
        }),
    }

    let conv = convergents(e);
    let n = e.period();
    let (last, prev) = (&conv[n + 1], &conv[n]);
    let det = &last.p * &prev.q - &prev.p * &last.q;
    let target = e.alpha().polynomial();
    checks.push(Check {
        name: "determinant_identity".into(),
        pass: det == target,
        detail: format!("P_N Q_(N-1) - P_(N-1) Q_N = {det}"),
    });

    VerificationReport {
        pass: checks.iter().all(|c| c.pass),
        checks,
    }
}

/// Square-root branch used by [`numeric_residual`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// `|A φ² + 2B φ + C|` at `λ₀` for `φ = (−B ± √R)/A`, in double precision
/// (complex when `R(λ₀) < 0`).
pub fn numeric_residual(triple: &AlphaTriple, lambda0: &Rational, branch: Branch) -> Result<f64> {
    let a_exact = triple.a().eval(lambda0);
    if a_exact.is_zero() {
        return Err(Error::PoleAtLambda(lambda0.to_string()));
    }
    let x = rational_to_f64(lambda0);
    let a = Complex64::from(triple.a().eval_f64(x));
    let b = Complex64::from(triple.b().eval_f64(x));
    let c = Complex64::from(triple.c().eval_f64(x));
    let r = b * b - a * c;
    let phi = (-b + r.sqrt() * branch.sign()) / a;
    Ok((a * phi * phi + b * phi * 2.0 + c).norm())
}
