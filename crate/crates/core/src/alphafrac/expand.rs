use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Rational};

use super::convergents::convergents;
use super::transfer::{build_transfer_matrix, factorize_transfer_matrix};
use super::types::{AlphaSequence, AlphaTriple, Expansion};

/// The α-triple of an expansion, together with the half-trace `T` of its
/// transfer matrix.
///
/// `A = Q_{N−1}`, `B = ½(Q_N − P_{N−1})`, `C = −P_N`, `T = ½(P_{N−1} + Q_N)`.
pub fn expansion_to_triple(e: &Expansion) -> Result<(AlphaTriple, Polynomial)> {
    let conv = convergents(e);
    let n = e.period();
    // conv[k + 1] holds index k
    let (last, prev) = (&conv[n + 1], &conv[n]);
    let half = Rational::new(1.into(), 2.into());
    let a = prev.q.clone();
    let b = (&last.q - &prev.p).scale(&half);
    let c = -&last.p;
    let t = (&prev.p + &last.q).scale(&half);
    let triple =
        AlphaTriple::new(a, b, c).map_err(|err| Error::DegenerateExpansion(err.to_string()))?;
    Ok((triple, t))
}

/// Writes `R = S² + 𝔄` and returns `S` (positive leading coefficient, or 0).
pub fn admissible_decompose(r: &Polynomial, alpha: &AlphaSequence) -> Result<Polynomial> {
    let n = alpha.period();
    if !r.is_monic_of_degree(n) {
        return Err(Error::NotMonic { expected: n });
    }
    let s = (r - &alpha.polynomial()).sqrt().ok_or(Error::NotAdmissible)?;
    debug_assert!(s.degree() <= Some(alpha.genus()));
    Ok(s)
}

fn check_genus(triple: &AlphaTriple, alpha: &AlphaSequence) -> Result<()> {
    if triple.genus() != alpha.genus() {
        return Err(Error::InvalidTriple(format!(
            "deg A = {} but the period {} needs {}",
            triple.genus(),
            alpha.period(),
            alpha.genus()
        )));
    }
    Ok(())
}

/// The two periodic expansions of `φ = (−B + √R)/A`, for half-traces `+S`
/// and `−S` in that order.
pub fn expand(triple: &AlphaTriple, alpha: &AlphaSequence) -> Result<(Expansion, Expansion)> {
    check_genus(triple, alpha)?;
    let s = admissible_decompose(&triple.discriminant(), alpha)?;
    let plus = factorize_transfer_matrix(&build_transfer_matrix(triple, &s, alpha)?, alpha)?;
    let minus = factorize_transfer_matrix(&build_transfer_matrix(triple, &-s, alpha)?, alpha)?;
    Ok((plus, minus))
}

/// The pure expansion (`b_N = b₀`), which needs `C(α_N) = 0`.
///
/// The half-trace is the one of `±S` with `T(α_N) = −B(α_N)`; this pins it
/// down only when `B(α_N) ≠ 0`.
pub fn pure_expand(triple: &AlphaTriple, alpha: &AlphaSequence) -> Result<Expansion> {
    check_genus(triple, alpha)?;
    let last = alpha.last();
    let c_last = triple.c().eval(last);
    if !c_last.is_zero() {
        return Err(Error::NotPure(format!("C(α_N) = {c_last}")));
    }
    let b_last = triple.b().eval(last);
    if b_last.is_zero() {
        return Err(Error::NonGenericPure);
    }
    let s = admissible_decompose(&triple.discriminant(), alpha)?;
    let t = if s.eval(last) == -&b_last { s } else { -s };
    if t.eval(last) != -b_last {
        return Err(Error::TraceMismatch);
    }
    let e = factorize_transfer_matrix(&build_transfer_matrix(triple, &t, alpha)?, alpha)?;
    if !e.is_pure() {
        return Err(Error::ResidueNotUnipotent(format!(
            "pure factorization left b_N* = {}",
            e.b_star()
        )));
    }
    Ok(e)
}
