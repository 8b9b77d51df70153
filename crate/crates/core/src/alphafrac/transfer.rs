use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{PolyMatrix2, Polynomial, Rational};

use super::types::{AlphaSequence, AlphaTriple, Expansion};

/// `M = [[T − B, −C], [A, T + B]]` with `det M = −𝔄`; `T` is half the trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    m: PolyMatrix2,
    t: Polynomial,
}

impl TransferMatrix {
    pub fn matrix(&self) -> &PolyMatrix2 {
        &self.m
    }

    /// Half the trace.
    pub fn half_trace(&self) -> &Polynomial {
        &self.t
    }
}

/// `[[b, λ − α], [1, 0]]`.
pub fn elementary_factor(b: &Rational, alpha: &Rational) -> PolyMatrix2 {
    PolyMatrix2::new(
        Polynomial::constant(b.clone()),
        Polynomial::linear(alpha),
        Polynomial::one(),
        Polynomial::zero(),
    )
}

/// Assembles the transfer matrix of `triple` with half-trace `t`.
///
/// Fails with [`Error::TraceMismatch`] unless `t² + 𝔄 = B² − AC`.
pub fn build_transfer_matrix(
    triple: &AlphaTriple,
    t: &Polynomial,
    alpha: &AlphaSequence,
) -> Result<TransferMatrix> {
    if t * t + alpha.polynomial() != triple.discriminant() {
        return Err(Error::TraceMismatch);
    }
    let m = PolyMatrix2::new(
        t - triple.b(),
        -triple.c(),
        triple.a().clone(),
        t + triple.b(),
    );
    Ok(TransferMatrix { m, t: t.clone() })
}

/// Recovers `b₀, …, b_N` with
/// `M = F(b₀, α₁) ⋯ F(b_{N−1}, α_N) · [[1, b_N − b₀], [0, 1]]`
/// where `F(b, α) = [[b, λ − α], [1, 0]]`.
pub fn factorize_transfer_matrix(tm: &TransferMatrix, alpha: &AlphaSequence) -> Result<Expansion> {
    factorize_matrix(&tm.m, alpha)
}

/// Factorization on a bare matrix, for callers that assemble `M` themselves.
///
/// At step `k` the current matrix `[[X, Y], [Z, W]]` must satisfy
/// `X − bZ = Y − bW = 0` at `λ = α_{k+1}`. That fixes `b = X/Z`, or `Y/W`
/// when `Z(α_{k+1}) = 0`, and the next matrix is
/// `[[Z, W], [(X − bZ)/(λ − α), (Y − bW)/(λ − α)]]`.
pub fn factorize_matrix(m: &PolyMatrix2, alpha: &AlphaSequence) -> Result<Expansion> {
    let n = alpha.period();
    let mut coords = Vec::with_capacity(n + 1);
    let mut cur = m.clone();
    for step in 0..n {
        let a = alpha.get(step + 1);
        let [[x, y], [z, w]] = cur.entries;
        let (xv, yv, zv, wv) = (x.eval(a), y.eval(a), z.eval(a), w.eval(a));
        let b = if !zv.is_zero() {
            xv / zv
        } else if !wv.is_zero() {
            yv / wv
        } else {
            return Err(Error::FactorizationDegenerate { step });
        };
        let (top, r1) = (&x - &z.scale(&b)).div_linear(a);
        let (bottom, r2) = (&y - &w.scale(&b)).div_linear(a);
        if !r1.is_zero() || !r2.is_zero() {
            return Err(Error::ResidueNotUnipotent(format!(
                "λ − {a} does not divide the reduced row at step {step}"
            )));
        }
        coords.push(b);
        cur = PolyMatrix2::new(z, w, top, bottom);
    }
    let [[p, u], [q, r]] = &cur.entries;
    let one = Polynomial::one();
    if *p != one || !q.is_zero() || *r != one || u.degree() > Some(0) {
        return Err(Error::ResidueNotUnipotent(format!(
            "residue is [[{p}, {u}], [{q}, {r}]]"
        )));
    }
    coords.push(u.coeff(0));
    Ok(Expansion::from_internal(coords, alpha.clone()))
}
