use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Rational};

/// Pairwise distinct parameters `α₁, …, α_N` with odd `N = 2g + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlphaSequence(Vec<Rational>);

impl AlphaSequence {
    pub fn new(alphas: Vec<Rational>) -> Result<Self> {
        if alphas.len().is_multiple_of(2) {
            return Err(Error::InvalidAlphaSequence(format!(
                "period must be odd, got {}",
                alphas.len()
            )));
        }
        for (i, a) in alphas.iter().enumerate() {
            if alphas[..i].contains(a) {
                return Err(Error::InvalidAlphaSequence(format!("α = {a} is repeated")));
            }
        }
        Ok(AlphaSequence(alphas))
    }

    pub fn from_ints(alphas: &[i64]) -> Result<Self> {
        Self::new(alphas.iter().map(|&a| Rational::from_integer(a.into())).collect())
    }

    /// The period `N`.
    pub fn period(&self) -> usize {
        self.0.len()
    }

    /// The genus `g = (N − 1) / 2`.
    pub fn genus(&self) -> usize {
        self.0.len() / 2
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// `α_i`, 1-based.
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn last(&self) -> &Rational {
        self.0.last().expect("alpha sequences are never empty")
    }

    /// `𝔄(λ) = ∏ (λ − αᵢ)`.
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_roots(&self.0)
    }

    /// Swaps `α_k` and `α_{k+1}` (1-based `k`).
    pub(crate) fn swapped(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(k - 1, k);
        AlphaSequence(v)
    }

    pub(crate) fn reversed(&self) -> Self {
        AlphaSequence(self.0.iter().rev().cloned().collect())
    }
}

impl fmt::Display for AlphaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A periodic α-fraction `[b₀; b₁, …, b_N]_α` (the block repeats).
///
/// Ordering is lexicographic on the α-order, then on `(b₀, b₁, …, b_N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Expansion {
    alpha: AlphaSequence,
    b0: Rational,
    block: Vec<Rational>,
}

impl Expansion {
    pub fn new(b0: Rational, block: Vec<Rational>, alpha: AlphaSequence) -> Result<Self> {
        if block.len() != alpha.period() {
            return Err(Error::InvalidExpansion(format!(
                "block has {} entries but the period is {}",
                block.len(),
                alpha.period()
            )));
        }
        Ok(Expansion { alpha, b0, block })
    }

    pub fn b0(&self) -> &Rational {
        &self.b0
    }

    pub fn block(&self) -> &[Rational] {
        &self.block
    }

    pub fn alpha(&self) -> &AlphaSequence {
        &self.alpha
    }

    pub fn period(&self) -> usize {
        self.block.len()
    }

    /// `b_i` for `0 ≤ i ≤ N`.
    pub fn b(&self, i: usize) -> &Rational {
        if i == 0 {
            &self.b0
        } else {
            &self.block[i - 1]
        }
    }

    /// `b_N* = b_N − b₀`, the entry of the closing unipotent factor.
    pub fn b_star(&self) -> Rational {
        self.block.last().expect("non-empty block") - &self.b0
    }

    /// Pure expansions satisfy `b_N = b₀`.
    pub fn is_pure(&self) -> bool {
        self.b_star().is_zero()
    }

    /// Coordinates `(b₀, …, b_{N−1}, b_N − b₀)`.
    pub(crate) fn internal(&self) -> Vec<Rational> {
        let n = self.period();
        let mut c = Vec::with_capacity(n + 1);
        c.push(self.b0.clone());
        c.extend(self.block[..n - 1].iter().cloned());
        c.push(self.b_star());
        c
    }

    pub(crate) fn from_internal(c: Vec<Rational>, alpha: AlphaSequence) -> Self {
        let n = c.len() - 1;
        let b0 = c[0].clone();
        let mut block: Vec<Rational> = c[1..n].to_vec();
        block.push(&c[n] + &b0);
        Expansion { alpha, b0, block }
    }
}

impl PartialOrd for Expansion {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Expansion {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.alpha
            .cmp(&other.alpha)
            .then_with(|| self.b0.cmp(&other.b0))
            .then_with(|| self.block.cmp(&other.block))
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.block.iter().map(ToString::to_string).collect();
        write!(f, "[{}; {}]_({})", self.b0, parts.join(", "), self.alpha)
    }
}

/// Polynomials `(A, B, C)` with `A` monic of degree `g`, `C` anti-monic of
/// degree `g + 1` and `deg B ≤ g`.
///
/// Admissibility of `B² − AC` depends on an α-sequence and is checked by the
/// operations that take one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaTriple {
    a: Polynomial,
    b: Polynomial,
    c: Polynomial,
}

impl AlphaTriple {
    pub fn new(a: Polynomial, b: Polynomial, c: Polynomial) -> Result<Self> {
        let g = a
            .degree()
            .ok_or_else(|| Error::InvalidTriple("A is zero".into()))?;
        if !a.is_monic_of_degree(g) {
            return Err(Error::InvalidTriple(format!("A = {a} is not monic")));
        }
        if !c.is_anti_monic_of_degree(g + 1) {
            return Err(Error::InvalidTriple(format!(
                "C = {c} is not anti-monic of degree {}",
                g + 1
            )));
        }
        if b.degree() > Some(g) {
            return Err(Error::InvalidTriple(format!("deg B exceeds {g}")));
        }
        Ok(AlphaTriple { a, b, c })
    }

    pub fn a(&self) -> &Polynomial {
        &self.a
    }

    pub fn b(&self) -> &Polynomial {
        &self.b
    }

    pub fn c(&self) -> &Polynomial {
        &self.c
    }

    pub fn genus(&self) -> usize {
        self.a.degree().unwrap_or(0)
    }

    /// `R = B² − AC`.
    pub fn discriminant(&self) -> Polynomial {
        &self.b * &self.b - &self.a * &self.c
    }
}

impl fmt::Display for AlphaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A = {}, B = {}, C = {}", self.a, self.b, self.c)
    }
}
