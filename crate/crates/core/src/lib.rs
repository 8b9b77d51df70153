//! Exact computation of periodic α-fraction expansions
//!
//! An α-fraction is a continued fraction
//!
//! ```text
//! φ = b₀ + (λ − α₁) / (b₁ + (λ − α₂) / (b₂ + …))
//! ```
//!
//! with a fixed parameter sequence α. When both sequences are periodic with
//! odd period `N = 2g + 1`, φ satisfies `A φ² + 2 B φ + C = 0` for polynomials
//! `A`, `B`, `C`, and the discriminant `R = B² − AC` is a degree-`N` curve
//! `μ² = R(λ)` of genus `g`.
//!
//! This crate works over ℚ and provides:
//!
//! - [`polyring`]: rationals, dense polynomials and 2×2 polynomial matrices.
//! - [`alphafrac`]: α-sequences, expansions, α-triples, transfer matrices and
//!   the factorization that turns a triple into its two expansions.
//! - [`symmetry`]: the `ℤ₂ × S_N` action on expansions and orbit enumeration.
//! - [`jacobi`]: Jacobi (Mumford) triples, divisors and their correspondence
//!   with α-triples.
//! - [`json`]: the JSON record formats used by the command-line tool.
//! - [`datasets`]: canned worked examples.
//! - [`cli`]: the `hyperfrac` command-line front-end.

pub mod alphafrac;
pub mod cli;
pub mod datasets;
mod error;
pub mod jacobi;
pub mod json;
pub mod polyring;
pub mod symmetry;

pub use alphafrac::{
    admissible_decompose, build_transfer_matrix, convergents, expand, expansion_to_triple,
    factorize_transfer_matrix, numeric_residual, pure_expand, verify_expansion, AlphaSequence,
    AlphaTriple, Branch, ConvergentPair, Expansion, TransferMatrix, VerificationReport,
};
pub use error::{Error, Result};
pub use jacobi::{
    alpha_triple_from_jacobi, divisor_from_jacobi, jacobi_from_alpha_triple, jacobi_from_divisor,
    pure_beta_candidates, CurvePoint, Divisor, JacobiTriple,
};
pub use polyring::{PolyMatrix2, Polynomial, Rational};
pub use symmetry::{apply_eps_pi, apply_sigma, apply_word, orbit, Generator, GroupWord, Orbit};
