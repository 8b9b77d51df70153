//! Periodic α-fractions: types, convergents, transfer matrices and the
//! factorization procedure that recovers expansions from an α-triple.

mod convergents;
mod expand;
mod transfer;
mod types;
mod verify;

pub use convergents::{convergents, ConvergentPair};
pub use expand::{admissible_decompose, expand, expansion_to_triple, pure_expand};
pub use transfer::{
    build_transfer_matrix, elementary_factor, factorize_matrix, factorize_transfer_matrix,
    TransferMatrix,
};
pub use types::{AlphaSequence, AlphaTriple, Expansion};
pub use verify::{numeric_residual, verify_expansion, Branch, Check, VerificationReport};
