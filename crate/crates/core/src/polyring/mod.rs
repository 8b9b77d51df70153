//! Exact scalar, polynomial and 2×2 polynomial-matrix arithmetic over ℚ.

mod matrix;
mod poly;
mod rational;

pub use matrix::PolyMatrix2;
pub use poly::Polynomial;
pub use rational::{parse_rational, rational_sqrt, rational_to_f64, Rational};

/// Shorthand for an integer-valued [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num / den`. Panics when `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
