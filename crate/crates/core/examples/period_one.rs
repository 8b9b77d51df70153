//! φ = −β + √(λ + γ) with period one: b₀ = −β ± s and b₁ − b₀ = β ± s,
//! where s² = β² + α₁ + γ.

use hyperfrac::polyring::frac;
use hyperfrac::{expand, pure_expand, AlphaSequence, AlphaTriple, Polynomial};

fn main() {
    let beta = frac(3, 2);
    let alpha1 = frac(1, 4);
    let gamma = frac(15, 4);
    let triple = AlphaTriple::new(
        Polynomial::one(),
        Polynomial::constant(beta.clone()),
        -Polynomial::new(vec![gamma, frac(1, 1)]),
    )
    .unwrap();
    let alpha = AlphaSequence::new(vec![alpha1.clone()]).unwrap();
    let (plus, minus) = expand(&triple, &alpha).unwrap();
    println!("s = 5/2: {plus}, {minus}");

    let pure = AlphaTriple::new(
        Polynomial::one(),
        Polynomial::constant(beta),
        -Polynomial::linear(&alpha1),
    )
    .unwrap();
    println!("pure: {}", pure_expand(&pure, &alpha).unwrap());
}
