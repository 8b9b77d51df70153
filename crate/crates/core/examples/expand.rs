//! Expand φ = (3λ − 7 + √(4λ³ − 31λ² + 62λ + 1)) / (2(λ − 6)) for every
//! ordering of α = (1, 3, 4).

use hyperfrac::datasets;
use hyperfrac::{expand, AlphaSequence};

fn main() {
    let triple = datasets::sect4().triple;
    println!("A = {}\nB = {}\nC = {}", triple.a(), triple.b(), triple.c());
    for order in [[1, 3, 4], [1, 4, 3], [3, 1, 4], [3, 4, 1], [4, 3, 1], [4, 1, 3]] {
        let alpha = AlphaSequence::from_ints(&order).unwrap();
        let (plus, minus) = expand(&triple, &alpha).unwrap();
        println!("{plus}  =  {minus}");
    }
}
