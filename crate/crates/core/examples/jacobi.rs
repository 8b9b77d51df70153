//! Move between α-triples, Jacobi triples (U, V, W) and divisors.

use hyperfrac::datasets;
use hyperfrac::polyring::int;
use hyperfrac::{
    alpha_triple_from_jacobi, divisor_from_jacobi, jacobi_from_alpha_triple, jacobi_from_divisor,
    pure_beta_candidates,
};

fn main() {
    let (j, beta) = jacobi_from_alpha_triple(&datasets::sect4().triple);
    println!("U = {}, V = {}, W = {}, β = {beta}", j.u(), j.v(), j.w());
    println!("R = {}", j.r());

    let d = divisor_from_jacobi(&j).unwrap();
    for p in d.points() {
        println!("point ({}, {})", p.lambda, p.mu);
    }
    assert_eq!(jacobi_from_divisor(&d).unwrap(), j);

    for b in pure_beta_candidates(&j, &int(4)).unwrap() {
        let t = alpha_triple_from_jacobi(&j, &b);
        println!("β = {b}: C = {}, C(4) = {}", t.c(), t.c().eval(&int(4)));
    }
}
