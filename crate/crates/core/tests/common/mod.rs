#![allow(dead_code)]

use hyperfrac::polyring::{frac, int};
use hyperfrac::{AlphaSequence, Expansion, JacobiTriple, Polynomial, Rational};
use rand::seq::SliceRandom;
use rand::Rng;

/// Rational in [−10, 10] with denominator at most 6.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let den = rng.gen_range(1..=6);
    let num = rng.gen_range(-10 * den..=10 * den);
    frac(num, den)
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let x = small_rational(rng);
        if x != int(0) {
            return x;
        }
    }
}

/// `n` distinct integers from [−12, 12].
pub fn distinct_alphas<R: Rng>(rng: &mut R, n: usize) -> AlphaSequence {
    let mut pool: Vec<i64> = (-12..=12).collect();
    pool.shuffle(rng);
    AlphaSequence::from_ints(&pool[..n]).unwrap()
}

/// Random periodic expansion with nonzero block entries.
pub fn random_expansion<R: Rng>(rng: &mut R, n: usize) -> Expansion {
    let b0 = small_rational(rng);
    let block = (0..n).map(|_| nonzero_rational(rng)).collect();
    Expansion::new(b0, block, distinct_alphas(rng, n)).unwrap()
}

pub fn random_poly<R: Rng>(rng: &mut R, len: usize) -> Polynomial {
    Polynomial::new((0..len).map(|_| small_rational(rng)).collect())
}

pub fn random_monic<R: Rng>(rng: &mut R, degree: usize) -> Polynomial {
    let mut c: Vec<Rational> = (0..degree).map(|_| small_rational(rng)).collect();
    c.push(int(1));
    Polynomial::new(c)
}

/// Random Jacobi triple of genus `g`, with `R = V² + UW`.
pub fn random_jacobi<R: Rng>(rng: &mut R, g: usize) -> JacobiTriple {
    let u = random_monic(rng, g);
    let v = random_poly(rng, g);
    let w = random_monic(rng, g + 1);
    let r = &v * &v + &u * &w;
    JacobiTriple::new(u, v, w, r).unwrap()
}

/// The transfer matrix as an explicit product of elementary factors and the
/// closing unipotent factor, independent of the convergent recurrence.
pub fn product_matrix(e: &Expansion) -> hyperfrac::PolyMatrix2 {
    use hyperfrac::alphafrac::elementary_factor;
    let n = e.period();
    let mut m = hyperfrac::PolyMatrix2::identity();
    for k in 0..n {
        m = &m * &elementary_factor(e.b(k), e.alpha().get(k + 1));
    }
    let unip = hyperfrac::PolyMatrix2::new(
        Polynomial::one(),
        Polynomial::constant(e.b_star()),
        Polynomial::zero(),
        Polynomial::one(),
    );
    &m * &unip
}
