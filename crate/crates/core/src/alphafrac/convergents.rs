use crate::polyring::Polynomial;

use super::types::Expansion;

/// Numerator and denominator of the `index`-th convergent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentPair {
    pub index: isize,
    pub p: Polynomial,
    pub q: Polynomial,
}

/// Convergents `(P_k, Q_k)` for `k = −1, 0, …, N`.
///
/// Uses the three-term recurrence with partial numerators `λ − α_k`; the last
/// step uses `b_N* = b_N − b₀` in place of `b_N`, so `(P_{N−1}, P_N; Q_{N−1},
/// Q_N)` is the transfer matrix of the fraction.
pub fn convergents(e: &Expansion) -> Vec<ConvergentPair> {
    let n = e.period();
    let mut out = Vec::with_capacity(n + 2);
    out.push(ConvergentPair {
        index: -1,
        p: Polynomial::one(),
        q: Polynomial::zero(),
    });
    out.push(ConvergentPair {
        index: 0,
        p: Polynomial::constant(e.b0().clone()),
        q: Polynomial::one(),
    });
    for k in 1..=n {
        let b = if k == n { e.b_star() } else { e.b(k).clone() };
        let a = Polynomial::linear(e.alpha().get(k));
        let prev = &out[k];
        let prev2 = &out[k - 1];
        let p = prev.p.scale(&b) + &a * &prev2.p;
        let q = prev.q.scale(&b) + &a * &prev2.q;
        out.push(ConvergentPair {
            index: k as isize,
            p,
            q,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphafrac::AlphaSequence;
    use crate::polyring::{frac, int, Rational};

    fn exp(b0: Rational, block: Vec<Rational>, alpha: &[i64]) -> Expansion {
        Expansion::new(b0, block, AlphaSequence::from_ints(alpha).unwrap()).unwrap()
    }

    #[test]
    fn worked_example() {
        let e = exp(int(1), vec![int(-3), int(1), int(3)], &[1, 3, 4]);
        let c = convergents(&e);
        assert_eq!(c.len(), 5);
        assert_eq!(c[3].index, 2);
        assert_eq!(c[3].p, Polynomial::from_ints(&[-7, 2]));
        assert_eq!(c[3].q, Polynomial::from_ints(&[-6, 1]));
        assert_eq!(c[4].p, Polynomial::from_ints(&[2, -4, 1]));
        assert_eq!(c[4].q, Polynomial::from_ints(&[0, -1]));
    }

    #[test]
    fn period_one() {
        let (b0, b1, a1) = (frac(2, 3), frac(-5, 7), frac(4, 1));
        let e = Expansion::new(
            b0.clone(),
            vec![b1.clone()],
            AlphaSequence::new(vec![a1.clone()]).unwrap(),
        )
        .unwrap();
        let c = convergents(&e);
        let star = &b1 - &b0;
        let p1 = Polynomial::new(vec![&star * &b0 - &a1, int(1)]);
        assert_eq!(c[2].p, p1);
        assert_eq!(c[2].q, Polynomial::constant(star));
    }

    #[test]
    fn pure_last_pair() {
        let e = exp(int(1), vec![int(1), int(1), int(1)], &[0, 1, 2]);
        let c = convergents(&e);
        let lam_minus_2 = Polynomial::from_ints(&[-2, 1]);
        assert_eq!(c[4].p, &lam_minus_2 * &Polynomial::from_ints(&[1, 1]));
        assert_eq!(c[4].q, lam_minus_2.clone());
        assert_eq!(c[4].p, &lam_minus_2 * &c[2].p);
        assert_eq!(c[4].q, &lam_minus_2 * &c[2].q);
    }
}
