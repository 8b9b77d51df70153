//! The birational action of `ℤ₂ × S_N` on periodic expansions.
//!
//! `σ_k` swaps `α_k` and `α_{k+1}` and adjusts the neighbouring coefficients;
//! `επ` reverses the α-order and switches to the other expansion of the same
//! function. Both preserve the α-triple, so the orbit of one expansion is
//! every expansion of its function over every ordering of α.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::alphafrac::Expansion;
use crate::error::{Error, Result};

/// A group generator: `sigma:k` (1-based) or `epspi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Sigma(usize),
    EpsPi,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sigma(k) => write!(f, "sigma:{k}"),
            Generator::EpsPi => write!(f, "epspi"),
        }
    }
}

impl FromStr for Generator {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "epspi" {
            return Ok(Generator::EpsPi);
        }
        s.strip_prefix("sigma:")
            .and_then(|k| k.parse().ok())
            .filter(|&k| k >= 1)
            .map(Generator::Sigma)
            .ok_or_else(|| format!("unrecognised generator {s:?}"))
    }
}

/// Letters applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupWord(pub Vec<Generator>);

impl GroupWord {
    pub fn letters(&self) -> &[Generator] {
        &self.0
    }
}

impl FromIterator<Generator> for GroupWord {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        GroupWord(iter.into_iter().collect())
    }
}

/// `σ_k` for `1 ≤ k ≤ N − 1`; needs `b_k ≠ 0`.
///
/// With `δ = (α_{k+1} − α_k)/b_k`, the coordinates `(b₀, …, b_{N−1}, b_N − b₀)`
/// at positions `k − 1` and `k + 1` shift by `+δ` and `−δ`. For `k = N − 1`
/// the second of these is `b_N − b₀` itself.
pub fn apply_sigma(e: &Expansion, k: usize) -> Result<Expansion> {
    let n = e.period();
    if k == 0 || k >= n {
        return Err(Error::GeneratorOutOfRange { k, n });
    }
    let pivot = e.b(k);
    if pivot.is_zero() {
        return Err(Error::ZeroPivot { k, step: None });
    }
    let alpha = e.alpha();
    let delta = (alpha.get(k + 1) - alpha.get(k)) / pivot;
    let mut c = e.internal();
    c[k - 1] += &delta;
    c[k + 1] -= &delta;
    Ok(Expansion::from_internal(c, alpha.swapped(k)))
}

/// `επ`: `b̃_j = −b_{N−j}` for `1 ≤ j < N`, `b̃₀ = b₀ − b_N`, `b̃_N = −b_N`,
/// with α reversed.
pub fn apply_eps_pi(e: &Expansion) -> Expansion {
    let n = e.period();
    let b_n = e.b(n);
    let b0 = e.b0() - b_n;
    let mut block: Vec<_> = (1..n).map(|j| -e.b(n - j)).collect();
    block.push(-b_n);
    Expansion::new(b0, block, e.alpha().reversed()).expect("period is preserved")
}

pub fn apply_generator(e: &Expansion, g: Generator) -> Result<Expansion> {
    match g {
        Generator::Sigma(k) => apply_sigma(e, k),
        Generator::EpsPi => Ok(apply_eps_pi(e)),
    }
}

/// Applies the letters of `word` left to right. A zero pivot reports the
/// position of the failing letter.
pub fn apply_word(e: &Expansion, word: &GroupWord) -> Result<Expansion> {
    word.0
        .iter()
        .enumerate()
        .try_fold(e.clone(), |acc, (i, &g)| {
            apply_generator(&acc, g).map_err(|err| match err {
                Error::ZeroPivot { k, .. } => Error::ZeroPivot { k, step: Some(i) },
                other => other,
            })
        })
}

/// An edge of the orbit graph that could not be followed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkippedEdge {
    pub from: Expansion,
    pub generator: Generator,
    pub reason: Error,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Sorted by α-order, then by `(b₀, b₁, …, b_N)`.
    pub expansions: Vec<Expansion>,
    pub skipped_edges: Vec<SkippedEdge>,
}

impl Orbit {
    /// True when every generator could be applied to every element.
    pub fn is_complete(&self) -> bool {
        self.skipped_edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.expansions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.expansions.is_empty()
    }

    pub fn index_of(&self, e: &Expansion) -> Option<usize> {
        self.expansions.binary_search(e).ok()
    }
}

/// Breadth-first closure of `{e}` under `σ₁, …, σ_{N−1}, επ`, or under
/// `σ₁, …, σ_{N−2}` when `pure` is set (the pure case keeps `α_N` last).
pub fn orbit(e: &Expansion, pure: bool) -> Result<Orbit> {
    let n = e.period();
    if pure && !e.is_pure() {
        return Err(Error::NotPure(format!("b_N - b_0 = {}", e.b_star())));
    }
    let generators: Vec<Generator> = if pure {
        (1..n.saturating_sub(1)).map(Generator::Sigma).collect()
    } else {
        (1..n)
            .map(Generator::Sigma)
            .chain(std::iter::once(Generator::EpsPi))
            .collect()
    };

    let mut seen = BTreeSet::from([e.clone()]);
    let mut queue = VecDeque::from([e.clone()]);
    let mut skipped_edges = Vec::new();
    while let Some(cur) = queue.pop_front() {
        for &g in &generators {
            match apply_generator(&cur, g) {
                Ok(next) => {
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
                Err(reason) => skipped_edges.push(SkippedEdge {
                    from: cur.clone(),
                    generator: g,
                    reason,
                }),
            }
        }
    }
    Ok(Orbit {
        expansions: seen.into_iter().collect(),
        skipped_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphafrac::{expansion_to_triple, AlphaSequence};
    use crate::polyring::{frac, int, Rational};

    fn ex(b0: Rational, block: Vec<Rational>, alpha: &[i64]) -> Expansion {
        Expansion::new(b0, block, AlphaSequence::from_ints(alpha).unwrap()).unwrap()
    }

    fn first() -> Expansion {
        ex(int(1), vec![int(-3), int(1), int(3)], &[1, 3, 4])
    }

    #[test]
    fn sigma_on_worked_example() {
        assert_eq!(
            apply_sigma(&first(), 1).unwrap(),
            ex(frac(1, 3), vec![int(-3), frac(5, 3), frac(7, 3)], &[3, 1, 4])
        );
        assert_eq!(
            apply_sigma(&first(), 2).unwrap(),
            ex(int(1), vec![int(-2), int(1), int(2)], &[1, 4, 3])
        );
    }

    #[test]
    fn sigma_is_involution() {
        for k in 1..3 {
            let once = apply_sigma(&first(), k).unwrap();
            assert_eq!(apply_sigma(&once, k).unwrap(), first());
        }
    }

    #[test]
    fn sigma_errors() {
        assert_eq!(
            apply_sigma(&first(), 3),
            Err(Error::GeneratorOutOfRange { k: 3, n: 3 })
        );
        assert_eq!(
            apply_sigma(&first(), 0),
            Err(Error::GeneratorOutOfRange { k: 0, n: 3 })
        );
        let z = ex(int(1), vec![int(0), int(1), int(3)], &[1, 3, 4]);
        assert_eq!(apply_sigma(&z, 1), Err(Error::ZeroPivot { k: 1, step: None }));
    }

    #[test]
    fn eps_pi_on_worked_example() {
        assert_eq!(
            apply_eps_pi(&first()),
            ex(int(-2), vec![int(-1), int(3), int(-3)], &[4, 3, 1])
        );
        assert_eq!(apply_eps_pi(&apply_eps_pi(&first())), first());
        let second = ex(frac(-1, 5), vec![frac(-15, 6), frac(6, 5), frac(3, 10)], &[1, 3, 4]);
        assert_eq!(
            apply_eps_pi(&second),
            ex(frac(-1, 2), vec![frac(-6, 5), frac(15, 6), frac(-3, 10)], &[4, 3, 1])
        );
    }

    #[test]
    fn words() {
        let e = first();
        assert_eq!(apply_word(&e, &GroupWord::default()).unwrap(), e);
        let w: GroupWord = [Generator::Sigma(1), Generator::Sigma(1)].into_iter().collect();
        assert_eq!(apply_word(&e, &w).unwrap(), e);
        // επ lands on the −S expansion, σ₂ keeps the half-trace.
        let w: GroupWord = [Generator::EpsPi, Generator::Sigma(2)].into_iter().collect();
        let got = apply_word(&e, &w).unwrap();
        assert_eq!(got, ex(int(-2), vec![frac(-5, 3), int(3), frac(-7, 3)], &[4, 1, 3]));
        let (t0, s0) = expansion_to_triple(&e).unwrap();
        let (t1, s1) = expansion_to_triple(&got).unwrap();
        assert_eq!(t0, t1);
        assert_eq!(s1, -s0);

        let z = ex(int(1), vec![int(2), int(0), int(3)], &[1, 3, 4]);
        let w: GroupWord = [Generator::EpsPi, Generator::Sigma(1)].into_iter().collect();
        assert_eq!(apply_word(&z, &w), Err(Error::ZeroPivot { k: 1, step: Some(1) }));
    }

    #[test]
    fn generator_parsing() {
        assert_eq!("sigma:2".parse(), Ok(Generator::Sigma(2)));
        assert_eq!("epspi".parse(), Ok(Generator::EpsPi));
        assert!("sigma:0".parse::<Generator>().is_err());
        assert!("tau".parse::<Generator>().is_err());
        assert_eq!(Generator::Sigma(4).to_string(), "sigma:4");
    }

    #[test]
    fn full_orbit_has_twelve_elements() {
        let o = orbit(&first(), false).unwrap();
        assert!(o.is_complete());
        assert_eq!(o.len(), 12);
        let mut sorted = o.expansions.clone();
        sorted.sort();
        assert_eq!(sorted, o.expansions);
        assert!(o.index_of(&first()).is_some());
    }

    #[test]
    fn pure_orbit() {
        let e = ex(int(1), vec![int(1), int(1), int(1)], &[0, 1, 2]);
        let o = orbit(&e, true).unwrap();
        assert_eq!(o.len(), 2);
        assert!(o.expansions.iter().all(Expansion::is_pure));
        assert!(matches!(orbit(&first(), true), Err(Error::NotPure(_))));
    }

    #[test]
    fn zero_pivots_are_recorded() {
        let e = ex(int(1), vec![int(1), int(0), int(2)], &[0, 1, 2]);
        let o = orbit(&e, false).unwrap();
        assert!(!o.is_complete());
        assert!(o
            .skipped_edges
            .iter()
            .all(|s| matches!(s.reason, Error::ZeroPivot { .. })));
    }
}
