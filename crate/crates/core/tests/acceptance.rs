//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hyperfrac::datasets;
use hyperfrac::polyring::{frac, int, rational_sqrt};
use hyperfrac::{
    admissible_decompose, alpha_triple_from_jacobi, apply_eps_pi, apply_sigma,
    build_transfer_matrix, convergents, divisor_from_jacobi, expand, expansion_to_triple,
    factorize_transfer_matrix, jacobi_from_alpha_triple, jacobi_from_divisor, numeric_residual,
    orbit, pure_beta_candidates, pure_expand, AlphaSequence, AlphaTriple, Branch, CurvePoint,
    Divisor, Error, Expansion, JacobiTriple, Polynomial, Rational,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(format!("{took:.2?}"))
}

fn sect4_triple() -> AlphaTriple {
    datasets::sect4().triple
}

const ORDERINGS: [[i64; 3]; 6] = [[1, 3, 4], [1, 4, 3], [3, 1, 4], [3, 4, 1], [4, 3, 1], [4, 1, 3]];

/// The table of twelve expansions, as printed for the worked genus-1 example.
fn golden_table() -> Vec<(Expansion, Expansion)> {
    let e = |b0: Rational, block: Vec<Rational>, a: [i64; 3]| {
        Expansion::new(b0, block, AlphaSequence::from_ints(&a).unwrap()).unwrap()
    };
    vec![
        (
            e(int(1), vec![int(-3), int(1), int(3)], [1, 3, 4]),
            e(frac(-1, 5), vec![frac(-15, 6), frac(6, 5), frac(3, 10)], [1, 3, 4]),
        ),
        (
            e(int(1), vec![int(-2), int(1), int(2)], [1, 4, 3]),
            e(frac(-1, 5), vec![frac(-5, 3), frac(6, 5), frac(-8, 15)], [1, 4, 3]),
        ),
        (
            e(frac(1, 3), vec![int(-3), frac(5, 3), frac(7, 3)], [3, 1, 4]),
            e(int(-1), vec![frac(-15, 6), int(2), frac(-1, 2)], [3, 1, 4]),
        ),
        (
            e(frac(1, 3), vec![frac(-6, 5), frac(5, 3), frac(8, 15)], [3, 4, 1]),
            e(int(-1), vec![int(-1), int(2), int(-2)], [3, 4, 1]),
        ),
        (
            e(frac(-1, 2), vec![frac(-6, 5), frac(15, 6), frac(-3, 10)], [4, 3, 1]),
            e(int(-2), vec![int(-1), int(3), int(-3)], [4, 3, 1]),
        ),
        (
            e(frac(-1, 2), vec![int(-2), frac(15, 6), frac(1, 2)], [4, 1, 3]),
            e(int(-2), vec![frac(-5, 3), int(3), frac(-7, 3)], [4, 1, 3]),
        ),
    ]
}

fn golden_reproduction() -> Outcome {
    let start = Instant::now();
    let t = sect4_triple();
    let table = golden_table();
    for (order, (want_p, want_m)) in ORDERINGS.iter().zip(&table) {
        let a = AlphaSequence::from_ints(order).unwrap();
        let (p, m) = expand(&t, &a).map_err(|e| format!("{order:?}: {e}"))?;
        ensure!(&p == want_p, "{order:?}: got {p}, want {want_p}");
        ensure!(&m == want_m, "{order:?}: got {m}, want {want_m}");
    }
    within(start, Duration::from_secs(1)).map(|t| format!("12/12 exact, {t}"))
}

fn orbit_closure() -> Outcome {
    let start = Instant::now();
    let seed = &golden_table()[0].0;
    let o = orbit(seed, false).map_err(|e| e.to_string())?;
    ensure!(o.is_complete(), "skipped edges: {:?}", o.skipped_edges);
    ensure!(o.len() == 12, "orbit has {} elements", o.len());
    let got: BTreeSet<_> = o.expansions.into_iter().collect();
    let want: BTreeSet<_> = golden_table().into_iter().flat_map(|(p, m)| [p, m]).collect();
    ensure!(got == want, "orbit differs from the table");
    within(start, Duration::from_secs(1)).map(|t| format!("|orbit| = 12 = 2·3!, {t}"))
}

fn admissibility() -> Outcome {
    let a = AlphaSequence::from_ints(&[1, 3, 4]).unwrap();
    let r = sect4_triple().discriminant();
    let s = admissible_decompose(&r, &a).map_err(|e| e.to_string())?;
    ensure!(
        s == Polynomial::new(vec![frac(-7, 2), frac(1, 2)]),
        "S = {s}"
    );
    let bumped = a.polynomial() + Polynomial::x();
    let res = admissible_decompose(&bumped, &a);
    ensure!(res == Err(Error::NotAdmissible), "R = 𝔄 + λ gave {res:?}");
    Ok("S = (λ−7)/2; 𝔄 + λ rejected".into())
}

fn n1_formulas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e31);
    for i in 0..20 {
        let beta = common::nonzero_rational(&mut rng);
        let alpha1 = common::small_rational(&mut rng);
        let root = common::small_rational(&mut rng);
        // choose γ so that β² + α₁ + γ = root²
        let gamma = &root * &root - &beta * &beta - &alpha1;
        let disc = &beta * &beta + &alpha1 + &gamma;
        let s = rational_sqrt(&disc).ok_or("discriminant not a square")?;

        let t = AlphaTriple::new(
            Polynomial::one(),
            Polynomial::constant(beta.clone()),
            -Polynomial::new(vec![gamma.clone(), int(1)]),
        )
        .map_err(|e| e.to_string())?;
        let a = AlphaSequence::new(vec![alpha1.clone()]).unwrap();
        let (p, m) = expand(&t, &a).map_err(|e| format!("instance {i}: {e}"))?;
        for (e, sign) in [(&p, int(1)), (&m, int(-1))] {
            let want_b0 = -&beta + &sign * &s;
            let want_star = &beta + &sign * &s;
            ensure!(
                e.b0() == &want_b0 && e.b_star() == want_star,
                "instance {i}: {e}, want b0 = {want_b0}, b1* = {want_star}"
            );
        }

        let pure = AlphaTriple::new(
            Polynomial::one(),
            Polynomial::constant(beta.clone()),
            -Polynomial::linear(&alpha1),
        )
        .unwrap();
        let e = pure_expand(&pure, &a).map_err(|e| format!("pure instance {i}: {e}"))?;
        let want = -(&beta + &beta);
        ensure!(
            e.b0() == &want && e.block()[0] == want,
            "pure instance {i}: {e}, want b0 = b1 = {want}"
        );
    }
    Ok("20 periodic + 20 pure instances exact".into())
}

fn corpus() -> Vec<Expansion> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa1fa);
    [1, 3, 5, 7]
        .iter()
        .flat_map(|&n| (0..200).map(move |_| n))
        .map(|n| common::random_expansion(&mut rng, n))
        .collect()
}

fn round_trip_suite() -> Outcome {
    let start = Instant::now();
    let corpus = corpus();
    for e in &corpus {
        let (t, half_trace) = expansion_to_triple(e).map_err(|err| format!("{e}: {err}"))?;
        let tm = build_transfer_matrix(&t, &half_trace, e.alpha()).map_err(|err| format!("{e}: {err}"))?;
        let product = common::product_matrix(e);
        ensure!(tm.matrix() == &product, "{e}: transfer matrix differs from factor product");
        let det = tm.matrix().det();
        ensure!(det == -e.alpha().polynomial(), "{e}: det M = {det}");
        let back = factorize_transfer_matrix(&tm, e.alpha()).map_err(|err| format!("{e}: {err}"))?;
        ensure!(&back == e, "{e}: factorized to {back}");
        let conv = convergents(e);
        let n = e.period();
        let (last, prev) = (&conv[n + 1], &conv[n]);
        let ident = &last.p * &prev.q - &prev.p * &last.q;
        ensure!(ident == e.alpha().polynomial(), "{e}: P_N Q_N-1 − P_N-1 Q_N = {ident}");
    }
    within(start, Duration::from_secs(30)).map(|t| format!("{} expansions, {t}", corpus.len()))
}

fn group_action_invariance() -> Outcome {
    let mut checked = 0usize;
    for e in corpus() {
        let n = e.period();
        let (t, s) = expansion_to_triple(&e).map_err(|err| err.to_string())?;
        let flipped = apply_eps_pi(&e);
        let (t2, s2) = expansion_to_triple(&flipped).map_err(|err| err.to_string())?;
        ensure!(t2 == t && s2 == -s.clone(), "{e}: επ changed the triple or kept T");
        ensure!(apply_eps_pi(&flipped) == e, "{e}: (επ)² ≠ id");
        for k in 1..n {
            let Ok(img) = apply_sigma(&e, k) else { continue };
            let (t2, s2) = expansion_to_triple(&img).map_err(|err| err.to_string())?;
            ensure!(t2 == t && s2 == s, "{e}: σ_{k} changed the triple");
            ensure!(apply_sigma(&img, k).ok().as_ref() == Some(&e), "{e}: σ_{k}² ≠ id");
            checked += 1;
            if k + 1 < n {
                let lhs = apply_sigma(&e, k)
                    .and_then(|x| apply_sigma(&x, k + 1))
                    .and_then(|x| apply_sigma(&x, k));
                let rhs = apply_sigma(&e, k + 1)
                    .and_then(|x| apply_sigma(&x, k))
                    .and_then(|x| apply_sigma(&x, k + 1));
                if let (Ok(l), Ok(r)) = (lhs, rhs) {
                    ensure!(l == r, "{e}: braid relation fails at k = {k}");
                    checked += 1;
                }
            }
            for j in (k + 2)..n {
                let lhs = apply_sigma(&e, k).and_then(|x| apply_sigma(&x, j));
                let rhs = apply_sigma(&e, j).and_then(|x| apply_sigma(&x, k));
                if let (Ok(l), Ok(r)) = (lhs, rhs) {
                    ensure!(l == r, "{e}: σ_{k}, σ_{j} do not commute");
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} σ/Coxeter checks plus επ on 800 expansions"))
}

fn jacobi_correspondence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1ac0b1);
    for i in 0..200 {
        let g = i % 4;
        let j = common::random_jacobi(&mut rng, g);
        let beta = common::small_rational(&mut rng);
        let t = alpha_triple_from_jacobi(&j, &beta);
        ensure!(t.discriminant() == *j.r(), "pair {i}: B² − AC ≠ R");
        let (j2, beta2) = jacobi_from_alpha_triple(&t);
        ensure!(j2 == j && beta2 == beta, "pair {i}: triple → Jacobi → triple ≠ id");
        ensure!(alpha_triple_from_jacobi(&j2, &beta2) == t, "pair {i}: Jacobi → triple → Jacobi ≠ id");
    }

    for i in 0..100 {
        let g = 1 + i % 3;
        let mut lambdas = BTreeSet::new();
        while lambdas.len() < g {
            lambdas.insert(common::small_rational(&mut rng));
        }
        let u = Polynomial::from_roots(&lambdas);
        let v = common::random_poly(&mut rng, g);
        let w = common::random_monic(&mut rng, g + 1);
        let r = &v * &v + &u * &w;
        let points: Vec<_> = lambdas.iter().map(|l| CurvePoint::new(l.clone(), v.eval(l))).collect();
        let d = Divisor::new(points.clone(), r.clone()).map_err(|e| format!("divisor {i}: {e}"))?;
        let j = jacobi_from_divisor(&d).map_err(|e| format!("divisor {i}: {e}"))?;
        ensure!(
            j == JacobiTriple::new(u, v, w, r).unwrap(),
            "divisor {i}: wrong Jacobi triple"
        );
        let back = divisor_from_jacobi(&j).map_err(|e| format!("divisor {i}: {e}"))?;
        ensure!(back.points() == points.as_slice(), "divisor {i}: round trip failed");
    }

    let j = jacobi_from_alpha_triple(&sect4_triple()).0;
    let betas = pure_beta_candidates(&j, &int(4)).map_err(|e| e.to_string())?;
    ensure!(betas == vec![frac(-7, 2), int(-2)], "betas = {betas:?}");
    for b in &betas {
        let c4 = alpha_triple_from_jacobi(&j, b).c().eval(&int(4));
        ensure!(c4 == int(0), "β = {b}: C(4) = {c4}");
    }
    Ok("200 (J, β) pairs, 100 divisors, β ∈ {−2, −7/2}".into())
}

fn floating_sanity() -> Outcome {
    let t = sect4_triple();
    let mut worst: f64 = 0.0;
    for l in [0, 2, 10] {
        for br in [Branch::Plus, Branch::Minus] {
            let r = numeric_residual(&t, &int(l), br).map_err(|e| e.to_string())?;
            ensure!(r <= 1e-9, "λ₀ = {l}, {br:?}: residual {r:e}");
            worst = worst.max(r);
        }
    }
    Ok(format!("max residual {worst:e}"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("golden reproduction of the 12 worked expansions", golden_reproduction),
        ("orbit closure under σ₁, σ₂, επ", orbit_closure),
        ("admissibility decomposition", admissibility),
        ("period-1 formulas (periodic and pure)", n1_formulas),
        ("round-trip property suite", round_trip_suite),
        ("group-action invariance", group_action_invariance),
        ("Jacobi correspondence", jacobi_correspondence),
        ("floating-point sanity", floating_sanity),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(info) => println!("PASS  {name}: {info}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
