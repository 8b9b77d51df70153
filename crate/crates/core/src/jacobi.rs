//! Jacobi triples `(U, V, W)` with `V² + UW = R` and their relation to
//! divisors on `μ² = R(λ)` and to α-triples.
//!
//! A non-special divisor `P₁ + … + P_g` with distinct abscissae gives
//! `U = ∏(λ − λᵢ)`, `V` the interpolant through the points and
//! `W = (R − V²)/U`. Each Jacobi triple together with a shift `β` gives one
//! α-triple, and every α-triple arises this way exactly once.

use num_traits::Zero;

use crate::alphafrac::AlphaTriple;
use crate::error::{Error, Result};
use crate::polyring::{rational_sqrt, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JacobiTriple {
    u: Polynomial,
    v: Polynomial,
    w: Polynomial,
    r: Polynomial,
}

impl JacobiTriple {
    /// Checks the degree conditions and `V² + UW = R`.
    pub fn new(u: Polynomial, v: Polynomial, w: Polynomial, r: Polynomial) -> Result<Self> {
        let g = u
            .degree()
            .ok_or_else(|| Error::InvalidJacobiTriple("U is zero".into()))?;
        if !u.is_monic_of_degree(g) {
            return Err(Error::InvalidJacobiTriple(format!("U = {u} is not monic")));
        }
        if !w.is_monic_of_degree(g + 1) {
            return Err(Error::InvalidJacobiTriple(format!(
                "W = {w} is not monic of degree {}",
                g + 1
            )));
        }
        if v.degree() >= Some(g) {
            return Err(Error::InvalidJacobiTriple(format!(
                "deg V must be below {g}, got V = {v}"
            )));
        }
        if &v * &v + &u * &w != r {
            return Err(Error::InvalidJacobiTriple("V² + UW differs from R".into()));
        }
        Ok(JacobiTriple { u, v, w, r })
    }

    pub fn u(&self) -> &Polynomial {
        &self.u
    }

    pub fn v(&self) -> &Polynomial {
        &self.v
    }

    pub fn w(&self) -> &Polynomial {
        &self.w
    }

    pub fn r(&self) -> &Polynomial {
        &self.r
    }

    pub fn genus(&self) -> usize {
        self.u.degree().unwrap_or(0)
    }
}

/// An affine point `(λ, μ)` of the curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurvePoint {
    pub lambda: Rational,
    pub mu: Rational,
}

impl CurvePoint {
    pub fn new(lambda: Rational, mu: Rational) -> Self {
        CurvePoint { lambda, mu }
    }

    pub fn lies_on(&self, r: &Polynomial) -> bool {
        &self.mu * &self.mu == r.eval(&self.lambda)
    }
}

/// `g` affine points on `μ² = R(λ)` with pairwise distinct `λ`, none the
/// conjugate of another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    points: Vec<CurvePoint>,
    r: Polynomial,
}

impl Divisor {
    pub fn new(points: Vec<CurvePoint>, r: Polynomial) -> Result<Self> {
        let deg = r
            .degree()
            .filter(|d| d % 2 == 1)
            .ok_or_else(|| Error::InvalidDivisor(format!("R = {r} must have odd degree")))?;
        if !r.is_monic_of_degree(deg) {
            return Err(Error::InvalidDivisor(format!("R = {r} is not monic")));
        }
        let g = deg / 2;
        if points.len() != g {
            return Err(Error::InvalidDivisor(format!(
                "genus {g} needs {g} points, got {}",
                points.len()
            )));
        }
        for p in &points {
            if !p.lies_on(&r) {
                return Err(Error::PointOffCurve {
                    lambda: p.lambda.to_string(),
                    mu: p.mu.to_string(),
                });
            }
        }
        for (i, p) in points.iter().enumerate() {
            for q in &points[..i] {
                if p.lambda == q.lambda {
                    return Err(if p.mu == -&q.mu {
                        Error::SpecialDivisor(p.lambda.to_string())
                    } else {
                        Error::RepeatedAbscissa(p.lambda.to_string())
                    });
                }
            }
        }
        Ok(Divisor { points, r })
    }

    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn r(&self) -> &Polynomial {
        &self.r
    }
}

fn lagrange(points: &[CurvePoint]) -> Polynomial {
    let mut v = Polynomial::zero();
    for (i, p) in points.iter().enumerate() {
        let mut basis = Polynomial::one();
        let mut denom = Rational::from_integer(1.into());
        for (j, q) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &Polynomial::linear(&q.lambda);
                denom *= &p.lambda - &q.lambda;
            }
        }
        v = &v + &basis.scale(&(&p.mu / denom));
    }
    v
}

pub fn jacobi_from_divisor(d: &Divisor) -> Result<JacobiTriple> {
    let u = Polynomial::from_roots(d.points.iter().map(|p| &p.lambda));
    let v = lagrange(&d.points);
    let w = (&d.r - &(&v * &v))
        .div_exact(&u)
        .ok_or_else(|| Error::InvalidDivisor("U does not divide R − V²".into()))?;
    JacobiTriple::new(u, v, w, d.r.clone())
}

/// Points `(λᵢ, V(λᵢ))` over the roots of `U`, which must be rational and
/// simple.
pub fn divisor_from_jacobi(j: &JacobiTriple) -> Result<Divisor> {
    let roots = j.u.rational_roots();
    if roots.iter().map(|(_, m)| m).sum::<usize>() != j.genus() {
        return Err(Error::IrrationalSupport);
    }
    if let Some((l, _)) = roots.iter().find(|(_, m)| *m > 1) {
        return Err(Error::RepeatedAbscissa(l.to_string()));
    }
    let points = roots
        .into_iter()
        .map(|(l, _)| {
            let mu = j.v.eval(&l);
            CurvePoint::new(l, mu)
        })
        .collect();
    Divisor::new(points, j.r.clone())
}

/// `A = U`, `B = V + βU`, `C = −W + 2βV + β²U`.
pub fn alpha_triple_from_jacobi(j: &JacobiTriple, beta: &Rational) -> AlphaTriple {
    let a = j.u.clone();
    let b = &j.v + &j.u.scale(beta);
    let c = &(&j.v.scale(&(beta + beta)) + &j.u.scale(&(beta * beta))) - &j.w;
    AlphaTriple::new(a, b, c).expect("shape conditions follow from the Jacobi triple")
}

/// Inverse of [`alpha_triple_from_jacobi`]; `β` is the coefficient of `λ^g`
/// in `B`.
pub fn jacobi_from_alpha_triple(t: &AlphaTriple) -> (JacobiTriple, Rational) {
    let beta = t.b().coeff(t.genus());
    let u = t.a().clone();
    let v = t.b() - &t.a().scale(&beta);
    let w = &(&t.b().scale(&(&beta + &beta)) - &t.a().scale(&(&beta * &beta))) - t.c();
    let j = JacobiTriple::new(u, v, w, t.discriminant())
        .expect("shape conditions follow from the alpha-triple");
    (j, beta)
}

/// The shifts `β` whose α-triple has `C(α_N) = 0`, in ascending order.
///
/// These are the roots of `U(α_N)β² + 2V(α_N)β − W(α_N) = 0`, i.e.
/// `β = (−V(α_N) ± √R(α_N)) / U(α_N)`, or `W(α_N) / 2V(α_N)` when
/// `U(α_N) = 0`.
pub fn pure_beta_candidates(j: &JacobiTriple, alpha_n: &Rational) -> Result<Vec<Rational>> {
    let r = j.r.eval(alpha_n);
    if r.is_zero() {
        return Err(Error::RootOfR);
    }
    let (u, v, w) = (j.u.eval(alpha_n), j.v.eval(alpha_n), j.w.eval(alpha_n));
    if u.is_zero() {
        // R(α_N) = V(α_N)² here, so V(α_N) ≠ 0
        return Ok(vec![w / (&v + &v)]);
    }
    let s = rational_sqrt(&r).ok_or_else(|| Error::IrrationalBeta(r.to_string()))?;
    let mut out = vec![(-&v - &s) / &u, (-&v + &s) / &u];
    out.sort();
    Ok(out)
}
