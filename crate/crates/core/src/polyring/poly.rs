use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{rational_sqrt, Rational};

/// Dense univariate polynomial over ℚ in the variable λ.
///
/// `coeffs[i]` is the coefficient of λⁱ. The highest stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `λ`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `λ − a`.
    pub fn linear(a: &Rational) -> Self {
        Polynomial {
            coeffs: vec![-a.clone(), Rational::one()],
        }
    }

    /// `∏ (λ − rᵢ)`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of λⁱ (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with `None` for the zero polynomial. `None` orders below every
    /// `Some(d)`, so comparisons like `p.degree() <= Some(g)` read naturally.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic_of_degree(&self, d: usize) -> bool {
        self.degree() == Some(d) && self.leading().is_one()
    }

    pub fn is_anti_monic_of_degree(&self, d: usize) -> bool {
        self.degree() == Some(d) && (-self.leading()).is_one()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Synthetic division by `λ − a`: returns `(q, r)` with `self = (λ − a)·q + r`.
    pub fn div_linear(&self, a: &Rational) -> (Self, Rational) {
        let Some(d) = self.degree() else {
            return (Self::zero(), Rational::zero());
        };
        let mut q = vec![Rational::zero(); d];
        let mut carry = Rational::zero();
        for i in (0..=d).rev() {
            let v = &self.coeffs[i] + &carry * a;
            if i == 0 {
                return (Self::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Long division. Returns `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Some((Self::zero(), self.clone()));
        };
        let mut q = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        rem.truncate(dd);
        Some((Self::new(q), Self::new(rem)))
    }

    /// Exact quotient, or `None` if `divisor` is zero or does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Returns `S` with `S² = self` when such an `S` exists over ℚ, normalized
    /// to a positive leading coefficient.
    pub fn sqrt(&self) -> Option<Self> {
        let Some(d) = self.degree() else {
            return Some(Self::zero());
        };
        if d % 2 == 1 {
            return None;
        }
        let m = d / 2;
        let top = rational_sqrt(&self.leading())?;
        let two_top = &top + &top;
        let mut s = vec![Rational::zero(); m + 1];
        s[m] = top;
        // Match coefficients of λ^(m+k) for k = m-1 down to 0; the only
        // unknown term there is 2·s_m·s_k.
        for k in (0..m).rev() {
            let mut acc = self.coeff(m + k);
            for i in (k + 1)..m {
                let j = m + k - i;
                if j > k && j < m {
                    acc -= &s[i] * &s[j];
                }
            }
            s[k] = acc / &two_top;
        }
        let s = Self::new(s);
        (&s * &s == *self).then_some(s)
    }

    /// Distinct rational roots with their multiplicities, in ascending order.
    ///
    /// Candidates come from the rational root theorem, so the cost grows with
    /// the number of divisors of the (integer-normalized) end coefficients.
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        let mut roots = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let mut rest = self.clone();
        let zero = Rational::zero();
        let mut zero_mult = 0;
        while rest.coeff(0).is_zero() && !rest.is_zero() {
            rest = rest.div_linear(&zero).0;
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((zero, zero_mult));
        }
        if rest.degree().unwrap_or(0) > 0 {
            let ints = integer_coefficients(&rest);
            let low = divisors(ints.first().expect("nonzero"));
            let high = divisors(ints.last().expect("nonzero"));
            let mut candidates = BTreeSet::new();
            for p in &low {
                for q in &high {
                    let c = Rational::new(p.clone(), q.clone());
                    candidates.insert(-c.clone());
                    candidates.insert(c);
                }
            }
            for c in candidates {
                let mut mult = 0;
                loop {
                    let (q, r) = rest.div_linear(&c);
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((c, mult));
                }
            }
        }
        roots.sort();
        roots
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rational_to_f64(c))
    }
}

/// Coefficients scaled by the lcm of their denominators.
fn integer_coefficients(p: &Polynomial) -> Vec<BigInt> {
    let l = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect()
}

/// Positive divisors of `|n|`, `n ≠ 0`.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 if show_coeff => write!(f, "·λ")?,
                1 => write!(f, "λ")?,
                _ if show_coeff => write!(f, "·λ^{i}")?,
                _ => write!(f, "λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
