use std::ops::Mul;

use super::poly::Polynomial;

/// 2×2 matrix of polynomials, row-major: `[[m00, m01], [m10, m11]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix2 {
    pub entries: [[Polynomial; 2]; 2],
}

impl PolyMatrix2 {
    pub fn new(m00: Polynomial, m01: Polynomial, m10: Polynomial, m11: Polynomial) -> Self {
        PolyMatrix2 {
            entries: [[m00, m01], [m10, m11]],
        }
    }

    pub fn identity() -> Self {
        Self::new(
            Polynomial::one(),
            Polynomial::zero(),
            Polynomial::zero(),
            Polynomial::one(),
        )
    }

    pub fn det(&self) -> Polynomial {
        let [[a, b], [c, d]] = &self.entries;
        a * d - b * c
    }

    pub fn trace(&self) -> Polynomial {
        &self.entries[0][0] + &self.entries[1][1]
    }
}

impl Mul<&PolyMatrix2> for &PolyMatrix2 {
    type Output = PolyMatrix2;
    fn mul(self, rhs: &PolyMatrix2) -> PolyMatrix2 {
        let l = &self.entries;
        let r = &rhs.entries;
        let cell = |i: usize, j: usize| &l[i][0] * &r[0][j] + &l[i][1] * &r[1][j];
        PolyMatrix2::new(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1))
    }
}

impl Mul for PolyMatrix2 {
    type Output = PolyMatrix2;
    fn mul(self, rhs: PolyMatrix2) -> PolyMatrix2 {
        &self * &rhs
    }
}
