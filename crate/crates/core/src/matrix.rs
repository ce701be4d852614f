use std::fmt;
use std::ops::Mul;

use crate::scalar::Scalar;

/// A 2x2 matrix `[[m00, m01], [m10, m11]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2<T> {
    pub m: [[T; 2]; 2],
}

impl<T: Scalar> Matrix2<T> {
    pub fn new(m00: T, m01: T, m10: T, m11: T) -> Self {
        Self {
            m: [[m00, m01], [m10, m11]],
        }
    }

    pub fn from_i64(m00: i64, m01: i64, m10: i64, m11: i64) -> Self {
        let c = |v| T::from_i64(v).expect("small literal");
        Self::new(c(m00), c(m01), c(m10), c(m11))
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    /// The swap matrix `[[0,1],[1,0]]`.
    pub fn swap() -> Self {
        Self::new(T::zero(), T::one(), T::one(), T::zero())
    }

    pub fn det(&self) -> T {
        let [[a, b], [c, d]] = &self.m;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    /// `(a, b)ᵀ ↦ M (a, b)ᵀ`.
    pub fn apply(&self, v: (T, T)) -> (T, T) {
        let [[a, b], [c, d]] = &self.m;
        (
            a.clone() * v.0.clone() + b.clone() * v.1.clone(),
            c.clone() * v.0 + d.clone() * v.1,
        )
    }

    /// `M⁻¹ · self` when `M` is unimodular.
    pub fn left_divide(&self, by: &Self) -> Option<Self> {
        let det = by.det();
        if !(det.is_one() || (-det.clone()).is_one()) {
            return None;
        }
        let [[a, b], [c, d]] = &by.m;
        let inv = Self::new(
            d.clone() * det.clone(),
            -b.clone() * det.clone(),
            -c.clone() * det.clone(),
            a.clone() * det,
        );
        Some(&inv * self)
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.m.iter().flatten()
    }

    pub fn is_non_negative(&self) -> bool {
        self.entries().all(|x| !x.is_negative())
    }

    pub fn entry_sum(&self) -> T {
        self.entries().fold(T::zero(), |acc, x| acc + x.clone())
    }
}

impl<'a, T: Scalar> Mul<&'a Matrix2<T>> for &'a Matrix2<T> {
    type Output = Matrix2<T>;

    fn mul(self, rhs: &'a Matrix2<T>) -> Matrix2<T> {
        let e = |i: usize, j: usize| {
            self.m[i][0].clone() * rhs.m[0][j].clone() + self.m[i][1].clone() * rhs.m[1][j].clone()
        };
        Matrix2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl<T: Scalar> Mul for Matrix2<T> {
    type Output = Matrix2<T>;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> fmt::Display for Matrix2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}
