use std::ops::{Add, Index, IndexMut, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// 27 frame components `T[i][j][k]`, `i, j, k ∈ {0, 1, 2}`.
///
/// Serialized as a nested 3×3×3 array.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tensor3<T> {
    pub t: [[[T; 3]; 3]; 3],
}

/// All index triples in lexicographic order.
pub fn triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..27).map(|n| (n / 9, (n / 3) % 3, n % 3))
}

impl<T: Real> Tensor3<T> {
    pub fn zero() -> Self {
        Self { t: [[[T::zero(); 3]; 3]; 3] }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize, usize) -> T) -> Self {
        let mut out = Self::zero();
        for (i, j, k) in triples() {
            out.t[i][j][k] = f(i, j, k);
        }
        out
    }

    pub fn scale(&self, s: T) -> Self {
        Self::from_fn(|i, j, k| self.t[i][j][k] * s)
    }

    pub fn dot(&self, other: &Self) -> T {
        triples().fold(T::zero(), |acc, (i, j, k)| acc + self.t[i][j][k] * other.t[i][j][k])
    }

    pub fn max_abs(&self) -> T {
        self.t.iter().flatten().flatten().fold(T::zero(), |m, x| m.max(x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.t.iter().flatten().flatten().all(|x| x.is_finite())
    }

    /// Number of entries with `|x| > tol`.
    pub fn support_len(&self, tol: T) -> usize {
        self.t.iter().flatten().flatten().filter(|x| x.abs() > tol).count()
    }
}

impl<T> Index<(usize, usize, usize)> for Tensor3<T> {
    type Output = T;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &T {
        &self.t[i][j][k]
    }
}

impl<T> IndexMut<(usize, usize, usize)> for Tensor3<T> {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut T {
        &mut self.t[i][j][k]
    }
}

impl<T: Real> Add for Tensor3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j, k| self.t[i][j][k] + rhs.t[i][j][k])
    }
}

impl<T: Real> Sub for Tensor3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j, k| self.t[i][j][k] - rhs.t[i][j][k])
    }
}
