//! Fixed-size 3×3 real matrices and vectors, an independent matrix-exponential
//! oracle, and detection of the low-degree annihilating polynomials that make
//! the closed-form exponentials work.
//!
//! Every norm in this module is the max-abs entry norm.

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Vector of frame coordinates `(x⁰, x¹, x²)` with respect to `(e₀ = ξ, e₁, e₂)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vec3<T> {
    pub v: [T; 3],
}

impl<T: Real> Vec3<T> {
    pub fn new(x0: T, x1: T, x2: T) -> Self {
        Self { v: [x0, x1, x2] }
    }

    pub fn zero() -> Self {
        Self { v: [T::zero(); 3] }
    }

    /// The `i`-th frame vector `e_i`.
    pub fn basis(i: usize) -> Self {
        let mut v = [T::zero(); 3];
        v[i] = T::one();
        Self { v }
    }

    pub fn dot(&self, other: &Self) -> T {
        (0..3).fold(T::zero(), |acc, i| acc + self.v[i] * other.v[i])
    }

    pub fn scale(&self, s: T) -> Self {
        Self { v: self.v.map(|x| x * s) }
    }

    pub fn max_abs(&self) -> T {
        self.v.iter().fold(T::zero(), |m, x| m.max(x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.v.iter().all(|x| x.is_finite())
    }
}

impl<T> Index<usize> for Vec3<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.v[i]
    }
}

impl<T> IndexMut<usize> for Vec3<T> {
    fn index_mut(&mut self, i: usize) -> &mut T {
        &mut self.v[i]
    }
}

impl<T: Real> Add for Vec3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { v: [self.v[0] + rhs.v[0], self.v[1] + rhs.v[1], self.v[2] + rhs.v[2]] }
    }
}

impl<T: Real> Sub for Vec3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { v: [self.v[0] - rhs.v[0], self.v[1] - rhs.v[1], self.v[2] - rhs.v[2]] }
    }
}

/// Row-major 3×3 real matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mat3<T> {
    pub m: [[T; 3]; 3],
}

impl<T: Real> Mat3<T> {
    pub const fn new(m: [[T; 3]; 3]) -> Self {
        Self { m }
    }

    /// Like [`Mat3::new`] but rejects NaN and infinite entries.
    pub fn try_new(m: [[T; 3]; 3]) -> Result<Self> {
        let a = Self { m };
        if a.is_finite() {
            Ok(a)
        } else {
            Err(Error::NonFinite("matrix"))
        }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = [[T::zero(); 3]; 3];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = f(r, c);
            }
        }
        Self { m }
    }

    pub fn zero() -> Self {
        Self { m: [[T::zero(); 3]; 3] }
    }

    pub fn identity() -> Self {
        Self::diag(T::one(), T::one(), T::one())
    }

    pub fn diag(d0: T, d1: T, d2: T) -> Self {
        let z = T::zero();
        Self { m: [[d0, z, z], [z, d1, z], [z, z, d2]] }
    }

    /// `u vᵀ`, i.e. the endomorphism `x ↦ (v·x) u`.
    pub fn outer(u: &Vec3<T>, v: &Vec3<T>) -> Self {
        Self::from_fn(|r, c| u[r] * v[c])
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.m[c][r])
    }

    pub fn trace(&self) -> T {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    /// `tr(A²)` without forming the full square.
    pub fn trace_sq(&self) -> T {
        let mut acc = T::zero();
        for r in 0..3 {
            for c in 0..3 {
                acc = acc + self.m[r][c] * self.m[c][r];
            }
        }
        acc
    }

    pub fn det(&self) -> T {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn scale(&self, s: T) -> Self {
        Self { m: self.m.map(|row| row.map(|x| x * s)) }
    }

    pub fn max_abs(&self) -> T {
        self.m.iter().flatten().fold(T::zero(), |acc, x| acc.max(x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|x| x.is_finite())
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(|x| x.is_zero())
    }

    /// `‖self − other‖_max`.
    pub fn dist(&self, other: &Self) -> T {
        (*self - *other).max_abs()
    }

    pub fn mul_vec(&self, x: &Vec3<T>) -> Vec3<T> {
        Vec3 { v: [0, 1, 2].map(|r| (0..3).fold(T::zero(), |acc, c| acc + self.m[r][c] * x[c])) }
    }

    /// Row vector `xᵀ A`.
    pub fn vec_mul(x: &Vec3<T>, a: &Self) -> Vec3<T> {
        Vec3 { v: [0, 1, 2].map(|c| (0..3).fold(T::zero(), |acc, r| acc + x[r] * a.m[r][c])) }
    }

    pub fn cast<U: Real>(&self) -> Mat3<U> {
        Mat3::from_fn(|r, c| U::from(self.m[r][c]).expect("representable"))
    }
}

impl<T> Index<(usize, usize)> for Mat3<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.m[r][c]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat3<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.m[r][c]
    }
}

impl<T: Real> Add for Mat3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.m[r][c] + rhs.m[r][c])
    }
}

impl<T: Real> AddAssign for Mat3<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Real> Sub for Mat3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.m[r][c] - rhs.m[r][c])
    }
}

impl<T: Real> Neg for Mat3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}

impl<T: Real> Mul for Mat3<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.m[r][0] * rhs.m[0][c] + self.m[r][1] * rhs.m[1][c] + self.m[r][2] * rhs.m[2][c])
    }
}

impl<T: Real> Mul<T> for Mat3<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        self.scale(s)
    }
}

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
///
/// `A` is scaled by `2^{-s}` until its max-abs entry is at most 1/2; the series for
/// `X = e^{A/2^s} − E` is summed until a term's max-abs entry drops below `tol·2^{-s}`.
/// Squaring is carried out on `X` as `X ← 2X + X²`, which keeps the small increments
/// from being rounded against the identity. Accurate to roughly `tol` (relative to
/// `‖e^A‖`) for `‖A‖ ≤ 50`.
pub fn expm_oracle<T: Real>(a: &Mat3<T>, tol: T) -> Result<Mat3<T>> {
    if !a.is_finite() {
        return Err(Error::NonFinite("expm_oracle input"));
    }
    if !(tol > T::zero()) {
        return Err(Error::BadTolerance(tol.to_f64().unwrap_or(f64::NAN)));
    }

    let half = T::half();
    let mut squarings = 0u32;
    let mut factor = T::one();
    while a.max_abs() * factor > half {
        factor = factor * half;
        squarings += 1;
    }
    let x = a.scale(factor);
    let stop = tol * factor;

    let mut term = x;
    let mut sum = x;
    // ‖x‖ ≤ 1/2 entrywise, so terms shrink at least like (3/2)^k / k!
    for k in 2..=64u32 {
        term = (term * x).scale(T::one() / T::from_u32(k).unwrap());
        sum += term;
        if term.max_abs() < stop {
            break;
        }
    }

    for _ in 0..squarings {
        sum = sum.scale(T::two()) + sum * sum;
    }
    Ok(Mat3::identity() + sum)
}

/// Low-degree polynomial identity satisfied by a matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Annihilator<T> {
    /// `A² = κA`
    Quadratic(T),
    /// `A³ = κA`
    Cubic(T),
    None,
}

impl<T: Real> Annihilator<T> {
    pub fn kappa(&self) -> Option<T> {
        match *self {
            Annihilator::Quadratic(k) | Annihilator::Cubic(k) => Some(k),
            Annihilator::None => None,
        }
    }
}

/// Detects `A² = κA` (κ fitted by least squares over the entries with
/// `|A_ij| > tol`) or else `A³ = κA` with `κ = tr(A²)/2`.
///
/// The quadratic test accepts when `‖A² − κA‖ ≤ tol·(1 + ‖A‖²)`, the cubic one when
/// `‖A³ − κA‖ ≤ tol·(1 + ‖A‖³)`.
pub fn annihilator<T: Real>(a: &Mat3<T>, tol: T) -> Annihilator<T> {
    let norm = a.max_abs();
    let a2 = *a * *a;

    let (mut num, mut den) = (T::zero(), T::zero());
    for (x, x2) in a.m.iter().flatten().zip(a2.m.iter().flatten()) {
        if x.abs() > tol {
            num = num + *x2 * *x;
            den = den + *x * *x;
        }
    }
    let kappa = if den > T::zero() { num / den } else { a.trace() };
    if a2.dist(&a.scale(kappa)) <= tol * (T::one() + norm * norm) {
        return Annihilator::Quadratic(kappa);
    }

    let kappa = a2.trace() / T::two();
    let a3 = a2 * *a;
    if a3.dist(&a.scale(kappa)) <= tol * (T::one() + norm * norm * norm) {
        return Annihilator::Cubic(kappa);
    }
    Annihilator::None
}
