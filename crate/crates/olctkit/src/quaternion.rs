//! Real quaternions and the orthogonal plane split with respect to `i` (left) and `j` (right).
//!
//! A quaternion is stored as `w + x i + y j + z k`. The split
//! `q± = (q ± i q j) / 2` separates a quaternion into two planes: on `q₊` a
//! left `i` and a right `j` anti-commute (`i q₊ = -q₊ j`), on `q₋` they commute
//! (`i q₋ = q₋ j`). Each half is determined by a single complex number over `i`,
//! which is what lets a two-sided quaternion transform run as two complex ones.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

/// The two halves of an orthogonal plane split; `q_plus + q_minus == q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpsPair<T> {
    pub q_plus: Quaternion<T>,
    pub q_minus: Quaternion<T>,
}

impl<T: Real> Quaternion<T> {
    pub const fn new(w: T, x: T, y: T, z: T) -> Self {
        Self { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    pub fn i() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    /// Scalar part `Sc(q)`.
    pub fn scalar(self) -> T {
        self.w
    }

    pub fn scale(self, s: T) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn conj(self) -> Self {
        q_conj(self)
    }

    pub fn norm_sq(self) -> T {
        q_norm_sq(self)
    }

    pub fn norm(self) -> T {
        q_norm_sq(self).sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Embeds a complex number over `i`: `re + im i`.
    pub fn from_complex_i(c: Complex<T>) -> Self {
        Self::new(c.re, c.im, T::zero(), T::zero())
    }

    /// Embeds a complex number into the `(1, j)` plane: `re + im j`.
    pub fn from_complex_j(c: Complex<T>) -> Self {
        Self::new(c.re, T::zero(), c.im, T::zero())
    }

    /// Builds `c1 + c2 j` with `c1, c2` complex over `i`.
    pub fn from_pair(c1: Complex<T>, c2: Complex<T>) -> Self {
        Self::new(c1.re, c1.im, c2.re, c2.im)
    }

    /// Inverse of [`Quaternion::from_pair`].
    pub fn to_pair(self) -> (Complex<T>, Complex<T>) {
        (Complex::new(self.w, self.x), Complex::new(self.y, self.z))
    }
}

/// Hamilton product `p r`.
pub fn q_mul<T: Real>(p: Quaternion<T>, r: Quaternion<T>) -> Quaternion<T> {
    Quaternion::new(
        p.w * r.w - p.x * r.x - p.y * r.y - p.z * r.z,
        p.w * r.x + p.x * r.w + p.y * r.z - p.z * r.y,
        p.w * r.y - p.x * r.z + p.y * r.w + p.z * r.x,
        p.w * r.z + p.x * r.y - p.y * r.x + p.z * r.w,
    )
}

pub fn q_conj<T: Real>(q: Quaternion<T>) -> Quaternion<T> {
    Quaternion::new(q.w, -q.x, -q.y, -q.z)
}

pub fn q_norm_sq<T: Real>(q: Quaternion<T>) -> T {
    q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z
}

/// Splits `q` into `q± = (q ± i q j) / 2`.
///
/// `i q j = z - y i - x j + w k`, so each component of a half is a half-sum or
/// half-difference of two input components.
pub fn ops_split<T: Real>(q: Quaternion<T>) -> OpsPair<T> {
    let h = T::lit(0.5);
    OpsPair {
        q_plus: Quaternion::new((q.w + q.z) * h, (q.x - q.y) * h, (q.y - q.x) * h, (q.z + q.w) * h),
        q_minus: Quaternion::new((q.w - q.z) * h, (q.x + q.y) * h, (q.y + q.x) * h, (q.z - q.w) * h),
    }
}

/// Complex generator of each half: `q₊ = c₊ + i c₊ j` and `q₋ = c₋ - i c₋ j`.
///
/// With `q = c1 + c2 j`, `c₊ = (c1 - i c2) / 2` and `c₋ = (c1 + i c2) / 2`.
pub fn ops_generators<T: Real>(q: Quaternion<T>) -> (Complex<T>, Complex<T>) {
    let h = T::lit(0.5);
    (
        Complex::new((q.w + q.z) * h, (q.x - q.y) * h),
        Complex::new((q.w - q.z) * h, (q.x + q.y) * h),
    )
}

/// Rebuilds `q₊` from its generator.
pub fn plus_from_generator<T: Real>(c: Complex<T>) -> Quaternion<T> {
    Quaternion::new(c.re, c.im, -c.im, c.re)
}

/// Rebuilds `q₋` from its generator.
pub fn minus_from_generator<T: Real>(c: Complex<T>) -> Quaternion<T> {
    Quaternion::new(c.re, c.im, c.im, -c.re)
}

impl<T: Real> Add for Quaternion<T> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.w + r.w, self.x + r.x, self.y + r.y, self.z + r.z)
    }
}

impl<T: Real> Sub for Quaternion<T> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.w - r.w, self.x - r.x, self.y - r.y, self.z - r.z)
    }
}

impl<T: Real> Neg for Quaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<T: Real> Mul for Quaternion<T> {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        q_mul(self, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Quaternion<f64>;

    fn close(a: Q, b: Q, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn multiplication_table() {
        let (one, i, j, k) = (Q::one(), Q::i(), Q::j(), Q::k());
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(j * i, -k);
        assert_eq!(k * j, -i);
        assert_eq!(i * k, -j);
        for u in [i, j, k] {
            assert_eq!(u * u, -one);
        }
        assert_eq!(i * j * k, -one);
    }

    #[test]
    fn distributes_over_sums() {
        let p = Q::one() + Q::i();
        let r = Q::one() + Q::j();
        assert_eq!(p * r, Q::new(1.0, 1.0, 1.0, 1.0));
    }

    #[test]
    fn conjugation() {
        assert_eq!(q_conj(Q::one()), Q::one());
        assert_eq!(q_conj(Q::new(0.0, 1.0, 2.0, 0.0)), Q::new(0.0, -1.0, -2.0, 0.0));
    }

    #[test]
    fn norms() {
        assert_eq!(q_norm_sq(Q::zero()), 0.0);
        assert_eq!(q_norm_sq(Q::new(1.0, 1.0, 1.0, 1.0)), 4.0);
    }

    #[test]
    fn split_of_units() {
        let one = ops_split(Q::one());
        assert_eq!(one.q_plus, Q::new(0.5, 0.0, 0.0, 0.5));
        assert_eq!(one.q_minus, Q::new(0.5, 0.0, 0.0, -0.5));
        let i = ops_split(Q::i());
        assert_eq!(i.q_plus, Q::new(0.0, 0.5, -0.5, 0.0));
        assert_eq!(i.q_minus, Q::new(0.0, 0.5, 0.5, 0.0));
    }

    #[test]
    fn split_matches_definition() {
        let q = Q::new(0.3, -1.2, 2.5, 0.7);
        let iqj = Q::i() * q * Q::j();
        let s = ops_split(q);
        assert!(close(s.q_plus, (q + iqj).scale(0.5), 1e-15));
        assert!(close(s.q_minus, (q - iqj).scale(0.5), 1e-15));
    }

    #[test]
    fn generators_rebuild_halves() {
        let q = Q::new(0.3, -1.2, 2.5, 0.7);
        let s = ops_split(q);
        let (cp, cm) = ops_generators(q);
        assert_eq!(plus_from_generator(cp), s.q_plus);
        assert_eq!(minus_from_generator(cm), s.q_minus);
        let (c1, c2) = q.to_pair();
        let i = Complex::new(0.0, 1.0);
        assert!((cp - (c1 - i * c2) * 0.5).norm() < 1e-15);
        assert!((cm - (c1 + i * c2) * 0.5).norm() < 1e-15);
    }

    #[test]
    fn works_in_single_precision() {
        let q = Quaternion::<f32>::new(1.0, 2.0, 3.0, 4.0);
        let s = ops_split(q);
        assert_eq!(s.q_plus + s.q_minus, q);
        assert_eq!(q_norm_sq(q), 30.0);
    }
}
