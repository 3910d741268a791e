//! Complex points as plain coordinate pairs.
//!
//! The evaluators spell out the real arithmetic directly so rounding is
//! deterministic and independent of any complex-number facility.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::Scalar;

/// A point of the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexPoint<S> {
    pub re: S,
    pub im: S,
}

impl<S: Scalar> ComplexPoint<S> {
    pub fn new(re: S, im: S) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero())
    }

    pub fn from_real(re: S) -> Self {
        Self::new(re, S::zero())
    }

    /// The boundary point `e^{it}`.
    pub fn unit_circle(t: S) -> Self {
        Self::new(t.cos(), t.sin())
    }

    pub fn modulus(self) -> S {
        self.re.hypot(self.im)
    }

    pub fn modulus_sq(self) -> S {
        self.re * self.re + self.im * self.im
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn scale(self, k: S) -> Self {
        Self::new(self.re * k, self.im * k)
    }

    /// Integer power by repeated multiplication.
    pub fn powi(self, k: usize) -> Self {
        let mut acc = Self::new(S::one(), S::zero());
        for _ in 0..k {
            acc = acc * self;
        }
        acc
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl<S: Scalar> Add for ComplexPoint<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<S: Scalar> Sub for ComplexPoint<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<S: Scalar> Mul for ComplexPoint<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl<S: Scalar> Div for ComplexPoint<S> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let d = rhs.modulus_sq();
        Self::new(
            (self.re * rhs.re + self.im * rhs.im) / d,
            (self.im * rhs.re - self.re * rhs.im) / d,
        )
    }
}

impl<S: Scalar> Neg for ComplexPoint<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = ComplexPoint<f64>;

    #[test]
    fn field_arithmetic() {
        let a = C::new(1.0, 2.0);
        let b = C::new(-3.0, 0.5);
        assert_eq!(a + b, C::new(-2.0, 2.5));
        assert_eq!(a * b, C::new(-4.0, -5.5));
        let q = (a * b) / b;
        assert!((q - a).modulus() < 1e-15);
    }

    #[test]
    fn powers_and_modulus() {
        let i = C::new(0.0, 1.0);
        assert_eq!(i.powi(2), C::new(-1.0, 0.0));
        assert_eq!(i.powi(0), C::new(1.0, 0.0));
        assert!((C::unit_circle(0.7).modulus() - 1.0).abs() < 1e-15);
    }
}
