//! Minimal commutative-ring interface shared by series coefficients.
//!
//! Truncated series are generic over their coefficient ring; in this crate
//! that ring is either [`Rational`] or [`Polynomial`](crate::Polynomial).
//! `inverse` returns the multiplicative inverse when the element is a unit
//! (any nonzero rational; a nonzero constant polynomial).

use num::traits::Zero;

use crate::rational::{rat_int, Rational};

pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse, if this element is a unit.
    fn inverse(&self) -> Option<Self>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        rat_int(0)
    }

    fn one() -> Self {
        rat_int(1)
    }

    fn from_int(n: i64) -> Self {
        rat_int(n)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
