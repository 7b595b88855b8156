//! Truncated formal power series over a coefficient ring.
//!
//! A series of order `O` stores exactly the coefficients of `t^0 .. t^O`
//! and stands for the residue class modulo `t^(O+1)`. Binary operations
//! require equal orders (a mismatch is a caller bug and panics) and the
//! result keeps that order; multiplication is the truncated Cauchy product.
//!
//! `derivative` returns a series of order one less than its operand, so a
//! caller that wants the derivative at order `O` must build the operand at
//! order `O + 1`. This avoids silently returning a garbage top coefficient.

use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::polynomial::Polynomial;
use crate::rational::{rat_int, Rational};
use crate::ring::Ring;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("series has no reciprocal: constant coefficient is not a unit")]
pub struct NonInvertibleSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<C: Ring> {
    coeffs: Vec<C>, // length = order + 1
}

impl<C: Ring> TruncatedSeries<C> {
    /// Build from coefficients `c_0 .. c_k` with `k <= order`, padding with
    /// zeros up to the requested order.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<C>) -> Self {
        assert!(
            coeffs.len() <= order + 1,
            "got {} coefficients for order {}",
            coeffs.len(),
            order
        );
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, C::one())
    }

    pub fn constant(order: usize, c: C) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c t^k`.
    pub fn monomial(order: usize, k: usize, c: C) -> Self {
        assert!(k <= order, "monomial degree {k} exceeds order {order}");
        let mut s = Self::zero(order);
        s.coeffs[k] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order(),
            other.order(),
            "series order mismatch: {} vs {}",
            self.order(),
            other.order()
        );
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul_ref(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let order = self.order();
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Termwise `d/dt`; the result has order one less than the operand.
    pub fn derivative(&self) -> Self {
        assert!(self.order() >= 1, "cannot differentiate an order-0 series");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&C::from_int(k as i64)))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Reciprocal through the same order, by the standard recursion
    /// `r_0 = 1/c_0`, `r_n = -(1/c_0) * sum_{k=1..=n} c_k r_{n-k}`.
    pub fn reciprocal(&self) -> Result<Self, NonInvertibleSeries> {
        let c0_inv = self.coeffs[0].inverse().ok_or(NonInvertibleSeries)?;
        let order = self.order();
        let mut out = Vec::with_capacity(order + 1);
        out.push(c0_inv.clone());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].mul(&out[n - k]));
            }
            out.push(acc.mul(&c0_inv).neg());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Drop coefficients above `new_order` (which must not exceed the
    /// current order).
    pub fn truncated(&self, new_order: usize) -> Self {
        assert!(
            new_order <= self.order(),
            "cannot extend a series by truncation"
        );
        TruncatedSeries {
            coeffs: self.coeffs[..=new_order].to_vec(),
        }
    }

    /// Substitute `t -> -t`: flips the sign of odd-index coefficients.
    pub fn negate_argument(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        }
    }

    /// Multiply by `t^k`, staying at the same order (top coefficients fall
    /// off the end).
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![C::zero(); order + 1];
        if k <= order {
            for i in 0..=(order - k) {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl TruncatedSeries<Rational> {
    /// View a polynomial as a series of the given order (coefficients past
    /// the order are dropped).
    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        let coeffs = (0..=order).map(|k| p.coeff(k)).collect();
        TruncatedSeries { coeffs }
    }
}

/// `e^(a t)` truncated at the given order: coefficients `a^k / k!`.
pub fn exp_series(a: &Rational, order: usize) -> TruncatedSeries<Rational> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(rat_int(1));
    for k in 1..=order {
        let prev = coeffs.last().unwrap() * a / rat_int(k as i64);
        coeffs.push(prev);
    }
    TruncatedSeries::from_coeffs(order, coeffs)
}

impl<C: Ring> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        self.add_ref(rhs)
    }
}

impl<C: Ring> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        self.sub_ref(rhs)
    }
}

impl<C: Ring> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Ring> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn s(order: usize, coeffs: &[(i64, i64)]) -> TruncatedSeries<Rational> {
        TruncatedSeries::from_coeffs(order, coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn mul_truncates() {
        let a = s(2, &[(1, 1), (1, 1)]);
        let b = s(2, &[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, s(2, &[(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn add_identity() {
        let a = s(3, &[(1, 2), (0, 1), (-3, 7)]);
        assert_eq!(&a + &TruncatedSeries::zero(3), a);
    }

    #[test]
    #[should_panic(expected = "order mismatch")]
    fn order_mismatch_panics() {
        let _ = &s(2, &[(1, 1)]) + &s(3, &[(1, 1)]);
    }

    #[test]
    fn derivative_drops_one_order() {
        // d/dt (1 + t + t^2/2 + t^3/6) = 1 + t + t^2/2
        let e = s(3, &[(1, 1), (1, 1), (1, 2), (1, 6)]);
        let d = e.derivative();
        assert_eq!(d.order(), 2);
        assert_eq!(d, s(2, &[(1, 1), (1, 1), (1, 2)]));
    }

    #[test]
    fn reciprocal_geometric() {
        let a = s(3, &[(1, 1), (-1, 1)]);
        assert_eq!(
            a.reciprocal().unwrap(),
            s(3, &[(1, 1), (1, 1), (1, 1), (1, 1)])
        );
        assert_eq!(
            TruncatedSeries::<Rational>::one(4).reciprocal().unwrap(),
            TruncatedSeries::one(4)
        );
    }

    #[test]
    fn reciprocal_requires_unit_constant() {
        let t = s(2, &[(0, 1), (1, 1)]);
        assert_eq!(t.reciprocal(), Err(NonInvertibleSeries));
    }

    #[test]
    fn reciprocal_order_two_generating_denominator() {
        // 2 * sum t^j/(j+2)! = 1 + t/3 + t^2/12 + t^3/60; its reciprocal
        // carries B_{2,n}/n! (frozen from the hb_number recurrence).
        let g = s(3, &[(1, 1), (1, 3), (1, 12), (1, 60)]);
        let r = g.reciprocal().unwrap();
        assert_eq!(r, s(3, &[(1, 1), (-1, 3), (1, 36), (1, 540)]));
    }

    #[test]
    fn exp_series_examples() {
        assert_eq!(exp_series(&rat_int(0), 5), TruncatedSeries::one(5));
        assert_eq!(exp_series(&rat_int(1), 2), s(2, &[(1, 1), (1, 1), (1, 2)]));
        assert_eq!(
            exp_series(&rat(1, 2), 2),
            s(2, &[(1, 1), (1, 2), (1, 8)])
        );
    }

    #[test]
    fn shift_and_truncate() {
        let a = s(3, &[(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(a.shift_up(2), s(3, &[(0, 1), (0, 1), (1, 1), (2, 1)]));
        assert_eq!(a.shift_up(5), TruncatedSeries::zero(3));
        assert_eq!(a.truncated(1), s(1, &[(1, 1), (2, 1)]));
    }

    #[test]
    fn polynomial_coefficients_work() {
        use crate::polynomial::Polynomial;
        let x = Polynomial::monomial(rat_int(1), 1);
        let a: TruncatedSeries<Polynomial> =
            TruncatedSeries::from_coeffs(2, vec![Polynomial::one(), x.clone()]);
        let sq = &a * &a;
        assert_eq!(sq.coeff(0), &Polynomial::one());
        assert_eq!(sq.coeff(1), &x.scale(&rat_int(2)));
        assert_eq!(sq.coeff(2), &(&x * &x));
    }
}
