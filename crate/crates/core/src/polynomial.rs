//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree with trailing zeros trimmed;
//! the empty coefficient vector is the zero polynomial. Degrees stay small
//! here (well under 100), so no sparse or FFT-based representation is
//! needed — all arithmetic is the schoolbook kind, exact.

use std::ops::{Add, Mul, Neg, Sub};

use num::traits::Zero;

use crate::combinatorics::binomial;
use crate::rational::{rat_int, Rational};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Build from ascending-degree coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(rat_int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![rat_int(0); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat_int(0))
    }

    /// Ascending-degree coefficient slice, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add_ref(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Polynomial::new(coeffs)
    }

    pub fn sub_ref(&self, other: &Polynomial) -> Polynomial {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![rat_int(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(-x)`: flips the sign of odd-degree coefficients.
    pub fn negate_argument(&self) -> Polynomial {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Horner evaluation at `x`, exact.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = rat_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_int(k as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    /// `(1 - x)^n` expanded by the binomial theorem.
    pub fn one_minus_x_pow(n: u32) -> Polynomial {
        let coeffs = (0..=i64::from(n))
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                binomial(i64::from(n), k) * rat_int(sign)
            })
            .collect();
        Polynomial::new(coeffs)
    }

    /// `∫_0^1 (1-x)^(w-1) p(x) dx`, computed exactly by expanding the
    /// weight and integrating monomials termwise. Requires `w >= 1`.
    pub fn integrate01_weighted(&self, w: u32) -> Rational {
        assert!(w >= 1, "weight exponent must be a positive integer");
        let product = self.mul_ref(&Polynomial::one_minus_x_pow(w - 1));
        let mut acc = rat_int(0);
        for (k, c) in product.coeffs.iter().enumerate() {
            acc += c / rat_int(k as i64 + 1);
        }
        acc
    }
}

impl Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }

    fn one() -> Self {
        Polynomial::one()
    }

    fn from_int(n: i64) -> Self {
        Polynomial::constant(rat_int(n))
    }

    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self.add_ref(other)
    }

    fn neg(&self) -> Self {
        self.neg_ref()
    }

    fn mul(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }

    fn inverse(&self) -> Option<Self> {
        // Units of Q[x] are the nonzero constants.
        if self.degree() == Some(0) {
            Some(Polynomial::constant(self.coeffs[0].recip()))
        } else {
            None
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_ref(rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.sub_ref(rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_ref(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(coeffs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn construction_trims() {
        assert_eq!(p(&[(1, 1), (0, 1), (0, 1)]), p(&[(1, 1)]));
        assert!(p(&[(0, 1)]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[(3, 1), (1, 2)]).degree(), Some(1));
    }

    #[test]
    fn arithmetic() {
        let x = Polynomial::monomial(rat_int(1), 1);
        assert_eq!(&x * &x, Polynomial::monomial(rat_int(1), 2));
        let q = p(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(&q + &Polynomial::zero(), q);
        assert_eq!(&q - &q, Polynomial::zero());
        // (x - 1)(x + 1) = x^2 - 1
        let a = p(&[(-1, 1), (1, 1)]);
        let b = p(&[(1, 1), (1, 1)]);
        assert_eq!(&a * &b, p(&[(-1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn negate_argument_flips_odd_terms() {
        // 1 + t + t^2/2  ->  1 - t + t^2/2
        let t2 = p(&[(1, 1), (1, 1), (1, 2)]);
        assert_eq!(t2.negate_argument(), p(&[(1, 1), (-1, 1), (1, 2)]));
    }

    #[test]
    fn eval_examples() {
        // B_1(x) = x - 1/2 at 0
        let b1 = p(&[(-1, 2), (1, 1)]);
        assert_eq!(b1.eval(&rat_int(0)), rat(-1, 2));
        assert_eq!(Polynomial::zero().eval(&rat_int(7)), rat_int(0));
        // B_2(1) = B_2
        let b2 = p(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(b2.eval(&rat_int(1)), rat(1, 6));
    }

    #[test]
    fn derivative_examples() {
        let b2 = p(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(b2.derivative(), p(&[(-1, 1), (2, 1)]));
        assert_eq!(p(&[(9, 1)]).derivative(), Polynomial::zero());
        assert_eq!(
            Polynomial::monomial(rat_int(1), 3).derivative(),
            Polynomial::monomial(rat_int(3), 2)
        );
    }

    #[test]
    fn weighted_integral_examples() {
        assert_eq!(Polynomial::one().integrate01_weighted(1), rat_int(1));
        assert_eq!(Polynomial::one().integrate01_weighted(3), rat(1, 3));
        // B_{2,1}(x) = x - 1/3 integrates to zero against (1-x)
        let b21 = p(&[(-1, 3), (1, 1)]);
        assert_eq!(b21.integrate01_weighted(2), rat_int(0));
    }

    #[test]
    fn only_constants_invert() {
        assert_eq!(
            p(&[(2, 3)]).inverse(),
            Some(Polynomial::constant(rat(3, 2)))
        );
        assert_eq!(Polynomial::zero().inverse(), None);
        assert_eq!(p(&[(1, 1), (1, 1)]).inverse(), None);
    }
}
