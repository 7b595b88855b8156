//! Hypergeometric Bernoulli numbers `B_{N,n}` and polynomials `B_{N,n}(x)`.
//!
//! The family of order `N >= 1` is generated by
//!
//! ```text
//! (t^N/N!) e^{xt} / (e^t - T_{N-1}(t)) = sum_n B_{N,n}(x) t^n / n!
//! ```
//!
//! with `T_k(t) = sum_{j<=k} t^j/j!`. Numbers are the values at `x = 0`;
//! `N = 1` gives the classical Bernoulli numbers. Two independent routes
//! are provided and cross-checked elsewhere:
//!
//! - [`HbTable`] computes numbers by the linear recurrence obtained from
//!   multiplying the generating function by its denominator,
//!   `B_{N,n} = -n! N! sum_{k<n} B_{N,k} / (k! (N+n-k)!)`;
//! - [`hb_series`] divides truncated series directly and carries
//!   `B_{N,n}(x)/n!` as its coefficients.
//!
//! Polynomials come from the Appell expansion
//! `B_{N,n}(x) = sum_k C(n,k) B_{N,k} x^{n-k}`, which makes them monic of
//! degree `n` with constant term `B_{N,n}`.

use std::collections::BTreeMap;

use crate::combinatorics::{binomial, factorial, kronecker_delta};
use crate::polynomial::Polynomial;
use crate::rational::{rat_int, Rational};
use crate::series::{exp_series, TruncatedSeries};

/// Default cap on the index `n`; exact sweeps beyond this are almost always
/// a mistake (the rationals grow quickly), so larger tables must opt in via
/// [`HbTable::with_max_index`].
pub const DEFAULT_MAX_INDEX: u32 = 200;

/// Memoized table of hypergeometric Bernoulli numbers, plus cached columns
/// of polynomial values `B_{N,n}(x)` for repeatedly used sample points.
///
/// Entries for each order are computed densely in increasing `n`. Negative
/// indices are not stored; the accessors return 0 for them, matching the
/// convention that `B_{N,n}(x) = 0` for `n < 0`.
#[derive(Clone, Debug)]
pub struct HbTable {
    max_index: u32,
    numbers: BTreeMap<u32, Vec<Rational>>,
    values: BTreeMap<(u32, Rational), Vec<Rational>>,
}

impl Default for HbTable {
    fn default() -> Self {
        Self::new()
    }
}

impl HbTable {
    pub fn new() -> Self {
        Self::with_max_index(DEFAULT_MAX_INDEX)
    }

    pub fn with_max_index(max_index: u32) -> Self {
        HbTable {
            max_index,
            numbers: BTreeMap::new(),
            values: BTreeMap::new(),
        }
    }

    pub fn max_index(&self) -> u32 {
        self.max_index
    }

    fn check_args(&self, order: u32, index: i64) {
        assert!(order >= 1, "order N must be >= 1");
        assert!(
            index <= i64::from(self.max_index),
            "index {index} exceeds the table cap {}; build the table with a larger cap to opt in",
            self.max_index
        );
    }

    fn ensure_numbers(&mut self, order: u32, upto: usize) {
        let column = self.numbers.entry(order).or_insert_with(|| vec![rat_int(1)]);
        while column.len() <= upto {
            let n = column.len(); // next index to fill
            let mut acc = rat_int(0);
            for (k, b) in column.iter().enumerate() {
                let denom = factorial(k as u64) * factorial(u64::from(order) + (n - k) as u64);
                acc += b / Rational::from_integer(denom);
            }
            let scale = factorial(n as u64) * factorial(u64::from(order));
            column.push(-acc * Rational::from_integer(scale));
        }
    }

    /// `B_{N,n}`, memoized; 0 for `n < 0`.
    pub fn number(&mut self, order: u32, index: i64) -> Rational {
        self.check_args(order, index);
        if index < 0 {
            return rat_int(0);
        }
        self.ensure_numbers(order, index as usize);
        self.numbers[&order][index as usize].clone()
    }

    /// `B_{N,n}(x)` by the Appell expansion, with per-`(N, x)` columns
    /// cached; 0 for `n < 0`.
    pub fn value(&mut self, order: u32, index: i64, x: &Rational) -> Rational {
        self.check_args(order, index);
        if index < 0 {
            return rat_int(0);
        }
        let n = index as usize;
        self.ensure_numbers(order, n);
        let column = self
            .values
            .entry((order, x.clone()))
            .or_insert_with(Vec::new);
        let numbers = &self.numbers[&order];
        while column.len() <= n {
            let m = column.len();
            let mut acc = rat_int(0);
            let mut x_pow = rat_int(1); // x^(m-k), built from k = m downward
            for k in (0..=m).rev() {
                acc += binomial(m as i64, k as i64) * &numbers[k] * &x_pow;
                x_pow *= x;
            }
            column.push(acc);
        }
        column[n].clone()
    }

    /// The column `B_{N,0}(x) .. B_{N,upto}(x)` as one vector; sweeps that
    /// index the same point repeatedly should fetch this once instead of
    /// calling [`HbTable::value`] per entry.
    pub fn value_column(&mut self, order: u32, upto: i64, x: &Rational) -> Vec<Rational> {
        if upto < 0 {
            return Vec::new();
        }
        self.value(order, upto, x);
        self.values[&(order, x.clone())][..=upto as usize].to_vec()
    }

    /// The polynomial `B_{N,n}(x)` itself.
    pub fn polynomial(&mut self, order: u32, degree: u32) -> HbPolynomial {
        self.check_args(order, i64::from(degree));
        let n = degree as usize;
        self.ensure_numbers(order, n);
        let numbers = &self.numbers[&order];
        let coeffs = (0..=n)
            .map(|j| binomial(n as i64, j as i64) * &numbers[n - j])
            .collect();
        HbPolynomial {
            order,
            degree,
            poly: Polynomial::new(coeffs),
        }
    }

    /// Test hook: add 1 to the stored `B_{N,n}` so that downstream identity
    /// sweeps see a corrupted table. Clears derived value caches.
    pub fn corrupt_entry(&mut self, order: u32, index: u32) {
        self.ensure_numbers(order, index as usize);
        let column = self.numbers.get_mut(&order).unwrap();
        column[index as usize] += rat_int(1);
        self.values.clear();
    }
}

/// `B_{N,n}(x)` together with the indices that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HbPolynomial {
    order: u32,
    degree: u32,
    poly: Polynomial,
}

impl HbPolynomial {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }
}

/// `T_n(t) = sum_{k<=n} t^k/k!`, the Taylor polynomial of `e^t`.
pub fn taylor_poly(n: u32) -> Polynomial {
    let coeffs = (0..=n as u64)
        .map(|k| Rational::from_integer(factorial(k)).recip())
        .collect();
    Polynomial::new(coeffs)
}

/// The `x`-independent factor of the generating function: the series of
/// `(t^N/N!) / (e^t - T_{N-1}(t))`, whose coefficient `n` is `B_{N,n}/n!`.
///
/// The denominator `e^t - T_{N-1}(t)` equals `t^N sum_j t^j/(N+j)!`, so
/// after cancelling `t^N` this is `(1/N!) (sum_j t^j/(N+j)!)^{-1}`.
/// Sweeps that need many points at one order should compute this once and
/// multiply by `e^{xt}` per point.
pub fn hb_series_base(order: u32, series_order: usize) -> TruncatedSeries<Rational> {
    assert!(order >= 1, "order N must be >= 1");
    let denom_coeffs = (0..=series_order as u64)
        .map(|j| Rational::from_integer(factorial(u64::from(order) + j)).recip())
        .collect();
    let denom = TruncatedSeries::from_coeffs(series_order, denom_coeffs);
    let inv = denom
        .reciprocal()
        .expect("denominator series has constant term 1/N! != 0");
    let scale = Rational::from_integer(factorial(u64::from(order))).recip();
    inv.scale(&scale)
}

/// The truncated generating-function series of the order-`N` family at the
/// point `x`: coefficient `n` is `B_{N,n}(x) / n!`.
pub fn hb_series(order: u32, x: &Rational, series_order: usize) -> TruncatedSeries<Rational> {
    hb_series_base(order, series_order).mul_ref(&exp_series(x, series_order))
}

/// Coefficients `a_1 .. a_{M+N-2}` of `1 - T_{N-1}(t) T_{M-1}(-t)`.
///
/// The constant coefficient of that polynomial is always 0 (both Taylor
/// polynomials have constant term 1); this is asserted. The result is empty
/// when `M = N = 1`.
pub fn am_coefficients(m_order: u32, n_order: u32) -> Vec<Rational> {
    assert!(m_order >= 1 && n_order >= 1, "orders must be >= 1");
    let product = taylor_poly(n_order - 1).mul_ref(&taylor_poly(m_order - 1).negate_argument());
    let p = Polynomial::one().sub_ref(&product);
    assert!(
        p.coeff(0) == rat_int(0),
        "constant coefficient of 1 - T_(N-1)(t) T_(M-1)(-t) must vanish"
    );
    let len = (m_order + n_order - 2) as usize;
    (1..=len).map(|m| p.coeff(m)).collect()
}

/// Check the three defining properties of the order-`N` family for all
/// degrees up to `max_degree`, exactly:
///
/// 1. `B_{N,0}(x) = 1`;
/// 2. `B_{N,n}'(x) = n B_{N,n-1}(x)`;
/// 3. `int_0^1 (1-x)^(N-1) B_{N,n}(x) dx = delta_n / N`.
pub fn verify_appell_axioms(table: &mut HbTable, order: u32, max_degree: u32) -> bool {
    if table.polynomial(order, 0).poly() != &Polynomial::one() {
        return false;
    }
    for n in 0..=max_degree {
        let poly = table.polynomial(order, n).into_poly();
        if n >= 1 {
            let prev = table.polynomial(order, n - 1).into_poly();
            if poly.derivative() != prev.scale(&rat_int(i64::from(n))) {
                return false;
            }
        }
        let expected = kronecker_delta(i64::from(n)) / rat_int(i64::from(order));
        if poly.integrate01_weighted(order) != expected {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn number_base_cases() {
        let mut t = HbTable::new();
        for order in 1..=6 {
            assert_eq!(t.number(order, 0), rat_int(1));
        }
        assert_eq!(t.number(1, 1), rat(-1, 2));
        assert_eq!(t.number(2, 1), rat(-1, 3));
        assert_eq!(t.number(2, 2), rat(1, 18));
        assert_eq!(t.number(1, 3), rat_int(0));
        assert_eq!(t.number(3, -4), rat_int(0));
    }

    #[test]
    fn classical_bernoulli_values() {
        let mut t = HbTable::new();
        assert_eq!(t.number(1, 2), rat(1, 6));
        assert_eq!(t.number(1, 4), rat(-1, 30));
        assert_eq!(t.number(1, 12), rat(-691, 2730));
        for k in 1..=10 {
            assert_eq!(t.number(1, 2 * k + 1), rat_int(0), "B_{} != 0", 2 * k + 1);
        }
    }

    #[test]
    #[should_panic(expected = "exceeds the table cap")]
    fn cap_is_enforced() {
        let mut t = HbTable::with_max_index(10);
        t.number(1, 11);
    }

    #[test]
    fn series_matches_frozen_prefixes() {
        // N = 1 at x = 0: 1 - t/2 + t^2/12
        let s = hb_series(1, &rat_int(0), 2);
        assert_eq!(s.coeffs(), &[rat_int(1), rat(-1, 2), rat(1, 12)]);
        // N = 2 at x = 0: 1 - t/3
        let s = hb_series(2, &rat_int(0), 1);
        assert_eq!(s.coeffs(), &[rat_int(1), rat(-1, 3)]);
        // constant coefficient is 1 for any order and point
        for order in 1..=4 {
            let s = hb_series(order, &rat(22, 7), 3);
            assert_eq!(s.coeff(0), &rat_int(1));
        }
    }

    #[test]
    fn series_agrees_with_recurrence() {
        let mut t = HbTable::new();
        for order in 1..=3 {
            let s = hb_series(order, &rat_int(0), 12);
            for n in 0..=12i64 {
                let from_series =
                    s.coeff(n as usize) * Rational::from_integer(factorial(n as u64));
                assert_eq!(t.number(order, n), from_series, "N={order} n={n}");
            }
        }
    }

    #[test]
    fn polynomial_examples() {
        let mut t = HbTable::new();
        let b11 = t.polynomial(1, 1);
        assert_eq!(b11.poly().coeffs(), &[rat(-1, 2), rat_int(1)]);
        let b22 = t.polynomial(2, 2);
        assert_eq!(b22.poly().coeffs(), &[rat(1, 18), rat(-2, 3), rat_int(1)]);
        let b30 = t.polynomial(3, 0);
        assert_eq!(b30.poly(), &Polynomial::one());
    }

    #[test]
    fn polynomial_structure_invariants() {
        let mut t = HbTable::new();
        for order in 1..=4 {
            for n in 0..=12u32 {
                let h = t.polynomial(order, n);
                assert_eq!(h.poly().degree(), Some(n as usize));
                assert_eq!(h.poly().leading_coeff(), Some(&rat_int(1)));
                assert_eq!(h.poly().coeff(0), t.number(order, i64::from(n)));
                assert_eq!(
                    h.poly().eval(&rat_int(0)),
                    t.number(order, i64::from(n))
                );
            }
        }
    }

    #[test]
    fn value_matches_polynomial_eval() {
        let mut t = HbTable::new();
        let xs = [rat_int(0), rat_int(1), rat(1, 2), rat(-3, 7), rat(22, 7)];
        for order in 1..=3 {
            for n in 0..=10i64 {
                let poly = t.polynomial(order, n as u32).into_poly();
                for x in &xs {
                    assert_eq!(t.value(order, n, x), poly.eval(x));
                }
            }
        }
        assert_eq!(t.value(2, -1, &rat(1, 2)), rat_int(0));
    }

    #[test]
    fn classical_reflection() {
        // B_n(1) = (-1)^n B_n(0) for n >= 1
        let mut t = HbTable::new();
        for n in 1..=20i64 {
            let at_one = t.value(1, n, &rat_int(1));
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(at_one, t.number(1, n) * rat_int(sign));
        }
    }

    #[test]
    fn taylor_examples() {
        assert_eq!(taylor_poly(0), Polynomial::one());
        assert_eq!(
            taylor_poly(2).coeffs(),
            &[rat_int(1), rat_int(1), rat(1, 2)]
        );
        assert_eq!(taylor_poly(1).eval(&rat_int(1)), rat_int(2));
    }

    #[test]
    fn am_coefficient_examples() {
        assert!(am_coefficients(1, 1).is_empty());
        assert_eq!(am_coefficients(1, 2), vec![rat_int(-1)]);
        assert_eq!(am_coefficients(2, 2), vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn appell_axioms_hold() {
        let mut t = HbTable::new();
        assert!(verify_appell_axioms(&mut t, 1, 20));
        assert!(verify_appell_axioms(&mut t, 4, 20));
        // axiom 3 at n = 0, N = 2: the integral is 1/2
        let b20 = t.polynomial(2, 0).into_poly();
        assert_eq!(b20.integrate01_weighted(2), rat(1, 2));
    }

    #[test]
    fn corruption_hook_changes_numbers() {
        let mut t = HbTable::new();
        let before = t.number(2, 2);
        t.corrupt_entry(2, 2);
        assert_eq!(t.number(2, 2), before + rat_int(1));
        assert!(!verify_appell_axioms(&mut t, 2, 4));
    }
}
