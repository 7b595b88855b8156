//! Factorials, binomial and multinomial coefficients, falling/rising
//! factorials, and the Kronecker delta.
//!
//! All functions take plain integers and return exact [`Rational`] values.
//! Out-of-range arguments (negative `k`, parts exceeding `n`, ...) yield 0
//! rather than an error: the convolution sums index freely outside valid
//! ranges and rely on those terms vanishing.

use std::sync::Mutex;

use num::bigint::BigInt;
use num::traits::One;
use once_cell::sync::Lazy;

use crate::rational::{rat_int, Rational};

static FACTORIALS: Lazy<Mutex<Vec<BigInt>>> = Lazy::new(|| Mutex::new(vec![BigInt::one()]));

/// `n!` as a big integer, memoized.
pub fn factorial(n: u64) -> BigInt {
    let mut table = FACTORIALS.lock().unwrap();
    while table.len() <= n as usize {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n as usize].clone()
}

/// `C(n, k)`, with the value 0 whenever `k < 0`, `k > n`, or `n < 0`.
pub fn binomial(n: i64, k: i64) -> Rational {
    if n < 0 || k < 0 || k > n {
        return rat_int(0);
    }
    let v = factorial(n as u64) / (factorial(k as u64) * factorial((n - k) as u64));
    Rational::from_integer(v)
}

/// The multinomial coefficient `n! / (n_1! ... n_k! (n - sum)!)`.
///
/// Returns 0 if `n < 0`, any part is negative, or the parts sum past `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> Rational {
    if n < 0 || parts.iter().any(|&p| p < 0) {
        return rat_int(0);
    }
    let sum: i64 = parts.iter().sum();
    if sum > n {
        return rat_int(0);
    }
    let mut denom = factorial((n - sum) as u64);
    for &p in parts {
        denom *= factorial(p as u64);
    }
    Rational::from_integer(factorial(n as u64) / denom)
}

/// Falling factorial `n (n-1) ... (n-k+1)`; the empty product (`k = 0`) is 1.
pub fn falling_factorial(n: i64, k: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 0..i64::from(k) {
        acc *= BigInt::from(n - i);
    }
    Rational::from_integer(acc)
}

/// Rising factorial `n (n+1) ... (n+k-1)`; the empty product (`k = 0`) is 1.
pub fn rising_factorial(n: i64, k: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 0..i64::from(k) {
        acc *= BigInt::from(n + i);
    }
    Rational::from_integer(acc)
}

/// Kronecker delta: 1 when `m == 0`, else 0.
pub fn kronecker_delta(m: i64) -> Rational {
    rat_int(i64::from(m == 0))
}

/// Pascal's triangle up to a fixed row, for hot loops that would otherwise
/// hammer the factorial cache. Out-of-range lookups return zero, matching
/// [`binomial`].
pub struct Pascal {
    rows: Vec<Vec<Rational>>,
    zero: Rational,
}

impl Pascal {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![rat_int(1)]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(rat_int(1));
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(rat_int(1));
            rows.push(row);
        }
        Pascal {
            rows,
            zero: rat_int(0),
        }
    }

    pub fn choose(&self, n: i64, k: i64) -> &Rational {
        if n < 0 || k < 0 || k > n {
            return &self.zero;
        }
        &self.rows[n as usize][k as usize]
    }

    /// `n! / (a! b! (n-a-b)!)` from two chained binomials.
    pub fn choose2(&self, n: i64, a: i64, b: i64) -> Rational {
        self.choose(n, a) * self.choose(n - a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), rat_int(10));
        assert_eq!(binomial(4, -1), rat_int(0));
        assert_eq!(binomial(0, 0), rat_int(1));
        assert_eq!(binomial(3, 5), rat_int(0));
        assert_eq!(binomial(-2, 0), rat_int(0));
        assert_eq!(binomial(50, 25), "126410606437752".parse::<Rational>().unwrap());
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(4, &[1, 1]), rat_int(12));
        assert_eq!(multinomial(3, &[2, 2]), rat_int(0));
        // 720 / (2 * 1 * 1 * 2!)
        assert_eq!(multinomial(6, &[2, 1, 1]), rat_int(180));
        assert_eq!(multinomial(5, &[-1, 2]), rat_int(0));
        assert_eq!(multinomial(-1, &[]), rat_int(0));
        assert_eq!(multinomial(7, &[]), rat_int(1));
    }

    #[test]
    fn falling_and_rising() {
        assert_eq!(falling_factorial(5, 3), rat_int(60));
        assert_eq!(rising_factorial(3, 2), rat_int(12));
        assert_eq!(falling_factorial(-7, 0), rat_int(1));
        assert_eq!(rising_factorial(0, 0), rat_int(1));
        assert_eq!(falling_factorial(2, 4), rat_int(0)); // crosses zero
        assert_eq!(rising_factorial(-3, 2), rat_int(6));
    }

    #[test]
    fn pascal_matches_binomial() {
        let pascal = Pascal::new(12);
        for n in -2..=12i64 {
            for k in -2..=14i64 {
                assert_eq!(pascal.choose(n, k), &binomial(n, k), "C({n},{k})");
            }
        }
        assert_eq!(pascal.choose2(6, 2, 1), multinomial(6, &[2, 1]));
        assert_eq!(pascal.choose2(6, 2, -1), rat_int(0));
        assert_eq!(pascal.choose2(6, 4, 3), rat_int(0));
    }

    #[test]
    fn delta() {
        assert_eq!(kronecker_delta(0), rat_int(1));
        assert_eq!(kronecker_delta(3), rat_int(0));
        assert_eq!(kronecker_delta(-2), rat_int(0));
        assert_eq!(kronecker_delta(0) / rat_int(2), rat(1, 2));
    }
}
