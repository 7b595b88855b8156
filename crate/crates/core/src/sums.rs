//! Sums of products of hypergeometric Bernoulli polynomials,
//!
//! ```text
//! S_{N,n}^{(p)}(x_1..x_p) = sum_{i_1+..+i_p=n} n!/(i_1!..i_p!)
//!                           B_{N,i_1}(x_1) .. B_{N,i_p}(x_p)
//! ```
//!
//! computed three independent ways so they can be cross-checked:
//!
//! - [`bruteforce`]: literal enumeration of weak compositions;
//! - [`recurrence`]: the level recurrence
//!   `S^{(p+1)}_n = [(pN - n) S^{(p)}_n + n (z - p) S^{(p)}_{n-1}] / (pN)`,
//!   which only sees `z = sum of the points`;
//! - [`closed_form`]: the subset-sum solution of the underlying triangular
//!   recurrence, expressing `S^{(p)}_n` as a combination of `B_{N,n-k}(z)`.
//!
//! The generic triangular-recurrence solver ([`triangular_closed_form`] vs
//! [`triangular_iterative`]) is exposed separately; the sums above are the
//! instance `a(p,n) = 1 - n/(pN)`, `b(p,n) = (n/N)(z/p - 1)`,
//! `f(n) = B_{N,n}(z)`.

use crate::bernoulli::HbTable;
use crate::combinatorics::factorial;
use crate::rational::{rat_int, Rational};

/// Subsets larger than this make the 2^(p-1) closed-form enumeration
/// useless at a desk; callers needing more must restructure.
pub const MAX_SUBSET_UNIVERSE: u32 = 20;

/// The evaluation points `(x_1, ..., x_p)`, `p >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointVector {
    points: Vec<Rational>,
}

impl PointVector {
    pub fn new(points: Vec<Rational>) -> Self {
        assert!(!points.is_empty(), "a point vector needs at least one point");
        PointVector { points }
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // p >= 1 by construction
    }

    /// `z`, recomputed on demand.
    pub fn sum(&self) -> Rational {
        self.points.iter().fold(rat_int(0), |acc, x| acc + x)
    }
}

/// A subset `sigma` of the index set `A = {1, ..., universe}` together with
/// its complement, both sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetContext {
    universe: u32,
    sigma: Vec<u32>,
    complement: Vec<u32>,
}

impl SubsetContext {
    pub fn new(universe: u32, sigma: &[u32]) -> Self {
        assert!(universe <= MAX_SUBSET_UNIVERSE, "index set too large");
        let mut sigma = sigma.to_vec();
        sigma.sort_unstable();
        sigma.dedup();
        assert!(
            sigma.iter().all(|&i| 1 <= i && i <= universe),
            "subset elements must lie in 1..=universe"
        );
        let complement = (1..=universe).filter(|i| !sigma.contains(i)).collect();
        SubsetContext {
            universe,
            sigma,
            complement,
        }
    }

    /// Subset encoded as a bitmask: bit `i` set means `i + 1` is in sigma.
    pub fn from_mask(universe: u32, mask: u64) -> Self {
        let sigma: Vec<u32> = (1..=universe).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let complement = (1..=universe).filter(|i| mask >> (i - 1) & 1 == 0).collect();
        SubsetContext {
            universe,
            sigma,
            complement,
        }
    }

    pub fn universe(&self) -> u32 {
        self.universe
    }

    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    pub fn complement(&self) -> &[u32] {
        &self.complement
    }

    /// Rank of `j` relative to sigma: the number of elements of sigma
    /// strictly greater than `j`.
    pub fn rank(&self, j: u32) -> u32 {
        self.sigma.iter().filter(|&&i| i > j).count() as u32
    }
}

/// The product attached to a subset in the triangular closed form:
/// `prod_{j in complement} a(j, k - R(j)) * prod_{i in sigma} b(i, k - R(i))`.
pub fn pi_product(
    ctx: &SubsetContext,
    k: i64,
    a: &impl Fn(u32, i64) -> Rational,
    b: &impl Fn(u32, i64) -> Rational,
) -> Rational {
    let mut acc = rat_int(1);
    for &j in ctx.complement() {
        acc *= a(j, k - i64::from(ctx.rank(j)));
    }
    for &i in ctx.sigma() {
        acc *= b(i, k - i64::from(ctx.rank(i)));
    }
    acc
}

/// `S_{N,n}^{(p)}` by literal enumeration over weak compositions.
///
/// The `n!/(i_1!..i_p!)` weight is folded into the per-point columns as
/// `B_{N,i}(x_j)/i!`, with one final `n!` scale; the walk over compositions
/// shares partial products across a common prefix.
pub fn bruteforce(table: &mut HbTable, order: u32, degree: i64, xs: &PointVector) -> Rational {
    if degree < 0 {
        return rat_int(0);
    }
    let n = degree as usize;
    // columns B_{N,i}(x_j) / i! for i <= n, one per point
    let weighted: Vec<Vec<Rational>> = xs
        .points()
        .iter()
        .map(|x| {
            let col = table.value_column(order, degree, x);
            col.into_iter()
                .enumerate()
                .map(|(i, v)| v / Rational::from_integer(factorial(i as u64)))
                .collect()
        })
        .collect();

    fn walk(weighted: &[Vec<Rational>], slot: usize, left: usize, partial: &Rational, acc: &mut Rational) {
        if slot + 1 == weighted.len() {
            *acc += partial * &weighted[slot][left];
            return;
        }
        for i in (0..=left).rev() {
            let next = partial * &weighted[slot][i];
            walk(weighted, slot + 1, left - i, &next, acc);
        }
    }

    let mut acc = rat_int(0);
    walk(&weighted, 0, n, &rat_int(1), &mut acc);
    acc * Rational::from_integer(factorial(n as u64))
}

/// `S_{N,n}^{(p)}` by iterating the level recurrence from `p = 1` upward.
/// Only `z` matters: the sum is invariant under redistributing the points.
pub fn recurrence(
    table: &mut HbTable,
    order: u32,
    degree: i64,
    factors: u32,
    z: &Rational,
) -> Rational {
    assert!(factors >= 1, "p must be >= 1");
    if degree < 0 {
        return rat_int(0);
    }
    let n = degree as usize;
    let mut row: Vec<Rational> = (0..=n as i64).map(|m| table.value(order, m, z)).collect();
    for level in 1..factors {
        let level_n = rat_int(i64::from(level) * i64::from(order));
        let mut next = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let keep = (&level_n - rat_int(m as i64)) * &row[m];
            let carry = if m == 0 {
                rat_int(0)
            } else {
                rat_int(m as i64) * (z - rat_int(i64::from(level))) * &row[m - 1]
            };
            next.push((keep + carry) / &level_n);
        }
        row = next;
    }
    row[n].clone()
}

/// `S_{N,n}^{(p)}` from the subset-sum closed form: subsets of
/// `{1, .., p-1}` grouped by size `k` weight the values `B_{N,n-k}(z)`.
pub fn closed_form(
    table: &mut HbTable,
    order: u32,
    degree: i64,
    factors: u32,
    z: &Rational,
) -> Rational {
    assert!(factors >= 1, "p must be >= 1");
    assert!(factors <= MAX_SUBSET_UNIVERSE, "p is capped at {MAX_SUBSET_UNIVERSE}");
    if degree < 0 {
        return rat_int(0);
    }
    let universe = factors - 1;
    let order_rat = rat_int(i64::from(order));
    let a = |level: u32, m: i64| {
        rat_int(1) - rat_int(m) / (rat_int(i64::from(level)) * &order_rat)
    };
    let b = |level: u32, m: i64| {
        rat_int(m) / &order_rat * (z / rat_int(i64::from(level)) - rat_int(1))
    };
    let mut by_size = vec![rat_int(0); universe as usize + 1];
    for mask in 0u64..(1 << universe) {
        let ctx = SubsetContext::from_mask(universe, mask);
        let size = ctx.sigma().len();
        by_size[size] += pi_product(&ctx, degree, &a, &b);
    }
    let mut acc = rat_int(0);
    for (k, weight) in by_size.iter().enumerate() {
        acc += weight * table.value(order, degree - k as i64, z);
    }
    acc
}

/// Evaluate the triangular recurrence
/// `x(n,k) = a(n,k) x(n-1,k) + b(n,k) x(n-1,k-1)`, `x(0,k) = f(k)`,
/// directly, level by level.
pub fn triangular_iterative(
    a: &impl Fn(u32, i64) -> Rational,
    b: &impl Fn(u32, i64) -> Rational,
    f: &impl Fn(i64) -> Rational,
    n: u32,
    k: i64,
) -> Rational {
    let span = i64::from(n);
    // level 0 over the window k-n ..= k
    let mut row: Vec<Rational> = (k - span..=k).map(f).collect();
    for level in 1..=n {
        let lo = k - span + i64::from(level);
        let mut next = Vec::with_capacity(row.len() - 1);
        for (offset, j) in (lo..=k).enumerate() {
            // row[offset + 1] is x(level-1, j); row[offset] is x(level-1, j-1)
            let v = a(level, j) * &row[offset + 1] + b(level, j) * &row[offset];
            next.push(v);
        }
        row = next;
    }
    row.pop().expect("window always contains k")
}

/// Solve the same recurrence in closed form: subsets of `{1..n}` grouped by
/// size `m` weight the initial values `f(k-m)`.
pub fn triangular_closed_form(
    a: &impl Fn(u32, i64) -> Rational,
    b: &impl Fn(u32, i64) -> Rational,
    f: &impl Fn(i64) -> Rational,
    n: u32,
    k: i64,
) -> Rational {
    assert!(n <= MAX_SUBSET_UNIVERSE, "n is capped at {MAX_SUBSET_UNIVERSE}");
    let mut by_size = vec![rat_int(0); n as usize + 1];
    for mask in 0u64..(1 << n) {
        let ctx = SubsetContext::from_mask(n, mask);
        let size = ctx.sigma().len();
        by_size[size] += pi_product(&ctx, k, a, b);
    }
    let mut acc = rat_int(0);
    for (m, weight) in by_size.iter().enumerate() {
        acc += weight * f(k - m as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use crate::rational::rat;

    fn pts(xs: &[(i64, i64)]) -> PointVector {
        PointVector::new(xs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn bruteforce_counts_every_composition() {
        // with B-values replaced by 1 the weighted walk sums
        // n!/(i_1!..i_p!) over all weak compositions, i.e. p^n
        let mut t = HbTable::new();
        let ones = pts(&[(0, 1), (0, 1), (0, 1)]);
        // B_{N,i}(0) != 1 in general, so check against the recurrence route
        // at a point where the multinomial theorem applies: sum over
        // compositions of n of n!/(prod i_j!) * prod B_{1,i_j}(x_j) with all
        // x_j = 1/3 equals S and must match the z-only recurrence at z = 1.
        let xs = pts(&[(1, 3), (1, 3), (1, 3)]);
        for n in 0..=5 {
            assert_eq!(
                bruteforce(&mut t, 1, n, &xs),
                recurrence(&mut t, 1, n, 3, &rat_int(1))
            );
        }
        assert_eq!(bruteforce(&mut t, 2, 0, &ones), rat_int(1));
    }

    #[test]
    fn bruteforce_base_cases() {
        let mut t = HbTable::new();
        assert_eq!(bruteforce(&mut t, 3, 0, &pts(&[(1, 2), (0, 1), (7, 3)])), rat_int(1));
        // p = 1 reduces to B_{N,n}(x_1)
        for n in 0..=8 {
            assert_eq!(
                bruteforce(&mut t, 2, n, &pts(&[(1, 2)])),
                t.value(2, n, &rat(1, 2))
            );
        }
        assert_eq!(bruteforce(&mut t, 2, 1, &pts(&[(0, 1), (0, 1)])), rat(-2, 3));
        assert_eq!(bruteforce(&mut t, 2, -3, &pts(&[(0, 1)])), rat_int(0));
    }

    #[test]
    fn recurrence_base_cases() {
        let mut t = HbTable::new();
        assert_eq!(recurrence(&mut t, 2, 1, 2, &rat_int(0)), rat(-2, 3));
        assert_eq!(recurrence(&mut t, 3, 0, 2, &rat(22, 7)), rat_int(1));
        assert_eq!(recurrence(&mut t, 2, -1, 4, &rat_int(1)), rat_int(0));
    }

    #[test]
    fn rank_examples() {
        let ctx = SubsetContext::new(5, &[2, 5]);
        assert_eq!(ctx.rank(3), 1);
        assert_eq!(SubsetContext::new(4, &[]).rank(2), 0);
        assert_eq!(SubsetContext::new(3, &[1, 2, 3]).rank(1), 2);
    }

    #[test]
    fn pi_product_degenerate_subsets() {
        let a = |j: u32, m: i64| rat_int(100 * i64::from(j) + m);
        let b = |i: u32, m: i64| rat_int(-(100 * i64::from(i) + m));
        // empty sigma: pure a-product, no rank shifts
        let empty = SubsetContext::new(2, &[]);
        assert_eq!(pi_product(&empty, 7, &a, &b), rat_int(107) * rat_int(207));
        // full sigma: pure b-product
        let full = SubsetContext::new(2, &[1, 2]);
        let expected = b(1, 7 - 1) * b(2, 7); // rank(1) = 1, rank(2) = 0
        assert_eq!(pi_product(&full, 7, &a, &b), expected);
    }

    #[test]
    fn closed_form_matches_other_routes() {
        let mut t = HbTable::new();
        assert_eq!(closed_form(&mut t, 2, 1, 2, &rat_int(0)), rat(-2, 3));
        // p = 1: the only subset is empty, so the value is B_{N,n}(z)
        for n in 0..=6 {
            assert_eq!(
                closed_form(&mut t, 3, n, 1, &rat(1, 2)),
                t.value(3, n, &rat(1, 2))
            );
        }
        let z = rat(1, 2);
        for n in 0..=8 {
            assert_eq!(
                closed_form(&mut t, 2, n, 3, &z),
                recurrence(&mut t, 2, n, 3, &z),
                "p=3 n={n}"
            );
        }
    }

    #[test]
    fn three_way_agreement_small() {
        let mut t = HbTable::new();
        let xs = pts(&[(1, 2), (-1, 3), (2, 1)]);
        let z = xs.sum();
        for n in 0..=6 {
            let direct = bruteforce(&mut t, 2, n, &xs);
            assert_eq!(direct, recurrence(&mut t, 2, n, 3, &z));
            assert_eq!(direct, closed_form(&mut t, 2, n, 3, &z));
        }
    }

    #[test]
    fn sum_depends_only_on_z() {
        let mut t = HbTable::new();
        let xs = pts(&[(1, 1), (1, 3), (-1, 2)]);
        let ys = pts(&[(5, 6), (0, 1), (0, 1)]);
        assert_eq!(xs.sum(), ys.sum());
        for n in 0..=7 {
            assert_eq!(
                bruteforce(&mut t, 3, n, &xs),
                bruteforce(&mut t, 3, n, &ys)
            );
        }
    }

    #[test]
    fn triangular_solver_base_cases() {
        let a = |n: u32, k: i64| rat_int(i64::from(n) + k); // arbitrary
        let b = |_: u32, _: i64| rat_int(3);
        let f = |k: i64| rat_int(k * k + 1);
        assert_eq!(triangular_closed_form(&a, &b, &f, 0, 5), f(5));
        assert_eq!(triangular_iterative(&a, &b, &f, 0, -2), f(-2));
        // a = 1, b = 0 leaves f unchanged at every level
        let one = |_: u32, _: i64| rat_int(1);
        let zero = |_: u32, _: i64| rat_int(0);
        for n in 0..=5 {
            assert_eq!(triangular_closed_form(&one, &zero, &f, n, 4), f(4));
            assert_eq!(triangular_iterative(&one, &zero, &f, n, 4), f(4));
        }
    }

    #[test]
    fn pascal_from_triangular_recurrence() {
        let one = |_: u32, _: i64| rat_int(1);
        let delta = |k: i64| crate::combinatorics::kronecker_delta(k);
        for n in 0..=8u32 {
            for k in -2..=10i64 {
                let expected = binomial(i64::from(n), k);
                assert_eq!(triangular_closed_form(&one, &one, &delta, n, k), expected);
                assert_eq!(triangular_iterative(&one, &one, &delta, n, k), expected);
            }
        }
    }
}
