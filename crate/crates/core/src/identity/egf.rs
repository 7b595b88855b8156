//! Checkers that work at the generating-function level: the two partial
//! fraction expansions, the weighted convolution identities they induce,
//! the derivative recurrence for products of generating functions, and the
//! three-factor partial fraction expansion.
//!
//! Every check is an exact equality of truncated series (or of rational
//! values at sample points). Denominators like `e^t - T_{N-1}(t)` have no
//! constant term, so identities involving them are verified in
//! cross-multiplied form; the only series ever inverted is the unit-constant
//! series behind [`hb_series_base`]. That `x`-independent factor is hoisted
//! out of the point loops, which then pay one `e^{xt}` product each.

use crate::bernoulli::{am_coefficients, hb_series_base, taylor_poly, HbTable};
use crate::combinatorics::{factorial, kronecker_delta, Pascal};
use crate::polynomial::Polynomial;
use crate::rational::{format_rational, rat_int, Rational};
use crate::series::{exp_series, TruncatedSeries};

use super::convolution::{main_multinomial_rhs, sign_pow};
use super::{IdentityId, IdentityReport, ParamGrid, Recorder};

fn poly_series(p: &Polynomial, order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_polynomial(p, order)
}

/// `(t^k / k!) * s`, using a shift instead of a full series product.
fn shift_scaled(s: &TruncatedSeries<Rational>, k: u32) -> TruncatedSeries<Rational> {
    let c = Rational::from_integer(factorial(u64::from(k))).recip();
    s.shift_up(k as usize).scale(&c)
}

/// Sample point pairs used for the two-point series identities.
fn point_pairs(grid: &ParamGrid) -> Vec<(Rational, Rational)> {
    let p = grid.panel_points(3);
    vec![
        (p[0].clone(), p[1].clone()),
        (p[1].clone(), p[2].clone()),
        (p[2].clone(), p[0].clone()),
        (p[2].clone(), p[2].clone()),
    ]
}

/// First coefficient difference between two series; equal series give 0.
fn series_delta(lhs: &TruncatedSeries<Rational>, rhs: &TruncatedSeries<Rational>) -> Rational {
    for k in 0..=lhs.order() {
        if lhs.coeff(k) != rhs.coeff(k) {
            return lhs.coeff(k) - rhs.coeff(k);
        }
    }
    rat_int(0)
}

/// `[T_{N-1}(t) - T_{M-1}(t)] F_N(x1,t) F_M(x2,t)
///  = (t^M/M!) F_N(x,t) - (t^N/N!) F_M(x,t)` with `x = x1 + x2`,
/// as series through the grid order.
pub(super) fn partial_fraction_two(grid: &ParamGrid, _table: &mut HbTable) -> IdentityReport {
    let mut rec = Recorder::new();
    let order = grid.series_order;
    let pairs = point_pairs(grid);
    for n_order in grid.n_order_range() {
        let base_n = hb_series_base(n_order, order);
        for m_order in grid.m_order_range() {
            assert!(
                order >= (n_order + m_order) as usize + 2,
                "series order too small for M={m_order}, N={n_order}"
            );
            let base_m = hb_series_base(m_order, order);
            let gap = poly_series(
                &taylor_poly(n_order - 1).sub_ref(&taylor_poly(m_order - 1)),
                order,
            );
            for (x1, x2) in &pairs {
                let x = x1 + x2;
                let exp_x = exp_series(&x, order);
                let lhs = &(&gap * &(&base_n * &exp_series(x1, order)))
                    * &(&base_m * &exp_series(x2, order));
                let rhs = &shift_scaled(&(&base_n * &exp_x), m_order)
                    - &shift_scaled(&(&base_m * &exp_x), n_order);
                rec.check(
                    || {
                        format!(
                            "N={n_order} M={m_order} x1={} x2={}",
                            format_rational(x1),
                            format_rational(x2)
                        )
                    },
                    series_delta(&lhs, &rhs),
                    rat_int(0),
                );
            }
        }
    }
    rec.finish(IdentityId::PartialFractionTwo, grid)
}

/// `[1 - T_{N-1}(t) T_{M-1}(-t)] F_N(x,t) F_M(x,-t)` against its three-term
/// expansion, as series through the grid order.
pub(super) fn partial_fraction_f(grid: &ParamGrid, _table: &mut HbTable) -> IdentityReport {
    let mut rec = Recorder::new();
    let order = grid.series_order;
    let pts = grid.panel_points(3);
    for n_order in grid.n_order_range() {
        let base_n = hb_series_base(n_order, order);
        for m_order in grid.m_order_range() {
            assert!(
                order >= (n_order + m_order) as usize + 2,
                "series order too small for M={m_order}, N={n_order}"
            );
            // F_M(x,-t) = F_M(-t-base) * e^{-xt}
            let base_m_neg = hb_series_base(m_order, order).negate_argument();
            let t_n = taylor_poly(n_order - 1);
            let t_m_neg = taylor_poly(m_order - 1).negate_argument();
            let weight = poly_series(&Polynomial::one().sub_ref(&t_n.mul_ref(&t_m_neg)), order);
            let m_sign = sign_pow(i64::from(m_order));
            let spike = TruncatedSeries::monomial(
                order,
                (m_order + n_order) as usize,
                &m_sign
                    / Rational::from_integer(
                        factorial(u64::from(m_order)) * factorial(u64::from(n_order)),
                    ),
            );
            let tail_n =
                shift_scaled(&(&poly_series(&t_n, order) * &base_n), m_order).scale(&m_sign);
            let tail_m = shift_scaled(&(&poly_series(&t_m_neg, order) * &base_m_neg), n_order);
            let rhs = &(&spike + &tail_n) + &tail_m;
            for x in &pts {
                let f_n = &base_n * &exp_series(x, order);
                let f_m_neg = &base_m_neg * &exp_series(&-x, order);
                let lhs = &(&weight * &f_n) * &f_m_neg;
                rec.check(
                    || format!("N={n_order} M={m_order} x={}", format_rational(x)),
                    series_delta(&lhs, &rhs),
                    rat_int(0),
                );
            }
        }
    }
    rec.finish(IdentityId::PartialFractionF, grid)
}

/// `sum_m (m! a_m) C(n,m) sum_k (-1)^k C(n-m,k) a-col[n-m-k] b-col[k]`.
fn weighted_alternating(
    pascal: &Pascal,
    weights: &[(i64, Rational)], // (m, m! * a_m), zero weights dropped
    col_a: &[Rational],
    col_b: &[Rational],
    n: i64,
) -> Rational {
    let mut acc = rat_int(0);
    for (m, w) in weights {
        if *m > n {
            continue;
        }
        let outer = w * pascal.choose(n, *m);
        let mut inner = rat_int(0);
        for k in 0..=n - m {
            let term =
                pascal.choose(n - m, k) * &col_a[(n - m - k) as usize] * &col_b[k as usize];
            if k % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        acc += outer * inner;
    }
    acc
}

fn scaled_weights(m_order: u32, n_order: u32) -> Vec<(i64, Rational)> {
    am_coefficients(m_order, n_order)
        .into_iter()
        .enumerate()
        .filter(|(_, a)| a != &rat_int(0))
        .map(|(idx, a)| {
            let m = idx as i64 + 1;
            (m, a * Rational::from_integer(factorial(m as u64)))
        })
        .collect()
}

/// The weighted alternating convolution identity induced by the first
/// partial fraction expansion, with weights `m! a_m` from
/// `1 - T_{N-1}(t) T_{M-1}(-t)`. Polynomial in `x`; certified at `n + 1`
/// sample points.
pub(super) fn egf_identity_1(grid: &ParamGrid, table: &mut HbTable) -> IdentityReport {
    let mut rec = Recorder::new();
    let top = grid.degrees.1.max(1);
    let pascal = Pascal::new(top as usize + 1);
    let pts = grid.panel_points(top as usize + 1);
    let mut mirror_agrees = true;
    for n_order in grid.n_order_range() {
        let cols_n: Vec<Vec<Rational>> = pts
            .iter()
            .map(|x| table.value_column(n_order, top, x))
            .collect();
        for m_order in grid.m_order_range() {
            let cols_m: Vec<Vec<Rational>> = pts
                .iter()
                .map(|x| table.value_column(m_order, top, x))
                .collect();
            let weights = scaled_weights(m_order, n_order);
            let nn = i64::from(n_order);
            let m = i64::from(m_order);
            for n in grid.degree_range() {
                if n < 0 {
                    continue;
                }
                let mut rhs = sign_pow(m) * pascal.choose(m + nn, m) * kronecker_delta(n - m - nn);
                for j in 0..nn {
                    rhs += sign_pow(m) * pascal.choose2(n, j, m) * table.number(n_order, n - j - m);
                }
                for j in 0..m {
                    rhs +=
                        sign_pow(n - nn) * pascal.choose2(n, j, nn) * table.number(m_order, n - j - nn);
                }
                if rhs != -main_multinomial_rhs(&pascal, table, n_order, m_order, n) {
                    mirror_agrees = false;
                }
                let mut bad = None;
                for (i, x) in pts.iter().take(n as usize + 1).enumerate() {
                    let lhs = weighted_alternating(&pascal, &weights, &cols_n[i], &cols_m[i], n);
                    if lhs != rhs {
                        bad = Some((x.clone(), lhs));
                        break;
                    }
                }
                match bad {
                    None => rec.check(
                        || format!("N={n_order} M={m_order} n={n}"),
                        rhs.clone(),
                        rhs.clone(),
                    ),
                    Some((x, lhs)) => rec.check(
                        || format!("N={n_order} M={m_order} n={n} x={}", format_rational(&x)),
                        lhs,
                        rhs.clone(),
                    ),
                }
            }
        }
    }
    rec.note(if mirror_agrees {
        "right side equals the negated multinomial-identity right side at every checked tuple"
            .to_string()
    } else {
        "right side does NOT always equal the negated multinomial-identity right side".to_string()
    });
    reduction_to_m1n2(grid, table, &pascal, &mut rec);
    rec.finish(IdentityId::EgfIdentity1, grid)
}

/// For `M = 1, N = 2` the weighted identity at degree `n + 1` collapses to
/// `-(n+1)` times the alternating number convolution of that corollary;
/// assert the collapse numerically when those orders are on the grid.
fn reduction_to_m1n2(grid: &ParamGrid, table: &mut HbTable, pascal: &Pascal, rec: &mut Recorder) {
    let has_pair =
        grid.n_order_range().any(|n| n == 2) && grid.m_order_range().any(|m| m == 1);
    if !has_pair {
        return;
    }
    let weights = scaled_weights(1, 2);
    let top = grid.degrees.1.max(0);
    let zero = rat_int(0);
    let col_2 = table.value_column(2, top + 1, &zero);
    let col_1 = table.value_column(1, top + 1, &zero);
    for n in grid.degree_range() {
        if n < 0 {
            continue;
        }
        let lifted = weighted_alternating(pascal, &weights, &col_2, &col_1, n + 1);
        let corollary: Rational = (0..=n)
            .map(|k| {
                pascal.choose(n, k)
                    * &col_1[k as usize]
                    * &col_2[(n - k) as usize]
                    * sign_pow(k)
            })
            .sum();
        rec.check(
            || format!("M=1 N=2 reduction n={n}"),
            lifted,
            corollary * rat_int(-(n + 1)),
        );
    }
}

/// The second induced identity, for `N >= M`:
/// `sum_{m=M}^{N-1} sum_k C(n; m,k) B_{N,n-m-k}(x1) B_{M,k}(x2)
///  = C(n,M) B_{N,n-M}(x) - C(n,N) B_{M,n-N}(x)` with `x = x1 + x2`.
/// Certified on a grid of `(degree+1)^2` sample pairs.
pub(super) fn egf_identity_2(grid: &ParamGrid, table: &mut HbTable) -> IdentityReport {
    let mut rec = Recorder::new();
    let top = grid.degrees.1.max(0);
    let pascal = Pascal::new(top as usize);
    for n_order in grid.n_order_range() {
        for m_order in grid.m_order_range() {
            if m_order > n_order {
                continue;
            }
            let nn = i64::from(n_order);
            let m = i64::from(m_order);
            let max_span = if m_order == n_order {
                1
            } else {
                ((top - m).max(0) as usize) + 1
            };
            let pts = grid.panel_points(max_span);
            let cols_n: Vec<Vec<Rational>> = pts
                .iter()
                .map(|x| table.value_column(n_order, top, x))
                .collect();
            let cols_m: Vec<Vec<Rational>> = pts
                .iter()
                .map(|x| table.value_column(m_order, top, x))
                .collect();
            let sums: Vec<Vec<Rational>> = pts
                .iter()
                .map(|a| pts.iter().map(|b| a + b).collect())
                .collect();
            for n in grid.degree_range() {
                if n < 0 {
                    continue;
                }
                // both sides have degree at most n - M in each variable;
                // equal orders make both sides identically zero, checked at
                // a token pair
                let span = if m_order == n_order {
                    1
                } else {
                    ((n - m).max(0) as usize) + 1
                };
                let poly_n = (n - m >= 0).then(|| table.polynomial(n_order, (n - m) as u32));
                let poly_m = (n - nn >= 0).then(|| table.polynomial(m_order, (n - nn) as u32));
                let c_m = pascal.choose(n, m).clone();
                let c_n = pascal.choose(n, nn).clone();
                let mut bad = None;
                'outer: for i1 in 0..span {
                    for i2 in 0..span {
                        let mut lhs = rat_int(0);
                        for mm in m..nn {
                            let outer = pascal.choose(n, mm);
                            if outer == &rat_int(0) {
                                continue;
                            }
                            let mut inner = rat_int(0);
                            for k in 0..=n - mm {
                                inner += pascal.choose(n - mm, k)
                                    * &cols_n[i1][(n - mm - k) as usize]
                                    * &cols_m[i2][k as usize];
                            }
                            lhs += outer * inner;
                        }
                        let x = &sums[i1][i2];
                        let mut rhs = rat_int(0);
                        if let Some(p) = &poly_n {
                            rhs += &c_m * p.poly().eval(x);
                        }
                        if let Some(p) = &poly_m {
                            rhs -= &c_n * p.poly().eval(x);
                        }
                        if lhs != rhs {
                            bad = Some((pts[i1].clone(), pts[i2].clone(), lhs, rhs));
                            break 'outer;
                        }
                    }
                }
                match bad {
                    None => rec.check(
                        || format!("N={n_order} M={m_order} n={n}"),
                        rat_int(0),
                        rat_int(0),
                    ),
                    Some((x1, x2, lhs, rhs)) => rec.check(
                        || {
                            format!(
                                "N={n_order} M={m_order} n={n} x1={} x2={}",
                                format_rational(&x1),
                                format_rational(&x2)
                            )
                        },
                        lhs,
                        rhs,
                    ),
                }
            }
        }
    }
    rec.finish(IdentityId::EgfIdentity2, grid)
}

/// Derivative recurrence for products of generating functions:
/// `prod_{k<=p+1} F_N(x_k,t)` equals
/// `[(z-p)t/(pN) + 1] P(t) - (t/(pN)) P'(t)` where `P` is the product over
/// a `p`-point vector with the same coordinate sum `z`.
pub(super) fn product_recurrence(grid: &ParamGrid, _table: &mut HbTable) -> IdentityReport {
    let mut rec = Recorder::new();
    let order = grid.series_order;
    assert!(order >= 2, "series order must be at least 2");
    for n_order in grid.n_order_range() {
        let base_hi = hb_series_base(n_order, order + 1);
        let base = base_hi.truncated(order);
        for p in grid.factor_range() {
            let pts = grid.panel_points(p as usize + 1);
            let xs = &pts[..p as usize + 1];
            // same coordinate sum, one point shorter
            let mut ys = xs[..p as usize - 1].to_vec();
            ys.push(&xs[p as usize - 1] + &xs[p as usize]);
            let z: Rational = xs.iter().fold(rat_int(0), |acc, v| acc + v);

            let product_hi = family_product(&base_hi, &ys, order + 1);
            let derivative = product_hi.derivative();
            let product = product_hi.truncated(order);
            let lhs = family_product(&base, xs, order);

            let pn = rat_int(i64::from(p) * i64::from(n_order));
            let slope = (&z - rat_int(i64::from(p))) / &pn;
            let bracket = TruncatedSeries::from_coeffs(order, vec![rat_int(1), slope]);
            let rhs = &(&bracket * &product) - &derivative.shift_up(1).scale(&pn.recip());
            rec.check(
                || format!("N={n_order} p={p} z={}", format_rational(&z)),
                series_delta(&lhs, &rhs),
                rat_int(0),
            );
        }
    }
    rec.finish(IdentityId::EgfProductRecurrence, grid)
}

fn family_product(
    base: &TruncatedSeries<Rational>,
    points: &[Rational],
    series_order: usize,
) -> TruncatedSeries<Rational> {
    let mut acc = TruncatedSeries::one(series_order);
    for x in points {
        acc = &(&acc * base) * &exp_series(x, series_order);
    }
    acc
}

/// Three-factor partial fraction expansion, cross-multiplied to clear the
/// denominators: with `E = e^t` (truncated) and Taylor truncations
/// `A, B, C`,
/// `(A-B)(A-C)(B-C) = (B-C)(E-B)(E-C) - (A-C)(E-A)(E-C) + (A-B)(E-A)(E-B)`.
pub(super) fn partial_fraction_three(grid: &ParamGrid, _table: &mut HbTable) -> IdentityReport {
    let mut rec = Recorder::new();
    let order = grid.series_order;
    let e = exp_series(&rat_int(1), order);
    for (da, db, dc) in [(0u32, 1u32, 2u32), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        let a = poly_series(&taylor_poly(da), order);
        let b = poly_series(&taylor_poly(db), order);
        let c = poly_series(&taylor_poly(dc), order);
        let lhs = &(&(&a - &b) * &(&a - &c)) * &(&b - &c);
        let term_a = &(&(&b - &c) * &(&e - &b)) * &(&e - &c);
        let term_b = &(&(&a - &c) * &(&e - &a)) * &(&e - &c);
        let term_c = &(&(&a - &b) * &(&e - &a)) * &(&e - &b);
        let rhs = &(&term_a - &term_b) + &term_c;
        rec.check(
            || format!("A=T_{da} B=T_{db} C=T_{dc}"),
            series_delta(&lhs, &rhs),
            rat_int(0),
        );
    }
    rec.finish(IdentityId::PartialFractionThree, grid)
}
